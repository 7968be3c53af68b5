#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "errors.hpp"

namespace ferrers {

using Integer = mpz_class;

/// Exact rational; GMP keeps it canonical (den > 0, gcd 1) after every
/// arithmetic operation.
using Rational = mpq_class;

/// Always "p/q", even for integers, so output is uniform and diffable.
inline std::string to_string(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

/// num/den in lowest terms. The two-argument mpq constructor does not reduce.
inline Rational ratio(const Integer& num, const Integer& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline std::string to_string(const Integer& z) { return z.get_str(); }

/// Accepts "p/q" or a bare integer "p".
inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw format_error("empty rational literal");
  auto valid_int = [](std::string_view t) {
    std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  const auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
    throw format_error("malformed rational literal '" + s + "'");
  if (num[0] == '+') num.erase(0, 1);
  Integer d(den);
  if (d == 0) throw format_error("zero denominator in '" + s + "'");
  Rational r(Integer(num), d);
  r.canonicalize();
  return r;
}

inline bool is_integral(const Rational& r) { return r.get_den() == 1; }

}  // namespace ferrers
