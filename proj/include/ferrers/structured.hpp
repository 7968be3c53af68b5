#pragma once

#include <sstream>
#include <string>

#include "bipartite_graph.hpp"
#include "errors.hpp"
#include "matrix.hpp"

namespace ferrers {

/// Laplacian with X-vertices first: [[A, -B], [-B^T, C]].
template <typename Scalar = Rational>
Matrix<Scalar> laplacian(const BipartiteGraph& g) {
  const std::size_t m = g.m();
  Matrix<Scalar> L(m + g.n());
  for (std::size_t j = 0; j < g.n(); ++j) {
    for (auto i : g.neighborhood(j).members()) {
      L(i, i) += 1;
      L(m + j, m + j) += 1;
      L(i, m + j) = -1;
      L(m + j, i) = -1;
    }
  }
  return L;
}

/// Gauss-Jordan inverse with a diagonal fast path.
inline RationalMatrix inverse(const RationalMatrix& z) {
  const std::size_t n = z.dim();
  bool diagonal = true;
  for (std::size_t i = 0; i < n && diagonal; ++i)
    for (std::size_t j = 0; j < n && diagonal; ++j)
      if (i != j && z(i, j) != 0) diagonal = false;
  RationalMatrix inv = RationalMatrix::identity(n);
  if (diagonal) {
    for (std::size_t i = 0; i < n; ++i) {
      if (z(i, i) == 0) throw singular_matrix("zero on the diagonal at " + std::to_string(i));
      inv(i, i) = 1 / z(i, i);
    }
    return inv;
  }
  RationalMatrix a = z;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k) == 0) ++p;
    if (p == n) throw singular_matrix("matrix is singular");
    if (p != k)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(k, j), a(p, j));
        std::swap(inv(k, j), inv(p, j));
      }
    const Rational piv = a(k, k);
    for (std::size_t j = 0; j < n; ++j) {
      a(k, j) /= piv;
      inv(k, j) /= piv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || a(i, k) == 0) continue;
      const Rational f = a(i, k);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(k, j);
        inv(i, j) -= f * inv(k, j);
      }
    }
  }
  return inv;
}

/// For the block split [[U, V], [W, Z]] with U of size `k`, returns
/// U - V Z^{-1} W. Throws singular_matrix if Z is not invertible.
inline RationalMatrix schur_complement(const RationalMatrix& full, std::size_t k) {
  const std::size_t total = full.dim();
  if (k == 0 || k >= total) throw dimension_error("Schur split must satisfy 0 < k < dim");
  const std::size_t r = total - k;
  RationalMatrix z(r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) z(i, j) = full(k + i, k + j);
  const RationalMatrix zinv = inverse(z);
  RationalMatrix out(k);
  // (Z^{-1} W) is r x k; form it once.
  std::vector<Rational> zw(r * k, Rational(0));
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = 0; b < r; ++b) {
      if (zinv(a, b) == 0) continue;
      for (std::size_t c = 0; c < k; ++c) zw[a * k + c] += zinv(a, b) * full(k + b, c);
    }
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      Rational acc = full(i, j);
      for (std::size_t a = 0; a < r; ++a) {
        if (full(i, k + a) == 0) continue;
        acc -= full(i, k + a) * zw[a * k + j];
      }
      out(i, j) = acc;
    }
  return out;
}

/// P_T = D_T - J_T/|T|: orthogonal projection onto zero-sum vectors supported on T.
inline RationalMatrix projection_P(VertexSet t, std::size_t m) {
  if (t.empty()) throw empty_set("projection_P needs a nonempty T");
  if (t.bound() > m) throw dimension_error("T has an index >= m");
  RationalMatrix p(m);
  const Rational inv(1, t.size());
  const auto members = t.members();
  for (auto i : members)
    for (auto k : members) p(i, k) = (i == k) ? Rational(1 - inv) : Rational(-inv);
  return p;
}

/// Q_T = P_T + J/m: orthogonal projection of rank |T| onto H_T + <1>.
inline RationalMatrix projection_Q(VertexSet t, std::size_t m) {
  RationalMatrix q = projection_P(t, m);
  const Rational inv_m(1, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k < m; ++k) q(i, k) += inv_m;
  return q;
}

/// sum_j P_{T_j}.
inline RationalMatrix sum_of_P(const BipartiteGraph& g) {
  RationalMatrix s(g.m());
  for (auto t : g.neighborhoods()) s += projection_P(t, g.m());
  return s;
}

/// sum_j Q_{T_j}.
inline RationalMatrix sum_of_Q(const BipartiteGraph& g) {
  RationalMatrix s(g.m());
  for (auto t : g.neighborhoods()) s += projection_Q(t, g.m());
  return s;
}

namespace detail {
inline std::string dump_pair(const char* lhs_name, const RationalMatrix& lhs, const char* rhs_name,
                             const RationalMatrix& rhs) {
  std::ostringstream os;
  os << lhs_name << ":\n";
  dump(os, lhs);
  os << rhs_name << ":\n";
  dump(os, rhs);
  return os.str();
}
}  // namespace detail

/// L_X = A - B C^{-1} B^T, computed from the Laplacian's block split and
/// independently as sum_j P_{T_j}; the two must agree exactly.
inline RationalMatrix schur_LX(const BipartiteGraph& g) {
  for (std::size_t j = 0; j < g.n(); ++j)
    if (g.neighborhood(j).empty())
      throw singular_matrix("C block is singular: y" + std::to_string(j) + " has degree 0");
  RationalMatrix block = schur_complement(laplacian(g), g.m());
  RationalMatrix projections = sum_of_P(g);
  if (!(block == projections))
    throw identity_violation("L_X block formula disagrees with sum of P_T\n" +
                             detail::dump_pair("block", block, "sum P_T", projections));
  return block;
}

/// M = L_X + (n/m) J, checked against sum_j Q_{T_j}.
inline RationalMatrix matrix_M(const BipartiteGraph& g) {
  if (!is_connected(g)) throw disconnected_graph("matrix_M requires a connected graph");
  RationalMatrix M = schur_LX(g);
  const Rational shift = ratio(static_cast<unsigned long>(g.n()), static_cast<unsigned long>(g.m()));
  for (std::size_t i = 0; i < g.m(); ++i)
    for (std::size_t k = 0; k < g.m(); ++k) M(i, k) += shift;
  RationalMatrix via_q = sum_of_Q(g);
  if (!(M == via_q))
    throw identity_violation("M disagrees with sum of Q_T\n" +
                             detail::dump_pair("M", M, "sum Q_T", via_q));
  return M;
}

}  // namespace ferrers
