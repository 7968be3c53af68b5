#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "bipartite_graph.hpp"
#include "errors.hpp"
#include "matrix.hpp"
#include "structured.hpp"

namespace ferrers {

inline constexpr double kJacobiOffDiagonalTol = 1e-12;
inline constexpr int kJacobiMaxSweeps = 100;
inline constexpr double kDefaultTol = 1e-9;

struct Spectrum {
  std::vector<double> values;  // weakly decreasing
  double residual = 0.0;       // max_i ||S v_i - lambda_i v_i||_inf
  RealMatrix vectors;          // column i pairs with values[i]; empty unless requested
};

/// Cyclic Jacobi with a threshold on the first sweeps.
inline Spectrum eigen_sym(const RealMatrix& s, double tol = kDefaultTol, bool want_vectors = false) {
  const std::size_t n = s.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (std::abs(s(i, j) - s(j, i)) > 1e-12)
        throw not_symmetric("entry (" + std::to_string(i) + "," + std::to_string(j) +
                            ") differs from its transpose");

  RealMatrix a = s;
  RealMatrix v = RealMatrix::identity(n);
  bool converged = false;
  for (int sweep = 0; sweep < kJacobiMaxSweeps; ++sweep) {
    double off_max = 0.0, off_sum = 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        off_max = std::max(off_max, std::abs(a(p, q)));
        off_sum += std::abs(a(p, q));
      }
    if (off_max <= kJacobiOffDiagonalTol) {
      converged = true;
      break;
    }
    const double threshold = sweep < 3 ? 0.2 * off_sum / static_cast<double>(n * n) : 0.0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (std::abs(apq) <= threshold || apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double sn = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - sn * akq;
          a(k, q) = sn * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - sn * aqk;
          a(q, k) = sn * apk + c * aqk;
        }
        a(p, q) = a(q, p) = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp - sn * vkq;
          v(k, q) = sn * vkp + c * vkq;
        }
      }
  }
  if (!converged)
    throw non_convergence("Jacobi did not converge in " + std::to_string(kJacobiMaxSweeps) +
                          " sweeps");

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return a(x, x) > a(y, y); });

  Spectrum out;
  out.values.reserve(n);
  for (auto k : order) out.values.push_back(a(k, k));
  for (std::size_t col = 0; col < n; ++col) {
    const std::size_t k = order[col];
    for (std::size_t i = 0; i < n; ++i) {
      double sv = 0.0;
      for (std::size_t j = 0; j < n; ++j) sv += s(i, j) * v(j, k);
      out.residual = std::max(out.residual, std::abs(sv - a(k, k) * v(i, k)));
    }
  }
  if (out.residual > tol)
    throw non_convergence("eigen residual " + std::to_string(out.residual) + " exceeds tol");
  if (want_vectors) {
    out.vectors = RealMatrix(n);
    for (std::size_t col = 0; col < n; ++col)
      for (std::size_t i = 0; i < n; ++i) out.vectors(i, col) = v(i, order[col]);
  }
  return out;
}

inline Spectrum eigen_sym(const RationalMatrix& s, double tol = kDefaultTol, bool want_vectors = false) {
  return eigen_sym(to_real(s), tol, want_vectors);
}

/// eps(I, T) = |I \ T| |T \ I| / (|I| |T|); zero iff I and T are nested.
inline Rational overlap_defect(VertexSet i, VertexSet t) {
  if (i.empty() || t.empty()) throw empty_set("overlap_defect needs nonempty sets");
  Rational e(static_cast<unsigned long>((i - t).size() * (t - i).size()),
             static_cast<unsigned long>(i.size() * t.size()));
  e.canonicalize();
  return e;
}

/// tr(Q_I Q_T) by the closed form |I n T| + eps(I, T). With `verify`, the
/// exact matrix product is formed too and must agree.
inline Rational overlap_trace(VertexSet i, VertexSet t, std::size_t m, bool verify = false) {
  if (i.empty() || t.empty()) throw empty_set("overlap_trace needs nonempty sets");
  if (i.bound() > m || t.bound() > m) throw dimension_error("subset has an index >= m");
  Rational closed = Rational(static_cast<unsigned long>((i & t).size())) + overlap_defect(i, t);
  if (verify) {
    const Rational direct = (projection_Q(i, m) * projection_Q(t, m)).trace();
    if (direct != closed)
      throw identity_violation("overlap closed form " + to_string(closed) +
                               " != tr(Q_I Q_T) = " + to_string(direct));
  }
  return closed;
}

struct KyFanResult {
  double trace_ps = 0.0;       // tr(P S) for the supplied P
  double top_k_sum = 0.0;      // theta_1 + ... + theta_k
  double attained = 0.0;       // tr(P_* S) for the top-k eigenprojection
  bool bound_ok = false;       // trace_ps <= top_k_sum + tol
  bool attained_ok = false;    // |attained - top_k_sum| <= tol
  [[nodiscard]] bool ok() const { return bound_ok && attained_ok; }
};

inline KyFanResult kyfan_check(const RealMatrix& s, const RealMatrix& p, std::size_t k,
                               double tol = kDefaultTol) {
  const std::size_t n = s.dim();
  if (p.dim() != n) throw dimension_error("S and P differ in dimension");
  if (k < 1 || k > n) throw dimension_error("rank k must lie in 1..dim");
  const RealMatrix p2 = p * p;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (std::abs(p(i, j) - p(j, i)) > tol) throw not_a_projection("P is not symmetric");
      if (std::abs(p2(i, j) - p(i, j)) > tol) throw not_a_projection("P^2 != P");
    }
  if (std::abs(p.trace() - static_cast<double>(k)) > tol)
    throw not_a_projection("trace(P) = " + std::to_string(p.trace()) + " but k = " +
                           std::to_string(k));

  const Spectrum spec = eigen_sym(s, tol, true);
  KyFanResult r;
  r.trace_ps = (p * s).trace();
  for (std::size_t i = 0; i < k; ++i) r.top_k_sum += spec.values[i];
  RealMatrix top(n);
  for (std::size_t c = 0; c < k; ++c)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) top(i, j) += spec.vectors(i, c) * spec.vectors(j, c);
  r.attained = (top * s).trace();
  r.bound_ok = r.trace_ps <= r.top_k_sum + tol;
  r.attained_ok = std::abs(r.attained - r.top_k_sum) <= tol;
  return r;
}

struct SpectralReport {
  Spectrum lambda;                        // eigenvalues of M
  std::vector<std::size_t> a_sorted;      // X-degrees, weakly decreasing
  std::vector<std::size_t> x_order;       // X-vertex at each sorted position
  std::vector<double> partial_gaps;       // k = 1..m-1: sum lambda - sum a
  std::vector<Rational> defect_sums;      // k = 1..m-1: sum_j eps([k], T_j)
  double trace_gap = 0.0;                 // |sum lambda - sum a|
  bool majorizes = false;
  bool strengthened = false;              // partial_gaps[k] >= defect_sums[k] - tol
  bool positive_definite = false;         // lambda_m > 0

  [[nodiscard]] bool holds() const { return majorizes && strengthened && positive_definite; }
};

/// Computes the report without asserting; see majorization_report.
inline SpectralReport spectral_report(const BipartiteGraph& g, double tol = kDefaultTol) {
  const std::size_t m = g.m();
  const RationalMatrix M = matrix_M(g);
  SpectralReport r;
  r.lambda = eigen_sym(M, tol);

  const DegreeData d = degrees(g);
  r.x_order.resize(m);
  std::iota(r.x_order.begin(), r.x_order.end(), 0);
  std::stable_sort(r.x_order.begin(), r.x_order.end(),
                   [&](std::size_t x, std::size_t y) { return d.a[x] > d.a[y]; });
  for (auto x : r.x_order) r.a_sorted.push_back(d.a[x]);

  double lambda_sum = 0.0, degree_sum = 0.0;
  VertexSet prefix;
  for (std::size_t k = 0; k + 1 < m; ++k) {
    lambda_sum += r.lambda.values[k];
    degree_sum += static_cast<double>(r.a_sorted[k]);
    prefix.insert(r.x_order[k]);
    r.partial_gaps.push_back(lambda_sum - degree_sum);
    Rational defect = 0;
    for (auto t : g.neighborhoods()) defect += overlap_defect(prefix, t);
    r.defect_sums.push_back(defect);
  }
  lambda_sum += r.lambda.values[m - 1];
  degree_sum += static_cast<double>(r.a_sorted[m - 1]);
  r.trace_gap = std::abs(lambda_sum - degree_sum);

  const bool trace_ok = r.trace_gap <= tol * std::max(1.0, degree_sum);
  r.majorizes = trace_ok && std::all_of(r.partial_gaps.begin(), r.partial_gaps.end(),
                                        [&](double gap) { return gap >= -tol; });
  r.strengthened = true;
  for (std::size_t k = 0; k < r.partial_gaps.size(); ++k)
    if (r.partial_gaps[k] < r.defect_sums[k].get_d() - tol) r.strengthened = false;
  r.positive_definite = r.lambda.values.back() > 0.0;
  return r;
}

/// Throws identity_violation with a counterexample dump unless the
/// eigenvalues of M majorize the X-degrees with the overlap-defect margin.
inline SpectralReport majorization_report(const BipartiteGraph& g, double tol = kDefaultTol) {
  SpectralReport r = spectral_report(g, tol);
  if (!r.holds()) {
    std::ostringstream os;
    os.precision(17);
    os << "majorization certificate failed (majorizes=" << r.majorizes
       << ", strengthened=" << r.strengthened << ", positive_definite=" << r.positive_definite
       << ")\nlambda:";
    for (double l : r.lambda.values) os << ' ' << l;
    os << "\na_sorted:";
    for (auto a : r.a_sorted) os << ' ' << a;
    os << "\nneighborhoods:";
    for (auto t : g.neighborhoods()) {
      os << " {";
      for (auto i : t.members()) os << ' ' << i;
      os << " }";
    }
    throw identity_violation(os.str());
  }
  return r;
}

}  // namespace ferrers
