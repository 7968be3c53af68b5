#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "bipartite_graph.hpp"
#include "enumeration.hpp"
#include "errors.hpp"
#include "graph_io.hpp"
#include "matrix.hpp"
#include "spectral.hpp"
#include "structured.hpp"
#include "tree_count.hpp"

namespace ferrers {

struct VerificationRecord {
  BipartiteGraph graph;
  TreeCount tau;
  Rational F;
  Integer degree_product;
  bool inequality_ok = false;  // tau*m*n <= prod deg
  bool equality = false;       // tau*m*n == prod deg
  bool ferrers = false;
  bool reduction_ok = false;   // tau*m*n == prod(b) * det M
  bool majorizes = false;      // spectral certificate (floating)

  /// Anything here contradicts the theorem or one of its identities.
  [[nodiscard]] bool violation() const {
    return !inequality_ok || equality != ferrers || !reduction_ok || !majorizes;
  }
};

struct VerifyOptions {
  double tol = kDefaultTol;
  std::size_t cap = default_cap();
  unsigned workers = std::max(1U, std::thread::hardware_concurrency());
  /// Testing only: corrupts tau before the checks so they must fail.
  bool fault_inject = false;
  /// Called once per record; serialized under a lock when workers > 1.
  std::function<void(const VerificationRecord&)> sink;
};

inline VerificationRecord verify_graph(const BipartiteGraph& g, const VerifyOptions& opts = {}) {
  if (!is_connected(g)) throw disconnected_graph("verify_graph requires a connected graph");
  VerificationRecord r{g, tau_matrix_tree(g), ferrers_invariant(g), degree_product(g)};
  if (opts.fault_inject) r.tau += 1;
  const Integer scaled = r.tau * static_cast<unsigned long>(g.m() * g.n());
  r.inequality_ok = scaled <= r.degree_product;
  r.equality = scaled == r.degree_product;
  r.ferrers = is_ferrers(g);
  try {
    r.reduction_ok = reduction_sides(g, r.tau).holds();
  } catch (const identity_violation&) {
    r.reduction_ok = false;
  }
  try {
    r.majorizes = spectral_report(g, opts.tol).holds();
  } catch (const non_convergence&) {
    r.majorizes = false;
  }
  return r;
}

struct CampaignSummary {
  std::vector<std::pair<std::size_t, std::size_t>> dims;
  std::uint64_t graphs_checked = 0;
  std::uint64_t violations = 0;
  std::uint64_t equality_cases = 0;
  std::uint64_t ferrers_count = 0;
  double wall_time = 0.0;  // seconds
};

inline std::string describe_violation(const VerificationRecord& r);

/// Runs verify_graph over every connected labeled graph for each (m, n).
/// Aborts on the first violation with the offending graph in the message.
inline CampaignSummary verify_pairs(const std::vector<std::pair<std::size_t, std::size_t>>& dims,
                                    const VerifyOptions& opts = {}) {
  for (auto [m, n] : dims) check_enumeration_bounds(m, n, opts.cap);
  const auto start = std::chrono::steady_clock::now();
  CampaignSummary summary;
  summary.dims = dims;

  std::mutex mu;
  std::atomic<bool> abort{false};
  std::optional<VerificationRecord> failure;
  EnumerationOptions enum_opts{opts.cap, false};

  for (auto [m, n] : dims) {
    const std::uint64_t total = mask_count(m, n);
    const unsigned workers =
        static_cast<unsigned>(std::clamp<std::uint64_t>(opts.workers, 1, std::max<std::uint64_t>(1, total / 64)));
    std::vector<CampaignSummary> partial(workers);
    auto run = [&](unsigned w) {
      const std::uint64_t lo = total * w / workers;
      const std::uint64_t hi = total * (w + 1) / workers;
      constexpr std::uint64_t kChunk = 1024;
      for (std::uint64_t b = lo; b < hi && !abort.load(std::memory_order_relaxed); b += kChunk) {
        for_each_connected(
            m, n,
            [&](const BipartiteGraph& g) {
              if (abort.load(std::memory_order_relaxed)) return;
              VerificationRecord rec = verify_graph(g, opts);
              CampaignSummary& p = partial[w];
              ++p.graphs_checked;
              p.equality_cases += rec.equality;
              p.ferrers_count += rec.ferrers;
              if (opts.sink) {
                std::lock_guard lock(mu);
                opts.sink(rec);
              }
              if (rec.violation()) {
                ++p.violations;
                std::lock_guard lock(mu);
                if (!failure) failure = std::move(rec);
                abort = true;
              }
            },
            enum_opts, b, std::min(hi, b + kChunk));
      }
    };
    if (workers == 1) {
      run(0);
    } else {
      std::vector<std::thread> pool;
      pool.reserve(workers);
      for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
      for (auto& t : pool) t.join();
    }
    for (const auto& p : partial) {
      summary.graphs_checked += p.graphs_checked;
      summary.violations += p.violations;
      summary.equality_cases += p.equality_cases;
      summary.ferrers_count += p.ferrers_count;
    }
    if (failure) throw identity_violation(describe_violation(*failure));
  }
  if (summary.equality_cases != summary.ferrers_count)
    throw identity_violation("equality cases (" + std::to_string(summary.equality_cases) +
                             ") != Ferrers graphs (" + std::to_string(summary.ferrers_count) + ")");
  summary.wall_time =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return summary;
}

/// Every (m, n) with 1 <= m <= m_max and 1 <= n <= n_max; each must fit the cap.
inline CampaignSummary verify_range(std::size_t m_max, std::size_t n_max,
                                    const VerifyOptions& opts = {}) {
  if (m_max == 0 || n_max == 0) throw dimension_error("verify_range needs m_max, n_max >= 1");
  if (m_max * n_max > opts.cap)
    throw cap_exceeded("m_max*n_max = " + std::to_string(m_max * n_max) +
                       " exceeds the enumeration cap of " + std::to_string(opts.cap));
  std::vector<std::pair<std::size_t, std::size_t>> dims;
  for (std::size_t m = 1; m <= m_max; ++m)
    for (std::size_t n = 1; n <= n_max; ++n) dims.emplace_back(m, n);
  return verify_pairs(dims, opts);
}

/// Every (m, n) with m * n <= max_product.
inline std::vector<std::pair<std::size_t, std::size_t>> dims_up_to_product(std::size_t max_product) {
  std::vector<std::pair<std::size_t, std::size_t>> dims;
  for (std::size_t m = 1; m <= max_product; ++m)
    for (std::size_t n = 1; m * n <= max_product; ++n) dims.emplace_back(m, n);
  return dims;
}

struct CorollaryResult {
  Rational polynomial;  // P_G(z)
  Rational lhs;         // P_G(z) * sum_X z * sum_Y z
  Rational rhs;         // prod_v sum_{u in N(v)} z_u
  [[nodiscard]] bool holds() const { return lhs <= rhs; }
};

/// Evaluates both sides of the weighted spanning-tree inequality exactly.
/// Weights are ordered X first, then Y.
inline CorollaryResult corollary_sides(const BipartiteGraph& g, const std::vector<Rational>& z,
                                       std::size_t cap = default_cap()) {
  const std::size_t m = g.m(), n = g.n();
  if (z.size() != m + n)
    throw dimension_error("expected " + std::to_string(m + n) + " weights, got " +
                          std::to_string(z.size()));
  for (std::size_t v = 0; v < z.size(); ++v)
    if (z[v] < 0) throw input_error("weight " + std::to_string(v) + " is negative");

  CorollaryResult r;
  r.polynomial = 0;
  const auto edges = g.edges();
  std::vector<std::size_t> deg(m + n);
  for_each_spanning_tree(
      g,
      [&](const std::vector<std::size_t>& idx) {
        std::fill(deg.begin(), deg.end(), 0);
        for (auto e : idx) {
          ++deg[edges[e].first];
          ++deg[m + edges[e].second];
        }
        Rational term = 1;
        for (std::size_t v = 0; v < m + n; ++v)
          for (std::size_t p = 1; p < deg[v]; ++p) term *= z[v];
        r.polynomial += term;
      },
      cap);

  Rational sum_x = 0, sum_y = 0;
  for (std::size_t i = 0; i < m; ++i) sum_x += z[i];
  for (std::size_t j = 0; j < n; ++j) sum_y += z[m + j];
  r.lhs = r.polynomial * sum_x * sum_y;

  r.rhs = 1;
  std::vector<Rational> x_side(m, Rational(0));
  for (std::size_t j = 0; j < n; ++j) {
    Rational y_side = 0;
    for (auto i : g.neighborhood(j).members()) {
      y_side += z[i];
      x_side[i] += z[m + j];
    }
    r.rhs *= y_side;
  }
  for (const auto& s : x_side) r.rhs *= s;
  return r;
}

inline bool corollary_check(const BipartiteGraph& g, const std::vector<Rational>& z,
                            std::size_t cap = default_cap()) {
  const CorollaryResult r = corollary_sides(g, z, cap);
  if (!r.holds())
    throw identity_violation("weighted inequality fails: lhs " + to_string(r.lhs) + " > rhs " +
                             to_string(r.rhs) + "\n" + to_text(g));
  return true;
}

/// For the Ferrers graph of `p`: det M = prod a_i, and M is diagonal in the
/// orthogonal basis adapted to the flag im Q_[1] < ... < im Q_[m], with the
/// r-th entry #{j : t_j >= r} = deg(x_r). Basis vectors (unnormalized):
/// u_1 = 1, u_r = e_1 + ... + e_{r-1} - (r-1) e_r.
inline bool equality_flag_diagonalization(const PartitionSpec& p) {
  const BipartiteGraph g = ferrers_from_partition(p);
  const std::size_t m = g.m();
  const DegreeData d = degrees(g);
  const RationalMatrix M = matrix_M(g);

  Integer prod_a = 1;
  for (auto a : d.a) prod_a *= static_cast<unsigned long>(a);
  const Rational det = det_exact(M);
  if (det != Rational(prod_a))
    throw identity_violation("det M = " + to_string(det) + " but prod a = " + prod_a.get_str());

  RationalMatrix u(m);
  for (std::size_t i = 0; i < m; ++i) u(i, 0) = 1;
  for (std::size_t r = 1; r < m; ++r) {
    for (std::size_t i = 0; i < r; ++i) u(i, r) = 1;
    u(r, r) = -static_cast<long>(r);
  }
  const RationalMatrix gram = u.transpose() * u;
  const RationalMatrix conj = u.transpose() * M * u;
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < m; ++c)
      if (r != c && conj(r, c) != 0)
        throw identity_violation("M is not diagonal in the flag basis at (" + std::to_string(r) +
                                 "," + std::to_string(c) + ")");
    const Rational entry = conj(r, r) / gram(r, r);
    const auto count = static_cast<unsigned long>(
        std::count_if(p.t.begin(), p.t.end(), [&](std::size_t tj) { return tj >= r + 1; }));
    if (entry != Rational(count) || count != d.a[r])
      throw identity_violation("flag diagonal entry " + std::to_string(r) + " is " +
                               to_string(entry) + ", expected " + std::to_string(count) +
                               " = deg(x_" + std::to_string(r) + ") = " + std::to_string(d.a[r]));
  }
  return true;
}

inline std::string describe_violation(const VerificationRecord& r) {
  return "theorem check failed (tau=" + r.tau.get_str() + ", F=" + to_string(r.F) +
         ", inequality_ok=" + std::to_string(r.inequality_ok) +
         ", equality=" + std::to_string(r.equality) + ", ferrers=" + std::to_string(r.ferrers) +
         ", reduction_ok=" + std::to_string(r.reduction_ok) +
         ", majorizes=" + std::to_string(r.majorizes) + ")\n" + to_text(r.graph);
}

}  // namespace ferrers
