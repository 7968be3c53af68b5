#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <string>
#include <vector>

#include "bipartite_graph.hpp"
#include "errors.hpp"

namespace ferrers {

inline constexpr std::size_t kDefaultCap = 20;

/// Default cap for enumeration (m*n) and brute force (|E|); FERRERS_CAP overrides.
inline std::size_t default_cap() {
  if (const char* env = std::getenv("FERRERS_CAP"); env && *env) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return kDefaultCap;
}

struct EnumerationOptions {
  std::size_t cap = default_cap();
  bool dedupe = false;  // keep only the canonical representative of each iso class
};

/// Biadjacency bit (i, j) lives at position i*n + j.
inline BipartiteGraph graph_from_mask(std::size_t m, std::size_t n, std::uint64_t mask) {
  std::vector<VertexSet> nbrs(n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if ((mask >> (i * n + j)) & 1U) nbrs[j].insert(i);
  return BipartiteGraph(m, std::move(nbrs));
}

inline std::uint64_t mask_of(const BipartiteGraph& g) {
  std::uint64_t mask = 0;
  for (std::size_t j = 0; j < g.n(); ++j)
    for (auto i : g.neighborhood(j).members()) mask |= std::uint64_t{1} << (i * g.n() + j);
  return mask;
}

inline void check_enumeration_bounds(std::size_t m, std::size_t n, std::size_t cap) {
  if (m == 0 || n == 0) throw dimension_error("enumeration needs m, n >= 1");
  if (m * n > cap)
    throw cap_exceeded("m*n = " + std::to_string(m * n) + " exceeds the enumeration cap of " +
                       std::to_string(cap));
  if (m * n > 40)
    throw cap_exceeded("m*n = " + std::to_string(m * n) + " exceeds the hard limit of 40");
}

/// Number of labeled biadjacency masks, 2^(mn).
inline std::uint64_t mask_count(std::size_t m, std::size_t n) { return std::uint64_t{1} << (m * n); }

/// Minimal representative under independent row and column permutations.
/// Columns are encoded as m-bit codes (bit i = row i); for each row
/// permutation the codes are sorted ascending, and the lexicographically
/// smallest code vector wins.
inline BipartiteGraph canonical_form(const BipartiteGraph& g) {
  const std::size_t m = g.m();
  if (m > 8) throw cap_exceeded("canonical form supports m <= 8");
  std::vector<std::size_t> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::uint64_t> best;
  std::vector<std::uint64_t> codes(g.n());
  do {
    for (std::size_t j = 0; j < g.n(); ++j) {
      std::uint64_t c = 0;
      for (std::size_t i = 0; i < m; ++i)
        if (g.neighborhood(j).contains(perm[i])) c |= std::uint64_t{1} << i;
      codes[j] = c;
    }
    std::sort(codes.begin(), codes.end());
    if (best.empty() || codes < best) best = codes;
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::vector<VertexSet> nbrs;
  nbrs.reserve(best.size());
  for (auto c : best) nbrs.emplace_back(c);
  return BipartiteGraph(m, std::move(nbrs));
}

/// Visits every connected graph whose mask lies in [begin, end). Ranges are
/// independent, so callers may split [0, 2^(mn)) across workers.
template <typename Visitor>
void for_each_connected(std::size_t m, std::size_t n, Visitor&& visit,
                        const EnumerationOptions& opts = {}, std::uint64_t begin = 0,
                        std::uint64_t end = ~std::uint64_t{0}) {
  check_enumeration_bounds(m, n, opts.cap);
  end = std::min(end, mask_count(m, n));
  const std::uint64_t row_mask = (std::uint64_t{1} << n) - 1;
  std::uint64_t col_mask = 0;
  for (std::size_t i = 0; i < m; ++i) col_mask |= std::uint64_t{1} << (i * n);
  for (std::uint64_t mask = begin; mask < end; ++mask) {
    // Cheap rejection: every row and every column needs an edge.
    bool covered = true;
    for (std::size_t i = 0; i < m && covered; ++i) covered = ((mask >> (i * n)) & row_mask) != 0;
    for (std::size_t j = 0; j < n && covered; ++j) covered = (mask & (col_mask << j)) != 0;
    if (!covered) continue;
    BipartiteGraph g = graph_from_mask(m, n, mask);
    if (!is_connected(g)) continue;
    if (opts.dedupe && !(canonical_form(g) == g)) continue;
    visit(g);
  }
}

inline std::vector<BipartiteGraph> enumerate_connected(std::size_t m, std::size_t n,
                                                       const EnumerationOptions& opts = {}) {
  std::vector<BipartiteGraph> out;
  for_each_connected(m, n, [&](const BipartiteGraph& g) { out.push_back(g); }, opts);
  return out;
}

}  // namespace ferrers
