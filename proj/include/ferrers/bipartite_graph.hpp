#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "errors.hpp"

namespace ferrers {

/// Subset of {0, ..., 63}. Used for X-side neighborhoods T_j = N(y_j).
class VertexSet {
 public:
  static constexpr std::size_t capacity = 64;

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}
  VertexSet(std::initializer_list<std::size_t> members) {
    for (auto i : members) insert(i);
  }

  /// {0, ..., count-1}
  static constexpr VertexSet initial_segment(std::size_t count) {
    return VertexSet(count >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << count) - 1);
  }

  void insert(std::size_t i) {
    if (i >= capacity) throw dimension_error("vertex index " + std::to_string(i) + " exceeds 63");
    bits_ |= std::uint64_t{1} << i;
  }

  [[nodiscard]] constexpr bool contains(std::size_t i) const noexcept {
    return i < capacity && ((bits_ >> i) & 1U);
  }
  [[nodiscard]] constexpr std::size_t size() const noexcept {
    return static_cast<std::size_t>(std::popcount(bits_));
  }
  [[nodiscard]] constexpr bool empty() const noexcept { return bits_ == 0; }
  [[nodiscard]] constexpr std::uint64_t bits() const noexcept { return bits_; }
  [[nodiscard]] constexpr bool subset_of(VertexSet other) const noexcept {
    return (bits_ & ~other.bits_) == 0;
  }
  /// One past the largest member (0 when empty).
  [[nodiscard]] constexpr std::size_t bound() const noexcept {
    return static_cast<std::size_t>(64 - std::countl_zero(bits_));
  }

  [[nodiscard]] std::vector<std::size_t> members() const {
    std::vector<std::size_t> out;
    for (std::uint64_t b = bits_; b; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
  friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(VertexSet, VertexSet) = default;
  friend constexpr auto operator<=>(VertexSet, VertexSet) = default;

 private:
  std::uint64_t bits_ = 0;
};

struct DegreeData {
  std::vector<std::size_t> a;  // X-degrees
  std::vector<std::size_t> b;  // Y-degrees
};

/// Bipartite graph on X = {0..m-1} and Y = {0..n-1}, stored Y-side: nbrs[j] = N(y_j).
class BipartiteGraph {
 public:
  BipartiteGraph(std::size_t m, std::vector<VertexSet> nbrs) : m_(m), nbrs_(std::move(nbrs)) {
    if (m_ == 0 || nbrs_.empty())
      throw dimension_error("bipartite graph needs m >= 1 and n >= 1");
    if (m_ > VertexSet::capacity)
      throw dimension_error("m = " + std::to_string(m_) + " exceeds 64");
    const auto universe = VertexSet::initial_segment(m_);
    for (std::size_t j = 0; j < nbrs_.size(); ++j)
      if (!nbrs_[j].subset_of(universe))
        throw dimension_error("neighborhood of y" + std::to_string(j) + " has index >= m");
  }

  [[nodiscard]] std::size_t m() const noexcept { return m_; }
  [[nodiscard]] std::size_t n() const noexcept { return nbrs_.size(); }
  [[nodiscard]] const std::vector<VertexSet>& neighborhoods() const noexcept { return nbrs_; }
  [[nodiscard]] VertexSet neighborhood(std::size_t j) const { return nbrs_.at(j); }
  [[nodiscard]] bool adjacent(std::size_t x, std::size_t y) const { return nbrs_.at(y).contains(x); }

  [[nodiscard]] std::size_t edge_count() const noexcept {
    std::size_t e = 0;
    for (auto t : nbrs_) e += t.size();
    return e;
  }

  /// Edges as (x, y) pairs, ordered by y then x.
  [[nodiscard]] std::vector<std::pair<std::size_t, std::size_t>> edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t j = 0; j < nbrs_.size(); ++j)
      for (auto i : nbrs_[j].members()) out.emplace_back(i, j);
    return out;
  }

  /// Biadjacency entry B(i, j).
  [[nodiscard]] std::vector<std::vector<int>> biadjacency() const {
    std::vector<std::vector<int>> rows(m_, std::vector<int>(n(), 0));
    for (std::size_t j = 0; j < n(); ++j)
      for (auto i : nbrs_[j].members()) rows[i][j] = 1;
    return rows;
  }

  friend bool operator==(const BipartiteGraph&, const BipartiteGraph&) = default;

 private:
  std::size_t m_;
  std::vector<VertexSet> nbrs_;
};

inline BipartiteGraph from_biadjacency(const std::vector<std::vector<int>>& rows) {
  if (rows.empty() || rows.front().empty())
    throw dimension_error("biadjacency matrix has a zero dimension");
  const std::size_t m = rows.size();
  const std::size_t n = rows.front().size();
  std::vector<VertexSet> nbrs(n);
  for (std::size_t i = 0; i < m; ++i) {
    if (rows[i].size() != n) throw dimension_error("biadjacency rows have unequal length");
    for (std::size_t j = 0; j < n; ++j) {
      if (rows[i][j] != 0 && rows[i][j] != 1)
        throw format_error("biadjacency entry (" + std::to_string(i) + "," + std::to_string(j) +
                           ") is not 0/1");
      if (rows[i][j]) nbrs[j].insert(i);
    }
  }
  return BipartiteGraph(m, std::move(nbrs));
}

inline DegreeData degrees(const BipartiteGraph& g) {
  DegreeData d{std::vector<std::size_t>(g.m(), 0), {}};
  d.b.reserve(g.n());
  for (auto t : g.neighborhoods()) {
    d.b.push_back(t.size());
    for (auto i : t.members()) ++d.a[i];
  }
  return d;
}

/// BFS over the union graph on m + n vertices.
inline bool is_connected(const BipartiteGraph& g) {
  const auto& nbrs = g.neighborhoods();
  const VertexSet all_x = VertexSet::initial_segment(g.m());
  VertexSet seen_x(std::uint64_t{1});
  std::vector<bool> seen_y(g.n(), false);
  std::vector<std::size_t> frontier{0};  // x-vertices to expand
  while (!frontier.empty()) {
    const std::size_t x = frontier.back();
    frontier.pop_back();
    for (std::size_t j = 0; j < nbrs.size(); ++j) {
      if (seen_y[j] || !nbrs[j].contains(x)) continue;
      seen_y[j] = true;
      for (auto i : (nbrs[j] - seen_x).members()) {
        seen_x.insert(i);
        frontier.push_back(i);
      }
    }
  }
  return seen_x == all_x && std::all_of(seen_y.begin(), seen_y.end(), [](bool s) { return s; });
}

/// Neighborhoods form a chain under inclusion and cover X, and g is connected.
inline bool is_ferrers(const BipartiteGraph& g) {
  std::vector<VertexSet> sets = g.neighborhoods();
  std::sort(sets.begin(), sets.end(), [](VertexSet a, VertexSet b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
  });
  for (std::size_t j = 1; j < sets.size(); ++j)
    if (!sets[j].subset_of(sets[j - 1])) return false;
  // The largest set must be all of X; with a chain this also gives connectivity.
  return !sets.back().empty() && sets.front() == VertexSet::initial_segment(g.m());
}

/// Column heights t_1 >= ... >= t_n >= 1 with t_1 = m.
struct PartitionSpec {
  std::vector<std::size_t> t;

  [[nodiscard]] std::size_t m() const { return t.empty() ? 0 : t.front(); }
  [[nodiscard]] std::size_t n() const { return t.size(); }

  void validate() const {
    if (t.empty()) throw invalid_partition("partition must have at least one part");
    if (t.back() < 1) throw invalid_partition("partition parts must be >= 1");
    for (std::size_t j = 1; j < t.size(); ++j)
      if (t[j] > t[j - 1])
        throw invalid_partition("partition is not weakly decreasing at position " +
                                std::to_string(j));
    if (t.front() > VertexSet::capacity) throw invalid_partition("largest part exceeds 64");
  }

  friend bool operator==(const PartitionSpec&, const PartitionSpec&) = default;
};

/// T_j = {0, ..., t_j - 1}. When `m` is given it must equal t_1.
inline BipartiteGraph ferrers_from_partition(const PartitionSpec& p, std::size_t m = 0) {
  p.validate();
  if (m != 0 && m != p.m())
    throw invalid_partition("t_1 = " + std::to_string(p.m()) + " but m = " + std::to_string(m));
  std::vector<VertexSet> nbrs;
  nbrs.reserve(p.n());
  for (auto tj : p.t) nbrs.push_back(VertexSet::initial_segment(tj));
  return BipartiteGraph(p.m(), std::move(nbrs));
}

/// Column heights of a graph whose neighborhoods are all initial segments
/// in non-increasing order (the shape ferrers_from_partition produces).
inline PartitionSpec heights(const BipartiteGraph& g) {
  PartitionSpec p;
  for (auto t : g.neighborhoods()) {
    if (t != VertexSet::initial_segment(t.size()))
      throw invalid_partition("neighborhood is not an initial segment");
    p.t.push_back(t.size());
  }
  p.validate();
  return p;
}

}  // namespace ferrers
