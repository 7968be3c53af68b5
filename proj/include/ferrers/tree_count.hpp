#pragma once

#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "bipartite_graph.hpp"
#include "enumeration.hpp"
#include "errors.hpp"
#include "matrix.hpp"
#include "structured.hpp"

namespace ferrers {

/// tau(G); zero exactly when G is disconnected.
using TreeCount = Integer;

/// Edges (x, y) of one spanning tree, m + n - 1 of them.
struct SpanningTree {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

/// Principal minor of the integer Laplacian with row/column `deleted` removed.
inline Integer laplacian_minor(const BipartiteGraph& g, std::size_t deleted = 0) {
  return bareiss_determinant(delete_row_col(laplacian<Integer>(g), deleted));
}

/// Matrix-tree count. With `all_deletions`, every one of the m + n principal
/// minors is computed and they must coincide.
inline TreeCount tau_matrix_tree(const BipartiteGraph& g, bool all_deletions = false) {
  const IntegerMatrix L = laplacian<Integer>(g);
  const Integer tau = bareiss_determinant(delete_row_col(L, 0));
  if (tau < 0) throw identity_violation("negative Laplacian minor " + tau.get_str());
  if (all_deletions) {
    for (std::size_t v = 1; v < L.dim(); ++v) {
      const Integer other = bareiss_determinant(delete_row_col(L, v));
      if (other != tau)
        throw identity_violation("Laplacian minors differ: deleting 0 gives " + tau.get_str() +
                                 ", deleting " + std::to_string(v) + " gives " + other.get_str());
    }
  }
  return tau;
}

struct BruteForceResult {
  TreeCount count;
  std::vector<SpanningTree> trees;
};

/// Calls `visit(edge_indices)` for each spanning tree, where the indices
/// refer to g.edges(). Depth-first over edge choices with a union-find that
/// prunes any partial selection containing a cycle.
template <typename Visitor>
void for_each_spanning_tree(const BipartiteGraph& g, Visitor&& visit,
                            std::size_t cap = default_cap()) {
  const auto edges = g.edges();
  if (edges.size() > cap)
    throw cap_exceeded("|E| = " + std::to_string(edges.size()) +
                       " exceeds the brute-force cap of " + std::to_string(cap));
  const std::size_t vertices = g.m() + g.n();
  const std::size_t need = vertices - 1;
  if (edges.size() < need) return;

  // Union-find without path compression so a level can be undone by
  // restoring a single parent pointer.
  std::vector<std::size_t> parent(vertices);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v];
    return v;
  };
  std::vector<std::size_t> chosen;
  chosen.reserve(need);

  auto recurse = [&](auto&& self, std::size_t next) -> void {
    if (chosen.size() == need) {
      visit(static_cast<const std::vector<std::size_t>&>(chosen));
      return;
    }
    // Not enough edges left to finish.
    if (edges.size() - next < need - chosen.size()) return;
    for (std::size_t e = next; e + (need - chosen.size()) <= edges.size(); ++e) {
      const std::size_t ru = find(edges[e].first);
      const std::size_t rv = find(g.m() + edges[e].second);
      if (ru == rv) continue;
      parent[ru] = rv;
      chosen.push_back(e);
      self(self, e + 1);
      chosen.pop_back();
      parent[ru] = ru;
    }
  };
  recurse(recurse, 0);
}

/// Independent oracle for tau_matrix_tree: explicit enumeration of trees.
inline BruteForceResult tau_brute_force(const BipartiteGraph& g, std::size_t cap = default_cap(),
                                        bool keep_trees = true) {
  BruteForceResult out{0, {}};
  const auto edges = g.edges();
  for_each_spanning_tree(
      g,
      [&](const std::vector<std::size_t>& idx) {
        ++out.count;
        if (!keep_trees) return;
        SpanningTree t;
        t.edges.reserve(idx.size());
        for (auto e : idx) t.edges.push_back(edges[e]);
        out.trees.push_back(std::move(t));
      },
      cap);
  return out;
}

/// prod over all vertices of deg(v), as an exact integer.
inline Integer degree_product(const BipartiteGraph& g) {
  const DegreeData d = degrees(g);
  Integer p = 1;
  for (auto a : d.a) p *= static_cast<unsigned long>(a);
  for (auto b : d.b) p *= static_cast<unsigned long>(b);
  return p;
}

/// F(G) = prod deg(v) / (m n).
inline Rational ferrers_invariant(const BipartiteGraph& g) {
  const DegreeData d = degrees(g);
  for (std::size_t i = 0; i < d.a.size(); ++i)
    if (d.a[i] == 0) throw degree_zero("x" + std::to_string(i) + " has degree 0");
  for (std::size_t j = 0; j < d.b.size(); ++j)
    if (d.b[j] == 0) throw degree_zero("y" + std::to_string(j) + " has degree 0");
  Rational f(degree_product(g), Integer(static_cast<unsigned long>(g.m() * g.n())));
  f.canonicalize();
  return f;
}

/// Both sides of tau * m * n = (prod b_j) * det M.
struct ReductionSides {
  Rational lhs;
  Rational rhs;
  [[nodiscard]] bool holds() const { return lhs == rhs; }
};

inline ReductionSides reduction_sides(const BipartiteGraph& g, const TreeCount& tau) {
  Integer prod_b = 1;
  for (auto t : g.neighborhoods()) prod_b *= static_cast<unsigned long>(t.size());
  const Rational det_m = det_exact(matrix_M(g));
  return {Rational(tau * static_cast<unsigned long>(g.m() * g.n())), Rational(prod_b) * det_m};
}

/// Throws identity_violation with both sides when the reduction fails.
inline bool check_reduction(const BipartiteGraph& g) {
  if (!is_connected(g)) throw disconnected_graph("check_reduction requires a connected graph");
  const ReductionSides s = reduction_sides(g, tau_matrix_tree(g));
  if (!s.holds())
    throw identity_violation("tau*m*n = " + to_string(s.lhs) + " but prod(b)*det(M) = " +
                             to_string(s.rhs));
  return true;
}

struct BozkurtResult {
  Rational bound;       // prod deg(v) / |E|
  bool holds = false;   // tau <= bound
  bool dominates_ferrers = false;  // bound >= F(G)
};

inline BozkurtResult bozkurt_bound(const BipartiteGraph& g) {
  const std::size_t e = g.edge_count();
  if (e == 0) throw dimension_error("Bozkurt bound needs at least one edge");
  BozkurtResult r;
  r.bound = ratio(degree_product(g), Integer(static_cast<unsigned long>(e)));
  r.bound.canonicalize();
  r.holds = Rational(tau_matrix_tree(g)) <= r.bound;
  // F(G) needs every degree positive; with an isolated vertex F = 0 <= bound.
  r.dominates_ferrers = degree_product(g) == 0 || ferrers_invariant(g) <= r.bound;
  return r;
}

}  // namespace ferrers
