#pragma once

#include <algorithm>
#include <cstddef>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "linres/errors.hpp"
#include "linres/monomial.hpp"

namespace linres {

using Edge = std::pair<std::size_t, std::size_t>;  // first <= second

/// Finite graph on vertices 0..n-1. Loops {i,i} are only accepted when the graph
/// was created with allows_loops.
class Graph {
public:
  Graph() = default;
  explicit Graph(std::size_t n, bool allows_loops = false)
      : n_(n), loops_allowed_(allows_loops), adj_(n * n, 0) {}

  Graph(std::size_t n, const std::vector<Edge>& edges, bool allows_loops = false)
      : Graph(n, allows_loops) {
    for (auto [a, b] : edges) add_edge(a, b);
  }

  std::size_t num_vertices() const noexcept { return n_; }
  bool allows_loops() const noexcept { return loops_allowed_; }

  void add_edge(std::size_t a, std::size_t b) {
    if (a >= n_ || b >= n_) throw InputError("edge endpoint out of range");
    if (a == b && !loops_allowed_) throw InputError("loop on a graph without loops");
    adj_[a * n_ + b] = adj_[b * n_ + a] = 1;
  }
  void remove_edge(std::size_t a, std::size_t b) { adj_[a * n_ + b] = adj_[b * n_ + a] = 0; }

  bool adjacent(std::size_t a, std::size_t b) const { return adj_[a * n_ + b] != 0; }
  bool has_loop(std::size_t a) const { return adj_[a * n_ + a] != 0; }
  bool has_loops() const {
    for (std::size_t i = 0; i < n_; ++i)
      if (has_loop(i)) return true;
    return false;
  }

  /// Non-loop neighbours, ascending.
  std::vector<std::size_t> neighbors(std::size_t v) const {
    std::vector<std::size_t> out;
    for (std::size_t u = 0; u < n_; ++u)
      if (u != v && adjacent(u, v)) out.push_back(u);
    return out;
  }

  /// All edges (including loops) with first <= second, lexicographically sorted.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i; j < n_; ++j)
        if (adjacent(i, j)) out.emplace_back(i, j);
    return out;
  }
  std::size_t num_edges() const { return edges().size(); }

  /// Subgraph induced on `keep`, renumbered in the order given.
  Graph induced(const std::vector<std::size_t>& keep) const {
    Graph h(keep.size(), loops_allowed_);
    for (std::size_t a = 0; a < keep.size(); ++a)
      for (std::size_t b = a; b < keep.size(); ++b)
        if (adjacent(keep[a], keep[b])) h.add_edge(a, b);
    return h;
  }

  friend bool operator==(const Graph& g, const Graph& h) {
    return g.n_ == h.n_ && g.adj_ == h.adj_;
  }

private:
  std::size_t n_ = 0;
  bool loops_allowed_ = false;
  std::vector<char> adj_;
};

/// {i,j} is an edge iff x_i x_j in G(I); x_i^2 in G(I) gives a loop at i.
inline Graph graph_of_ideal(const MonomialIdeal& I) {
  detail::require_quadratic(I, "graph_of_ideal");
  Graph g(I.num_vars(), true);
  for (const auto& m : I.generators()) {
    const auto s = m.support();
    g.add_edge(s.front(), s.back());
  }
  return g;
}

inline MonomialIdeal edge_ideal(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<Monomial> gens;
  for (auto [a, b] : g.edges()) {
    std::vector<int> e(n, 0);
    ++e[a];
    ++e[b];
    gens.emplace_back(std::move(e));
  }
  return minimal_generators(std::move(gens), n);
}

/// Complementary simple graph. Loops have no meaning here and are rejected.
inline Graph complement(const Graph& g) {
  if (g.has_loops()) throw InputError("complement: graph has loops");
  const std::size_t n = g.num_vertices();
  Graph h(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!g.adjacent(i, j)) h.add_edge(i, j);
  return h;
}

/// Copy without loops (and without permission for them).
inline Graph simple_part(const Graph& g) {
  Graph h(g.num_vertices());
  for (auto [a, b] : g.edges())
    if (a != b) h.add_edge(a, b);
  return h;
}

}  // namespace linres
