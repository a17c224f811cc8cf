#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <deque>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "linres/errors.hpp"
#include "linres/graph.hpp"
#include "linres/monomial.hpp"

namespace linres {

// ---------------------------------------------------------------------------
// Chordality
// ---------------------------------------------------------------------------

/// Either a perfect elimination ordering (chordal) or a chordless cycle of length >= 4.
struct ChordalityVerdict {
  bool chordal = false;
  std::vector<std::size_t> peo;             // valid iff chordal
  std::vector<std::size_t> chordless_cycle;  // valid iff !chordal
};

/// Every vertex's later neighbours (w.r.t. `order`) form a clique.
inline bool is_perfect_elimination_ordering(const Graph& g, const std::vector<std::size_t>& order) {
  const std::size_t n = g.num_vertices();
  if (order.size() != n) return false;
  std::vector<std::size_t> pos(n, n);
  for (std::size_t p = 0; p < n; ++p) {
    if (order[p] >= n || pos[order[p]] != n) return false;
    pos[order[p]] = p;
  }
  for (std::size_t v = 0; v < n; ++v) {
    std::vector<std::size_t> later;
    for (auto u : g.neighbors(v))
      if (pos[u] > pos[v]) later.push_back(u);
    for (std::size_t a = 0; a < later.size(); ++a)
      for (std::size_t b = a + 1; b < later.size(); ++b)
        if (!g.adjacent(later[a], later[b])) return false;
  }
  return true;
}

namespace detail {

/// Maximum cardinality search; the reverse visiting order is a PEO iff g is chordal.
inline std::vector<std::size_t> mcs_order(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<int> weight(n, 0);
  std::vector<bool> done(n, false);
  std::vector<std::size_t> visit;
  visit.reserve(n);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t best = n;
    for (std::size_t v = 0; v < n; ++v)
      if (!done[v] && (best == n || weight[v] > weight[best])) best = v;
    done[best] = true;
    visit.push_back(best);
    for (auto u : g.neighbors(best))
      if (!done[u]) ++weight[u];
  }
  std::reverse(visit.begin(), visit.end());
  return visit;
}

/// Rotate to start at the minimum vertex, direction toward its smaller neighbour.
inline std::vector<std::size_t> canonical_cycle(std::vector<std::size_t> c) {
  auto it = std::min_element(c.begin(), c.end());
  std::rotate(c.begin(), it, c.end());
  if (c.size() > 2 && c.back() < c[1]) std::reverse(c.begin() + 1, c.end());
  return c;
}

/// Finds v with non-adjacent neighbours u, w joined by a path avoiding N[v];
/// the shortest such path closes a chordless cycle through v.
inline std::optional<std::vector<std::size_t>> find_chordless_cycle(const Graph& g) {
  const std::size_t n = g.num_vertices();
  for (std::size_t v = 0; v < n; ++v) {
    const auto nb = g.neighbors(v);
    for (std::size_t a = 0; a < nb.size(); ++a) {
      for (std::size_t b = a + 1; b < nb.size(); ++b) {
        const std::size_t u = nb[a], w = nb[b];
        if (g.adjacent(u, w)) continue;
        std::vector<bool> blocked(n, false);
        blocked[v] = true;
        for (auto x : nb) blocked[x] = (x != u && x != w);
        std::vector<std::size_t> parent(n, n);
        std::deque<std::size_t> queue{u};
        parent[u] = u;
        while (!queue.empty() && parent[w] == n) {
          const auto x = queue.front();
          queue.pop_front();
          for (auto y : g.neighbors(x)) {
            if (blocked[y] || parent[y] != n) continue;
            // Interior vertices must avoid N[v]; only u and w may touch v.
            parent[y] = x;
            queue.push_back(y);
          }
        }
        if (parent[w] == n) continue;
        std::vector<std::size_t> path;
        for (std::size_t x = w; x != u; x = parent[x]) path.push_back(x);
        path.push_back(u);
        std::reverse(path.begin(), path.end());
        std::vector<std::size_t> cycle{v};
        cycle.insert(cycle.end(), path.begin(), path.end());
        return canonical_cycle(std::move(cycle));
      }
    }
  }
  return std::nullopt;
}

}  // namespace detail

inline ChordalityVerdict is_chordal(const Graph& g) {
  if (g.has_loops()) throw InputError("is_chordal: graph has loops");
  ChordalityVerdict v;
  auto order = detail::mcs_order(g);
  if (is_perfect_elimination_ordering(g, order)) {
    v.chordal = true;
    v.peo = std::move(order);
    return v;
  }
  auto cycle = detail::find_chordless_cycle(g);
  if (!cycle) throw FalsificationError("MCS rejected a graph without a chordless cycle");
  v.chordless_cycle = std::move(*cycle);
  return v;
}

// ---------------------------------------------------------------------------
// Simplicial complexes, leaves and leaf orders
// ---------------------------------------------------------------------------

using Facet = std::vector<std::size_t>;  // sorted vertex list

/// Complex on vertices 0..n-1 given by its facets (pairwise non-containing,
/// each sorted, listed in lexicographic order).
class SimplicialComplex {
public:
  SimplicialComplex() = default;
  SimplicialComplex(std::size_t n, std::vector<Facet> facets) : n_(n), facets_(std::move(facets)) {
    for (auto& f : facets_) {
      std::sort(f.begin(), f.end());
      if (std::adjacent_find(f.begin(), f.end()) != f.end()) throw InputError("facet repeats a vertex");
      for (auto v : f)
        if (v >= n_) throw InputError("facet vertex out of range");
    }
    std::sort(facets_.begin(), facets_.end());
    for (std::size_t a = 0; a < facets_.size(); ++a)
      for (std::size_t b = 0; b < facets_.size(); ++b)
        if (a != b && std::includes(facets_[b].begin(), facets_[b].end(), facets_[a].begin(),
                                    facets_[a].end()))
          throw InputError("facet list is not inclusion-maximal");
  }

  std::size_t num_vertices() const noexcept { return n_; }
  const std::vector<Facet>& facets() const noexcept { return facets_; }
  std::size_t size() const noexcept { return facets_.size(); }

  /// Edges of the 1-skeleton.
  Graph one_skeleton() const {
    Graph g(n_);
    for (const auto& f : facets_)
      for (std::size_t a = 0; a < f.size(); ++a)
        for (std::size_t b = a + 1; b < f.size(); ++b) g.add_edge(f[a], f[b]);
    return g;
  }

private:
  std::size_t n_ = 0;
  std::vector<Facet> facets_;
};

/// Facet order F_1..F_m (as indices into SimplicialComplex::facets()) in which
/// every F_i is a leaf of <F_1..F_i>.
struct LeafOrder {
  std::vector<std::size_t> order;
};

/// New label per old vertex.
struct VertexLabeling {
  std::vector<std::size_t> new_index;
};

inline SimplicialComplex clique_complex(const Graph& g, const std::vector<std::size_t>& peo) {
  if (!is_perfect_elimination_ordering(g, peo))
    throw InputError("clique_complex: ordering is not a perfect elimination ordering");
  const std::size_t n = g.num_vertices();
  std::vector<std::size_t> pos(n);
  for (std::size_t p = 0; p < n; ++p) pos[peo[p]] = p;

  std::vector<Facet> cand;
  for (auto v : peo) {
    Facet c{v};
    for (auto u : g.neighbors(v))
      if (pos[u] > pos[v]) c.push_back(u);
    std::sort(c.begin(), c.end());
    cand.push_back(std::move(c));
  }
  std::vector<Facet> maximal;
  for (std::size_t a = 0; a < cand.size(); ++a) {
    bool dominated = false;
    for (std::size_t b = 0; b < cand.size() && !dominated; ++b) {
      if (a == b) continue;
      const bool inc = std::includes(cand[b].begin(), cand[b].end(), cand[a].begin(), cand[a].end());
      // Equal candidates cannot occur: each starts from a distinct PEO vertex.
      dominated = inc && cand[b].size() > cand[a].size();
    }
    if (!dominated) maximal.push_back(cand[a]);
  }
  return SimplicialComplex(n, std::move(maximal));
}

/// Clique complex of an arbitrary simple graph: facets are the maximal cliques,
/// enumerated by Bron-Kerbosch with pivoting.
inline SimplicialComplex clique_complex(const Graph& g) {
  if (g.has_loops()) throw InputError("clique_complex: graph has loops");
  const std::size_t n = g.num_vertices();
  std::vector<Facet> maximal;
  Facet r;
  auto expand = [&](auto&& self, std::vector<std::size_t> p, std::vector<std::size_t> x) -> void {
    if (p.empty() && x.empty()) {
      maximal.push_back(r);
      return;
    }
    std::size_t pivot = p.empty() ? x.front() : p.front();
    std::size_t best = 0;
    for (const auto& side : {p, x})
      for (auto u : side) {
        std::size_t deg = 0;
        for (auto v : p) deg += g.adjacent(u, v) ? 1 : 0;
        if (deg >= best) best = deg, pivot = u;
      }
    const std::vector<std::size_t> candidates = p;
    for (auto v : candidates) {
      if (g.adjacent(pivot, v)) continue;
      std::vector<std::size_t> np, nx;
      for (auto u : p)
        if (u != v && g.adjacent(u, v)) np.push_back(u);
      for (auto u : x)
        if (g.adjacent(u, v)) nx.push_back(u);
      r.push_back(v);
      self(self, std::move(np), std::move(nx));
      r.pop_back();
      p.erase(std::find(p.begin(), p.end(), v));
      x.push_back(v);
    }
  };
  std::vector<std::size_t> all(n);
  for (std::size_t v = 0; v < n; ++v) all[v] = v;
  expand(expand, all, {});
  return SimplicialComplex(n, std::move(maximal));
}

namespace detail {

inline Facet intersect(const Facet& a, const Facet& b) {
  Facet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

/// Leaf test for facet `f` inside the subcomplex spanned by `active` facet indices.
/// Returns the branch facet index, or f itself when it is the only facet.
inline std::optional<std::size_t> leaf_branch(const std::vector<Facet>& facets,
                                              const std::vector<std::size_t>& active, std::size_t f) {
  if (active.size() == 1) return f;
  const Facet& F = facets[f];
  for (auto g : active) {
    if (g == f) continue;
    const Facet gf = intersect(facets[g], F);
    bool absorbs = true;
    for (auto h : active) {
      if (h == f) continue;
      const Facet hf = intersect(facets[h], F);
      if (!std::includes(gf.begin(), gf.end(), hf.begin(), hf.end())) {
        absorbs = false;
        break;
      }
    }
    if (absorbs) return g;
  }
  return std::nullopt;
}

}  // namespace detail

inline bool is_leaf(const SimplicialComplex& delta, std::size_t facet) {
  if (facet >= delta.size()) throw InputError("is_leaf: facet index out of range");
  std::vector<std::size_t> all(delta.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return detail::leaf_branch(delta.facets(), all, facet).has_value();
}

/// Leaf test in the subcomplex <facets[active...]>.
inline bool is_leaf_of_subcomplex(const SimplicialComplex& delta, const std::vector<std::size_t>& active,
                                  std::size_t facet) {
  return detail::leaf_branch(delta.facets(), active, facet).has_value();
}

/// Greedy: repeatedly strip the lowest-index leaf of what remains; stripped
/// facets fill the order from the back. nullopt when some stage has no leaf.
inline std::optional<LeafOrder> leaf_order(const SimplicialComplex& delta) {
  std::vector<std::size_t> remaining(delta.size());
  for (std::size_t i = 0; i < remaining.size(); ++i) remaining[i] = i;
  std::vector<std::size_t> stripped;
  while (!remaining.empty()) {
    auto it = std::find_if(remaining.begin(), remaining.end(), [&](std::size_t f) {
      return detail::leaf_branch(delta.facets(), remaining, f).has_value();
    });
    if (it == remaining.end()) return std::nullopt;
    stripped.push_back(*it);
    remaining.erase(it);
  }
  std::reverse(stripped.begin(), stripped.end());
  return LeafOrder{std::move(stripped)};
}

/// True iff `order` is a permutation of the facets with every prefix ending in a leaf.
inline bool is_leaf_order(const SimplicialComplex& delta, const LeafOrder& lo) {
  if (lo.order.size() != delta.size()) return false;
  std::vector<bool> seen(delta.size(), false);
  std::vector<std::size_t> prefix;
  for (auto f : lo.order) {
    if (f >= delta.size() || seen[f]) return false;
    seen[f] = true;
    prefix.push_back(f);
    if (!detail::leaf_branch(delta.facets(), prefix, f)) return false;
  }
  return true;
}

inline std::vector<std::size_t> free_vertices(const SimplicialComplex& delta, std::size_t facet) {
  if (facet >= delta.size()) throw InputError("free_vertices: facet index out of range");
  std::vector<std::size_t> out;
  for (auto v : delta.facets()[facet]) {
    bool elsewhere = false;
    for (std::size_t g = 0; g < delta.size() && !elsewhere; ++g)
      if (g != facet) elsewhere = std::binary_search(delta.facets()[g].begin(), delta.facets()[g].end(), v);
    if (!elsewhere) out.push_back(v);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Dirac labeling and the quadratic conditions (*), (**)
// ---------------------------------------------------------------------------

/// Relabeling plus the quasi-tree data it was peeled from.
struct DiracResult {
  VertexLabeling labeling;
  SimplicialComplex complex;  // clique complex of the complement
  LeafOrder leaf_order;
};

namespace detail {
inline PreconditionError not_chordal_error(const std::string& op, const std::vector<std::size_t>& cycle) {
  nlohmann::json w;
  w["chordless_cycle"] = nlohmann::json::array();
  for (auto v : cycle) w["chordless_cycle"].push_back(v + 1);
  return PreconditionError(op + ": complement is not chordal", std::move(w));
}
}  // namespace detail

/// `g` is the graph of a quadratic ideal (loops are ignored). Peels the leaf order of
/// the clique complex of the complement from its last facet, giving the free vertices
/// of each peeled facet the largest labels still unused (ties: ascending vertex).
inline DiracResult dirac_labeling(const Graph& g) {
  const std::size_t n = g.num_vertices();
  const Graph h = complement(simple_part(g));
  const auto verdict = is_chordal(h);
  if (!verdict.chordal) throw detail::not_chordal_error("dirac_labeling", verdict.chordless_cycle);

  DiracResult out{VertexLabeling{std::vector<std::size_t>(n, n)}, clique_complex(h, verdict.peo), {}};
  auto lo = leaf_order(out.complex);
  if (!lo) throw FalsificationError("clique complex of a chordal graph has no leaf order");
  out.leaf_order = *lo;

  const auto& facets = out.complex.facets();
  const auto& order = out.leaf_order.order;
  std::size_t next = n;
  for (std::size_t i = order.size(); i-- > 0;) {
    // Free vertices of F_i inside <F_1..F_i>: those in no earlier facet.
    for (auto v : facets[order[i]]) {
      bool earlier = false;
      for (std::size_t s = 0; s < i && !earlier; ++s)
        earlier = std::binary_search(facets[order[s]].begin(), facets[order[s]].end(), v);
      if (!earlier) out.labeling.new_index[v] = --next;
    }
  }
  if (next != 0) throw FalsificationError("dirac_labeling left vertices unlabeled");
  return out;
}

using Triple = std::array<std::size_t, 3>;

/// Verdict of a combinatorial condition with an (i,j,k) witness on failure.
struct ConditionCheck {
  bool holds = true;
  std::optional<Triple> witness;
};

namespace detail {
/// Membership table for degree-2 monomials of a quadratic ideal.
class QuadTable {
public:
  explicit QuadTable(const MonomialIdeal& I) : n_(I.num_vars()), in_(n_ * n_, 0) {
    require_quadratic(I, "quadratic condition");
    for (const auto& m : I.generators()) {
      const auto s = m.support();
      in_[s.front() * n_ + s.back()] = in_[s.back() * n_ + s.front()] = 1;
    }
  }
  bool operator()(std::size_t i, std::size_t j) const { return in_[i * n_ + j] != 0; }
  std::size_t n() const { return n_; }

private:
  std::size_t n_;
  std::vector<char> in_;
};
}  // namespace detail

/// (*): x_i x_j in I, i != j, k > i, j  =>  x_i x_k in I or x_j x_k in I.
inline ConditionCheck check_star(const MonomialIdeal& I) {
  const detail::QuadTable in(I);
  const std::size_t n = in.n();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!in(i, j)) continue;
      for (std::size_t k = j + 1; k < n; ++k)
        if (!in(i, k) && !in(j, k)) return {false, Triple{i, j, k}};
    }
  return {};
}

/// (**): x_i^2 in I, j > i, x_k x_j in I  =>  x_i x_j in I or x_i x_k in I.
/// j is scanned downward so the reported witness uses the largest offending j.
inline ConditionCheck check_star_star(const MonomialIdeal& I) {
  const detail::QuadTable in(I);
  const std::size_t n = in.n();
  for (std::size_t i = 0; i < n; ++i) {
    if (!in(i, i)) continue;
    for (std::size_t j = n; j-- > i + 1;)
      for (std::size_t k = 0; k < n; ++k)
        if (in(k, j) && !in(i, j) && !in(i, k)) return {false, Triple{i, j, k}};
  }
  return {};
}

struct FreeVertexSquaresCheck {
  bool holds = true;
  nlohmann::json witness;  // {"not_free": v} or {"same_facet": [v, w], "facet": [...]}, 1-based
  SimplicialComplex complex;
};

/// For I = (squares, J): every square index is a free vertex of the quasi-tree whose
/// 1-skeleton is the complement of graph(J), and no two of them share a facet.
inline FreeVertexSquaresCheck check_free_vertex_squares(const MonomialIdeal& I) {
  const auto split = squarefree_part(I);
  const Graph h = complement(simple_part(graph_of_ideal(split.squarefree)));
  const auto verdict = is_chordal(h);
  if (!verdict.chordal)
    throw detail::not_chordal_error("check_free_vertex_squares", verdict.chordless_cycle);

  FreeVertexSquaresCheck out;
  out.complex = clique_complex(h, verdict.peo);
  const auto& facets = out.complex.facets();
  std::vector<std::size_t> home(I.num_vars(), facets.size());
  for (auto s : split.squares) {
    std::size_t count = 0;
    for (std::size_t f = 0; f < facets.size(); ++f)
      if (std::binary_search(facets[f].begin(), facets[f].end(), s)) {
        ++count;
        home[s] = f;
      }
    if (count != 1) {
      out.holds = false;
      out.witness = {{"not_free", s + 1}};
      return out;
    }
  }
  for (std::size_t a = 0; a < split.squares.size(); ++a)
    for (std::size_t b = a + 1; b < split.squares.size(); ++b) {
      const auto s = split.squares[a], t = split.squares[b];
      if (home[s] == home[t]) {
        out.holds = false;
        nlohmann::json facet = nlohmann::json::array();
        for (auto v : facets[home[s]]) facet.push_back(v + 1);
        out.witness = {{"same_facet", {s + 1, t + 1}}, {"facet", facet}};
        return out;
      }
    }
  return out;
}

}  // namespace linres
