#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "linres/binomial.hpp"
#include "linres/errors.hpp"
#include "linres/graph.hpp"
#include "linres/monomial.hpp"

namespace linres {

/// Graph Omega on vertices 0..n: the graph of a quadratic ideal I (loops at squares)
/// plus a cone vertex n joined to every other vertex. Also fixes the presentation
/// ring T = K[x_1..x_n, y_e : e edge of graph(I)] of the Rees ring R(I) = T/P.
///
/// Variable layout of T: x_i at index i (0 <= i < n), then y_e in canonical edge order.
class ReesRing {
public:
  explicit ReesRing(const MonomialIdeal& I) : n_(I.num_vars()), base_(graph_of_ideal(I)), omega_(n_ + 1, true) {
    y_edges_ = base_.edges();
    for (auto [a, b] : y_edges_) omega_.add_edge(a, b);
    for (std::size_t i = 0; i < n_; ++i) omega_.add_edge(i, n_);
  }

  std::size_t n() const noexcept { return n_; }
  std::size_t cone() const noexcept { return n_; }
  const Graph& omega() const noexcept { return omega_; }
  const Graph& base() const noexcept { return base_; }
  const std::vector<Edge>& y_edges() const noexcept { return y_edges_; }
  std::size_t num_vars() const noexcept { return n_ + y_edges_.size(); }

  /// T-variable for the Omega edge {a, b}: x_i for a cone edge, y_{ab} otherwise.
  std::optional<std::size_t> variable_of_edge(std::size_t a, std::size_t b) const {
    if (a > b) std::swap(a, b);
    if (b == n_) return a == n_ ? std::nullopt : std::optional<std::size_t>(a);
    auto it = std::lower_bound(y_edges_.begin(), y_edges_.end(), Edge{a, b});
    if (it == y_edges_.end() || *it != Edge{a, b}) return std::nullopt;
    return n_ + static_cast<std::size_t>(it - y_edges_.begin());
  }

  /// Endpoints of the Omega edge behind a T-variable.
  Edge edge_of_variable(std::size_t v) const { return v < n_ ? Edge{v, n_} : y_edges_.at(v - n_); }

  /// pi(x_i) = t_i t_{n+1}, pi(y_ij) = t_i t_j, as exponent vectors of length n+1.
  std::vector<int> image(const Exponents& m) const {
    std::vector<int> t(n_ + 1, 0);
    for (std::size_t v = 0; v < m.size(); ++v) {
      if (m[v] == 0) continue;
      const auto [a, b] = edge_of_variable(v);
      t[a] += m[v];
      t[b] += m[v];
    }
    return t;
  }
  bool in_toric_ideal(const Binomial& f) const { return image(f.plus) == image(f.minus); }

  int deg_x(const Exponents& m) const {
    int d = 0;
    for (std::size_t i = 0; i < n_; ++i) d += m[i];
    return d;
  }
  int deg_y(const Exponents& m) const {
    int d = 0;
    for (std::size_t v = n_; v < m.size(); ++v) d += m[v];
    return d;
  }

  /// y_{ij} > y_{pq} iff (min, max) is lexicographically smaller; every y above
  /// x_1 > x_2 > ... > x_n; compared lexicographically.
  TermOrder paper_order() const {
    std::vector<std::size_t> rank;
    // y_edges_ is sorted by (min, max) ascending, i.e. by decreasing priority.
    for (std::size_t e = 0; e < y_edges_.size(); ++e) rank.push_back(n_ + e);
    for (std::size_t i = 0; i < n_; ++i) rank.push_back(i);
    return TermOrder::lex(std::move(rank));
  }

  /// paper_order() with every loop variable y_{jj} moved above all y_{ij}, i != j.
  /// Within each group and on the x-variables it agrees with paper_order().
  TermOrder squares_first_order() const {
    std::vector<std::size_t> rank;
    for (std::size_t e = 0; e < y_edges_.size(); ++e)
      if (y_edges_[e].first == y_edges_[e].second) rank.push_back(n_ + e);
    for (std::size_t e = 0; e < y_edges_.size(); ++e)
      if (y_edges_[e].first != y_edges_[e].second) rank.push_back(n_ + e);
    for (std::size_t i = 0; i < n_; ++i) rank.push_back(i);
    return TermOrder::lex(std::move(rank));
  }

private:
  std::size_t n_;
  Graph base_;
  Graph omega_;
  std::vector<Edge> y_edges_;
};

/// Lex orders on the Rees presentation ring offered by the toolkit.
enum class ReesOrder { paper_lex, squares_first };

inline std::string rees_order_name(ReesOrder o) { return o == ReesOrder::paper_lex ? "paper-lex" : "squares-first"; }

inline ReesOrder parse_rees_order(const std::string& s) {
  if (s == "paper-lex") return ReesOrder::paper_lex;
  if (s == "squares-first") return ReesOrder::squares_first;
  throw InputError("unknown term order '" + s + "'");
}

inline TermOrder term_order(const ReesRing& ring, ReesOrder o) {
  return o == ReesOrder::paper_lex ? ring.paper_order() : ring.squares_first_order();
}

namespace detail {

/// Integer basis of {u : A u = 0} by unimodular row reduction of [A^T | Id].
inline std::vector<std::vector<std::int64_t>> integer_kernel(const std::vector<std::vector<int>>& columns,
                                                             std::size_t rows) {
  const std::size_t N = columns.size();
  std::vector<std::vector<std::int64_t>> m(N, std::vector<std::int64_t>(rows + N, 0));
  for (std::size_t c = 0; c < N; ++c) {
    for (std::size_t r = 0; r < rows; ++r) m[c][r] = columns[c][r];
    m[c][rows + c] = 1;
  }
  std::size_t top = 0;
  for (std::size_t col = 0; col < rows && top < N; ++col) {
    // Euclid on column `col` among rows top..N-1
    while (true) {
      std::size_t piv = N;
      for (std::size_t r = top; r < N; ++r)
        if (m[r][col] != 0 && (piv == N || std::llabs(m[r][col]) < std::llabs(m[piv][col]))) piv = r;
      if (piv == N) break;
      std::swap(m[top], m[piv]);
      bool cleared = true;
      for (std::size_t r = top + 1; r < N; ++r) {
        if (m[r][col] == 0) continue;
        const std::int64_t q = m[r][col] / m[top][col];
        for (std::size_t c = 0; c < rows + N; ++c) m[r][c] -= q * m[top][c];
        if (m[r][col] != 0) cleared = false;
      }
      if (cleared) {
        ++top;
        break;
      }
    }
  }
  std::vector<std::vector<std::int64_t>> kernel;
  for (std::size_t r = top; r < N; ++r) {
    bool zero = true;
    for (std::size_t c = 0; c < rows && zero; ++c) zero = m[r][c] == 0;
    if (!zero) throw FalsificationError("integer kernel reduction left a non-zero image row");
    kernel.emplace_back(m[r].begin() + static_cast<std::ptrdiff_t>(rows), m[r].end());
  }
  return kernel;
}

/// I : v^infinity for homogeneous binomial I, via grevlex with v cheapest.
inline std::vector<Binomial> saturate_variable(const std::vector<Binomial>& gens, std::size_t v, std::size_t N,
                                               const GroebnerOptions& opt) {
  std::vector<std::size_t> rank;
  for (std::size_t u = 0; u < N; ++u)
    if (u != v) rank.push_back(u);
  rank.push_back(v);
  const TermOrder order = TermOrder::grevlex(std::move(rank));
  auto gb = reduced_groebner(gens, order, opt);
  for (auto& f : gb) {
    const int k = std::min(f.plus[v], f.minus[v]);
    f.plus[v] -= k;
    f.minus[v] -= k;
  }
  return gb;
}

}  // namespace detail

/// Generators of P = ker(pi): a lattice basis of ker(A) turned into binomials, then
/// saturated by every variable in turn.
inline std::vector<Binomial> toric_ideal_gens(const ReesRing& ring, const GroebnerOptions& opt = {}) {
  const std::size_t N = ring.num_vars();
  std::vector<std::vector<int>> columns;
  for (std::size_t v = 0; v < N; ++v) {
    Exponents e(N, 0);
    e[v] = 1;
    columns.push_back(ring.image(e));
  }
  std::vector<Binomial> gens;
  for (const auto& u : detail::integer_kernel(columns, ring.n() + 1)) {
    Binomial b{Exponents(N, 0), Exponents(N, 0)};
    for (std::size_t v = 0; v < N; ++v) (u[v] > 0 ? b.plus : b.minus)[v] = static_cast<int>(std::llabs(u[v]));
    gens.push_back(std::move(b));
  }
  for (std::size_t v = 0; v < N && !gens.empty(); ++v) gens = detail::saturate_variable(gens, v, N, opt);
  std::erase_if(gens, [](const Binomial& f) { return f.plus == f.minus; });
  for (const auto& f : gens)
    if (!ring.in_toric_ideal(f)) throw FalsificationError("toric generator is not in ker(pi)");
  return gens;
}

/// Slow independent route: eliminate t_0..t_n from (x_i - t_i t_n, y_ij - t_i t_j)
/// with a lex order that ranks every t above T, then keep the t-free part.
inline std::vector<Binomial> toric_ideal_by_elimination(const ReesRing& ring, const GroebnerOptions& opt = {}) {
  const std::size_t N = ring.num_vars();
  const std::size_t tn = ring.n() + 1;
  const std::size_t total = tn + N;
  std::vector<Binomial> gens;
  for (std::size_t v = 0; v < N; ++v) {
    Binomial b{Exponents(total, 0), Exponents(total, 0)};
    b.plus[tn + v] = 1;
    const auto [a, c] = ring.edge_of_variable(v);
    b.minus[a] += 1;
    b.minus[c] += 1;
    gens.push_back(std::move(b));
  }
  std::vector<std::size_t> rank;
  for (std::size_t t = 0; t < tn; ++t) rank.push_back(t);
  const TermOrder paper = ring.paper_order();
  for (auto v : paper.ranking()) rank.push_back(tn + v);
  const auto gb = reduced_groebner(gens, TermOrder::lex(std::move(rank)), opt);
  std::vector<Binomial> out;
  for (const auto& f : gb) {
    bool t_free = true;
    for (std::size_t t = 0; t < tn && t_free; ++t) t_free = f.plus[t] == 0 && f.minus[t] == 0;
    if (!t_free) continue;
    out.push_back({Exponents(f.plus.begin() + static_cast<std::ptrdiff_t>(tn), f.plus.end()),
                   Exponents(f.minus.begin() + static_cast<std::ptrdiff_t>(tn), f.minus.end())});
  }
  return out;
}

struct HilbertComparison {
  bool agrees = true;
  std::vector<std::size_t> quotient;   // dim (T/(gens))_k, k = 0..bound
  std::vector<std::size_t> semigroup;  // number of distinct pi-images in degree k
};

/// Compares the Hilbert function of T/(gens) with that of the semigroup ring K[Omega]
/// in degrees 0..bound.
inline HilbertComparison hilbert_agreement(const ReesRing& ring, const std::vector<Binomial>& gens, int bound) {
  const std::size_t N = ring.num_vars();
  std::vector<std::size_t> rank(N);
  std::iota(rank.begin(), rank.end(), std::size_t{0});
  const TermOrder order = TermOrder::grevlex(rank);
  const auto gb = reduced_groebner(gens, order);
  HilbertComparison out;
  for (int k = 0; k <= bound; ++k) {
    std::size_t standard = 0;
    std::set<std::vector<int>> images;
    Exponents e(N, 0);
    // enumerate all exponent vectors of total degree k
    auto rec = [&](auto&& self, std::size_t v, int left) -> void {
      if (v + 1 == N || N == 0) {
        if (N > 0) e[v] = left;
        if (N == 0 && left > 0) return;
        images.insert(ring.image(e));
        if (std::none_of(gb.begin(), gb.end(), [&](const Binomial& g) { return exps::divides(g.plus, e); }))
          ++standard;
        return;
      }
      for (int a = left; a >= 0; --a) {
        e[v] = a;
        self(self, v + 1, left - a);
      }
      e[v] = 0;
    };
    rec(rec, 0, k);
    out.quotient.push_back(standard);
    out.semigroup.push_back(images.size());
    if (standard != images.size()) out.agrees = false;
  }
  return out;
}

struct XDegreeCheck {
  bool holds = true;
  int max_deg_x = 0;
  std::optional<std::size_t> witness;  // index of the first element with deg_x > 1
};

/// Every element has deg_x <= 1 (the x-condition sufficient criterion).
inline XDegreeCheck x_degree_check(const ReesRing& ring, const std::vector<Binomial>& gb) {
  XDegreeCheck out;
  for (std::size_t t = 0; t < gb.size(); ++t) {
    const int d = std::max(ring.deg_x(gb[t].plus), ring.deg_x(gb[t].minus));
    out.max_deg_x = std::max(out.max_deg_x, d);
    if (d > 1 && out.holds) {
      out.holds = false;
      out.witness = t;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Even closed walks in Omega
// ---------------------------------------------------------------------------

/// Cyclic vertex sequence (w_1, ..., w_2m); consecutive entries (and w_2m, w_1) are edges.
struct ClosedWalk {
  std::vector<std::size_t> vertices;
  friend bool operator==(const ClosedWalk&, const ClosedWalk&) = default;
  friend auto operator<=>(const ClosedWalk&, const ClosedWalk&) = default;
};

/// f = prod y_{w1 w2} y_{w3 w4} ... - prod y_{w2 w3} ... y_{w2m w1}, with cone
/// edges {i, n+1} read as x_i.
inline Binomial walk_to_binomial(const ReesRing& ring, const ClosedWalk& walk) {
  const auto& w = walk.vertices;
  if (w.empty() || w.size() % 2 != 0) throw InputError("walk_to_binomial: walk must have even positive length");
  Binomial f{Exponents(ring.num_vars(), 0), Exponents(ring.num_vars(), 0)};
  for (std::size_t k = 0; k < w.size(); ++k) {
    const auto var = ring.variable_of_edge(w[k], w[(k + 1) % w.size()]);
    if (!var) throw InputError("walk_to_binomial: consecutive vertices are not an edge of Omega");
    (k % 2 == 0 ? f.plus : f.minus)[*var] += 1;
  }
  if (!ring.in_toric_ideal(f)) throw FalsificationError("walk binomial is not in ker(pi)");
  return f;
}

/// No binomial g != f of P with g+ | f+ and g- | f- (exact, by divisor search).
inline bool is_primitive(const ReesRing& ring, const Binomial& f) {
  if (f.plus == f.minus) return false;
  auto divisors = [](const Exponents& m) {
    std::vector<Exponents> out{Exponents(m.size(), 0)};
    for (std::size_t v = 0; v < m.size(); ++v) {
      const std::size_t base = out.size();
      for (int a = 1; a <= m[v]; ++a)
        for (std::size_t t = 0; t < base; ++t) {
          Exponents d = out[t];
          d[v] = a;
          out.push_back(std::move(d));
        }
    }
    return out;
  };
  std::map<std::vector<int>, std::vector<Exponents>> by_image;
  for (auto& d : divisors(f.minus)) by_image[ring.image(d)].push_back(std::move(d));
  const Exponents one(f.plus.size(), 0);
  for (const auto& u : divisors(f.plus)) {
    auto it = by_image.find(ring.image(u));
    if (it == by_image.end()) continue;
    for (const auto& v : it->second) {
      const bool trivial = (u == one && v == one) || (u == f.plus && v == f.minus);
      if (!trivial) return false;
    }
  }
  return true;
}

namespace detail {
inline ClosedWalk canonical_walk(const std::vector<std::size_t>& w) {
  ClosedWalk best{w};
  const std::size_t L = w.size();
  for (int dir = 0; dir < 2; ++dir)
    for (std::size_t r = 0; r < L; ++r) {
      std::vector<std::size_t> c(L);
      for (std::size_t k = 0; k < L; ++k) c[k] = dir == 0 ? w[(r + k) % L] : w[(r + L - k) % L];
      if (c < best.vertices) best.vertices = std::move(c);
    }
  return best;
}
/// Sign-independent key of a binomial.
inline std::pair<Exponents, Exponents> unsigned_key(const Binomial& f) {
  return f.plus < f.minus ? std::make_pair(f.plus, f.minus) : std::make_pair(f.minus, f.plus);
}
}  // namespace detail

struct WalkEnumeration {
  std::vector<ClosedWalk> walks;       // one canonical walk per primitive binomial
  std::vector<Binomial> binomials;     // walk_to_binomial of each walk
  std::size_t length_bound = 0;
  std::size_t max_length_found = 0;
};

/// All primitive even closed walks of Omega of length <= length_bound, one per binomial
/// (up to sign), each in canonical rotation/reflection form.
///
/// A vertex repeated at even distance inside a walk closes a proper even subwalk whose
/// binomial divides f (or -f) termwise, so such walks are never primitive; the search
/// prunes them, which also caps every vertex at two visits.
inline WalkEnumeration enumerate_primitive_even_walks(const ReesRing& ring, std::size_t length_bound) {
  if (length_bound < 2 || length_bound % 2 != 0) throw InputError("walk length bound must be even and >= 2");
  const Graph& g = ring.omega();
  const std::size_t V = g.num_vertices();
  std::set<ClosedWalk> seen;
  std::map<std::pair<Exponents, Exponents>, std::size_t> by_binomial;
  WalkEnumeration out;
  out.length_bound = length_bound;

  std::vector<std::size_t> w;
  std::vector<std::vector<std::size_t>> positions(V);
  auto even_repeat = [&](std::size_t v, std::size_t pos) {
    for (auto p : positions[v])
      if ((pos - p) % 2 == 0) return true;
    return false;
  };

  auto consider = [&]() {
    ClosedWalk c = detail::canonical_walk(w);
    if (!seen.insert(c).second) return;
    const Binomial f = walk_to_binomial(ring, c);
    if (!is_primitive(ring, f)) return;
    const auto key = detail::unsigned_key(f);
    auto it = by_binomial.find(key);
    if (it == by_binomial.end()) {
      by_binomial.emplace(key, out.walks.size());
      out.walks.push_back(c);
      out.binomials.push_back(f);
      out.max_length_found = std::max(out.max_length_found, c.vertices.size());
    } else if (c < out.walks[it->second]) {
      out.walks[it->second] = c;
      out.binomials[it->second] = f;
    }
  };

  auto dfs = [&](auto&& self, std::size_t start) -> void {
    const std::size_t cur = w.back();
    if (w.size() % 2 == 0 && g.adjacent(cur, start)) consider();
    if (w.size() == length_bound) return;
    for (std::size_t u = start; u < V; ++u) {
      if (!g.adjacent(cur, u) || even_repeat(u, w.size())) continue;
      positions[u].push_back(w.size());
      w.push_back(u);
      self(self, start);
      w.pop_back();
      positions[u].pop_back();
    }
  };

  for (std::size_t s = 0; s < V; ++s) {
    w.assign(1, s);
    positions[s].push_back(0);
    dfs(dfs, s);
    positions[s].clear();
  }

  // deterministic output order
  std::vector<std::size_t> idx(out.walks.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    if (out.walks[a].vertices.size() != out.walks[b].vertices.size())
      return out.walks[a].vertices.size() < out.walks[b].vertices.size();
    return out.walks[a] < out.walks[b];
  });
  WalkEnumeration sorted;
  sorted.length_bound = out.length_bound;
  sorted.max_length_found = out.max_length_found;
  for (auto i : idx) {
    sorted.walks.push_back(out.walks[i]);
    sorted.binomials.push_back(out.binomials[i]);
  }
  return sorted;
}

inline std::size_t default_walk_bound(const ReesRing& ring) {
  return std::max<std::size_t>(4, 2 * ring.omega().num_edges());
}

struct GraverCrosscheck {
  bool agrees = true;             // every GB element is a walk binomial
  bool bound_sufficient = true;   // every GB element's walk length fits under the bound
  std::vector<std::size_t> missing;  // GB indices with no walk
  std::size_t num_walks = 0;
  std::size_t length_bound = 0;
};

/// Reduced GB under the given order versus primitive walk binomials. A missing element
/// longer than the bound is an insufficient bound; a missing element within it is a
/// contradiction and raises.
inline GraverCrosscheck graver_vs_groebner_crosscheck(const ReesRing& ring, const std::vector<Binomial>& gb,
                                                      std::size_t length_bound) {
  const auto walks = enumerate_primitive_even_walks(ring, length_bound);
  std::set<std::pair<Exponents, Exponents>> keys;
  for (const auto& f : walks.binomials) keys.insert(detail::unsigned_key(f));
  GraverCrosscheck out;
  out.num_walks = walks.walks.size();
  out.length_bound = length_bound;
  for (std::size_t t = 0; t < gb.size(); ++t) {
    if (keys.count(detail::unsigned_key(gb[t]))) continue;
    out.agrees = false;
    out.missing.push_back(t);
    const auto len = static_cast<std::size_t>(2 * exps::degree(gb[t].plus));
    if (len > length_bound) {
      out.bound_sufficient = false;
    } else {
      throw FalsificationError("reduced Groebner basis element is not a primitive walk binomial",
                               {{"gb_index", t}});
    }
  }
  return out;
}

}  // namespace linres
