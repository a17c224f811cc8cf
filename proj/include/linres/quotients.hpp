#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <unordered_set>
#include <utility>
#include <vector>

#include "linres/chordal.hpp"
#include "linres/errors.hpp"
#include "linres/monomial.hpp"

namespace linres {

/// f_1, f_2, ..., f_m as indices into G(I); f_1 is the largest element.
struct GeneratorOrder {
  std::vector<std::size_t> seq;
};

namespace detail {

inline void require_permutation(const MonomialIdeal& I, const GeneratorOrder& order) {
  if (order.seq.size() != I.size()) throw InputError("generator order does not cover G(I)");
  std::vector<bool> seen(I.size(), false);
  for (auto g : order.seq) {
    if (g >= I.size() || seen[g]) throw InputError("generator order is not a permutation of G(I)");
    seen[g] = true;
  }
}

/// w / gcd(w, v) has degree 1 and divides u / gcd(u, v).
inline bool linear_step(const Monomial& w, const Monomial& u, const Monomial& v) {
  const Monomial qw = quotient(w, gcd(w, v));
  return qw.degree() == 1 && divides(qw, quotient(u, gcd(u, v)));
}

/// (chosen):f is generated by variables.
inline bool colon_is_linear(const std::vector<Monomial>& gens, std::uint64_t chosen, const Monomial& f) {
  for (std::size_t j = 0; j < gens.size(); ++j) {
    if (!(chosen >> j & 1u)) continue;
    bool covered = false;
    for (std::size_t k = 0; k < gens.size() && !covered; ++k)
      if (chosen >> k & 1u) covered = linear_step(gens[k], gens[j], f);
    if (!covered) return false;
  }
  return true;
}

}  // namespace detail

struct LinearQuotientsCheck {
  bool holds = true;
  /// 0-based positions (i, j) in the order: f_j / gcd(f_j, f_i) has no linear divisor
  /// among the colon generators at step i.
  std::optional<std::pair<std::size_t, std::size_t>> witness;
};

inline LinearQuotientsCheck has_linear_quotients(const MonomialIdeal& I, const GeneratorOrder& order) {
  if (!I.is_equigenerated()) throw InputError("has_linear_quotients: ideal is not equigenerated");
  detail::require_permutation(I, order);
  const auto& g = I.generators();
  const auto& s = order.seq;
  for (std::size_t i = 1; i < s.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      bool covered = false;
      for (std::size_t k = 0; k < i && !covered; ++k) covered = detail::linear_step(g[s[k]], g[s[j]], g[s[i]]);
      if (!covered) return {false, std::make_pair(i, j)};
    }
  return {};
}

struct QCertificate {
  std::size_t u, v, w;  // generator indices
};

struct ConditionQCheck {
  bool holds = true;
  std::optional<std::pair<std::size_t, std::size_t>> witness;  // (u, v) generator indices
  std::vector<QCertificate> certificates;                      // one w per pair u > v
};

/// (q): for all u > v in the order there is w > v such that w/[w,v] has degree 1 and
/// divides u/[u,v]. Debug builds also confirm the implied linear-quotients property.
inline ConditionQCheck condition_q(const MonomialIdeal& I, const GeneratorOrder& order) {
  detail::require_quadratic(I, "condition_q");
  detail::require_permutation(I, order);
  const auto& g = I.generators();
  const auto& s = order.seq;
  ConditionQCheck out;
  for (std::size_t b = 1; b < s.size() && out.holds; ++b)
    for (std::size_t a = 0; a < b; ++a) {
      std::optional<std::size_t> w;
      for (std::size_t c = 0; c < b && !w; ++c)
        if (detail::linear_step(g[s[c]], g[s[a]], g[s[b]])) w = s[c];
      if (!w) {
        out.holds = false;
        out.witness = std::make_pair(s[a], s[b]);
        out.certificates.clear();
        break;
      }
      out.certificates.push_back({s[a], s[b], *w});
    }
#ifndef NDEBUG
  if (out.holds && !has_linear_quotients(I, order).holds)
    throw FalsificationError("condition (q) holds but the order has no linear quotients");
#endif
  return out;
}

struct LqConstruction {
  GeneratorOrder order;
  /// Squares x_i^2 without a squarefree partner x_k x_i (k < i); placed last.
  std::vector<std::size_t> bottom_squares;
};

/// x_n > ... > x_1 lexicographic comparison: a is larger iff at the largest variable
/// where they differ it has the larger exponent.
inline bool high_variable_lex_greater(const Monomial& a, const Monomial& b) {
  for (std::size_t v = a.size(); v-- > 0;)
    if (a[v] != b[v]) return a[v] > b[v];
  return false;
}

/// Squarefree generators in descending x_n > ... > x_1 lex order; each x_i^2 sits
/// directly under the smallest squarefree x_k x_i with k < i.
inline LqConstruction construct_lq_order(const MonomialIdeal& I) {
  const auto star = check_star(I);
  auto triple_json = [](const Triple& t) { return nlohmann::json{t[0] + 1, t[1] + 1, t[2] + 1}; };
  if (!star.holds)
    throw PreconditionError("construct_lq_order: condition (*) fails",
                            {{"condition", "*"}, {"witness", triple_json(*star.witness)}});
  const auto star2 = check_star_star(I);
  if (!star2.holds)
    throw PreconditionError("construct_lq_order: condition (**) fails",
                            {{"condition", "**"}, {"witness", triple_json(*star2.witness)}});

  const auto& g = I.generators();
  std::vector<std::size_t> sf, squares;
  for (std::size_t t = 0; t < g.size(); ++t) (g[t].is_squarefree() ? sf : squares).push_back(t);
  std::sort(sf.begin(), sf.end(),
            [&](std::size_t a, std::size_t b) { return high_variable_lex_greater(g[a], g[b]); });
  std::sort(squares.begin(), squares.end(),
            [&](std::size_t a, std::size_t b) { return g[a].support()[0] < g[b].support()[0]; });

  LqConstruction out;
  std::vector<std::vector<std::size_t>> under(sf.size());
  for (auto sq : squares) {
    const std::size_t i = g[sq].support()[0];
    // smallest x_k x_i, k < i, in the descending list = last match
    std::optional<std::size_t> slot;
    for (std::size_t p = 0; p < sf.size(); ++p) {
      const auto supp = g[sf[p]].support();
      if (supp[1] == i && supp[0] < i) slot = p;
    }
    if (slot) {
      under[*slot].push_back(sq);
    } else {
      out.bottom_squares.push_back(sq);
    }
  }
  for (std::size_t p = 0; p < sf.size(); ++p) {
    out.order.seq.push_back(sf[p]);
    out.order.seq.insert(out.order.seq.end(), under[p].begin(), under[p].end());
  }
  out.order.seq.insert(out.order.seq.end(), out.bottom_squares.begin(), out.bottom_squares.end());
  return out;
}

enum class SearchStatus { found, none, unknown };

struct LqSearchResult {
  SearchStatus status = SearchStatus::none;
  std::optional<GeneratorOrder> order;
  std::size_t nodes = 0;
};

/// Backtracking over prefixes. Whether f may follow a prefix depends only on the
/// prefix as a set, so dead sets are memoized.
inline LqSearchResult find_lq_order(const MonomialIdeal& I, std::size_t node_budget = 1'000'000) {
  if (!I.is_equigenerated()) throw InputError("find_lq_order: ideal is not equigenerated");
  const auto& g = I.generators();
  const std::size_t m = g.size();
  if (m > 63) throw InputError("find_lq_order: more than 63 generators");
  const std::uint64_t full = (m == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << m) - 1);

  LqSearchResult res;
  std::unordered_set<std::uint64_t> dead;
  std::vector<std::size_t> seq;
  bool exhausted = false;

  auto dfs = [&](auto&& self, std::uint64_t chosen) -> bool {
    if (chosen == full) return true;
    if (++res.nodes > node_budget) {
      exhausted = true;
      return false;
    }
    for (std::size_t f = 0; f < m; ++f) {
      if (chosen >> f & 1u) continue;
      const std::uint64_t next = chosen | (std::uint64_t{1} << f);
      if (dead.count(next) || !detail::colon_is_linear(g, chosen, g[f])) continue;
      seq.push_back(f);
      if (self(self, next)) return true;
      seq.pop_back();
      if (exhausted) return false;
      dead.insert(next);
    }
    return false;
  };

  if (m == 0 || dfs(dfs, 0)) {
    res.status = SearchStatus::found;
    res.order = GeneratorOrder{seq};
  } else {
    res.status = exhausted ? SearchStatus::unknown : SearchStatus::none;
  }
  return res;
}

}  // namespace linres
