#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "linres/errors.hpp"

namespace linres {

using Exponents = std::vector<int>;

/// Monomial order on a polynomial ring with N variables, given by a priority ranking
/// of the variables (ranking[0] is the most significant variable).
class TermOrder {
public:
  enum class Kind { lex, grevlex };

  TermOrder() = default;
  TermOrder(Kind kind, std::vector<std::size_t> ranking) : kind_(kind), ranking_(std::move(ranking)) {
    std::vector<bool> seen(ranking_.size(), false);
    for (auto v : ranking_) {
      if (v >= ranking_.size() || seen[v]) throw InputError("term order ranking is not a permutation");
      seen[v] = true;
    }
  }
  static TermOrder lex(std::vector<std::size_t> ranking) { return {Kind::lex, std::move(ranking)}; }
  static TermOrder grevlex(std::vector<std::size_t> ranking) { return {Kind::grevlex, std::move(ranking)}; }
  static TermOrder identity_lex(std::size_t n) {
    std::vector<std::size_t> r(n);
    std::iota(r.begin(), r.end(), std::size_t{0});
    return lex(std::move(r));
  }

  Kind kind() const noexcept { return kind_; }
  const std::vector<std::size_t>& ranking() const noexcept { return ranking_; }
  std::size_t num_vars() const noexcept { return ranking_.size(); }

  /// a > b
  bool greater(const Exponents& a, const Exponents& b) const {
    if (kind_ == Kind::lex) {
      for (auto v : ranking_)
        if (a[v] != b[v]) return a[v] > b[v];
      return false;
    }
    const int da = std::accumulate(a.begin(), a.end(), 0), db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da > db;
    for (std::size_t p = ranking_.size(); p-- > 0;) {
      const auto v = ranking_[p];
      if (a[v] != b[v]) return a[v] < b[v];
    }
    return false;
  }

private:
  Kind kind_ = Kind::lex;
  std::vector<std::size_t> ranking_;
};

/// plus - minus, with plus the leading term once oriented by a TermOrder.
struct Binomial {
  Exponents plus, minus;
  friend bool operator==(const Binomial&, const Binomial&) = default;
};

namespace exps {
inline bool divides(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}
inline Exponents lcm(const Exponents& a, const Exponents& b) {
  Exponents r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}
inline bool coprime(const Exponents& a, const Exponents& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > 0 && b[i] > 0) return false;
  return true;
}
/// m - lead + tail (caller guarantees lead | m)
inline Exponents rewrite(const Exponents& m, const Exponents& lead, const Exponents& tail) {
  Exponents r(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) r[i] = m[i] - lead[i] + tail[i];
  return r;
}
inline int degree(const Exponents& a) { return std::accumulate(a.begin(), a.end(), 0); }
}  // namespace exps

/// Orient so that plus is the leading term; nullopt for the zero binomial.
inline std::optional<Binomial> oriented(Exponents a, Exponents b, const TermOrder& order) {
  if (a == b) return std::nullopt;
  if (order.greater(b, a)) std::swap(a, b);
  return Binomial{std::move(a), std::move(b)};
}

/// Normal form of a monomial modulo a binomial basis (pure-difference binomials
/// send monomials to monomials).
inline Exponents normal_form(Exponents m, const std::vector<Binomial>& basis) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& g : basis) {
      if (exps::divides(g.plus, m)) {
        m = exps::rewrite(m, g.plus, g.minus);
        changed = true;
        break;
      }
    }
  }
  return m;
}

struct GroebnerOptions {
  std::size_t max_pairs = 5'000'000;
};

namespace detail {

inline std::vector<Binomial> interreduce(std::vector<Binomial> g, const TermOrder& order) {
  // drop elements whose lead is divisible by another lead
  std::sort(g.begin(), g.end(), [&](const Binomial& a, const Binomial& b) { return order.greater(b.plus, a.plus); });
  std::vector<Binomial> minimal;
  for (auto& f : g) {
    const bool redundant = std::any_of(minimal.begin(), minimal.end(),
                                       [&](const Binomial& h) { return exps::divides(h.plus, f.plus); });
    if (!redundant) minimal.push_back(std::move(f));
  }
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Binomial> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    minimal[i].minus = normal_form(minimal[i].minus, others);
    if (minimal[i].minus == minimal[i].plus) throw FalsificationError("tail reduction reached the leading term");
  }
  std::sort(minimal.begin(), minimal.end(),
            [&](const Binomial& a, const Binomial& b) { return order.greater(a.plus, b.plus); });
  return minimal;
}

}  // namespace detail

/// Buchberger's algorithm specialised to pure-difference binomials; returns the
/// reduced Groebner basis sorted by leading term, largest first.
inline std::vector<Binomial> reduced_groebner(const std::vector<Binomial>& gens, const TermOrder& order,
                                              const GroebnerOptions& opt = {}) {
  std::vector<Binomial> basis;
  for (const auto& f : gens) {
    if (f.plus.size() != order.num_vars() || f.minus.size() != order.num_vars())
      throw InputError("binomial does not match the term order's ring");
    auto r = oriented(normal_form(f.plus, basis), normal_form(f.minus, basis), order);
    if (r) basis.push_back(std::move(*r));
  }

  // pairs keyed by total degree of the lcm (normal strategy for homogeneous input)
  std::multimap<int, std::pair<std::size_t, std::size_t>> pairs;
  auto add_pairs = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (exps::coprime(basis[i].plus, basis[j].plus)) continue;
      pairs.emplace(exps::degree(exps::lcm(basis[i].plus, basis[j].plus)), std::make_pair(i, j));
    }
  };
  for (std::size_t j = 1; j < basis.size(); ++j) add_pairs(j);

  std::size_t processed = 0;
  while (!pairs.empty()) {
    if (++processed > opt.max_pairs) throw ResourceLimitError("Buchberger pair budget exhausted");
    const auto [i, j] = pairs.begin()->second;
    pairs.erase(pairs.begin());
    const Exponents l = exps::lcm(basis[i].plus, basis[j].plus);
    auto s = oriented(normal_form(exps::rewrite(l, basis[i].plus, basis[i].minus), basis),
                      normal_form(exps::rewrite(l, basis[j].plus, basis[j].minus), basis), order);
    if (!s) continue;
    basis.push_back(std::move(*s));
    add_pairs(basis.size() - 1);
  }
  return detail::interreduce(std::move(basis), order);
}

/// Every element is oriented by the order and every S-pair reduces to zero.
inline bool is_groebner_basis(const std::vector<Binomial>& g, const TermOrder& order) {
  for (const auto& f : g)
    if (!order.greater(f.plus, f.minus)) return false;
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      const Exponents l = exps::lcm(g[i].plus, g[j].plus);
      if (normal_form(exps::rewrite(l, g[i].plus, g[i].minus), g) !=
          normal_form(exps::rewrite(l, g[j].plus, g[j].minus), g))
        return false;
    }
  return true;
}

/// Reduced: leads pairwise non-dividing and no tail divisible by any lead.
inline bool is_reduced(const std::vector<Binomial>& g, const TermOrder& order) {
  for (const auto& f : g) {
    if (!order.greater(f.plus, f.minus)) return false;
    for (const auto& h : g) {
      if (&f != &h && exps::divides(h.plus, f.plus)) return false;
      if (exps::divides(h.plus, f.minus)) return false;
    }
  }
  return true;
}

}  // namespace linres
