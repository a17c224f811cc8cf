#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "linres/errors.hpp"

namespace linres {

/// A monomial x^a over a fixed set of n variables, stored as its exponent vector.
/// Variables are 0-based internally; all user-facing output is 1-based.
class Monomial {
public:
  Monomial() = default;
  explicit Monomial(std::vector<int> exponents) : exps_(std::move(exponents)) {
    for (int e : exps_)
      if (e < 0) throw InputError("monomial exponents must be non-negative");
  }

  static Monomial one(std::size_t n) { return Monomial(std::vector<int>(n, 0)); }
  static Monomial variable(std::size_t n, std::size_t i, int power = 1) {
    std::vector<int> e(n, 0);
    e.at(i) = power;
    return Monomial(std::move(e));
  }

  std::size_t size() const noexcept { return exps_.size(); }
  int operator[](std::size_t i) const { return exps_[i]; }
  std::span<const int> exponents() const noexcept { return exps_; }

  int degree() const { return std::accumulate(exps_.begin(), exps_.end(), 0); }
  bool is_squarefree() const {
    return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e <= 1; });
  }
  std::vector<std::size_t> support() const {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i] > 0) s.push_back(i);
    return s;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;
  // Plain exponent-vector lexicographic comparison; used for containers only.
  friend auto operator<=>(const Monomial& a, const Monomial& b) { return a.exps_ <=> b.exps_; }

private:
  std::vector<int> exps_;
};

namespace detail {
inline void require_same_ring(const Monomial& a, const Monomial& b) {
  if (a.size() != b.size()) throw InputError("monomials live in rings of different dimension");
}
template <class Op>
Monomial componentwise(const Monomial& a, const Monomial& b, Op op) {
  require_same_ring(a, b);
  std::vector<int> e(a.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = op(a[i], b[i]);
  return Monomial(std::move(e));
}
}  // namespace detail

inline bool divides(const Monomial& a, const Monomial& b) {
  detail::require_same_ring(a, b);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline Monomial gcd(const Monomial& a, const Monomial& b) {
  return detail::componentwise(a, b, [](int x, int y) { return std::min(x, y); });
}

inline Monomial lcm(const Monomial& a, const Monomial& b) {
  return detail::componentwise(a, b, [](int x, int y) { return std::max(x, y); });
}

inline Monomial operator*(const Monomial& a, const Monomial& b) {
  return detail::componentwise(a, b, [](int x, int y) { return x + y; });
}

/// a / b; requires b | a.
inline Monomial quotient(const Monomial& a, const Monomial& b) {
  if (!divides(b, a)) throw InputError("quotient: divisor does not divide dividend");
  return detail::componentwise(a, b, [](int x, int y) { return x - y; });
}

/// Canonical generator order: degree ascending, then exponent vectors descending
/// (variable 1 most significant), so x1^2 < x1x2 < x2^2 in listing order.
inline bool canonical_less(const Monomial& a, const Monomial& b) {
  const int da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  return b < a;
}

class MonomialIdeal;
MonomialIdeal minimal_generators(std::vector<Monomial> monomials, std::size_t n);

/// Monomial ideal held by its unique minimal generating set G(I), canonically sorted.
/// The zero ideal (no generators) is representable; the unit ideal is rejected.
class MonomialIdeal {
public:
  MonomialIdeal() = default;

  std::size_t num_vars() const noexcept { return n_; }
  const std::vector<Monomial>& generators() const noexcept { return gens_; }
  std::size_t size() const noexcept { return gens_.size(); }
  bool is_zero() const noexcept { return gens_.empty(); }

  /// Common generator degree, or nullopt when mixed (or zero ideal).
  std::optional<int> degree() const {
    if (gens_.empty()) return std::nullopt;
    const int d = gens_.front().degree();
    for (const auto& g : gens_)
      if (g.degree() != d) return std::nullopt;
    return d;
  }
  bool is_equigenerated() const { return degree().has_value(); }
  bool is_squarefree() const {
    return std::all_of(gens_.begin(), gens_.end(), [](const Monomial& g) { return g.is_squarefree(); });
  }

  bool contains(const Monomial& m) const {
    return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return divides(g, m); });
  }
  bool has_generator(const Monomial& m) const {
    return std::binary_search(gens_.begin(), gens_.end(), m, canonical_less);
  }
  /// Position of m in G(I), or nullopt.
  std::optional<std::size_t> index_of(const Monomial& m) const {
    auto it = std::lower_bound(gens_.begin(), gens_.end(), m, canonical_less);
    if (it == gens_.end() || *it != m) return std::nullopt;
    return static_cast<std::size_t>(it - gens_.begin());
  }

  /// lcm of all generators (the top of the lcm lattice).
  Monomial lcm_all() const {
    Monomial l = Monomial::one(n_);
    for (const auto& g : gens_) l = lcm(l, g);
    return l;
  }

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

private:
  friend MonomialIdeal minimal_generators(std::vector<Monomial>, std::size_t);
  std::size_t n_ = 0;
  std::vector<Monomial> gens_;
};

/// Inclusion-minimal antichain generating the same ideal as `monomials`.
inline MonomialIdeal minimal_generators(std::vector<Monomial> monomials, std::size_t n) {
  for (const auto& m : monomials)
    if (m.size() != n) throw InputError("generator has " + std::to_string(m.size()) +
                                        " exponents, expected " + std::to_string(n));
  for (const auto& m : monomials)
    if (m.degree() == 0) throw InputError("the unit ideal is outside the data model");

  std::sort(monomials.begin(), monomials.end(), canonical_less);
  monomials.erase(std::unique(monomials.begin(), monomials.end()), monomials.end());

  // Sorted by degree, so a divisor always precedes what it divides.
  std::vector<Monomial> kept;
  for (auto& m : monomials) {
    const bool redundant = std::any_of(kept.begin(), kept.end(), [&](const Monomial& g) {
      return g.degree() < m.degree() && divides(g, m);
    });
    if (!redundant) kept.push_back(std::move(m));
  }
  MonomialIdeal I;
  I.n_ = n;
  I.gens_ = std::move(kept);
  return I;
}

inline MonomialIdeal zero_ideal(std::size_t n) { return minimal_generators({}, n); }

/// Minimal generators of the product ideal I*J.
inline MonomialIdeal ideal_product(const MonomialIdeal& I, const MonomialIdeal& J) {
  if (I.num_vars() != J.num_vars()) throw InputError("ideal_product: ring mismatch");
  std::vector<Monomial> prods;
  prods.reserve(I.size() * J.size());
  for (const auto& a : I.generators())
    for (const auto& b : J.generators()) prods.push_back(a * b);
  return minimal_generators(std::move(prods), I.num_vars());
}

/// Minimal generators of I^k, from all multisets of k generators.
inline MonomialIdeal ideal_power(const MonomialIdeal& I, int k) {
  if (k < 1) throw InputError("ideal_power: exponent must be >= 1 (unit ideal is not representable)");
  const auto& g = I.generators();
  const std::size_t m = g.size();
  if (m == 0 || k == 1) return I;

  std::vector<Monomial> prods;
  std::vector<std::size_t> idx(static_cast<std::size_t>(k), 0);
  // Non-decreasing index tuples enumerate combinations with repetition.
  while (true) {
    Monomial p = g[idx[0]];
    for (std::size_t t = 1; t < idx.size(); ++t) p = p * g[idx[t]];
    prods.push_back(std::move(p));

    std::size_t t = idx.size();
    while (t > 0 && idx[t - 1] == m - 1) --t;
    if (t == 0) break;
    ++idx[t - 1];
    for (std::size_t u = t; u < idx.size(); ++u) idx[u] = idx[t - 1];
  }
  return minimal_generators(std::move(prods), I.num_vars());
}

namespace detail {
inline void require_quadratic(const MonomialIdeal& I, const char* op) {
  for (const auto& g : I.generators())
    if (g.degree() != 2) throw InputError(std::string(op) + ": ideal must be generated in degree 2");
}
}  // namespace detail

struct SquarefreeSplit {
  MonomialIdeal squarefree;          // J
  std::vector<std::size_t> squares;  // i with x_i^2 in G(I), ascending
};

inline SquarefreeSplit squarefree_part(const MonomialIdeal& I) {
  detail::require_quadratic(I, "squarefree_part");
  SquarefreeSplit out;
  std::vector<Monomial> sf;
  for (const auto& g : I.generators()) {
    if (g.is_squarefree()) {
      sf.push_back(g);
    } else {
      out.squares.push_back(g.support().front());
    }
  }
  std::sort(out.squares.begin(), out.squares.end());
  out.squarefree = minimal_generators(std::move(sf), I.num_vars());
  return out;
}

/// Replace each x_i^2 (taken in ascending i) by x_i * y_j where y_j is the j-th new
/// variable appended after the original n. Squarefree generators are kept.
inline MonomialIdeal polarize(const MonomialIdeal& I) {
  detail::require_quadratic(I, "polarize");
  const auto split = squarefree_part(I);
  const std::size_t n = I.num_vars();
  const std::size_t N = n + split.squares.size();
  std::vector<Monomial> gens;
  auto widen = [&](const Monomial& m) {
    std::vector<int> e(N, 0);
    std::copy(m.exponents().begin(), m.exponents().end(), e.begin());
    return e;
  };
  for (const auto& g : split.squarefree.generators()) gens.emplace_back(widen(g));
  for (std::size_t j = 0; j < split.squares.size(); ++j) {
    std::vector<int> e(N, 0);
    e[split.squares[j]] = 1;
    e[n + j] = 1;
    gens.emplace_back(std::move(e));
  }
  return minimal_generators(std::move(gens), N);
}

/// Rename variables: variable i becomes variable new_index[i].
inline MonomialIdeal relabel(const MonomialIdeal& I, std::span<const std::size_t> new_index) {
  const std::size_t n = I.num_vars();
  if (new_index.size() != n) throw InputError("relabel: labeling has wrong length");
  std::vector<bool> seen(n, false);
  for (auto v : new_index) {
    if (v >= n || seen[v]) throw InputError("relabel: labeling is not a permutation");
    seen[v] = true;
  }
  std::vector<Monomial> gens;
  for (const auto& g : I.generators()) {
    std::vector<int> e(n, 0);
    for (std::size_t i = 0; i < n; ++i) e[new_index[i]] = g[i];
    gens.emplace_back(std::move(e));
  }
  return minimal_generators(std::move(gens), n);
}

}  // namespace linres
