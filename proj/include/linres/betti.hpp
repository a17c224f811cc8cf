#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "linres/errors.hpp"
#include "linres/linalg.hpp"
#include "linres/monomial.hpp"

namespace linres {

/// Graded Betti numbers beta_{i,j}(I) of the ideal I (so beta_{0,d} counts generators).
struct BettiTable {
  std::map<std::pair<int, int>, std::size_t> entries;  // (i, j) -> rank, zeros omitted
  FieldSpec field = FieldSpec::rationals();
  std::optional<int> generator_degree;
  /// False when a degree window cut off part of the lcm lattice.
  bool complete = true;

  std::size_t at(int i, int j) const {
    auto it = entries.find({i, j});
    return it == entries.end() ? 0 : it->second;
  }

  /// max{ j - i : beta_{i,j} != 0 }; nullopt for an empty or incomplete table.
  std::optional<int> regularity() const {
    if (!complete || entries.empty()) return std::nullopt;
    int r = entries.begin()->first.second - entries.begin()->first.first;
    for (const auto& [ij, b] : entries) r = std::max(r, ij.second - ij.first);
    return r;
  }

  /// beta_{i,j} = 0 unless j = i + d. Requires a complete table of an equigenerated ideal.
  bool linear() const {
    if (!generator_degree) throw InputError("linearity is defined for equigenerated ideals");
    if (!complete) throw InputError("linearity verdict on an incomplete Betti table is inconclusive");
    for (const auto& [ij, b] : entries)
      if (ij.second != ij.first + *generator_degree) return false;
    return true;
  }

  friend bool operator==(const BettiTable& a, const BettiTable& b) {
    return a.entries == b.entries && a.field == b.field && a.complete == b.complete;
  }
};

struct BettiOptions {
  /// Only internal degrees j <= max_degree are computed. Anything cut off makes the
  /// table incomplete.
  std::optional<int> max_degree;
  /// Guard on the total dimension of one multidegree strand.
  std::size_t max_strand_dim = std::size_t{1} << 20;
  /// Guard on the size of the multidegree box below lcm(G(I)).
  std::size_t max_multidegrees = 50'000'000;
};

namespace detail {

/// Koszul homology of I in multidegree a. Chains in homological degree i are the
/// squarefree F with |F| = i, F within supp(a), and x^(a-F) in I.
inline void koszul_strand(const std::vector<int>& a, const std::vector<const Monomial*>& below,
                          FieldSpec field, const BettiOptions& opt,
                          std::map<std::pair<int, int>, std::size_t>& out) {
  const std::size_t n = a.size();
  std::vector<std::size_t> supp;
  int deg = 0;
  for (std::size_t v = 0; v < n; ++v) {
    deg += a[v];
    if (a[v] > 0) supp.push_back(v);
  }
  const std::size_t s = supp.size();
  const std::uint32_t full = (std::uint32_t{1} << s);

  std::vector<int> rest(n);
  auto in_ideal = [&](std::uint32_t mask) {
    rest = a;
    for (std::size_t q = 0; q < s; ++q)
      if (mask >> q & 1u) --rest[supp[q]];
    for (const Monomial* g : below) {
      bool ok = true;
      for (std::size_t t = 0; t < n && ok; ++t) ok = (*g)[t] <= rest[t];
      if (ok) return true;
    }
    return false;
  };

  // Chain bases per homological degree; index lookup by mask.
  std::vector<std::vector<std::uint32_t>> basis(s + 1);
  std::vector<std::int64_t> index(full, -1);
  std::size_t total = 0;
  for (std::uint32_t mask = 0; mask < full; ++mask) {
    if (!in_ideal(mask)) continue;
    const auto k = static_cast<std::size_t>(__builtin_popcount(mask));
    index[mask] = static_cast<std::int64_t>(basis[k].size());
    basis[k].push_back(mask);
    ++total;
  }
  if (total > opt.max_strand_dim) throw ResourceLimitError("Koszul strand exceeds max_strand_dim");

  // rank of d_k : C_k -> C_{k-1}
  std::vector<std::size_t> rk(s + 2, 0);
  for (std::size_t k = 1; k <= s; ++k) {
    if (basis[k].empty() || basis[k - 1].empty()) continue;
    SparseMatrix m;
    m.rows = basis[k - 1].size();
    m.cols = basis[k].size();
    for (std::size_t c = 0; c < basis[k].size(); ++c) {
      const std::uint32_t mask = basis[k][c];
      int sign = 1;
      for (std::size_t q = 0; q < s; ++q) {
        if (!(mask >> q & 1u)) continue;
        const std::int64_t r = index[mask & ~(std::uint32_t{1} << q)];
        if (r >= 0) m.add(static_cast<std::size_t>(r), c, sign);
        sign = -sign;
      }
    }
    rk[k] = rank(m, field);
  }
  for (std::size_t k = 0; k <= s; ++k) {
    const std::size_t dim = basis[k].size();
    if (dim == 0) continue;
    if (rk[k] + rk[k + 1] > dim) throw FalsificationError("Koszul boundary ranks exceed the chain dimension");
    const std::size_t b = dim - rk[k] - rk[k + 1];
    if (b > 0) out[{static_cast<int>(k), deg}] += b;
  }
}

}  // namespace detail

/// Exact graded Betti numbers of I from the multigraded Koszul complex. Only
/// multidegrees in the lcm lattice of G(I) can carry homology, so the box under
/// lcm(G(I)) is scanned and non-lattice points are skipped.
inline BettiTable koszul_betti(const MonomialIdeal& I, FieldSpec field, const BettiOptions& opt = {}) {
  if (I.is_zero()) throw InputError("koszul_betti: zero ideal");
  BettiTable table;
  table.field = field;
  table.generator_degree = I.degree();

  const std::size_t n = I.num_vars();
  const Monomial top = I.lcm_all();
  std::size_t box = 1;
  for (std::size_t v = 0; v < n; ++v) {
    box *= static_cast<std::size_t>(top[v] + 1);
    if (box > opt.max_multidegrees) throw ResourceLimitError("multidegree box exceeds max_multidegrees");
  }

  std::vector<int> a(n, 0);
  std::vector<const Monomial*> below;
  for (std::size_t step = 0; step < box; ++step) {
    if (step > 0) {
      for (std::size_t v = 0; v < n; ++v) {
        if (a[v] < top[v]) {
          ++a[v];
          break;
        }
        a[v] = 0;
      }
    }
    below.clear();
    std::vector<int> l(n, 0);
    for (const auto& g : I.generators()) {
      bool div = true;
      for (std::size_t v = 0; v < n && div; ++v) div = g[v] <= a[v];
      if (!div) continue;
      below.push_back(&g);
      for (std::size_t v = 0; v < n; ++v) l[v] = std::max(l[v], g[v]);
    }
    if (below.empty() || l != a) continue;
    int deg = 0;
    for (int e : a) deg += e;
    if (opt.max_degree && deg > *opt.max_degree) {
      table.complete = false;
      continue;
    }
    detail::koszul_strand(a, below, field, opt, table.entries);
  }
  return table;
}

/// beta_{i,j}(I) = 0 for j != i + d. Quadratic non-squarefree ideals are also run
/// through their polarization and the two tables must coincide.
inline bool is_linear_resolution(const MonomialIdeal& I, FieldSpec field, const BettiOptions& opt = {}) {
  if (!I.is_equigenerated()) throw InputError("is_linear_resolution: ideal is not equigenerated");
  const BettiTable t = koszul_betti(I, field, opt);
  if (*I.degree() == 2 && !I.is_squarefree()) {
    const BettiTable p = koszul_betti(polarize(I), field, opt);
    if (p.entries != t.entries)
      throw FalsificationError("polarization changed the graded Betti numbers");
  }
  return t.linear();
}

inline int regularity(const MonomialIdeal& I, FieldSpec field, const BettiOptions& opt = {}) {
  const auto r = koszul_betti(I, field, opt).regularity();
  if (!r) throw InputError("regularity: Betti table is incomplete (inconclusive)");
  return *r;
}

struct PowerVerdict {
  int k = 1;
  std::size_t num_generators = 0;
  bool linear = false;
  int regularity = 0;
  double elapsed_ms = 0;
};

/// Linearity of I^k for k = 1..max_k over one field.
inline std::vector<PowerVerdict> powers_linear_report(const MonomialIdeal& I, FieldSpec field, int max_k,
                                                      const BettiOptions& opt = {}) {
  if (max_k < 1) throw InputError("powers_linear_report: max_k must be >= 1");
  if (!I.is_equigenerated()) throw InputError("powers_linear_report: ideal is not equigenerated");
  std::vector<PowerVerdict> out;
  MonomialIdeal power = I;
  for (int k = 1; k <= max_k; ++k) {
    const auto t0 = std::chrono::steady_clock::now();
    if (k > 1) power = ideal_product(power, I);
    const BettiTable t = koszul_betti(power, field, opt);
    PowerVerdict v;
    v.k = k;
    v.num_generators = power.size();
    v.linear = t.linear();
    v.regularity = t.regularity().value_or(-1);
    v.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    out.push_back(v);
  }
  return out;
}

}  // namespace linres
