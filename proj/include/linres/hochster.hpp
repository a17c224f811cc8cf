#pragma once

// Independent route to graded Betti numbers of squarefree monomial ideals through
// reduced homology of induced subcomplexes of the Stanley-Reisner complex:
//
//   beta_{i,j}(I) = sum over |W| = j of dim H~_{j-i-2}(Delta_W)
//
// It shares nothing with koszul_betti beyond Monomial, including its own dense
// elimination, and exists to cross-check it.

#include <cstddef>
#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "linres/betti.hpp"
#include "linres/errors.hpp"
#include "linres/monomial.hpp"

namespace linres {

namespace detail {

inline std::size_t dense_rank_rational(std::vector<std::vector<boost::multiprecision::cpp_rational>> a) {
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[r], a[piv]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const boost::multiprecision::cpp_rational f = a[i][c] / a[r][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

inline std::size_t dense_rank_mod(std::vector<std::vector<std::int64_t>> a, std::int64_t p) {
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  for (auto& row : a)
    for (auto& v : row) v = ((v % p) + p) % p;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[r], a[piv]);
    std::int64_t inv = 1, base = a[r][c], e = p - 2;
    while (e > 0) {
      if (e & 1) inv = inv * base % p;
      base = base * base % p;
      e >>= 1;
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const std::int64_t f = a[i][c] * inv % p;
      for (std::size_t j = c; j < cols; ++j) a[i][j] = ((a[i][j] - f * a[r][j]) % p + p) % p;
    }
    ++r;
  }
  return r;
}

}  // namespace detail

inline BettiTable hochster_oracle(const MonomialIdeal& I, FieldSpec field) {
  if (!I.is_squarefree()) throw InputError("hochster_oracle: ideal must be squarefree (polarize first)");
  if (I.is_zero()) throw InputError("hochster_oracle: zero ideal");
  const std::size_t n = I.num_vars();
  if (n > 20) throw ResourceLimitError("hochster_oracle: too many variables");

  std::vector<std::uint32_t> gen_masks;
  for (const auto& g : I.generators()) {
    std::uint32_t m = 0;
    for (auto v : g.support()) m |= std::uint32_t{1} << v;
    gen_masks.push_back(m);
  }
  auto is_face = [&](std::uint32_t tau) {
    for (auto g : gen_masks)
      if ((g & tau) == g) return false;
    return true;
  };

  BettiTable table;
  table.field = field;
  table.generator_degree = I.degree();
  const std::uint32_t all = std::uint32_t{1} << n;
  for (std::uint32_t w = 1; w < all; ++w) {
    const int j = __builtin_popcount(w);
    // faces of Delta_W grouped by cardinality (cardinality q+1 <-> dimension q)
    std::vector<std::vector<std::uint32_t>> faces(static_cast<std::size_t>(j) + 2);
    for (std::uint32_t tau = w;; tau = (tau - 1) & w) {
      if (is_face(tau)) faces[static_cast<std::size_t>(__builtin_popcount(tau))].push_back(tau);
      if (tau == 0) break;
    }
    auto boundary_rank = [&](std::size_t card) -> std::size_t {  // C_card -> C_{card-1}
      if (card == 0 || card >= faces.size()) return 0;
      const auto& hi = faces[card];
      const auto& lo = faces[card - 1];
      if (hi.empty() || lo.empty()) return 0;
      auto row_of = [&](std::uint32_t f) {
        for (std::size_t r = 0; r < lo.size(); ++r)
          if (lo[r] == f) return r;
        return lo.size();
      };
      if (field.is_rational()) {
        std::vector<std::vector<boost::multiprecision::cpp_rational>> m(
            lo.size(), std::vector<boost::multiprecision::cpp_rational>(hi.size(), 0));
        for (std::size_t c = 0; c < hi.size(); ++c) {
          int sign = 1;
          for (std::size_t v = 0; v < n; ++v) {
            if (!(hi[c] >> v & 1u)) continue;
            m[row_of(hi[c] & ~(std::uint32_t{1} << v))][c] = sign;
            sign = -sign;
          }
        }
        return detail::dense_rank_rational(std::move(m));
      }
      std::vector<std::vector<std::int64_t>> m(lo.size(), std::vector<std::int64_t>(hi.size(), 0));
      for (std::size_t c = 0; c < hi.size(); ++c) {
        int sign = 1;
        for (std::size_t v = 0; v < n; ++v) {
          if (!(hi[c] >> v & 1u)) continue;
          m[row_of(hi[c] & ~(std::uint32_t{1} << v))][c] = sign;
          sign = -sign;
        }
      }
      return detail::dense_rank_mod(std::move(m), field.characteristic());
    };
    // H~_q with q = j - i - 2, i.e. faces of cardinality q + 1 = j - i - 1.
    for (int i = 0; i + 1 <= j; ++i) {
      const auto card = static_cast<std::size_t>(j - i - 1);
      const std::size_t dim = faces[card].size();
      if (dim == 0) continue;
      const std::size_t used = boundary_rank(card) + boundary_rank(card + 1);
      if (used > dim) throw FalsificationError("simplicial boundary ranks exceed the chain dimension");
      const std::size_t h = dim - used;
      if (h > 0) table.entries[{i, j}] += h;
    }
  }
  return table;
}

}  // namespace linres
