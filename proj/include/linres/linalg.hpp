#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "linres/errors.hpp"

namespace linres {

/// Coefficient field: the rationals or GF(p).
class FieldSpec {
public:
  static FieldSpec rationals() { return FieldSpec(0); }
  static FieldSpec prime(std::uint32_t p) {
    if (p < 2) throw InputError("GF(p) needs a prime p");
    for (std::uint32_t q = 2; q * q <= p; ++q)
      if (p % q == 0) throw InputError("GF(p) needs a prime p, got " + std::to_string(p));
    return FieldSpec(p);
  }

  bool is_rational() const noexcept { return p_ == 0; }
  std::uint32_t characteristic() const noexcept { return p_; }
  std::string name() const { return p_ == 0 ? "Q" : "GF(" + std::to_string(p_) + ")"; }

  friend bool operator==(FieldSpec, FieldSpec) = default;
  friend auto operator<=>(FieldSpec, FieldSpec) = default;

private:
  explicit FieldSpec(std::uint32_t p) : p_(p) {}
  std::uint32_t p_ = 0;
};

/// Integer matrix in coordinate form.
struct SparseMatrix {
  struct Entry {
    std::size_t row, col;
    std::int64_t value;
  };
  std::size_t rows = 0, cols = 0;
  std::vector<Entry> entries;

  void add(std::size_t r, std::size_t c, std::int64_t v) { entries.push_back({r, c, v}); }
};

namespace detail {

inline std::int64_t mod_reduce(std::int64_t v, std::int64_t p) {
  v %= p;
  return v < 0 ? v + p : v;
}

inline std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
  std::int64_t r = 1, e = p - 2;
  a = mod_reduce(a, p);
  while (e > 0) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

using SparseRow = std::vector<std::pair<std::size_t, std::int64_t>>;  // sorted by column

/// Row-by-row sparse echelon reduction over GF(p).
inline std::size_t rank_mod_p(const SparseMatrix& m, std::int64_t p) {
  std::vector<std::map<std::size_t, std::int64_t>> build(m.rows);
  for (const auto& e : m.entries) {
    auto& slot = build[e.row][e.col];
    slot = mod_reduce(slot + e.value, p);
  }
  std::map<std::size_t, SparseRow> pivots;  // leading column -> monic row
  for (auto& b : build) {
    SparseRow row;
    for (auto [c, v] : b)
      if (v != 0) row.emplace_back(c, v);
    while (!row.empty()) {
      auto it = pivots.find(row.front().first);
      if (it == pivots.end()) break;
      const std::int64_t f = row.front().second;
      SparseRow next;
      std::size_t a = 0, b2 = 0;
      const SparseRow& piv = it->second;
      while (a < row.size() || b2 < piv.size()) {
        if (b2 == piv.size() || (a < row.size() && row[a].first < piv[b2].first)) {
          next.push_back(row[a++]);
        } else if (a == row.size() || piv[b2].first < row[a].first) {
          next.emplace_back(piv[b2].first, mod_reduce(-f * piv[b2].second, p));
          ++b2;
        } else {
          const std::int64_t v = mod_reduce(row[a].second - f * piv[b2].second, p);
          if (v != 0) next.emplace_back(row[a].first, v);
          ++a;
          ++b2;
        }
      }
      row = std::move(next);
    }
    if (row.empty()) continue;
    const std::int64_t inv = mod_inverse(row.front().second, p);
    for (auto& [c, v] : row) v = v * inv % p;
    pivots.emplace(row.front().first, std::move(row));
  }
  return pivots.size();
}

/// Fraction-free (Bareiss) elimination. T is std::int64_t on the fast path or
/// cpp_int; with int64 the function reports overflow instead of wrapping.
template <class T>
bool bareiss_rank(std::vector<std::vector<T>> a, std::size_t& rank_out) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  T prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (a[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv == rows) continue;
    std::swap(a[r], a[piv]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        if constexpr (std::is_same_v<T, std::int64_t>) {
          std::int64_t x, y, z;
          if (__builtin_mul_overflow(a[r][c], a[i][j], &x) || __builtin_mul_overflow(a[i][c], a[r][j], &y) ||
              __builtin_sub_overflow(x, y, &z))
            return false;
          a[i][j] = z / prev;
        } else {
          a[i][j] = (a[r][c] * a[i][j] - a[i][c] * a[r][j]) / prev;
        }
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  rank_out = r;
  return true;
}

inline std::size_t rank_rational(const SparseMatrix& m) {
  std::vector<std::vector<std::int64_t>> dense(m.rows, std::vector<std::int64_t>(m.cols, 0));
  for (const auto& e : m.entries) dense[e.row][e.col] += e.value;
  std::size_t r = 0;
  if (bareiss_rank(dense, r)) return r;
  using boost::multiprecision::cpp_int;
  std::vector<std::vector<cpp_int>> big(m.rows, std::vector<cpp_int>(m.cols));
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t j = 0; j < m.cols; ++j) big[i][j] = dense[i][j];
  bareiss_rank(std::move(big), r);
  return r;
}

}  // namespace detail

/// Exact rank of an integer matrix over the given field.
inline std::size_t rank(const SparseMatrix& m, FieldSpec field) {
  if (m.rows == 0 || m.cols == 0) return 0;
  if (field.is_rational()) return detail::rank_rational(m);
  return detail::rank_mod_p(m, field.characteristic());
}

}  // namespace linres
