#pragma once

#include "entangle/matrix.hpp"
#include "entangle/rational.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace entangle {

namespace detail {

// Entries of the machine-word fast path stay below this bound so that every
// Bareiss cross product fits in a signed 128-bit intermediate.
inline constexpr std::int64_t kSmallLimit = std::int64_t{1} << 62;

inline bool fits_small(const Integer& x) { return x < kSmallLimit && x > -kSmallLimit; }

struct BigStep {
  std::optional<Integer> operator()(const Integer& pivot, const Integer& x, const Integer& below,
                                    const Integer& right, const Integer& prev) const {
    Integer v = pivot * x - below * right;
    if (prev != 1) v /= prev;
    return v;
  }
};

struct SmallStep {
  std::optional<std::int64_t> operator()(std::int64_t pivot, std::int64_t x, std::int64_t below,
                                         std::int64_t right, std::int64_t prev) const {
    __int128 v = static_cast<__int128>(pivot) * x - static_cast<__int128>(below) * right;
    v /= prev;
    if (v >= kSmallLimit || v <= -kSmallLimit) return std::nullopt;
    return static_cast<std::int64_t>(v);
  }
};

struct EchelonResult {
  std::size_t rank = 0;
  bool odd_swaps = false;
};

/// In-place fraction-free row echelon form. Returns nullopt if `step`
/// reports overflow. After a full-rank run on a square matrix the last
/// diagonal entry is the determinant up to the swap sign.
template <class Int, class Step>
std::optional<EchelonResult> bareiss_echelon(Matrix<Int>& a, Step step) {
  EchelonResult out;
  Int prev{1};
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      for (std::size_t j = c; j < cols; ++j) std::swap(a(p, j), a(r, j));
      out.odd_swaps = !out.odd_swaps;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        auto v = step(a(r, c), a(i, j), a(i, c), a(r, j), prev);
        if (!v) return std::nullopt;
        a(i, j) = std::move(*v);
      }
      a(i, c) = Int{0};
    }
    prev = a(r, c);
    ++r;
  }
  out.rank = r;
  return out;
}

inline std::optional<Matrix<std::int64_t>> to_small(const Matrix<Integer>& m) {
  Matrix<std::int64_t> s(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (!fits_small(m(r, c))) return std::nullopt;
      s(r, c) = static_cast<std::int64_t>(m(r, c));
    }
  return s;
}

inline Matrix<Integer> to_big(const Matrix<std::int64_t>& m) {
  Matrix<Integer> b(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) b(r, c) = m(r, c);
  return b;
}

}  // namespace detail

/// Integer matrix with each row of `m` multiplied by the lcm of that row's
/// denominators. `scale` is the product of those multipliers, so
/// det(m) = det(integers) / scale and rank(m) = rank(integers).
struct ClearedRows {
  Matrix<Integer> integers;
  Integer scale{1};
};

inline ClearedRows clear_denominators(const ExactMatrix& m) {
  ClearedRows out{Matrix<Integer>(m.rows(), m.cols()), Integer{1}};
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Integer l{1};
    for (const Rational& x : m.row(r)) l = boost::multiprecision::lcm(l, denominator_of(x));
    for (std::size_t c = 0; c < m.cols(); ++c)
      out.integers(r, c) = numerator_of(m(r, c)) * (l / denominator_of(m(r, c)));
    out.scale *= l;
  }
  return out;
}

inline Integer integer_det(const Matrix<Integer>& m) {
  if (!m.square()) throw DimensionError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return Integer{1};
  if (auto small = detail::to_small(m)) {
    if (auto e = detail::bareiss_echelon(*small, detail::SmallStep{})) {
      if (e->rank < n) return Integer{0};
      Integer d{(*small)(n - 1, n - 1)};
      return e->odd_swaps ? Integer{-d} : d;
    }
  }
  Matrix<Integer> work = m;
  const auto e = *detail::bareiss_echelon(work, detail::BigStep{});
  if (e.rank < n) return Integer{0};
  return e.odd_swaps ? Integer{-work(n - 1, n - 1)} : work(n - 1, n - 1);
}

inline std::size_t integer_rank(const Matrix<Integer>& m) {
  if (auto small = detail::to_small(m))
    if (auto e = detail::bareiss_echelon(*small, detail::SmallStep{})) return e->rank;
  Matrix<Integer> work = m;
  return detail::bareiss_echelon(work, detail::BigStep{})->rank;
}

/// Rank of a machine-word matrix; falls back to big integers on overflow.
inline std::size_t integer_rank(const Matrix<std::int64_t>& m) {
  Matrix<std::int64_t> work = m;
  if (auto e = detail::bareiss_echelon(work, detail::SmallStep{})) return e->rank;
  Matrix<Integer> big = detail::to_big(m);
  return detail::bareiss_echelon(big, detail::BigStep{})->rank;
}

/// Exact determinant by fraction-free elimination.
inline Rational det(const ExactMatrix& m) {
  if (!m.square())
    throw DimensionError("determinant needs a square matrix, got " + std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()));
  const ClearedRows cleared = clear_denominators(m);
  return Rational{integer_det(cleared.integers), cleared.scale};
}

inline std::size_t rank(const ExactMatrix& m) { return integer_rank(clear_denominators(m).integers); }

/// Reduced row echelon form over the rationals; returns the pivot columns.
inline std::vector<std::size_t> rref(ExactMatrix& a) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
    const Rational inv = 1 / a(r, c);
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c) == 0) continue;
      const Rational f = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

/// Scales a nonzero vector to coprime integers whose first nonzero entry is positive.
inline std::vector<Rational> primitive(std::vector<Rational> v) {
  Integer l{1};
  for (const auto& x : v) l = boost::multiprecision::lcm(l, denominator_of(x));
  Integer g{0};
  for (const auto& x : v) g = boost::multiprecision::gcd(g, numerator_of(x) * (l / denominator_of(x)));
  if (g == 0) return v;
  Rational f{l, g};
  for (const auto& x : v)
    if (x != 0) {
      if (x < 0) f = -f;
      break;
    }
  for (auto& x : v) x *= f;
  return v;
}

/// A nonzero vector v with m v = 0, or nullopt when the columns are
/// independent. The free variable of the first non-pivot column is set to
/// one and the result is scaled to primitive integer form.
inline std::optional<std::vector<Rational>> kernel_vector(const ExactMatrix& m) {
  ExactMatrix a = m;
  const auto pivots = rref(a);
  if (pivots.size() == m.cols()) return std::nullopt;
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::size_t free_col = 0;
  while (is_pivot[free_col]) ++free_col;
  std::vector<Rational> v(m.cols(), Rational{0});
  v[free_col] = 1;
  for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a(r, free_col);
  return primitive(std::move(v));
}

}  // namespace entangle
