#pragma once

#include "entangle/dsequence.hpp"
#include "entangle/linalg.hpp"
#include "entangle/matrix.hpp"
#include "entangle/parallel.hpp"
#include "entangle/structured.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace entangle {

/// All `size`-element subsets of {1, ..., universe}, lexicographic.
inline std::vector<IndexSet> combinations(std::size_t universe, std::size_t size) {
  std::vector<IndexSet> out;
  if (size > universe) return out;
  IndexSet cur(size);
  for (std::size_t i = 0; i < size; ++i) cur[i] = i + 1;
  while (true) {
    out.push_back(cur);
    std::size_t i = size;
    while (i > 0 && cur[i - 1] == universe - size + i) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < size; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

inline void check_minor_index(std::size_t n, std::size_t k) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (k < 1 || k > n + 1)
    throw std::out_of_range("deleted row k = " + std::to_string(k) + " outside [1, " + std::to_string(n + 1) + "]");
}

/// |E_n^k(a, b)| from the d-sequence product formula
///   (-1)^{n-k+1} (d_{k-1} d_{n-k+1} - b^2 d_{k-2} d_{n-k}).
inline Rational minor_E_product_formula(const Rational& a, std::size_t n, std::size_t k, const Rational& b = 1) {
  check_minor_index(n, k);
  const auto d = d_sequence_recurrence(a, b, static_cast<long>(n));
  const long ln = static_cast<long>(n);
  const long lk = static_cast<long>(k);
  Rational v = d[lk - 1] * d[ln - lk + 1] - b * b * d[lk - 2] * d[ln - lk];
  return (n - k + 1) % 2 == 0 ? v : Rational{-v};
}

/// |E_n^k(a, 0)| = (-1)^{k-1} a^n.
inline Rational minor_E_b_zero(const Rational& a, std::size_t n, std::size_t k) {
  check_minor_index(n, k);
  Rational v = pow(a, static_cast<unsigned>(n));
  return (k - 1) % 2 == 0 ? v : Rational{-v};
}

struct MinorEntry {
  IndexSet deleted;
  Rational value;
};

/// Every order-`order` minor of a tall matrix, keyed by the deleted rows.
struct MinorReport {
  std::optional<BandedFamily> spec;
  std::size_t order = 0;
  std::vector<MinorEntry> entries;  // lexicographic in `deleted`
  bool all_nonzero = true;
  std::vector<IndexSet> zero_witnesses;
};

inline MinorReport all_order_n_minors(const ExactMatrix& m, std::optional<BandedFamily> spec = std::nullopt,
                                      std::size_t threads = default_thread_count()) {
  if (m.rows() <= m.cols())
    throw DimensionError("minor enumeration needs rows > cols, got " + std::to_string(m.rows()) + "x" +
                         std::to_string(m.cols()));
  MinorReport report;
  report.spec = std::move(spec);
  report.order = m.cols();
  const auto sets = combinations(m.rows(), m.rows() - m.cols());
  report.entries.resize(sets.size());
  parallel_chunks(sets.size(), threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) report.entries[i] = {sets[i], det(delete_rows(m, sets[i]))};
  });
  for (const auto& e : report.entries)
    if (e.value == 0) report.zero_witnesses.push_back(e.deleted);
  report.all_nonzero = report.zero_witnesses.empty();
  return report;
}

class RankDeficientError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Smallest support of a nonzero column combination, with a witness.
struct MinSupport {
  std::size_t count = 0;
  std::vector<Rational> combination;      // lambda, one entry per column
  std::vector<Rational> image;            // M lambda
  std::optional<std::size_t> column;      // 1-based, when the witness is a single column
  std::optional<IndexSet> support_rows;   // rows allowed nonzero when found by kernel search
};

inline std::size_t nonzero_count(const std::vector<Rational>& v) {
  std::size_t c = 0;
  for (const auto& x : v)
    if (x != 0) ++c;
  return c;
}

/// Minimum number of nonzero entries of M lambda over nonzero lambda, for an
/// (n + r) x n matrix with independent columns.
///
/// A combination supported inside a row set T exists iff the rows outside T
/// have a common kernel vector. Sets with |T| <= r are searched by size, so
/// the first hit is a minimum. If none exists every order-n minor is
/// nonzero and the minimum is exactly r + 1: any T with |T| = r + 1 leaves
/// n - 1 rows, which always share a kernel vector.
inline MinSupport min_support(const ExactMatrix& m) {
  if (m.rows() < m.cols() || kernel_vector(m))
    throw RankDeficientError("min_support needs linearly independent columns");
  const std::size_t r = m.rows() - m.cols();
  for (std::size_t s = 1; s <= r; ++s)
    for (const auto& allowed : combinations(m.rows(), s)) {
      auto lambda = kernel_vector(delete_rows(m, allowed));
      if (!lambda) continue;
      MinSupport out;
      out.image = multiply<Rational>(m, *lambda);
      out.count = nonzero_count(out.image);
      out.combination = std::move(*lambda);
      out.support_rows = allowed;
      return out;
    }

  for (std::size_t c = 0; c < m.cols(); ++c) {
    auto col = m.column(c);
    if (nonzero_count(col) != r + 1) continue;
    MinSupport out;
    out.count = r + 1;
    out.combination.assign(m.cols(), Rational{0});
    out.combination[c] = 1;
    out.image = std::move(col);
    out.column = c + 1;
    return out;
  }
  IndexSet allowed(r + 1);
  for (std::size_t i = 0; i < allowed.size(); ++i) allowed[i] = i + 1;
  MinSupport out;
  out.combination = *kernel_vector(delete_rows(m, allowed));
  out.image = multiply<Rational>(m, out.combination);
  out.count = nonzero_count(out.image);
  out.support_rows = allowed;
  return out;
}

}  // namespace entangle
