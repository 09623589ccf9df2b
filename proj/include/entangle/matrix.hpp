#pragma once

#include "entangle/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace entangle {

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Set of row (or column) labels. Labels are 1-based, matching the
/// k, i, j conventions for deleted rows.
using IndexSet = std::vector<std::size_t>;

/// Dense row-major matrix. Element access is 0-based; every operation that
/// takes an IndexSet interprets it as 1-based labels.
template <class T>
class Matrix {
 public:
  using value_type = T;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T{0})
      : rows_(rows), cols_(cols), entries_(rows * cols, fill) {}

  Matrix(std::initializer_list<std::initializer_list<T>> init) : rows_(init.size()) {
    cols_ = rows_ ? init.begin()->size() : 0;
    entries_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw DimensionError("ragged initializer");
      entries_.insert(entries_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T{1};
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  T& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  std::span<T> row(std::size_t r) { return {entries_.data() + r * cols_, cols_}; }
  std::span<const T> row(std::size_t r) const { return {entries_.data() + r * cols_, cols_}; }

  std::vector<T> column(std::size_t c) const {
    std::vector<T> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
    return out;
  }

  const std::vector<T>& entries() const noexcept { return entries_; }

  bool is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const T& x) { return x == 0; });
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("shape mismatch in +");
    Matrix s = a;
    for (std::size_t i = 0; i < s.entries_.size(); ++i) s.entries_[i] += b.entries_[i];
    return s;
  }

  friend Matrix operator*(const T& k, const Matrix& a) {
    Matrix s = a;
    for (auto& x : s.entries_) x *= k;
    return s;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DimensionError("shape mismatch in *");
    Matrix p(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) p(i, j) += aik * b(k, j);
      }
    return p;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> entries_;
};

using ExactMatrix = Matrix<Rational>;

template <class T>
std::vector<T> multiply(const Matrix<T>& m, std::span<const T> v) {
  if (v.size() != m.cols()) throw DimensionError("vector length does not match column count");
  std::vector<T> out(m.rows(), T{0});
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (m(r, c) != 0 && v[c] != 0) out[r] += m(r, c) * v[c];
  return out;
}

/// Checks that `labels` are distinct 1-based indices in [1, bound].
inline void validate_labels(const IndexSet& labels, std::size_t bound, const char* what) {
  std::vector<bool> seen(bound + 1, false);
  for (std::size_t k : labels) {
    if (k < 1 || k > bound)
      throw std::out_of_range(std::string(what) + " index " + std::to_string(k) + " outside [1, " +
                              std::to_string(bound) + "]");
    if (seen[k]) throw std::invalid_argument(std::string("duplicate ") + what + " index " + std::to_string(k));
    seen[k] = true;
  }
}

/// Removes the rows labelled in `rows` (1-based); survivors keep their order.
template <class T>
Matrix<T> delete_rows(const Matrix<T>& m, const IndexSet& rows) {
  validate_labels(rows, m.rows(), "row");
  std::vector<bool> drop(m.rows(), false);
  for (std::size_t k : rows) drop[k - 1] = true;
  Matrix<T> out(m.rows() - rows.size(), m.cols());
  std::size_t dst = 0;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (drop[r]) continue;
    std::copy(m.row(r).begin(), m.row(r).end(), out.row(dst).begin());
    ++dst;
  }
  return out;
}

/// Keeps exactly the rows labelled in `rows` (1-based), in the given order.
template <class T>
Matrix<T> select_rows(const Matrix<T>& m, const IndexSet& rows) {
  validate_labels(rows, m.rows(), "row");
  Matrix<T> out(rows.size(), m.cols());
  for (std::size_t i = 0; i < rows.size(); ++i)
    std::copy(m.row(rows[i] - 1).begin(), m.row(rows[i] - 1).end(), out.row(i).begin());
  return out;
}

/// Complement of `labels` within {1, ..., bound}, ascending.
inline IndexSet complement(const IndexSet& labels, std::size_t bound) {
  std::vector<bool> in(bound + 1, false);
  for (std::size_t k : labels) in[k] = true;
  IndexSet out;
  for (std::size_t k = 1; k <= bound; ++k)
    if (!in[k]) out.push_back(k);
  return out;
}

}  // namespace entangle
