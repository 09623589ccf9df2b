#pragma once

#include "entangle/rational.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace entangle {

/// d_{-1}, d_0, d_1, ..., d_{n_max}, where d_n = |D_n(a, b)|.
class DSequence {
 public:
  DSequence(Rational a, Rational b, std::vector<Rational> values)
      : a_(std::move(a)), b_(std::move(b)), values_(std::move(values)) {}

  const Rational& a() const noexcept { return a_; }
  const Rational& b() const noexcept { return b_; }
  long n_max() const noexcept { return static_cast<long>(values_.size()) - 2; }

  /// Value at index n, -1 <= n <= n_max().
  const Rational& operator[](long n) const {
    if (n < -1 || n > n_max()) throw std::out_of_range("d-sequence index " + std::to_string(n) + " out of range");
    return values_[static_cast<std::size_t>(n + 1)];
  }

  friend bool operator==(const DSequence&, const DSequence&) = default;

 private:
  Rational a_;
  Rational b_;
  std::vector<Rational> values_;  // values_[n + 1] = d_n
};

/// d_n = -a d_{n-1} - ab d_{n-2} - b^3 d_{n-3}, seeded by d_{-1} = 0, d_0 = 1
/// (so d_1 = -a).
inline DSequence d_sequence_recurrence(const Rational& a, const Rational& b, long n_max) {
  if (n_max < 0) throw std::invalid_argument("n_max must be >= 0");
  std::vector<Rational> v;
  v.reserve(static_cast<std::size_t>(n_max) + 2);
  v.emplace_back(0);
  v.emplace_back(1);
  const Rational ab = a * b;
  const Rational b3 = b * b * b;
  for (long n = 1; n <= n_max; ++n) {
    const auto i = static_cast<std::size_t>(n + 1);
    Rational next = -a * v[i - 1] - ab * v[i - 2];
    if (n >= 2) next -= b3 * v[i - 3];
    v.push_back(std::move(next));
  }
  return {a, b, std::move(v)};
}

/// First `terms` coefficients of 1 / p(x) for a polynomial with p(0) != 0,
/// by truncated series division.
inline std::vector<Rational> series_inverse(const std::vector<Rational>& p, std::size_t terms) {
  if (p.empty() || p[0] == 0) throw std::invalid_argument("series inverse needs a nonzero constant term");
  std::vector<Rational> c(terms);
  const Rational inv0 = 1 / p[0];
  for (std::size_t k = 0; k < terms; ++k) {
    Rational acc = k == 0 ? Rational{1} : Rational{0};
    for (std::size_t i = 1; i < p.size() && i <= k; ++i) acc -= p[i] * c[k - i];
    c[k] = acc * inv0;
  }
  return c;
}

/// Maclaurin coefficients of 1 / (1 + a x + a x^2 + x^3), i.e. the b = 1
/// d-sequence obtained from its generating function.
inline DSequence d_sequence_series(const Rational& a, long n_max) {
  if (n_max < 0) throw std::invalid_argument("n_max must be >= 0");
  auto coeffs = series_inverse({Rational{1}, a, a, Rational{1}}, static_cast<std::size_t>(n_max) + 1);
  coeffs.insert(coeffs.begin(), Rational{0});
  return {a, Rational{1}, std::move(coeffs)};
}

/// Element p + q * sqrt(delta) of Q(sqrt(delta)). `delta` must not be a
/// rational square for inverse() to be defined on every nonzero element.
class QuadraticNumber {
 public:
  QuadraticNumber(Rational p, Rational q, Rational delta) : p_(std::move(p)), q_(std::move(q)), delta_(std::move(delta)) {}

  const Rational& rational_part() const noexcept { return p_; }
  const Rational& surd_part() const noexcept { return q_; }

  friend QuadraticNumber operator+(const QuadraticNumber& x, const QuadraticNumber& y) {
    return {x.p_ + y.p_, x.q_ + y.q_, x.delta_};
  }
  friend QuadraticNumber operator-(const QuadraticNumber& x, const QuadraticNumber& y) {
    return {x.p_ - y.p_, x.q_ - y.q_, x.delta_};
  }
  friend QuadraticNumber operator*(const QuadraticNumber& x, const QuadraticNumber& y) {
    return {x.p_ * y.p_ + x.delta_ * x.q_ * y.q_, x.p_ * y.q_ + x.q_ * y.p_, x.delta_};
  }

  Rational norm() const { return p_ * p_ - delta_ * q_ * q_; }

  QuadraticNumber inverse() const {
    const Rational nrm = norm();
    if (nrm == 0) throw std::domain_error("inverse of zero in quadratic extension");
    return {p_ / nrm, -q_ / nrm, delta_};
  }

  QuadraticNumber pow(unsigned e) const {
    QuadraticNumber r{Rational{1}, Rational{0}, delta_};
    for (unsigned i = 0; i < e; ++i) r = r * *this;
    return r;
  }

 private:
  Rational p_;
  Rational q_;
  Rational delta_;
};

class RepeatedRootError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

namespace detail {

inline bool exact_square_root(const Rational& x, Rational& root) {
  if (x < 0) return false;
  const Integer num = numerator_of(x);
  const Integer den = denominator_of(x);
  const Integer rn = boost::multiprecision::sqrt(num);
  const Integer rd = boost::multiprecision::sqrt(den);
  if (rn * rn != num || rd * rd != den) return false;
  root = Rational{rn, rd};
  return true;
}

}  // namespace detail

/// d_k from the three-root partial fraction expansion of
/// 1 / (1 + a x + a x^2 + x^3), for k >= 0.
///
/// The cubic factors as (x + 1)(x^2 + (a - 1)x + 1); its roots are distinct
/// unless a = 3 or a = -1, where this throws RepeatedRootError. Irrational
/// and complex roots are handled exactly in Q(sqrt((a-1)^2 - 4)).
inline Rational d_closed_form(const Rational& a, long k) {
  if (k < 0) throw std::invalid_argument("closed form is defined for k >= 0");
  if (a == 3 || a == -1)
    throw RepeatedRootError("x^3 + a x^2 + a x + 1 has a repeated root at a = " + to_string(a) +
                            "; formula inapplicable, use the recurrence");
  const Rational disc = (a - 1) * (a - 1) - 4;
  const Rational half{1, 2};
  const Rational centre = (1 - a) * half;

  // Roots as p + q sqrt(delta). A rational square discriminant gives rational roots.
  Rational delta = disc;
  Rational root;
  const bool rational_roots = detail::exact_square_root(disc, root);
  if (rational_roots) delta = 0;
  const QuadraticNumber alpha{Rational{-1}, Rational{0}, delta};
  const QuadraticNumber beta = rational_roots ? QuadraticNumber{centre + half * root, Rational{0}, delta}
                                              : QuadraticNumber{centre, half, delta};
  const QuadraticNumber gamma = rational_roots ? QuadraticNumber{centre - half * root, Rational{0}, delta}
                                               : QuadraticNumber{centre, -half, delta};

  const auto e = static_cast<unsigned>(k + 1);
  const QuadraticNumber ab = alpha - beta;
  const QuadraticNumber bg = beta - gamma;
  const QuadraticNumber ga = gamma - alpha;
  const QuadraticNumber sum = (alpha.pow(e) * ab * ga).inverse() + (beta.pow(e) * ab * bg).inverse() +
                              (gamma.pow(e) * ga * bg).inverse();
  if (sum.surd_part() != 0)
    throw std::logic_error("closed form produced an irrational value at a = " + to_string(a));
  return sum.rational_part();
}

}  // namespace entangle
