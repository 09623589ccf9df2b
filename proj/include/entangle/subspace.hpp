#pragma once

#include "entangle/linalg.hpp"
#include "entangle/matrix.hpp"
#include "entangle/minors.hpp"
#include "entangle/parallel.hpp"
#include "entangle/structured.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace entangle {

/// c |e_i> (x) |f_j>, with 0-based basis labels.
struct TensorTerm {
  std::size_t i = 0;
  std::size_t j = 0;
  Rational coefficient;

  friend bool operator==(const TensorTerm&, const TensorTerm&) = default;
};

/// Element of C^m (x) C^n stored as its m x n coefficient matrix.
class TensorVector {
 public:
  TensorVector(std::size_t m, std::size_t n) : coeffs_(m, n) {}
  explicit TensorVector(ExactMatrix coeffs) : coeffs_(std::move(coeffs)) {}

  std::size_t m() const noexcept { return coeffs_.rows(); }
  std::size_t n() const noexcept { return coeffs_.cols(); }
  const ExactMatrix& coeffs() const noexcept { return coeffs_; }
  bool is_zero() const { return coeffs_.is_zero(); }

  friend TensorVector operator+(const TensorVector& x, const TensorVector& y) {
    return TensorVector{x.coeffs_ + y.coeffs_};
  }
  friend TensorVector operator*(const Rational& k, const TensorVector& x) { return TensorVector{k * x.coeffs_}; }
  friend bool operator==(const TensorVector&, const TensorVector&) = default;

 private:
  ExactMatrix coeffs_;
};

/// The coordinate isomorphism: sum of terms -> coefficient matrix.
/// Repeated (i, j) labels accumulate.
inline TensorVector phi(std::size_t m, std::size_t n, std::span<const TensorTerm> terms) {
  ExactMatrix c(m, n);
  for (const auto& t : terms) {
    if (t.i >= m || t.j >= n)
      throw std::out_of_range("basis label (" + std::to_string(t.i) + "," + std::to_string(t.j) + ") outside " +
                              std::to_string(m) + "x" + std::to_string(n));
    c(t.i, t.j) += t.coefficient;
  }
  return TensorVector{std::move(c)};
}

/// Nonzero terms of v in row-major order.
inline std::vector<TensorTerm> phi_inverse(const TensorVector& v) {
  std::vector<TensorTerm> out;
  for (std::size_t i = 0; i < v.m(); ++i)
    for (std::size_t j = 0; j < v.n(); ++j)
      if (v.coeffs()(i, j) != 0) out.push_back({i, j, v.coeffs()(i, j)});
  return out;
}

inline std::size_t schmidt_rank(const TensorVector& v) { return rank(v.coeffs()); }

/// Anti-diagonal d holds the cells (i, j) with i + j = d.
inline std::size_t antidiagonal_first_row(std::size_t n, std::size_t d) { return d >= n ? d - (n - 1) : 0; }

inline std::size_t antidiagonal_length(std::size_t m, std::size_t n, std::size_t d) {
  if (d > m + n - 2) return 0;
  return std::min(d, m - 1) - antidiagonal_first_row(n, d) + 1;
}

struct Generator {
  std::size_t antidiagonal = 0;
  std::size_t window_start_row = 0;
  TensorVector vector;
};

/// Span of pattern windows laid along anti-diagonals. Generators are ordered
/// by anti-diagonal label, then by increasing window start row; within a
/// window the pattern is written in increasing row order.
struct SubspaceBasis {
  std::string name;
  std::size_t m = 0;
  std::size_t n = 0;
  std::vector<Rational> pattern;
  std::size_t claimed_min_rank = 0;
  std::string hypothesis;
  bool claim_asserted = false;
  std::vector<Generator> generators;

  std::size_t dimension() const noexcept { return generators.size(); }

  /// Generator indices grouped by anti-diagonal label.
  std::map<std::size_t, std::vector<std::size_t>> groups() const {
    std::map<std::size_t, std::vector<std::size_t>> g;
    for (std::size_t i = 0; i < generators.size(); ++i) g[generators[i].antidiagonal].push_back(i);
    return g;
  }

  std::vector<TensorVector> vectors() const {
    std::vector<TensorVector> out;
    out.reserve(generators.size());
    for (const auto& g : generators) out.push_back(g.vector);
    return out;
  }
};

inline SubspaceBasis build_pattern_subspace(const std::vector<Rational>& pattern, std::size_t m, std::size_t n) {
  const std::size_t len = pattern.size();
  if (len == 0) throw std::invalid_argument("pattern must be non-empty");
  if (pattern.front() == 0 || pattern.back() == 0) throw std::invalid_argument("pattern endpoints must be nonzero");
  if (m < len || n < len)
    throw DimensionError("pattern of length " + std::to_string(len) + " does not fit in " + std::to_string(m) + "x" +
                         std::to_string(n));
  SubspaceBasis basis;
  basis.name = "pattern";
  basis.m = m;
  basis.n = n;
  basis.pattern = pattern;
  basis.claimed_min_rank = len;
  basis.hypothesis = "none";
  for (std::size_t d = 0; d + 2 <= m + n; ++d) {
    const std::size_t ell = antidiagonal_length(m, n, d);
    if (ell < len) continue;
    const std::size_t first = antidiagonal_first_row(n, d);
    for (std::size_t start = first; start + len <= first + ell; ++start) {
      ExactMatrix c(m, n);
      for (std::size_t u = 0; u < len; ++u) c(start + u, d - start - u) = pattern[u];
      basis.generators.push_back({d, start, TensorVector{std::move(c)}});
    }
  }
  return basis;
}

namespace detail {

inline void require_min_side(std::size_t m, std::size_t n) {
  if (std::min(m, n) < 4) throw DimensionError("construction needs min(m, n) >= 4");
}

inline SubspaceBasis named(SubspaceBasis b, std::string name, std::string hypothesis, bool asserted) {
  b.name = std::move(name);
  b.hypothesis = std::move(hypothesis);
  b.claim_asserted = asserted;
  return b;
}

}  // namespace detail

/// Pattern (1, -a, a, -1); minimum Schmidt rank 4 when a = 3 or a > 5.
inline SubspaceBasis build_alternating_subspace(const Rational& a, std::size_t m, std::size_t n) {
  detail::require_min_side(m, n);
  return detail::named(build_pattern_subspace({1, -a, a, -1}, m, n), "alternating", "a = 3 or a > 5",
                       a == 3 || a > 5);
}

/// Pattern (1, a, a, 1); minimum Schmidt rank 4 when |a| > 5.
inline SubspaceBasis build_positive_subspace(const Rational& a, std::size_t m, std::size_t n) {
  detail::require_min_side(m, n);
  return detail::named(build_pattern_subspace({1, a, a, 1}, m, n), "positive", "|a| > 5", abs(a) > 5);
}

/// outer: pattern (1, a, 1), rank >= 3 when |a| >= 2.
/// inner: pattern (1, a+1, a+1, 1), rank >= 4 when a > 4; inner lies in outer.
struct NestedPair {
  SubspaceBasis outer;
  SubspaceBasis inner;
};

inline NestedPair build_nested_pair(const Rational& a, std::size_t m, std::size_t n) {
  detail::require_min_side(m, n);
  const Rational a1 = a + 1;
  return {detail::named(build_pattern_subspace({1, a, 1}, m, n), "nested-outer", "|a| >= 2", abs(a) >= 2),
          detail::named(build_pattern_subspace({1, a1, a1, 1}, m, n), "nested-inner", "a > 4", a > 4)};
}

/// Chain built from g(i,j) = |e_i>|f_j> + a |e_{i-1}>|f_{j+1}>:
///   S = span g(i,j)                       pattern (a, 1)
///   T = span g(i,j) + g(i-1,j+1)/a        pattern (1, a + 1/a, 1)
///   U = span of adjacent sums of T        pattern (1, c, c, 1), c = a + 1/a + 1
/// with U in T in S. Ranks >= 2, 3, 4 are claimed when a > 0 and a + 1/a > 4.
struct TwoTermChain {
  SubspaceBasis s;
  SubspaceBasis t;
  SubspaceBasis u;
};

inline TwoTermChain build_two_term_chain(const Rational& a, std::size_t m, std::size_t n) {
  if (a == 0) throw std::invalid_argument("chain construction needs a != 0");
  detail::require_min_side(m, n);
  const Rational mid = a + 1 / a;
  const bool asserted = a > 0 && mid > 4;
  const std::string hyp = "a > 0 and a + 1/a > 4";
  return {detail::named(build_pattern_subspace({a, 1}, m, n), "chain-S", hyp, asserted),
          detail::named(build_pattern_subspace({1, mid, 1}, m, n), "chain-T", hyp, asserted),
          detail::named(build_pattern_subspace({1, mid + 1, mid + 1, 1}, m, n), "chain-U", hyp, asserted)};
}

namespace detail {

inline ExactMatrix stacked_rows(std::span<const TensorVector> a, std::span<const TensorVector> b) {
  std::size_t width = 0;
  if (!a.empty()) width = a.front().m() * a.front().n();
  else if (!b.empty()) width = b.front().m() * b.front().n();
  ExactMatrix out(a.size() + b.size(), width);
  std::size_t r = 0;
  for (auto part : {a, b})
    for (const auto& v : part) {
      if (v.m() * v.n() != width) throw DimensionError("tensor vectors of different shapes");
      std::copy(v.coeffs().entries().begin(), v.coeffs().entries().end(), out.row(r++).begin());
    }
  return out;
}

}  // namespace detail

/// Dimension of the span of `vectors`.
inline std::size_t span_rank(std::span<const TensorVector> vectors) {
  return rank(detail::stacked_rows(vectors, {}));
}

/// True iff every vector of `inner` lies in the span of `outer`.
inline bool containment_check(std::span<const TensorVector> inner, std::span<const TensorVector> outer) {
  return rank(detail::stacked_rows(outer, inner)) == rank(detail::stacked_rows(outer, {}));
}

inline bool containment_check(const SubspaceBasis& inner, const SubspaceBasis& outer) {
  if (inner.m != outer.m || inner.n != outer.n) throw DimensionError("containment check on different shapes");
  const auto iv = inner.vectors();
  const auto ov = outer.vectors();
  return containment_check(iv, ov);
}

// ---------------------------------------------------------------------------
// Minimum Schmidt rank verification

enum class VerifyMode { certificate, grid, random };

inline std::string_view mode_name(VerifyMode m) {
  switch (m) {
    case VerifyMode::certificate: return "certificate";
    case VerifyMode::grid: return "grid";
    case VerifyMode::random: return "random";
  }
  return "?";
}

inline VerifyMode parse_mode(std::string_view s) {
  for (auto m : {VerifyMode::certificate, VerifyMode::grid, VerifyMode::random})
    if (mode_name(m) == s) return m;
  throw std::invalid_argument("unknown verification mode '" + std::string(s) + "'");
}

struct VerifyOptions {
  VerifyMode mode = VerifyMode::certificate;
  std::vector<long> grid_values{-2, -1, 0, 1, 2};
  std::uint64_t budget = 10'000'000;
  std::size_t random_samples = 1000;
  long random_height = 5;
  std::uint64_t seed = 1;
  std::size_t threads = default_thread_count();
};

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Counterexample {
  std::vector<Rational> coefficients;  // one per basis generator
  std::size_t schmidt_rank = 0;
  std::optional<std::size_t> antidiagonal;
};

/// Certificate-mode evidence for one anti-diagonal length.
struct AntidiagonalCheck {
  std::size_t length = 0;
  std::size_t min_support = 0;
  std::optional<IndexSet> zero_minor;  // first vanishing order-n minor of the shift matrix
};

struct Verdict {
  VerifyMode mode = VerifyMode::certificate;
  std::size_t k = 0;
  bool passed = false;
  std::string strategy;
  std::optional<std::size_t> certified_bound;
  std::vector<AntidiagonalCheck> antidiagonals;
  std::optional<Counterexample> counterexample;
  std::uint64_t combinations_checked = 0;
  std::uint64_t groups_checked = 0;
};

namespace detail {

inline Counterexample make_counterexample(const SubspaceBasis& basis, std::vector<Rational> coefficients,
                                          std::optional<std::size_t> antidiagonal = std::nullopt) {
  TensorVector v(basis.m, basis.n);
  for (std::size_t i = 0; i < coefficients.size(); ++i)
    if (coefficients[i] != 0) v = v + coefficients[i] * basis.generators[i].vector;
  return {std::move(coefficients), schmidt_rank(v), antidiagonal};
}

inline Verdict verify_certificate(const SubspaceBasis& basis, std::size_t k) {
  Verdict v;
  v.mode = VerifyMode::certificate;
  v.k = k;
  v.strategy = "shift-matrix minimum support per anti-diagonal length";
  const std::size_t len = basis.pattern.size();
  std::map<std::size_t, AntidiagonalCheck> by_length;
  std::map<std::size_t, MinSupport> supports;
  for (const auto& [d, idx] : basis.groups()) {
    const std::size_t ell = antidiagonal_length(basis.m, basis.n, d);
    if (by_length.count(ell)) continue;
    const ExactMatrix shift = shift_matrix(basis.pattern, ell, ell - len + 1);
    AntidiagonalCheck check;
    check.length = ell;
    if (len > 1) {
      const auto report = all_order_n_minors(shift, std::nullopt, 1);
      if (!report.all_nonzero) check.zero_minor = report.zero_witnesses.front();
    }
    auto support = min_support(shift);
    check.min_support = support.count;
    by_length.emplace(ell, check);
    supports.emplace(ell, std::move(support));
  }
  std::size_t bound = std::numeric_limits<std::size_t>::max();
  for (const auto& [ell, check] : by_length) {
    v.antidiagonals.push_back(check);
    bound = std::min(bound, check.min_support);
  }
  v.groups_checked = by_length.size();
  if (by_length.empty()) {
    v.passed = true;
    return v;
  }
  v.certified_bound = bound;
  v.passed = bound >= k;
  if (!v.passed) {
    // Lowest anti-diagonal whose length attains the failing bound.
    for (const auto& [d, idx] : basis.groups()) {
      const std::size_t ell = antidiagonal_length(basis.m, basis.n, d);
      if (by_length.at(ell).min_support >= k) continue;
      std::vector<Rational> coeffs(basis.dimension(), Rational{0});
      const auto& lambda = supports.at(ell).combination;
      for (std::size_t t = 0; t < idx.size(); ++t) coeffs[idx[t]] = lambda[t];
      v.counterexample = make_counterexample(basis, std::move(coeffs), d);
      break;
    }
  }
  return v;
}

/// Generators scaled by one common integer so that every coefficient is an
/// integer; ranks of combinations are unchanged.
inline std::vector<std::vector<std::int64_t>> integer_generators(const SubspaceBasis& basis) {
  Integer l{1};
  for (const auto& g : basis.generators)
    for (const auto& x : g.vector.coeffs().entries()) l = boost::multiprecision::lcm(l, denominator_of(x));
  std::vector<std::vector<std::int64_t>> out;
  for (const auto& g : basis.generators) {
    std::vector<std::int64_t> flat;
    for (const auto& x : g.vector.coeffs().entries()) {
      const Integer v = numerator_of(x) * (l / denominator_of(x));
      if (v > (Integer{1} << 40) || v < -(Integer{1} << 40))
        throw std::overflow_error("generator coefficients too large for grid verification");
      flat.push_back(static_cast<std::int64_t>(v));
    }
    out.push_back(std::move(flat));
  }
  return out;
}

/// Scans grid tuples over `positions` (other coefficients zero). Tuple t has
/// positions[0] as its most significant digit. Returns the lowest failing
/// tuple index, if any.
inline std::optional<std::uint64_t> scan_grid(const SubspaceBasis& basis,
                                              const std::vector<std::vector<std::int64_t>>& gens,
                                              const std::vector<std::size_t>& positions, const std::vector<long>& values,
                                              std::uint64_t total, std::size_t k, std::size_t threads) {
  const std::size_t cells = basis.m * basis.n;
  const std::size_t base = values.size();
  const std::size_t chunks = std::max<std::size_t>(1, std::min<std::uint64_t>(threads, total));
  std::vector<std::optional<std::uint64_t>> found(chunks);
  const std::uint64_t step = (total + chunks - 1) / chunks;
  parallel_chunks(chunks, chunks, [&](std::size_t cb, std::size_t ce) {
    for (std::size_t c = cb; c < ce; ++c) {
      const std::uint64_t begin = c * step;
      const std::uint64_t end = std::min(total, begin + step);
      if (begin >= end) continue;
      std::vector<std::size_t> digit(positions.size());
      std::uint64_t rem = begin;
      for (std::size_t p = positions.size(); p-- > 0;) {
        digit[p] = static_cast<std::size_t>(rem % base);
        rem /= base;
      }
      Matrix<std::int64_t> acc(basis.m, basis.n);
      for (std::uint64_t t = begin; t < end; ++t) {
        bool any = false;
        std::int64_t* out = &acc(0, 0);
        std::fill(out, out + cells, 0);
        for (std::size_t p = 0; p < positions.size(); ++p) {
          const long coeff = values[digit[p]];
          if (coeff == 0) continue;
          any = true;
          const auto& g = gens[positions[p]];
          for (std::size_t x = 0; x < cells; ++x)
            if (g[x]) out[x] += coeff * g[x];
        }
        if (any && integer_rank(acc) < k) {
          found[c] = t;
          break;
        }
        for (std::size_t p = positions.size(); p-- > 0;) {
          if (++digit[p] < base) break;
          digit[p] = 0;
        }
      }
    }
  });
  for (const auto& f : found)
    if (f) return f;
  return std::nullopt;
}

inline std::vector<Rational> decode_tuple(std::uint64_t t, const std::vector<std::size_t>& positions,
                                          const std::vector<long>& values, std::size_t dimension) {
  std::vector<Rational> coeffs(dimension, Rational{0});
  for (std::size_t p = positions.size(); p-- > 0;) {
    coeffs[positions[p]] = values[t % values.size()];
    t /= values.size();
  }
  return coeffs;
}

/// base^exponent, or nullopt if it exceeds `cap`.
inline std::optional<std::uint64_t> bounded_power(std::uint64_t base, std::size_t exponent, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < exponent; ++i) {
    if (base != 0 && r > cap / base) return std::nullopt;
    r *= base;
  }
  return r;
}

inline std::vector<std::vector<Rational>> random_tuples(std::size_t count, std::size_t dimension,
                                                        std::uint64_t seed, const std::vector<long>* grid,
                                                        long height) {
  std::mt19937_64 engine(seed);
  auto draw = [&](std::uint64_t range) { return static_cast<long>(engine() % range); };
  std::vector<std::vector<Rational>> out;
  out.reserve(count);
  while (out.size() < count) {
    std::vector<Rational> c(dimension, Rational{0});
    bool any = false;
    for (auto& x : c) {
      if (grid) {
        x = (*grid)[static_cast<std::size_t>(draw(grid->size()))];
      } else {
        const long num = draw(static_cast<std::uint64_t>(2 * height + 1)) - height;
        const long den = draw(static_cast<std::uint64_t>(height)) + 1;
        x = Rational{num, den};
      }
      any = any || x != 0;
    }
    if (any) out.push_back(std::move(c));
  }
  return out;
}

/// Evaluates rational combinations; returns the lowest failing index.
inline std::optional<std::size_t> scan_tuples(const SubspaceBasis& basis,
                                              const std::vector<std::vector<Rational>>& tuples, std::size_t k,
                                              std::size_t threads) {
  std::vector<char> fails(tuples.size(), 0);
  parallel_chunks(tuples.size(), threads, [&](std::size_t b, std::size_t e) {
    for (std::size_t i = b; i < e; ++i) {
      ExactMatrix c(basis.m, basis.n);
      for (std::size_t g = 0; g < tuples[i].size(); ++g)
        if (tuples[i][g] != 0) c = c + tuples[i][g] * basis.generators[g].vector.coeffs();
      fails[i] = rank(c) < k;
    }
  });
  for (std::size_t i = 0; i < fails.size(); ++i)
    if (fails[i]) return i;
  return std::nullopt;
}

inline Verdict verify_grid(const SubspaceBasis& basis, std::size_t k, const VerifyOptions& opt) {
  Verdict v;
  v.mode = VerifyMode::grid;
  v.k = k;
  const std::size_t dim = basis.dimension();
  const bool has_zero = std::find(opt.grid_values.begin(), opt.grid_values.end(), 0L) != opt.grid_values.end();
  if (opt.grid_values.empty()) throw std::invalid_argument("grid coefficient set is empty");
  const auto gens = integer_generators(basis);

  if (auto total = bounded_power(opt.grid_values.size(), dim, opt.budget)) {
    v.strategy = "full grid";
    std::vector<std::size_t> all(dim);
    for (std::size_t i = 0; i < dim; ++i) all[i] = i;
    const auto fail = scan_grid(basis, gens, all, opt.grid_values, *total, k, opt.threads);
    v.combinations_checked = (fail ? *fail + 1 : *total) - (has_zero ? 1 : 0);
    v.groups_checked = basis.groups().size();
    if (fail) v.counterexample = make_counterexample(basis, decode_tuple(*fail, all, opt.grid_values, dim));
    v.passed = !fail;
    return v;
  }

  v.strategy = "per anti-diagonal grid + random cross-group";
  for (const auto& [d, idx] : basis.groups()) {
    const auto total = bounded_power(opt.grid_values.size(), idx.size(), opt.budget);
    if (!total)
      throw BudgetExceeded("anti-diagonal " + std::to_string(d) + " has " + std::to_string(idx.size()) +
                           " generators; grid exceeds budget " + std::to_string(opt.budget));
    const auto fail = scan_grid(basis, gens, idx, opt.grid_values, *total, k, opt.threads);
    ++v.groups_checked;
    v.combinations_checked += (fail ? *fail + 1 : *total) - (has_zero ? 1 : 0);
    if (fail) {
      v.counterexample = make_counterexample(basis, decode_tuple(*fail, idx, opt.grid_values, dim), d);
      v.passed = false;
      return v;
    }
  }
  const auto tuples = random_tuples(opt.random_samples, dim, opt.seed, &opt.grid_values, 0);
  const auto fail = scan_tuples(basis, tuples, k, opt.threads);
  v.combinations_checked += fail ? *fail + 1 : tuples.size();
  if (fail) v.counterexample = make_counterexample(basis, tuples[*fail]);
  v.passed = !fail;
  return v;
}

inline Verdict verify_random(const SubspaceBasis& basis, std::size_t k, const VerifyOptions& opt) {
  Verdict v;
  v.mode = VerifyMode::random;
  v.k = k;
  v.strategy = "random rational combinations";
  if (opt.random_height < 1) throw std::invalid_argument("random height must be >= 1");
  const auto tuples = random_tuples(opt.random_samples, basis.dimension(), opt.seed, nullptr, opt.random_height);
  const auto fail = scan_tuples(basis, tuples, k, opt.threads);
  v.combinations_checked = fail ? *fail + 1 : tuples.size();
  if (fail) v.counterexample = make_counterexample(basis, tuples[*fail]);
  v.passed = !fail;
  return v;
}

}  // namespace detail

/// Checks that every nonzero vector of the span has Schmidt rank >= k.
///
/// certificate: for each anti-diagonal length l carrying generators, the
///   minimum support s_l of the l x (l - L + 1) shift matrix of the pattern.
///   The top nonzero anti-diagonal of any combination then has >= s_l
///   nonzero cells, and the square submatrix on those cells is
///   anti-triangular, so min_l s_l is a lower bound on the Schmidt rank.
/// grid: every combination with coefficients from a finite set, or per
///   anti-diagonal groups plus random cross-group samples when the full
///   grid is over budget.
/// random: seeded random rational combinations.
inline Verdict verify_min_rank(const SubspaceBasis& basis, std::size_t k, const VerifyOptions& options = {}) {
  switch (options.mode) {
    case VerifyMode::certificate: return detail::verify_certificate(basis, k);
    case VerifyMode::grid: return detail::verify_grid(basis, k, options);
    case VerifyMode::random: return detail::verify_random(basis, k, options);
  }
  throw std::invalid_argument("unknown verification mode");
}

struct RankWitness {
  std::size_t generator_index = 0;
  TensorVector vector;
  std::size_t schmidt_rank = 0;
};

/// A generator of `outer` with Schmidt rank exactly 3 that is not in `inner`.
inline RankWitness find_sr3_witness(const SubspaceBasis& outer, const SubspaceBasis& inner) {
  const auto inner_vectors = inner.vectors();
  for (std::size_t i = 0; i < outer.generators.size(); ++i) {
    const auto& v = outer.generators[i].vector;
    if (schmidt_rank(v) != 3) continue;
    if (containment_check(std::span<const TensorVector>(&v, 1), inner_vectors)) continue;
    return {i, v, 3};
  }
  throw std::runtime_error("no Schmidt-rank-3 generator outside the inner subspace");
}

}  // namespace entangle
