#include "entangle/dsequence.hpp"
#include "entangle/linalg.hpp"
#include "entangle/minors.hpp"
#include "entangle/structured.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace entangle;

namespace {

Rational minor_E(const Rational& a, std::size_t n, std::size_t k, const Rational& b = 1) {
  return det(deleted_variant({Family::E, a, b, n}, {k}));
}

std::size_t binomial(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Smallest support over every nonzero integer combination with entries in
// [-h, h]. An upper bound on the true minimum.
std::size_t grid_support_bound(const ExactMatrix& m, int h) {
  const std::size_t n = m.cols();
  std::vector<Rational> lambda(n, Rational{-h});
  std::size_t best = m.rows();
  for (;;) {
    bool any = false;
    for (const auto& x : lambda) any = any || x != 0;
    if (any) best = std::min(best, nonzero_count(multiply<Rational>(m, lambda)));
    std::size_t i = 0;
    while (i < n && lambda[i] == h) lambda[i++] = -h;
    if (i == n) return best;
    lambda[i] += 1;
  }
}

const std::vector<Rational> kSampleA{2, 3, 6, 7, Rational{5, 2}};

}  // namespace

TEST(DSequence, SeedsAndRecurrence) {
  const auto d = d_sequence_recurrence(Rational{7, 3}, Rational{-2, 5}, 12);
  EXPECT_EQ(d[-1], 0);
  EXPECT_EQ(d[0], 1);
  EXPECT_EQ(d[1], -d.a());
  for (long n = 2; n <= 12; ++n)
    EXPECT_EQ(d[n], -d.a() * d[n - 1] - d.a() * d.b() * d[n - 2] - pow(d.b(), 3) * d[n - 3]);
  EXPECT_THROW(d[13], std::out_of_range);
  EXPECT_THROW(d[-2], std::out_of_range);
}

TEST(DSequence, EqualsDeterminantOfD) {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  for (int trial = 0; trial < 10; ++trial) {
    const Rational a{num(rng), den(rng)}, b{num(rng), den(rng)};
    const auto d = d_sequence_recurrence(a, b, 10);
    for (long n = 1; n <= 10; ++n) EXPECT_EQ(d[n], det(build({Family::D, a, b, static_cast<std::size_t>(n)})));
  }
}

TEST(DSequence, AThreeIsTriangularPattern) {
  const auto d = d_sequence_recurrence(3, 1, 50);
  for (long n = 0; n <= 50; ++n) {
    const Rational expected = Rational{(n + 1) * (n + 2) / 2};
    EXPECT_EQ(d[n], n % 2 ? -expected : expected) << n;
  }
}

TEST(DSequence, ThreePipelinesAgree) {
  for (const auto& a : kSampleA) {
    const auto rec = d_sequence_recurrence(a, 1, 20);
    EXPECT_EQ(d_sequence_series(a, 20), rec) << to_string(a);
    if (a == 3) continue;
    for (long k = 0; k <= 20; ++k) EXPECT_EQ(d_closed_form(a, k), rec[k]) << to_string(a) << " k=" << k;
  }
}

TEST(DSequence, ClosedFormRefusesRepeatedRoots) {
  EXPECT_THROW(d_closed_form(3, 4), RepeatedRootError);
  EXPECT_THROW(d_closed_form(-1, 4), RepeatedRootError);
  // complex roots (negative discriminant) and rational roots both stay exact
  for (const Rational& a : {Rational{0}, Rational{1}, Rational{2}, Rational{-2}, Rational{7}, Rational{-5, 3}}) {
    const auto rec = d_sequence_recurrence(a, 1, 15);
    for (long k = 0; k <= 15; ++k) EXPECT_EQ(d_closed_form(a, k), rec[k]) << to_string(a) << " k=" << k;
  }
}

TEST(DSequence, SeriesInverse) {
  // 1/(1 - x) = 1 + x + x^2 + ...
  const auto inv = series_inverse({1, -1}, 6);
  for (const auto& c : inv) EXPECT_EQ(c, 1);
  EXPECT_THROW(series_inverse({0, 1}, 3), std::invalid_argument);
}

TEST(DSequence, PeriodicVanishingAtATwo) {
  const auto d = d_sequence_recurrence(2, 1, 12);
  EXPECT_EQ(d[4], 0);
  EXPECT_EQ(d[5], 0);
  EXPECT_EQ(d[10], 0);
  EXPECT_EQ(d[11], 0);
}

TEST(ProductFormula, MatchesDeterminant) {
  for (const Rational& a : {Rational{2}, Rational{3}, Rational{6}, Rational{7}})
    for (std::size_t n = 1; n <= 12; ++n)
      for (std::size_t k = 1; k <= n + 1; ++k)
        EXPECT_EQ(minor_E_product_formula(a, n, k), minor_E(a, n, k)) << to_string(a) << " n=" << n << " k=" << k;
}

TEST(ProductFormula, GeneralB) {
  std::mt19937_64 rng(32);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 4);
  for (int trial = 0; trial < 10; ++trial) {
    const Rational a{num(rng), den(rng)}, b{num(rng), den(rng)};
    for (std::size_t n = 1; n <= 7; ++n)
      for (std::size_t k = 1; k <= n + 1; ++k) EXPECT_EQ(minor_E_product_formula(a, n, k, b), minor_E(a, n, k, b));
  }
}

TEST(ProductFormula, AThreeClosedValues) {
  for (long n = 1; n <= 12; ++n)
    for (long k = 1; k <= n + 1; ++k) {
      const Rational v{k * (n + 2) * (n - k + 2), 2};
      EXPECT_EQ(minor_E_product_formula(3, n, k), k % 2 ? v : Rational{-v});
    }
}

TEST(ProductFormula, IndexChecks) {
  EXPECT_THROW(minor_E_product_formula(3, 4, 0), std::out_of_range);
  EXPECT_THROW(minor_E_product_formula(3, 4, 6), std::out_of_range);
}

TEST(ProductFormula, VanishingInstance) {
  EXPECT_EQ(minor_E(2, 10, 5), 0);
  EXPECT_EQ(minor_E_product_formula(2, 10, 5), 0);
  const auto m = deleted_variant({Family::E, 2, 1, 10}, {5});
  EXPECT_EQ(rank(m), 9u);
  const auto kv = kernel_vector(m);
  ASSERT_TRUE(kv);
  for (const auto& x : multiply<Rational>(m, *kv)) EXPECT_EQ(x, 0);
}

TEST(Scaling, HomogeneousOfDegreeN) {
  std::mt19937_64 rng(33);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  std::size_t printed_exponent_failures = 0, off_diagonal = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const Rational a{num(rng), den(rng)};
    Rational b{num(rng), den(rng)};
    if (b == 0) b = Rational{3, 2};
    if (b == 1 || b == -1) b = 2;
    for (std::size_t n = 1; n <= 8; ++n)
      for (std::size_t k = 1; k <= n + 1; ++k) {
        const Rational lhs = minor_E(a, n, k, b);
        const Rational unit = minor_E(a / b, n, k);
        EXPECT_EQ(lhs, pow(b, static_cast<unsigned>(n)) * unit);
        if (k != n && unit != 0) {
          ++off_diagonal;
          if (lhs != pow(b, static_cast<unsigned>(k)) * unit) ++printed_exponent_failures;
        }
      }
  }
  // exponent k would only agree where b^k = b^n
  EXPECT_EQ(printed_exponent_failures, off_diagonal);
}

TEST(BZero, PowerOfA) {
  for (std::size_t n = 1; n <= 8; ++n)
    for (std::size_t k = 1; k <= n + 1; ++k) {
      EXPECT_EQ(minor_E_b_zero(5, n, k), minor_E(5, n, k, 0));
      const Rational p = pow(Rational{5}, static_cast<unsigned>(n));
      EXPECT_EQ(minor_E_b_zero(5, n, k), k % 2 ? p : Rational{-p});
    }
}

TEST(AllMinors, CoverageAndOrdering) {
  const auto m = build({Family::B, 3, 1, 6});
  const auto r = all_order_n_minors(m);
  EXPECT_EQ(r.order, 6u);
  ASSERT_EQ(r.entries.size(), binomial(9, 3));
  for (std::size_t i = 1; i < r.entries.size(); ++i) EXPECT_LT(r.entries[i - 1].deleted, r.entries[i].deleted);
  for (const auto& e : r.entries) EXPECT_EQ(e.value, det(delete_rows(m, e.deleted)));
  EXPECT_TRUE(r.all_nonzero);
  EXPECT_TRUE(r.zero_witnesses.empty());
  EXPECT_THROW(all_order_n_minors(ExactMatrix::identity(3)), DimensionError);
}

TEST(AllMinors, ThreadCountDoesNotChangeReport) {
  const auto m = build({Family::B, 2, 1, 8});
  const auto one = all_order_n_minors(m, std::nullopt, 1);
  for (std::size_t t : {2u, 3u, 7u}) {
    const auto many = all_order_n_minors(m, std::nullopt, t);
    ASSERT_EQ(one.entries.size(), many.entries.size());
    for (std::size_t i = 0; i < one.entries.size(); ++i) {
      EXPECT_EQ(one.entries[i].deleted, many.entries[i].deleted);
      EXPECT_EQ(one.entries[i].value, many.entries[i].value);
    }
    EXPECT_EQ(one.zero_witnesses, many.zero_witnesses);
  }
}

TEST(AllMinors, ETenAtTwoVanishesEverywhere) {
  const auto r = all_order_n_minors(build({Family::E, 2, 1, 10}));
  EXPECT_EQ(r.entries.size(), 11u);
  EXPECT_FALSE(r.all_nonzero);
  EXPECT_EQ(r.zero_witnesses.size(), 11u);
  EXPECT_NE(std::find(r.zero_witnesses.begin(), r.zero_witnesses.end(), IndexSet{5}), r.zero_witnesses.end());
}

TEST(AllMinors, ZeroWitnessesAreExactlyTheZeroEntries) {
  for (const Rational& a : {Rational{2}, Rational{4}, Rational{5}})
    for (std::size_t n = 2; n <= 8; ++n) {
      const auto r = all_order_n_minors(build({Family::B, a, 1, n}));
      std::vector<IndexSet> zeros;
      for (const auto& e : r.entries)
        if (e.value == 0) zeros.push_back(e.deleted);
      EXPECT_EQ(zeros, r.zero_witnesses);
      EXPECT_EQ(r.all_nonzero, zeros.empty());
    }
}

TEST(MinSupport, Examples) {
  const auto b5 = min_support(build({Family::B, 3, 1, 5}));
  EXPECT_EQ(b5.count, 4u);
  ASSERT_TRUE(b5.column);
  EXPECT_EQ(*b5.column, 1u);
  EXPECT_EQ(b5.image, (std::vector<Rational>{1, -3, 3, -1, 0, 0, 0, 0}));

  const auto g5 = min_support(build({Family::G, 2, 1, 5}));
  EXPECT_EQ(g5.count, 3u);
  ASSERT_TRUE(g5.column);
  EXPECT_EQ(*g5.column, 1u);

  EXPECT_THROW(min_support(build({Family::E, 2, 1, 10})), RankDeficientError);

  const auto b10 = min_support(build({Family::B, 2, 1, 10}));
  EXPECT_EQ(b10.count, 2u);
  EXPECT_EQ(nonzero_count(b10.image), 2u);
}

TEST(MinSupport, WitnessIsConsistent) {
  for (const Rational& a : {Rational{2}, Rational{3}, Rational{4}, Rational{6}})
    for (std::size_t n = 1; n <= 7; ++n)
      for (Family fam : {Family::E, Family::G, Family::B, Family::Etilde, Family::Btilde}) {
        const auto m = build({fam, a, 1, n});
        if (kernel_vector(m)) continue;
        const auto s = min_support(m);
        EXPECT_EQ(multiply<Rational>(m, s.combination), s.image);
        EXPECT_EQ(nonzero_count(s.image), s.count);
        EXPECT_GT(nonzero_count(s.combination), 0u);
        EXPECT_LE(s.count, m.rows() - m.cols() + 1);
      }
}

TEST(MinSupport, NotAboveGridSearch) {
  for (const Rational& a : {Rational{1}, Rational{2}, Rational{3}, Rational{-2}})
    for (std::size_t n = 1; n <= 3; ++n)
      for (Family fam : {Family::G, Family::B, Family::Btilde}) {
        const auto m = build({fam, a, 1, n});
        if (kernel_vector(m)) continue;
        EXPECT_LE(min_support(m).count, grid_support_bound(m, 3)) << family_name(fam) << " " << to_string(a);
      }
}

TEST(MinSupport, EquivalentToAllMinorsNonzero) {
  for (const Rational& a : {Rational{-6}, Rational{-2}, Rational{1}, Rational{2}, Rational{3}, Rational{4},
                           Rational{5}, Rational{6}, Rational{11, 2}})
    for (std::size_t n = 1; n <= 8; ++n)
      for (Family fam : {Family::E, Family::Etilde, Family::G, Family::B, Family::Btilde}) {
        const auto m = build({fam, a, 1, n});
        const auto report = all_order_n_minors(m);
        const std::size_t r = m.rows() - m.cols();
        if (kernel_vector(m)) {
          EXPECT_FALSE(report.all_nonzero);
          continue;
        }
        EXPECT_EQ(min_support(m).count >= r + 1, report.all_nonzero)
            << family_name(fam) << " a=" << to_string(a) << " n=" << n;
      }
}

TEST(Combinations, LexicographicAndComplete) {
  const auto c = combinations(5, 2);
  ASSERT_EQ(c.size(), 10u);
  EXPECT_EQ(c.front(), (IndexSet{1, 2}));
  EXPECT_EQ(c.back(), (IndexSet{4, 5}));
  EXPECT_EQ(combinations(13, 3).size(), 286u);
  EXPECT_EQ(combinations(3, 0).size(), 1u);
}
