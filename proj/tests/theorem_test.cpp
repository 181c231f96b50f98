#include <gtest/gtest.h>

#include <random>

#include "supersat/theorem.hpp"
#include "supersat/verify.hpp"

using namespace supersat;

namespace {

Word set_of(std::initializer_list<int> elements) {
  Word w = 0;
  for (int e : elements) w |= Word{1} << (e - 1);
  return w;
}

std::vector<int> levels_of(const Chain& c) {
  std::vector<int> out;
  for (Word w : c.sets) out.push_back(level(w));
  return out;
}

} // namespace

TEST(SupersatBound, Examples) {
  EXPECT_EQ(supersat_bound(4, 2, 1), 3);
  EXPECT_EQ(supersat_bound(4, 3, 2), 12);
  for (int n = 1; n <= 12; ++n)
    for (int k = 2; k <= n + 1; ++k) EXPECT_EQ(supersat_bound(n, k, 0), 0);
}

TEST(SupersatBound, RangeChecks) {
  EXPECT_THROW(supersat_bound(4, 1, 1), Error);
  EXPECT_THROW(supersat_bound(4, 6, 1), Error);
  EXPECT_THROW(supersat_bound(4, 2, -1), Error);
  // Beyond the tight range the formula still evaluates.
  EXPECT_EQ(supersat_bound(4, 2, 10), 30);
}

TEST(TightXMax, Examples) {
  EXPECT_EQ(tight_x_max(4, 2), 4);
  EXPECT_EQ(tight_x_max(4, 3), 4);
  EXPECT_EQ(tight_x_max(5, 2), 10);
}

TEST(TightXMax, EqualsGapBetweenThresholds) {
  for (int n = 1; n <= 16; ++n)
    for (int k = 2; k <= n + 1; ++k) EXPECT_EQ(tight_x_max(n, k), sigma(n, k) - sigma(n, k - 1)) << n << "," << k;
}

TEST(NPermutations, FactorialFormExamples) {
  EXPECT_EQ(n_permutations_factorial(LevelTuple(4, {1, 2})), 8);
  // Brute force (tests/oracle/brute_force.py): only the identity keeps ∅⊂{1}⊂{1,2} on one chain.
  EXPECT_EQ(n_permutations_factorial(LevelTuple(2, {0, 1, 2})), 1);
  for (int n = 1; n <= 10; ++n)
    for (int a = 0; a <= n; ++a) EXPECT_EQ(n_permutations_factorial(LevelTuple(n, {a})), factorial(n));
}

TEST(NPermutations, RatioFormExamples) {
  EXPECT_EQ(n_permutations_ratio(LevelTuple(4, {1, 2})), 8);
  EXPECT_EQ(n_permutations_ratio(LevelTuple(6, {2, 3, 4})), 60);
  EXPECT_EQ(n_permutations_ratio(LevelTuple(3, {0, 3})), 6);
  EXPECT_THROW(n_permutations_ratio(LevelTuple(3, {1})), Error);
}

TEST(NPermutations, ClosedFormsAgreeOnAllTuples) {
  for (int n = 1; n <= 14; ++n)
    for (int k = 2; k <= std::min(6, n + 1); ++k)
      for_each_level_tuple(n, k, [&](const LevelTuple& t) {
        ASSERT_EQ(n_permutations_factorial(t), n_permutations_ratio(t));
      });
}

TEST(NPermutations, EnumerationExamples) {
  const Chain c{{set_of({1}), set_of({1, 2})}};
  EXPECT_EQ(n_permutations_enumerate(scd_inductive(4), c), 8);
  const Chain full{{0, set_of({1}), set_of({1, 2}), set_of({1, 2, 3})}};
  EXPECT_EQ(n_permutations_enumerate(scd_inductive(3), full), 1);
  EXPECT_EQ(n_permutations_enumerate(scd_inductive(3), Chain{{0, set_of({1, 2, 3})}}), 6);
  EXPECT_EQ(n_permutations_enumerate(scd_inductive(6), Chain{{set_of({1, 2}), set_of({1, 2, 3}), set_of({1, 2, 3, 4})}}),
            60);
}

TEST(NPermutations, EnumerationRejectsBadInput) {
  try {
    n_permutations_enumerate(scd_inductive(4), Chain{{set_of({1}), set_of({2})}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::InvalidChain);
  }
  EXPECT_THROW(n_permutations_enumerate(scd_inductive(8), Chain{{0}}), Error);
  EXPECT_THROW(n_permutations_enumerate(scd_inductive(4), Chain{{}}), Error);
}

TEST(NPermutations, EnumerationMatchesClosedFormsOnRandomChains) {
  std::mt19937_64 rng(2012);
  for (int n = 1; n <= 6; ++n) {
    const Decomposition ds[] = {scd_inductive(n), scd_bracketing(n)};
    for (int k = 1; k <= std::min(4, n + 1); ++k)
      for (int trial = 0; trial < 25; ++trial) {
        const Chain c = random_chain(n, k, rng);
        const LevelTuple t(n, levels_of(c));
        const BigInt fac = n_permutations_factorial(t);
        if (k >= 2) ASSERT_EQ(fac, n_permutations_ratio(t));
        for (const auto& d : ds) ASSERT_EQ(n_permutations_enumerate(d, c), fac);
      }
  }
}

TEST(YZ, Examples) {
  const YZ v = yz(LevelTuple(4, {1, 2}));
  EXPECT_EQ(v.y, 2);
  EXPECT_EQ(v.z, 3);
  const YZ a = yz(LevelTuple(6, {1, 2, 4}));
  const YZ b = yz(LevelTuple(6, {1, 3, 4}));
  EXPECT_EQ(a.y, b.y);
  EXPECT_EQ(a.z, b.z);
  for (int n = 1; n <= 10; ++n) {
    const YZ e = yz(LevelTuple(n, {0, n}));
    EXPECT_EQ(e.y, 1);
    EXPECT_EQ(e.z, 1);
  }
}

TEST(YZ, InvariantUnderReorderingDifferences) {
  for (int n = 1; n <= 9; ++n)
    for (int k = 3; k <= std::min(5, n + 1); ++k)
      for_each_level_tuple(n, k, [&](const LevelTuple& t) {
        auto diffs = t.differences();
        std::sort(diffs.begin(), diffs.end());
        const YZ base = yz(t);
        do {
          const YZ other = yz(LevelTuple::from_differences(n, t.front(), diffs));
          ASSERT_EQ(other.y, base.y);
          ASSERT_EQ(other.z, base.z);
        } while (std::next_permutation(diffs.begin(), diffs.end()));
      });
}

TEST(BinomialIdentity, Examples) {
  EXPECT_TRUE(binomial_identity_holds(1, 1, 2));
  EXPECT_EQ(binom(4, 2) * binom(2, 1), 12);
  EXPECT_EQ(binom(4, 3) * binom(3, 1), 12);
  EXPECT_TRUE(binomial_identity_holds(0, 0, 0));
  EXPECT_THROW(binomial_identity_holds(-1, 0, 0), Error);
}

TEST(BinomialIdentity, ExhaustiveToTwenty) {
  for (int a = 0; a <= 20; ++a)
    for (int i = 0; a + i <= 20; ++i)
      for (int j = 0; a + i + j <= 20; ++j) ASSERT_TRUE(binomial_identity_holds(a, i, j));
}

TEST(MinMaxYz, Examples) {
  EXPECT_EQ(min_max_yz(4, 2), 3);
  EXPECT_EQ(predicted_yz_minimizer(4, 2), LevelTuple(4, {2, 3}));
  EXPECT_EQ(min_max_yz(5, 3), 12);
  EXPECT_EQ(predicted_yz_minimizer(5, 3), LevelTuple(5, {2, 3, 4}));

  // Frozen from tests/oracle/brute_force.py: (0,4) has y = z = 1, below the formula.
  const auto v = verify_min_max_yz(4, 2);
  EXPECT_EQ(v.tuples_checked, 10u);
  EXPECT_EQ(v.exhaustive_min, 1);
  EXPECT_EQ(v.violators, (std::vector<LevelTuple>{LevelTuple(4, {0, 4})}));
  EXPECT_FALSE(v.ok());
  EXPECT_EQ(v.interior_min, 3);
  EXPECT_EQ(v.interior_minimizers,
            (std::vector<LevelTuple>{LevelTuple(4, {1, 2}), LevelTuple(4, {1, 3}), LevelTuple(4, {2, 3})}));
  EXPECT_TRUE(v.interior_ok());
}

TEST(MinMaxYz, ViolatorsAreExactlySpanningTuples) {
  for (int n = 1; n <= 12; ++n)
    for (int k = 2; k <= std::min(4, n + 1); ++k) {
      const auto v = verify_min_max_yz(n, k);
      for (const auto& t : v.violators) EXPECT_TRUE(spans_lattice(t)) << n << "," << k;
      EXPECT_EQ(v.violations > 0, k <= n) << n << "," << k;
    }
}

TEST(MinMaxYz, InteriorMinimumMatchesFormulaUpToThirteen) {
  for (int n = 1; n <= 13; ++n)
    for (int k = 2; k <= std::min(4, n + 1); ++k) EXPECT_TRUE(verify_min_max_yz(n, k).interior_ok()) << n << "," << k;
}

TEST(MinMaxYz, AgreesWithBoundAtXOne) {
  for (int n = 1; n <= 12; ++n)
    for (int k = 2; k <= n + 1; ++k) EXPECT_EQ(supersat_bound(n, k, 1), min_max_yz(n, k));
}

TEST(Reduction, StepsStrictlyDecrease) {
  for (int n = 1; n <= 10; ++n)
    for (int k = 2; k <= std::min(4, n + 1); ++k)
      for_each_level_tuple(n, k, [&](const LevelTuple& t) {
        const YZ base = yz(t);
        if (auto step = reduce_y(t)) {
          EXPECT_EQ(yz(step->reordered).y, base.y);
          EXPECT_EQ(yz(step->reordered).z, base.z);
          EXPECT_LT(yz(step->reduced).y, base.y);
          const int a = step->reordered[k - 2];
          EXPECT_EQ(yz(step->reduced).y * binom(step->reordered.back(), a), base.y * (a + 1));
        }
        if (auto step = reduce_z(t)) {
          EXPECT_EQ(yz(step->reordered).z, base.z);
          EXPECT_LT(yz(step->reduced).z, base.z);
          const int a1 = step->reordered[0], a2 = step->reordered[1];
          EXPECT_EQ(yz(step->reduced).z * binom(n - a1, n - a2), base.z * (n - a2 + 1));
        }
      });
}

TEST(Reduction, NotApplicableToUnitTuples) {
  EXPECT_FALSE(reduce_y(LevelTuple(6, {2, 3, 4})).has_value());
  EXPECT_FALSE(reduce_z(LevelTuple(6, {2, 3, 4})).has_value());
  // a_{k-1} = 0 after moving the large difference last.
  EXPECT_FALSE(reduce_y(LevelTuple(6, {0, 5})).has_value());
  EXPECT_FALSE(reduce_z(LevelTuple(6, {1, 6})).has_value());
}

TEST(ExtremalFamily, Examples) {
  const Family f = build_extremal_family(4, 2, 1);
  Family expected = build_b_family(4, 1);
  expected.insert(set_of({1, 2, 3}));
  EXPECT_EQ(f, expected);
  EXPECT_EQ(count_k_chains(f, 2).value, 3);

  const Family g = build_extremal_family(4, 3, 1);
  EXPECT_EQ(g.size(), 11u);
  EXPECT_EQ(extremal_layout(4, 3).base, (LevelInterval{2, 3}));
  EXPECT_EQ(extremal_layout(4, 3).added_level, 1);
  EXPECT_EQ(count_k_chains(g, 3).value, 6);

  for (int n = 1; n <= 8; ++n)
    for (int k = 2; k <= n + 1; ++k) {
      const Family h = build_extremal_family(n, k, 0);
      EXPECT_EQ(h, build_b_family(n, k - 1, extremal_layout(n, k).base_variant));
      EXPECT_EQ(count_k_chains(h, k).value, 0);
    }
}

TEST(ExtremalFamily, RefusesOutsideTightRange) {
  EXPECT_THROW(build_extremal_family(4, 2, 5), Error);
  EXPECT_NO_THROW(build_extremal_family(4, 2, 4));
}

TEST(ExtremalFamily, LayoutIsContiguousMiddleForAllN) {
  for (int n = 1; n <= 20; ++n)
    for (int k = 2; k <= n + 1; ++k) {
      const auto layout = extremal_layout(n, k);
      EXPECT_EQ(layout.combined.rows(), k);
      EXPECT_FALSE(layout.base.contains(layout.added_level));
      EXPECT_TRUE(layout.combined == middle_levels(n, k, Variant::Floor) ||
                  layout.combined == middle_levels(n, k, Variant::Ceil));
    }
}

TEST(ExtremalFamily, AttainsBoundIndependentOfSelector) {
  std::mt19937_64 rng(99);
  RowSelector shuffled = [&rng](std::span<const Word> row, std::size_t x) {
    std::vector<Word> v(row.begin(), row.end());
    std::shuffle(v.begin(), v.end(), rng);
    v.resize(x);
    return v;
  };
  for (int n = 1; n <= 12; ++n)
    for (int k = 2; k <= std::min(4, n + 1); ++k) {
      const auto xmax = static_cast<std::size_t>(tight_x_max(n, k));
      for (std::size_t x : {std::size_t{0}, std::size_t{1}, xmax / 2, xmax}) {
        const BigInt bound = supersat_bound(n, k, x);
        EXPECT_EQ(count_k_chains(build_extremal_family(n, k, x), k).value, bound) << n << "," << k << "," << x;
        EXPECT_EQ(count_k_chains(build_extremal_family(n, k, x, shuffled), k).value, bound);
      }
    }
}

TEST(ExtremalFamily, RejectsBadSelector) {
  RowSelector wrong_level = [](std::span<const Word>, std::size_t x) { return std::vector<Word>(x, 0); };
  EXPECT_THROW(build_extremal_family(4, 2, 1, wrong_level), Error);
  RowSelector too_few = [](std::span<const Word>, std::size_t) { return std::vector<Word>{}; };
  EXPECT_THROW(build_extremal_family(4, 2, 2, too_few), Error);
}

TEST(BoundReportTest, Fields) {
  const auto r = make_bound_report(4, 2, 1);
  EXPECT_EQ(r.sigma_threshold, 6);
  EXPECT_EQ(r.bound_value, 3);
  EXPECT_EQ(r.tight_x_max, 4);
  EXPECT_FALSE(r.achieved_count.has_value());
}
