#include "lcd/covers.hpp"

#include <random>
#include <set>

#include <gtest/gtest.h>

#include "lcd/equivalence.hpp"
#include "support/golden.hpp"
#include "support/oracles.hpp"

namespace lcd {
namespace {

std::uint64_t points(std::initializer_list<int> ps) {
  std::uint64_t s = 0;
  for (int p : ps) s |= std::uint64_t{1} << (p - 1);
  return s;
}

// Orbits of k-covers under set and point permutations, by taking the least
// image of each cover over the whole group.
std::uint64_t brute_cover_orbits(int m, int k) {
  std::vector<int> point_perm(m);
  std::set<std::vector<std::uint64_t>> reps;
  const std::uint64_t per_set = std::uint64_t{1} << m;
  std::vector<std::uint64_t> sets(k, 0);
  std::uint64_t total = 1;
  for (int i = 0; i < k; ++i) total *= per_set;
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t rest = code, all = 0;
    for (int i = 0; i < k; ++i) {
      sets[i] = rest % per_set;
      rest /= per_set;
      all |= sets[i];
    }
    if (all != low_mask(m)) continue;
    std::vector<std::uint64_t> best;
    std::iota(point_perm.begin(), point_perm.end(), 0);
    do {
      std::vector<std::uint64_t> moved(k);
      for (int i = 0; i < k; ++i) moved[i] = oracle::permute_word(sets[i], point_perm);
      std::sort(moved.begin(), moved.end());
      if (best.empty() || moved < best) best = moved;
    } while (std::next_permutation(point_perm.begin(), point_perm.end()));
    reps.insert(best);
  }
  return reps.size();
}

TEST(CoverCode, LengthFourExample) {
  const KCover y{1, {points({1}), points({1})}};
  EXPECT_EQ(cover_code(y).generator(), BinaryMatrix::parse({"1011", "0111"}));
}

TEST(CoverCode, LengthNineExample) {
  const KCover y{3, {points({1, 2, 3}), points({1, 3}), points({1, 2})}};
  EXPECT_EQ(cover_code(y).generator(),
            BinaryMatrix::parse({"100111111", "010101101", "001110110"}));
}

TEST(CoverCode, Errors) {
  const KCover y{2, {points({1}), points({2})}};
  EXPECT_THROW(cover_code(y, 3), std::invalid_argument);
  EXPECT_THROW(cover_code(y, 0), std::invalid_argument);
  EXPECT_THROW(cover_code(KCover{2, {points({1})}}), std::invalid_argument);
  EXPECT_THROW(cover_code(KCover{40, {low_mask(40)}}, 2), std::invalid_argument);
  EXPECT_NO_THROW(cover_code(KCover{2, {points({1, 2}), 0}}));
}

TEST(CoverCode, LcdWithDualDistanceTwo) {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 200; ++trial) {
    const int ell = trial % 4 == 3 ? 4 : 2;
    const KCover y = oracle::random_cover(rng, 1 + rng() % 6, 1 + rng() % 5);
    const LinearCode c = cover_code(y, ell);
    EXPECT_EQ(c.length(), ell * y.m + y.k());
    EXPECT_EQ(c.dimension(), y.k());
    EXPECT_TRUE(is_lcd(c));
    EXPECT_EQ(min_weight(dual(c)), 2);
    EXPECT_TRUE(dual_min_weight_at_least(c, 2));
    EXPECT_FALSE(dual_min_weight_at_least(c, 3));
  }
}

TEST(CoverCode, InvariantUnderSetAndPointPermutations) {
  std::mt19937_64 rng(52);
  for (int trial = 0; trial < 100; ++trial) {
    const int m = 1 + rng() % 5;
    const int k = 1 + rng() % 4;
    const KCover y = oracle::random_cover(rng, m, k);
    KCover moved{m, y.sets};
    std::shuffle(moved.sets.begin(), moved.sets.end(), rng);
    const std::vector<int> perm = oracle::random_permutation(rng, m);
    for (auto& s : moved.sets) s = oracle::permute_word(s, perm);
    EXPECT_TRUE(are_equivalent(cover_code(y), cover_code(moved)));
  }
}

TEST(CoverCodeExtended, LengthFiveExample) {
  const KCover y{1, {points({1}), points({1})}};
  const LinearCode c = cover_code_extended(y);
  EXPECT_EQ(c.generator(), BinaryMatrix::parse({"10111", "01111"}));
  EXPECT_TRUE(is_lcd(c));
}

TEST(CoverCodeExtended, LengthEightExample) {
  const KCover y{2, {points({1, 2}), points({1, 2}), points({1})}};
  EXPECT_EQ(cover_code_extended(y).generator(),
            BinaryMatrix::parse({"10011110", "01011111", "00110101"}));
}

TEST(CoverCodeExtended, GramMatrices) {
  std::mt19937_64 rng(53);
  const BinaryMatrix two = BinaryMatrix::parse({"01", "10"});
  const BinaryMatrix three = BinaryMatrix::parse({"100", "001", "010"});
  for (int trial = 0; trial < 100; ++trial) {
    const int k = 2 + trial % 2;
    const LinearCode c = cover_code_extended(oracle::random_cover(rng, 1 + rng() % 6, k));
    const BinaryMatrix& g = c.generator();
    EXPECT_EQ(mat_mul(g, g.transpose()), k == 2 ? two : three);
    EXPECT_TRUE(is_lcd(c));
  }
  EXPECT_THROW(cover_code_extended(KCover{1, {1, 1, 1, 1}}), std::invalid_argument);
}

TEST(DisorderedCovers, PublishedCounts) {
  EXPECT_EQ(count_disordered_covers(1, 4), 4U);
  EXPECT_EQ(count_disordered_covers(1, 3), 3U);
  EXPECT_EQ(count_disordered_covers(2, 3), 9U);
  EXPECT_EQ(count_disordered_covers(3, 3), 23U);
  EXPECT_EQ(count_disordered_covers(5, 3), 103U);
  EXPECT_EQ(count_disordered_covers(1, 1), 1U);
}

TEST(DisorderedCovers, MatchBruteForceOrbits) {
  for (int m = 1; m <= 4; ++m) {
    for (int k = 1; k <= 3; ++k) {
      EXPECT_EQ(count_disordered_covers(m, k), brute_cover_orbits(m, k)) << m << "," << k;
    }
  }
  EXPECT_EQ(count_disordered_covers(2, 4), brute_cover_orbits(2, 4));
}

TEST(DisorderedCovers, EnumerationIsValidAndMatchesCount) {
  for (int m = 1; m <= 4; ++m) {
    for (int k = 1; k <= 4; ++k) {
      const auto covers = enumerate_disordered_covers(m, k);
      EXPECT_EQ(covers.size(), count_disordered_covers(m, k));
      for (const auto& y : covers) {
        EXPECT_NO_THROW(y.validate());
        EXPECT_EQ(y.k(), k);
      }
    }
  }
  EXPECT_THROW(enumerate_disordered_covers(0, 2), std::invalid_argument);
}

TEST(DimensionTwo, Examples) {
  const LinearCode c = code_dim2({1, 0, 1, 1});
  EXPECT_EQ(c.length(), 7);
  EXPECT_EQ(c.dimension(), 2);
  EXPECT_EQ(min_weight(c), 4);
  EXPECT_EQ(code_dim2({0, 0, 0, 0}).generator(), BinaryMatrix::identity(2));
  EXPECT_EQ(we_formula_dim2({0, 0, 0, 0}), make_weight_enumerator(2, {{0, 1}, {1, 2}, {2, 1}}));
  EXPECT_THROW(code_dim2({-1, 0, 0, 0}), std::invalid_argument);
  EXPECT_THROW(code_dim2({0, 0, 0, 2}), std::invalid_argument);
}

TEST(DimensionTwo, ClosedFormsAtT) {
  for (int t = 1; t <= 4; ++t) {
    EXPECT_EQ(we_formula_dim2({t - 1, t, t, 0}),
              make_weight_enumerator(6 * t, {{0, 1}, {4 * t - 1, 2}, {4 * t + 2, 1}}));
    EXPECT_EQ(we_formula_dim2({t, t, t + 1, 1}),
              make_weight_enumerator(6 * t + 5, {{0, 1}, {4 * t + 2, 1}, {4 * t + 4, 2}}));
  }
}

TEST(DimensionTwo, FormulaMatchesSweep) {
  for (int a = 0; a <= 9; ++a) {
    for (int b = 0; a + b <= 9; ++b) {
      for (int c = 0; a + b + c <= 9; ++c) {
        for (int delta = 0; delta <= 1; ++delta) {
          const Dim2Params p{a, b, c, delta};
          EXPECT_EQ(weight_enumerator(code_dim2(p)), we_formula_dim2(p));
          EXPECT_TRUE(is_lcd(code_dim2(p)));
        }
      }
    }
  }
}

TEST(DimensionThree, Examples) {
  const Dim3Params zero{};
  EXPECT_EQ(code_dim3(zero).generator(), BinaryMatrix::identity(3));
  EXPECT_EQ(we_formula_dim3(zero), make_weight_enumerator(3, {{0, 1}, {1, 3}, {2, 3}, {3, 1}}));
  const LinearCode six = code_dim3({1, 0, 0, 0, 0, 0, 0, 1});
  EXPECT_EQ(six.length(), 6);
  EXPECT_EQ(weight_enumerator(six),
            make_weight_enumerator(6, {{0, 1}, {2, 1}, {3, 3}, {4, 2}, {5, 1}}));
  EXPECT_THROW(code_dim3_raw({1, 0, 0, 0, 0, 0, 0, 0}), std::invalid_argument);
}

TEST(DimensionThree, PublishedFamilies) {
  for (int t = 0; t <= 3; ++t) {
    for (const auto& fam : golden::dim3_families(t)) {
      const LinearCode c = code_dim3(fam.params);
      EXPECT_EQ(c.length(), fam.length);
      EXPECT_TRUE(is_lcd(c));
      const WeightEnumerator expected = make_weight_enumerator(fam.length, fam.we);
      EXPECT_EQ(weight_enumerator(c), expected) << "t=" << t << " n=" << fam.length;
      EXPECT_EQ(we_formula_dim3(fam.params), expected);
    }
  }
}

TEST(DimensionThree, FormulaMatchesSweepUpToLengthTwenty) {
  int checked = 0;
  for (int delta = 0; delta <= 1; ++delta) {
    const int budget = (20 - 3 - delta) / 2;
    std::vector<int> v(7, 0);
    auto rec = [&](auto&& self, int i, int left) -> void {
      if (i == 7) {
        const Dim3Params p{v[0], v[1], v[2], v[3], v[4], v[5], v[6], delta};
        ASSERT_EQ(weight_enumerator(code_dim3(p)), we_formula_dim3(p));
        ++checked;
        return;
      }
      for (int x = 0; x <= left; ++x) {
        v[i] = x;
        self(self, i + 1, left - x);
      }
    };
    rec(rec, 0, budget);
  }
  EXPECT_GT(checked, 10000);
}

TEST(DimensionThree, DoubledBlockIdentities) {
  std::mt19937_64 rng(54);
  for (int trial = 0; trial < 100; ++trial) {
    int v[7];
    for (int& x : v) x = rng() % 3;
    const int delta = trial % 2;
    const Dim3Params p{v[0], v[1], v[2], v[3], v[4], v[5], v[6], delta};
    const Dim3Params raw{2 * v[0],     2 * v[1] + 1, 2 * v[2] + 1, 2 * v[3] + 1,
                         2 * v[4] + delta, 2 * v[5], 2 * v[6], 0};
    EXPECT_TRUE(are_equivalent(code_dim3(p), code_dim3_raw(raw)));
  }
}

TEST(Solvers, DimensionTwoSets) {
  for (int n = 4; n <= 23; ++n) {
    if (n == 5) continue;  // the four-tuple case needs t >= 1
    std::vector<Dim2Params> got = solve_params_dim2(n);
    std::vector<Dim2Params> want = golden::dim2_solutions(n);
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    EXPECT_EQ(got, want) << "n=" << n;
  }
  EXPECT_THROW(solve_params_dim2(3), std::invalid_argument);
}

TEST(Solvers, DimensionThreeSets) {
  for (int t = 0; t <= 3; ++t) {
    for (const auto& cs : golden::dim3_cases(t)) {
      std::vector<Dim3Params> got = solve_params_dim3(cs.n, cs.alpha);
      std::sort(got.begin(), got.end());
      EXPECT_EQ(got, cs.solutions) << "n=" << cs.n << " alpha=" << cs.alpha;
    }
  }
}

TEST(Solvers, PrunedScanEqualsExhaustive) {
  for (int n = 5; n <= 40; ++n) {
    for (int alpha = std::max(1, 4 * n / 7 - 3); alpha <= 4 * n / 7 + 1; ++alpha) {
      std::vector<Dim3Params> pruned = solve_params_dim3(n, alpha);
      std::vector<Dim3Params> full = solve_params_dim3_exhaustive(n, alpha);
      std::sort(pruned.begin(), pruned.end());
      std::sort(full.begin(), full.end());
      EXPECT_EQ(pruned, full) << n << "," << alpha;
    }
  }
}

TEST(Solvers, SolutionsMeetTheDistance) {
  for (int n = 5; n <= 30; ++n) {
    const int alpha = 4 * n / 7 - 1;
    for (const auto& p : solve_params_dim3(n, alpha)) {
      const LinearCode c = code_dim3(p);
      EXPECT_EQ(c.length(), n);
      EXPECT_GE(min_weight(c), alpha);
    }
  }
}

TEST(FamilyEquivalences, DimensionTwoSwaps) {
  for (int a = 0; a <= 2; ++a) {
    for (int b = 0; b <= 2; ++b) {
      for (int c = 0; c <= 2; ++c) {
        for (int delta = 0; delta <= 1; ++delta) {
          EXPECT_TRUE(are_equivalent(code_dim2({a, b, c, delta}), code_dim2({a, c, b, delta})));
        }
        EXPECT_TRUE(are_equivalent(code_dim2({a, b, c, 1}), code_dim2({b, a, c, 1})));
        EXPECT_TRUE(are_equivalent(code_dim2({a, b, c, 1}), code_dim2({c, b, a, 1})));
      }
    }
  }
}

TEST(FamilyEquivalences, DimensionThreeSymmetries) {
  std::mt19937_64 rng(55);
  for (int trial = 0; trial < 60; ++trial) {
    int v[7];
    for (int& x : v) x = rng() % 3;
    const auto [a, b, c, d, e, f, g] = v;
    const LinearCode c0 = code_dim3({a, b, c, d, e, f, g, 0});
    for (const Dim3Params& q : {Dim3Params{a, b, d, c, e, g, f, 0}, Dim3Params{a, c, b, d, f, e, g, 0},
                                Dim3Params{a, c, d, b, f, g, e, 0}, Dim3Params{a, d, b, c, g, e, f, 0},
                                Dim3Params{a, d, c, b, g, f, e, 0}}) {
      EXPECT_TRUE(are_equivalent(c0, code_dim3(q)));
    }
    EXPECT_TRUE(are_equivalent(code_dim3({a, b, c, d, e, f, g, 1}),
                               code_dim3({a, b, d, c, e, g, f, 1})));
  }
}

TEST(FamilyEquivalences, RawBlockIdentities) {
  for (int t = 1; t <= 2; ++t) {
    const int s = 2 * t;
    EXPECT_TRUE(are_equivalent(code_dim3_raw({s, s - 1, s + 1, s + 1, s - 1, s, s, 0}),
                               code_dim3_raw({s, s - 1, s - 1, s + 1, s + 1, s, s, 0})));
    EXPECT_TRUE(are_equivalent(code_dim3_raw({s, s + 1, s - 1, s + 1, s + 1, s, s, 0}),
                               code_dim3_raw({s, s + 1, s + 1, s + 1, s - 1, s, s, 0})));
  }
}

// Canonical keys of all LCD [n,k] codes with no zero coordinate.
std::set<CodeKey> lcd_full_support_keys(int n, int k) {
  std::set<CodeKey> keys;
  oracle::for_each_subspace(n, k, [&](const oracle::Rows& rows) {
    std::uint64_t support = 0;
    for (auto r : rows) support |= r;
    if (support != low_mask(n)) return;
    const LinearCode c{BinaryMatrix(n, rows)};
    if (is_lcd(c)) keys.insert(canonical_key(c));
  });
  return keys;
}

TEST(CoverRepresentation, EveryShapeArisesFromACover) {
  struct Shape {
    int k;
    bool extended;
    int m_max;
  };
  for (const Shape s : {Shape{2, false, 3}, Shape{2, true, 3}, Shape{3, false, 2}, Shape{3, true, 2}}) {
    for (int m = 1; m <= s.m_max; ++m) {
      const int n = 2 * m + s.k + (s.extended ? 1 : 0);
      std::set<CodeKey> from_covers;
      // Labelled covers, so this does not lean on the orderly enumeration.
      const std::uint64_t per_set = std::uint64_t{1} << m;
      std::uint64_t total = 1;
      for (int i = 0; i < s.k; ++i) total *= per_set;
      for (std::uint64_t code = 0; code < total; ++code) {
        KCover y{m, std::vector<std::uint64_t>(s.k)};
        std::uint64_t rest = code, all = 0;
        for (auto& set : y.sets) {
          set = rest % per_set;
          rest /= per_set;
          all |= set;
        }
        if (all != low_mask(m)) continue;
        from_covers.insert(canonical_key(s.extended ? cover_code_extended(y) : cover_code(y)));
      }
      // Cover codes are themselves LCD with full support, so the sets agree.
      EXPECT_EQ(from_covers, lcd_full_support_keys(n, s.k)) << "k=" << s.k << " n=" << n;
    }
  }
}

}  // namespace
}  // namespace lcd
