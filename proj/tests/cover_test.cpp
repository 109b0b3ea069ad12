#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "sur/cover.hpp"
#include "sur/enumerate.hpp"
#include "sur/error.hpp"
#include "sur/verify.hpp"

namespace sur {
namespace {

bool valid(int n, int k, int r) { return r % 2 == 0 && r >= 2 && r <= n && r <= 2 * k && k <= n && k - r / 2 <= n - r; }

TEST(CoverDegrees, Examples) {
  EXPECT_EQ(cover_degree_a(6, 3, 2), 12);
  EXPECT_EQ(cover_degree_a(4, 2, 4), 6);
  EXPECT_EQ(cover_degree_a(6, 1, 4), 0);
  EXPECT_EQ(cover_degree_v(6, 3, 2), 9);
  EXPECT_EQ(cover_degree_v(4, 2, 4), 1);
  EXPECT_EQ(cover_degree_v(6, 3, 8), 0);
}

// a and v against incidence counts of the explicit instance.
TEST(CoverDegrees, MatchIncidenceCounts) {
  for (int n = 2; n <= 7; ++n) {
    for (int k = 1; k < n; ++k) {
      for (int r = 2; r <= n; r += 2) {
        if (!valid(n, k, r)) continue;
        auto inst = CoverInstance::build(static_cast<std::size_t>(n), static_cast<std::size_t>(k),
                                         static_cast<std::size_t>(r));
        ASSERT_EQ(inst.points().size(), oracle::choose(n, k));
        ASSERT_EQ(inst.sets().size(), oracle::choose(n, r));
        for (std::size_t s = 0; s < inst.sets().size(); ++s) {
          std::uint64_t deg = 0;
          for (std::size_t p = 0; p < inst.points().size(); ++p) deg += inst.covers(s, p) ? 1 : 0;
          ASSERT_EQ(BigInt(deg), cover_degree_a(n, k, r));
        }
        for (std::size_t p = 0; p < inst.points().size(); ++p) {
          std::uint64_t deg = 0;
          for (std::size_t s = 0; s < inst.sets().size(); ++s) deg += inst.covers(s, p) ? 1 : 0;
          ASSERT_EQ(BigInt(deg), cover_degree_v(n, k, r));
        }
      }
    }
  }
}

TEST(CoverInstance, RejectsBadParameters) {
  EXPECT_THROW(CoverInstance::build(6, 1, 4), Error);
  EXPECT_THROW(CoverInstance::build(6, 3, 3), Error);
}

TEST(DoubleCounting, Examples) {
  EXPECT_TRUE(double_counting_check(6, 3, 2));
  EXPECT_EQ(binomial(6, 3) * cover_degree_v(6, 3, 2), 180);
  EXPECT_TRUE(double_counting_check(8, 4, 4));
  EXPECT_TRUE(double_counting_check(10, 3, 4));
}

TEST(AveragingLowerBound, Examples) {
  EXPECT_EQ(averaging_lower_bound(6, 3, 2), BigInt(2));
  EXPECT_EQ(averaging_lower_bound(6, 1, 2), BigInt(3));
  EXPECT_EQ(averaging_lower_bound(8, 2, 4), BigInt(5));
  EXPECT_FALSE(averaging_lower_bound(6, 1, 4).has_value());
}

// ceil(C(n,k)/C(2k,k)) for r = 2k, from Pascal's triangle.
TEST(AveragingLowerBound, FullSizeRepresentatives) {
  for (int n = 2; n <= 30; ++n) {
    for (int k = 1; 2 * k <= n; ++k) {
      const std::uint64_t num = oracle::choose(n, k), den = oracle::choose(2 * k, k);
      ASSERT_EQ(averaging_lower_bound(n, k, 2 * k), BigInt((num + den - 1) / den));
    }
  }
}

TEST(Nkr1LowerBound, Examples) {
  EXPECT_EQ(nkr1_lower_bound(8, 2, 2), 3);
  EXPECT_EQ(nkr1_lower_bound(8, 4, 4), 1);
  EXPECT_EQ(nkr1_lower_bound(100, 10, 2), 45);
}

TEST(LovaszStein, Examples) {
  auto b = lovasz_stein_bound(6, 3, 2);
  ASSERT_TRUE(b);
  EXPECT_NEAR(*b, 15.0 / 9.0 * (1.0 + std::log(12.0)), 1e-4);
  auto c = lovasz_stein_bound(4, 2, 4);
  ASSERT_TRUE(c);
  EXPECT_NEAR(*c, 1.0 + std::log(6.0), 1e-5);
  EXPECT_DOUBLE_EQ(*c, 2.79176);
  EXPECT_FALSE(lovasz_stein_bound(6, 1, 4).has_value());
}

TEST(LovaszStein, LargeParametersStayFinite) {
  auto b = lovasz_stein_bound(2000, 1000, 1000);
  ASSERT_TRUE(b);
  EXPECT_TRUE(std::isfinite(*b));
  EXPECT_GT(*b, 1.0);
}

TEST(BoundsReport, CombinedLower) {
  auto rep = compute_bounds(6, 3, 2);
  EXPECT_EQ(rep.a, 12);
  EXPECT_EQ(rep.v, 9);
  ASSERT_TRUE(rep.combined_lower);
  EXPECT_EQ(*rep.combined_lower, 2);
  auto rep2 = compute_bounds(8, 2, 2);
  EXPECT_EQ(*rep2.combined_lower, 3);
  EXPECT_EQ(*rep2.averaging_lower, 3);
  auto bad = compute_bounds(6, 1, 4);
  EXPECT_FALSE(bad.feasible());
  EXPECT_FALSE(bad.combined_lower);
}

TEST(GreedyCover, Examples) {
  auto full = greedy_cover(4, 2, 4);
  ASSERT_EQ(full.size(), 1u);
  EXPECT_EQ(full.sets[0].to_string(), "1,2,3,4");

  auto mid = greedy_cover(6, 3, 2);
  EXPECT_GE(mid.size(), 2u);
  EXPECT_LE(mid.size(), 5u);
  EXPECT_TRUE(verify_sur(mid, enumerate_k_bicolorings(6, 3), 0).all_covered());

  auto singles = greedy_cover(6, 1, 2);
  EXPECT_EQ(singles.size(), 3u);
  EXPECT_THROW(greedy_cover(6, 1, 4), Error);
}

// Lazy evaluation must reproduce the eager rule: at each step the chosen set
// has maximal fresh gain and is lexicographically first among the maxima.
TEST(GreedyCover, MatchesEagerGreedy) {
  for (int n = 4; n <= 9; ++n) {
    for (int k = 1; k < n; ++k) {
      for (int r = 2; r <= n; r += 2) {
        if (!valid(n, k, r)) continue;
        auto fam = greedy_cover(static_cast<std::size_t>(n), static_cast<std::size_t>(k),
                                static_cast<std::size_t>(r));
        auto points = oracle::masks_with_popcount(n, k);
        // Candidates in lexicographic order of member lists.
        std::vector<std::vector<int>> cands;
        for (auto m : oracle::masks_with_popcount(n, r)) cands.push_back(oracle::members_of(m, n));
        std::sort(cands.begin(), cands.end());
        std::vector<bool> covered(points.size(), false);
        for (const auto& chosen : fam.sets) {
          std::size_t best_gain = 0;
          std::vector<int> best;
          for (const auto& c : cands) {
            std::size_t g = 0;
            for (std::size_t p = 0; p < points.size(); ++p) {
              if (!covered[p] && oracle::dot(c, oracle::colors_of(points[p], n)) == 0) ++g;
            }
            if (g > best_gain) {
              best_gain = g;
              best = c;
            }
          }
          ASSERT_EQ(chosen.members(), best) << n << " " << k << " " << r;
          for (std::size_t p = 0; p < points.size(); ++p) {
            if (oracle::dot(best, oracle::colors_of(points[p], n)) == 0) covered[p] = true;
          }
        }
        for (bool c : covered) ASSERT_TRUE(c);
      }
    }
  }
}

TEST(VPair, FormulaExamples) {
  EXPECT_EQ(v_pair_formula(6, 2, 4, 1), 3);
  EXPECT_EQ(v_pair_formula(6, 2, 4, 0), 1);
  for (int n = 4; n <= 20; ++n) {
    for (int k = 1; 2 * k <= n; ++k) {
      ASSERT_EQ(v_pair_formula(n, k, 2 * k, k - 1), BigInt(oracle::choose(n - k - 1, k - 1)));
    }
  }
}

TEST(VPair, BruteForceExamples) {
  auto b = Bicoloring::from_plus_set(6, {1, 2});
  EXPECT_EQ(v_pair_bruteforce(b, Bicoloring::from_plus_set(6, {1, 3}), 4), 3u);
  EXPECT_EQ(v_pair_bruteforce(b, Bicoloring::from_plus_set(6, {3, 4}), 4), 1u);
  EXPECT_THROW(v_pair_bruteforce(b, b, 4), Error);
}

TEST(VPair, FormulaMatchesBruteForceUpToSeven) {
  for (int n = 2; n <= 7; ++n) {
    for (int k = 1; k < n; ++k) {
      auto fam = enumerate_k_bicolorings(static_cast<std::size_t>(n), static_cast<std::size_t>(k));
      for (int r = 2; r <= std::min(n, 2 * k); r += 2) {
        for (std::size_t i = 0; i < fam.size(); ++i) {
          for (std::size_t j = i + 1; j < fam.size(); ++j) {
            const auto x = static_cast<long long>(fam.items[i].plus_bits().count_and(fam.items[j].plus_bits()));
            ASSERT_EQ(BigInt(v_pair_bruteforce(fam.items[i], fam.items[j], static_cast<std::size_t>(r))),
                      v_pair_formula(n, k, r, x));
          }
        }
      }
    }
  }
}

TEST(VPair, RatioIdentity) {
  for (long long n = 2; n <= 40; ++n) {
    for (long long k = 1; 2 * k <= n; ++k) {
      ASSERT_EQ(v_pair_ratio(n, k), Rational(2 * k, 2 * (n - k)));
    }
  }
  EXPECT_THROW(v_pair_ratio(6, 4), Error);
}

}  // namespace
}  // namespace sur
