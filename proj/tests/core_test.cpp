#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "sur/enumerate.hpp"
#include "sur/error.hpp"
#include "sur/io.hpp"
#include "sur/verify.hpp"

namespace sur {
namespace {

IndexSet set_of(std::size_t n, std::vector<int> m) { return IndexSet::from_members(n, std::move(m)); }

TEST(InnerProduct, Examples) {
  EXPECT_EQ(inner_product(set_of(4, {1, 3}), Bicoloring::parse("++--")), 0);
  EXPECT_EQ(inner_product(set_of(4, {1, 2, 3, 4}), Bicoloring::parse("++-+")), 2);
  EXPECT_EQ(inner_product(set_of(4, {2, 4}), Bicoloring::parse("-++-")), 0);
}

TEST(InnerProduct, DimensionMismatch) {
  try {
    inner_product(set_of(4, {1, 2, 3, 4}), Bicoloring::parse("++--+-"));
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDimensionMismatch);
  }
}

TEST(IsUnbiasedRep, Examples) {
  EXPECT_TRUE(is_unbiased_rep(set_of(3, {1, 2}), Bicoloring::parse("+--")));
  EXPECT_FALSE(is_unbiased_rep(set_of(3, {1, 2}), Bicoloring::parse("++-")));
  EXPECT_THROW(is_unbiased_rep(set_of(4, {1, 2, 3, 4}), Bicoloring::parse("++--+-")), Error);
}

TEST(IsUnbiasedRep, NeverForOddOrOversizedSets) {
  std::mt19937_64 gen(7);
  for (int trial = 0; trial < 2000; ++trial) {
    const int n = 2 + static_cast<int>(gen() % 12);
    const std::uint64_t full = (std::uint64_t{1} << n) - 1;
    const std::uint64_t set = gen() & full;
    const std::uint64_t plus = gen() & full;
    if (set == 0) continue;
    auto a = IndexSet::from_members(static_cast<std::size_t>(n), oracle::members_of(set, n));
    auto b = Bicoloring::from_colors(oracle::colors_of(plus, n));
    const auto minority = std::min(b.plus_count(), b.minus_count());
    if (a.size() % 2 == 1 || a.size() > 2 * minority) EXPECT_FALSE(is_unbiased_rep(a, b));
  }
}

// Parity, magnitude and flip antisymmetry against the naive sum.
TEST(InnerProduct, PropertiesAgainstNaiveSum) {
  std::mt19937_64 gen(12345);
  for (int trial = 0; trial < 5000; ++trial) {
    const int n = 1 + static_cast<int>(gen() % 150);
    std::vector<int> colors(static_cast<std::size_t>(n));
    for (auto& c : colors) c = (gen() & 1U) ? 1 : -1;
    std::vector<int> members;
    for (int i = 1; i <= n; ++i) {
      if (gen() % 3 == 0) members.push_back(i);
    }
    auto a = IndexSet::from_members(static_cast<std::size_t>(n), members);
    auto b = Bicoloring::from_colors(colors);
    const long long v = inner_product(a, b);
    ASSERT_EQ(v, oracle::dot(members, colors));
    ASSERT_EQ(((v % 2) + 2) % 2, static_cast<long long>(members.size() % 2));
    ASSERT_LE(std::llabs(v), static_cast<long long>(members.size()));
    ASSERT_EQ(inner_product(a, b.flipped()), -v);
  }
}

TEST(VerifySur, StarOnAllNontrivialOfFour) {
  SurFamily fam(4, {set_of(4, {1, 2}), set_of(4, {1, 3}), set_of(4, {1, 4})});
  auto all = enumerate_nontrivial_bicolorings(4);
  ASSERT_EQ(all.size(), 14u);
  auto cert = verify_sur(fam, all, 0);
  EXPECT_TRUE(cert.all_covered());
  EXPECT_EQ(cert.entries.size(), 14u);
}

TEST(VerifySur, UncoveredAndTolerance) {
  SurFamily fam(4, {set_of(4, {1, 2})});
  BicoloringFamily bs(4, {Bicoloring::parse("++--")});
  auto exact = verify_sur(fam, bs, 0);
  ASSERT_EQ(exact.entries.size(), 1u);
  EXPECT_FALSE(exact.entries[0].has_value());
  EXPECT_EQ(exact.first_uncovered(), std::optional<std::size_t>(0));

  auto loose = verify_sur(fam, bs, 2);
  ASSERT_TRUE(loose.entries[0].has_value());
  EXPECT_EQ(loose.entries[0]->value, 2);
  EXPECT_EQ(loose.entries[0]->set_index, 0u);
}

TEST(VerifySur, RecordsFirstWitness) {
  SurFamily fam(4, {set_of(4, {1, 2}), set_of(4, {1, 3}), set_of(4, {2, 4})});
  BicoloringFamily bs(4, {Bicoloring::parse("+-+-")});
  auto cert = verify_sur(fam, bs, 0);
  ASSERT_TRUE(cert.entries[0]);
  EXPECT_EQ(cert.entries[0]->set_index, 0u);
}

// verify_sur with delta 0 agrees with a naive double loop.
TEST(VerifySur, AgreesWithNaiveDoubleLoop) {
  std::mt19937_64 gen(99);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + static_cast<int>(gen() % 9);
    const std::uint64_t full = (std::uint64_t{1} << n) - 1;
    std::vector<std::uint64_t> sets, plus;
    std::vector<IndexSet> family_sets;
    for (int i = 0; i < 1 + static_cast<int>(gen() % 4); ++i) {
      std::uint64_t s = gen() & full;
      if (s == 0) s = 1;
      sets.push_back(s);
      family_sets.push_back(IndexSet::from_members(static_cast<std::size_t>(n), oracle::members_of(s, n)));
    }
    std::vector<Bicoloring> items;
    for (int i = 0; i < 6; ++i) {
      std::uint64_t p = gen() & full;
      plus.push_back(p);
      items.push_back(Bicoloring::from_colors(oracle::colors_of(p, n)));
    }
    auto cert = verify_sur(SurFamily(static_cast<std::size_t>(n), family_sets),
                           BicoloringFamily(static_cast<std::size_t>(n), items), 0);
    for (std::size_t b = 0; b < plus.size(); ++b) {
      std::optional<std::size_t> first;
      for (std::size_t s = 0; s < sets.size() && !first; ++s) {
        if (oracle::dot(oracle::members_of(sets[s], n), oracle::colors_of(plus[b], n)) == 0) first = s;
      }
      ASSERT_EQ(cert.entries[b].has_value(), first.has_value());
      if (first) ASSERT_EQ(cert.entries[b]->set_index, *first);
    }
  }
}

TEST(Enumerate, KBicolorings) {
  auto f = enumerate_k_bicolorings(3, 1);
  ASSERT_EQ(f.size(), 3u);
  EXPECT_EQ(f.items[0].to_string(), "+--");
  EXPECT_EQ(f.items[1].to_string(), "-+-");
  EXPECT_EQ(f.items[2].to_string(), "--+");
  EXPECT_EQ(enumerate_k_bicolorings(4, 2).size(), 6u);
  for (int n = 1; n <= 10; ++n) {
    for (int k = 0; k <= n; ++k) {
      auto fam = enumerate_k_bicolorings(static_cast<std::size_t>(n), static_cast<std::size_t>(k));
      ASSERT_EQ(fam.size(), oracle::choose(n, k));
      for (std::size_t i = 0; i < fam.size(); ++i) {
        ASSERT_EQ(fam.items[i].plus_count(), static_cast<std::size_t>(k));
        if (i > 0) ASSERT_LT(fam.items[i - 1].plus_members(), fam.items[i].plus_members());
      }
    }
  }
}

TEST(Enumerate, CapExceeded) {
  try {
    enumerate_k_bicolorings(30, 15, 1'000'000);
    FAIL() << "expected cap error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kCapExceeded);
  }
  EXPECT_THROW(enumerate_k_bicolorings(4, 5), Error);
}

TEST(Enumerate, EvenSubsets) {
  EXPECT_EQ(enumerate_even_subsets(4, 2, 4).size(), 7u);
  EXPECT_EQ(enumerate_even_subsets(6, 2, 6).size(), 31u);
  auto pairs = enumerate_even_subsets(4, 2, 2);
  std::vector<std::string> got;
  for (const auto& s : pairs) got.push_back(s.to_string());
  EXPECT_EQ(got, (std::vector<std::string>{"1,2", "1,3", "1,4", "2,3", "2,4", "3,4"}));
  for (int n = 2; n <= 12; ++n) {
    const int top = n % 2 == 0 ? n : n - 1;
    std::uint64_t expect = 0;
    for (int r = 2; r <= top; r += 2) expect += oracle::choose(n, r);
    auto sets = enumerate_even_subsets(static_cast<std::size_t>(n), 2, static_cast<std::size_t>(top));
    ASSERT_EQ(sets.size(), expect);
    for (std::size_t i = 1; i < sets.size(); ++i) ASSERT_TRUE(sets[i - 1] < sets[i]);
  }
  EXPECT_THROW(enumerate_even_subsets(4, 3, 4), Error);
  EXPECT_THROW(enumerate_even_subsets(4, 2, 6), Error);
  EXPECT_THROW(enumerate_even_subsets(40, 2, 40, 1000), Error);
}

TEST(Types, InvariantsAndErrors) {
  EXPECT_THROW(IndexSet::from_members(4, {0, 1}), Error);
  EXPECT_THROW(IndexSet::from_members(4, {5}), Error);
  EXPECT_THROW(IndexSet::from_members(4, {2, 2}), Error);
  EXPECT_EQ(IndexSet::from_members(4, {3, 1}).members(), (std::vector<int>{1, 3}));
  EXPECT_THROW(Bicoloring::parse("+-x"), Error);
  EXPECT_THROW(Bicoloring::from_colors({1, 0}), Error);
  EXPECT_TRUE(Bicoloring::parse("++++").is_trivial());
  EXPECT_TRUE(Bicoloring::parse("----").is_trivial());
  EXPECT_FALSE(Bicoloring::parse("+---").is_trivial());

  SurFamily odd(4, {set_of(4, {1, 2, 3})});
  EXPECT_FALSE(odd.has_exact_shape());
  SurFamily dup(4, {set_of(4, {1, 2}), set_of(4, {2, 1})});
  EXPECT_FALSE(dup.has_exact_shape());
  EXPECT_THROW(SurFamily(4, {IndexSet::from_members(4, {})}), Error);
}

TEST(Io, BicoloringTextFormat) {
  auto fam = io::parse_bicolorings("4\n++--\n# comment\n\n-++-\n");
  ASSERT_EQ(fam.size(), 2u);
  EXPECT_EQ(fam.items[1].to_string(), "-++-");
  EXPECT_EQ(io::format_bicolorings(fam), "4\n++--\n-++-\n");
  try {
    io::parse_bicolorings("4\n++++\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kTrivialBicoloring);
  }
  EXPECT_THROW(io::parse_bicolorings("4\n++-\n"), Error);
  EXPECT_THROW(io::parse_bicolorings("x\n"), Error);
}

TEST(Io, FamilyFormats) {
  auto text = io::parse_family("4\n1,2\n3, 4\n");
  ASSERT_EQ(text.size(), 2u);
  EXPECT_EQ(text.sets[1].members(), (std::vector<int>{3, 4}));
  auto j = io::to_json(text);
  EXPECT_EQ(j.dump(), R"({"n":4,"sets":[{"members":[1,2],"n":4},{"members":[3,4],"n":4}]})");
  auto back = io::parse_family(j.dump());
  EXPECT_EQ(back.sets, text.sets);
  nlohmann::json record{{"command", "construct"}, {"outputs", {{"family", j}}}};
  EXPECT_EQ(io::parse_family(record.dump()).sets, text.sets);
  EXPECT_EQ(io::to_json(Bicoloring::parse("+-")).dump(), R"({"colors":[1,-1],"n":2})");
}

// Text and structured forms invert each other on random families.
TEST(Io, RoundTripProperty) {
  std::mt19937_64 gen(3);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(gen() % 40);
    std::vector<IndexSet> sets;
    std::vector<Bicoloring> items;
    for (int i = 0; i < 5; ++i) {
      std::vector<int> m;
      for (int e = 1; e <= n; ++e) {
        if (gen() % 4 == 0) m.push_back(e);
      }
      if (m.empty()) m.push_back(1);
      sets.push_back(IndexSet::from_members(static_cast<std::size_t>(n), m));
      std::vector<int> c(static_cast<std::size_t>(n), -1);
      c[0] = 1;
      for (int e = 1; e + 1 < n; ++e) c[static_cast<std::size_t>(e)] = (gen() & 1U) ? 1 : -1;
      items.push_back(Bicoloring::from_colors(c));
    }
    SurFamily fam(static_cast<std::size_t>(n), sets);
    ASSERT_EQ(io::parse_family(io::format_family_text(fam)).sets, fam.sets);
    ASSERT_EQ(io::family_from_json(io::to_json(fam)).sets, fam.sets);
    BicoloringFamily bs(static_cast<std::size_t>(n), items);
    auto parsed = io::parse_bicolorings(io::format_bicolorings(bs));
    ASSERT_EQ(parsed.items, bs.items);
    for (const auto& b : items) ASSERT_EQ(io::bicoloring_from_json(io::to_json(b)), b);
  }
}

}  // namespace
}  // namespace sur
