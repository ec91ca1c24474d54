#include <algorithm>
#include <random>

#include <gtest/gtest.h>

#include "irindex/error.hpp"
#include "irindex/monomial.hpp"
#include "irindex/sample.hpp"
#include "oracle.hpp"

using namespace irindex;
using oracle::ideal;
using oracle::mono;

namespace {

const auto kI = ideal(2, {{2, 0}, {1, 1}, {0, 3}});

TEST(Contains, Examples) {
  EXPECT_TRUE(contains(kI, mono({2, 5})));
  EXPECT_FALSE(contains(kI, mono({0, 2})));
  EXPECT_TRUE(contains(MonomialIdeal::unit(2), mono({0, 0})));
  EXPECT_TRUE(contains(MonomialIdeal::unit(2), mono({3, 1})));
  EXPECT_FALSE(contains(MonomialIdeal::zero(2), mono({0, 0})));
}

TEST(Contains, DimensionMismatchThrows) {
  try {
    (void)contains(kI, mono({1, 1, 1}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DimensionMismatch);
  }
}

TEST(Colon, Examples) {
  EXPECT_EQ(colon(kI, mono({1, 0})), ideal(2, {{1, 0}, {0, 1}}));
  const auto x2 = ideal(2, {{2, 0}});
  EXPECT_EQ(colon(x2, mono({0, 0})), x2);
  EXPECT_TRUE(colon(x2, mono({2, 0})).is_unit());
}

TEST(Colon, MembershipOracle) {
  const auto c = colon(kI, mono({1, 0}));
  const auto g = oracle::gens_of(kI);
  oracle::box(2, 3, [&](const oracle::Exps& v) {
    auto uv = v;
    uv[0] += 1;
    EXPECT_EQ(contains(c, mono(v)), oracle::member(g, uv));
  });
}

TEST(Intersect, Examples) {
  const auto a = ideal(2, {{1, 0}, {0, 3}});
  const auto b = ideal(2, {{2, 0}, {0, 1}});
  const auto expected = ideal(2, {{2, 0}, {1, 1}, {0, 3}});
  EXPECT_EQ(intersect(a, b), expected);
  EXPECT_EQ(intersect(kI, MonomialIdeal::unit(2)), kI);
  EXPECT_EQ(intersect(ideal(2, {{1, 0}}), ideal(2, {{0, 1}})), ideal(2, {{1, 1}}));
}

TEST(Intersect, DoubleMembershipScan) {
  const auto a = ideal(2, {{1, 0}, {0, 3}});
  const auto b = ideal(2, {{2, 0}, {0, 1}});
  const auto i = intersect(a, b);
  oracle::box(2, 4, [&](const oracle::Exps& u) {
    EXPECT_EQ(contains(i, mono(u)), contains(a, mono(u)) && contains(b, mono(u)));
  });
}

TEST(StandardMonomials, Examples) {
  const auto s = standard_monomials(kI);
  const std::set<oracle::Exps> expected{{0, 0}, {1, 0}, {0, 1}, {0, 2}};
  std::set<oracle::Exps> got;
  for (const auto& u : s) got.emplace(u.exponents().begin(), u.exponents().end());
  EXPECT_EQ(got, expected);
  EXPECT_EQ(got, oracle::standard(kI, 4));
  EXPECT_EQ(standard_monomials(ideal(2, {{1, 0}, {0, 1}})).size(), 1u);
  EXPECT_THROW((void)standard_monomials(ideal(2, {{2, 0}})), Error);
}

TEST(FiniteColength, Examples) {
  EXPECT_TRUE(is_finite_colength(kI));
  EXPECT_FALSE(is_finite_colength(ideal(2, {{2, 0}, {1, 1}})));
  EXPECT_TRUE(is_finite_colength(MonomialIdeal::unit(2)));
  EXPECT_TRUE(standard_monomials(MonomialIdeal::unit(2)).empty());
}

TEST(Minimalize, IdempotentAndOrderInsensitive) {
  Sampler s(5);
  std::mt19937_64 shuffle_rng(9);
  for (int trial = 0; trial < 300; ++trial) {
    const auto n = static_cast<std::size_t>(s.between(1, 4));
    std::vector<Monomial> gens;
    for (std::uint64_t j = 0, k = s.between(1, 8); j < k; ++j) gens.push_back(s.monomial(n, 6));
    const auto once = minimalize(n, gens);
    EXPECT_EQ(minimalize(n, once.generators()), once);
    auto shuffled = gens;
    std::shuffle(shuffled.begin(), shuffled.end(), shuffle_rng);
    EXPECT_EQ(minimalize(n, shuffled), once);
  }
}

TEST(Minimalize, MembershipMatchesRawGenerators) {
  Sampler s(6);
  for (int trial = 0; trial < 200; ++trial) {
    const auto n = static_cast<std::size_t>(s.between(1, 3));
    std::vector<oracle::Exps> raw;
    std::vector<Monomial> gens;
    for (std::uint64_t j = 0, k = s.between(1, 6); j < k; ++j) {
      gens.push_back(s.monomial(n, 6));
      raw.emplace_back(gens.back().exponents().begin(), gens.back().exponents().end());
    }
    const auto I = minimalize(n, gens);
    oracle::box(n, 6, [&](const oracle::Exps& u) { ASSERT_EQ(contains(I, mono(u)), oracle::member(raw, u)); });
  }
}

TEST(Intersect, CommutativeAndAssociative) {
  Sampler s(8);
  for (int trial = 0; trial < 200; ++trial) {
    const auto n = static_cast<std::size_t>(s.between(1, 3));
    const auto a = s.ideal(n, 4, 3), b = s.ideal(n, 4, 3), c = s.ideal(n, 4, 3);
    EXPECT_EQ(intersect(a, b), intersect(b, a));
    EXPECT_EQ(intersect(intersect(a, b), c), intersect(a, intersect(b, c)));
  }
}

TEST(StandardMonomials, MonotoneUnderAddingGenerators) {
  Sampler s(10);
  for (int trial = 0; trial < 200; ++trial) {
    const auto n = static_cast<std::size_t>(s.between(1, 3));
    const auto a = s.artinian_ideal(n, 4, 3);
    const auto b = a + MonomialIdeal(n, {s.monomial(n, 4)});
    EXPECT_LE(standard_monomials(b).size(), standard_monomials(a).size());
  }
}

TEST(Monomial, ExponentCapThrows) {
  try {
    (void)mono({1u << 20});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ExponentTooLarge);
    EXPECT_TRUE(e.is_size_cap());
  }
}

TEST(RingContext, NamesAndExtension) {
  const auto r = RingContext::standard(2);
  EXPECT_EQ(r.names(), (std::vector<std::string>{"x", "y"}));
  EXPECT_EQ(RingContext::standard(5).name(4), "x5");
  EXPECT_EQ(r.extend(1).size(), 3u);
  EXPECT_EQ(to_string(kI, r), "(y^3, x*y, x^2)");
  EXPECT_THROW(RingContext({"x", "x"}), Error);
}

}  // namespace
