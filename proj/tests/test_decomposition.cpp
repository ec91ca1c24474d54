#include <set>

#include <gtest/gtest.h>

#include "irindex/bass.hpp"
#include "irindex/decomposition.hpp"
#include "irindex/error.hpp"
#include "irindex/sample.hpp"
#include "oracle.hpp"

using namespace irindex;
using oracle::ideal;

namespace {

std::vector<std::vector<Exponent>> bounds_of(const Decomposition& d) {
  std::vector<std::vector<Exponent>> out;
  for (const auto& c : d.components()) out.emplace_back(c.bounds().begin(), c.bounds().end());
  std::sort(out.begin(), out.end());
  return out;
}

TEST(Decompose, Staircase) {
  const auto I = ideal(2, {{2, 0}, {1, 1}, {0, 3}});
  const auto d = decompose(I);
  const std::vector<std::vector<Exponent>> expected{{1, 3}, {2, 1}};
  EXPECT_EQ(bounds_of(d), expected);
  // (x^2, y) ∩ (x, y^3) by membership up to exponent 4.
  EXPECT_TRUE(oracle::agree_on_box(intersect_all(d.components(), 2), I, 4));
  EXPECT_EQ(reducibility_index_by_decomposition(I), 2u);
}

TEST(Decompose, AlreadyIrreducible) {
  const auto d = decompose(ideal(2, {{3, 0}}));
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(bounds_of(d).front(), (std::vector<Exponent>{3, 0}));
  EXPECT_EQ(reducibility_index_by_decomposition(ideal(2, {{1, 0}})), 1u);
}

TEST(Decompose, EmbeddedPrime) {
  const auto I = ideal(2, {{2, 0}, {1, 1}});
  const auto d = decompose(I);
  const std::vector<std::vector<Exponent>> expected{{1, 0}, {2, 1}};
  EXPECT_EQ(bounds_of(d), expected);
  EXPECT_EQ(intersect(ideal(2, {{1, 0}}), ideal(2, {{2, 0}, {0, 1}})), I);
}

TEST(Decompose, ZeroIdealIsDomainCase) {
  const auto d = decompose(MonomialIdeal::zero(3));
  EXPECT_TRUE(d.is_domain_case());
  EXPECT_EQ(d.size(), 1u);
}

TEST(Decompose, UnitIdealThrows) {
  try {
    (void)decompose(MonomialIdeal::unit(2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnitIdeal);
  }
}

TEST(Irredundant, RejectsCandidatesThatMissTheIdeal) {
  const auto I = ideal(2, {{2, 0}, {1, 1}, {0, 3}});
  try {
    (void)irredundant({IrreducibleComponent({1, 1})}, I);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidCandidates);
  }
}

TEST(Irredundant, DropsRedundantComponents) {
  const auto I = ideal(2, {{2, 0}, {1, 1}, {0, 3}});
  const auto d = irredundant({IrreducibleComponent({2, 1}), IrreducibleComponent({1, 3}),
                              IrreducibleComponent({1, 2})},
                             I);
  EXPECT_EQ(d.size(), 2u);
}

class DecomposeProperties : public ::testing::Test {
 protected:
  static std::vector<MonomialIdeal> sample() {
    auto s = random_ideals(17, 400, 3, 4, 5);
    for (auto& I : all_ideals_in_box(2, 2)) s.push_back(std::move(I));
    return s;
  }
};

TEST_F(DecomposeProperties, SoundAndIrredundant) {
  for (const auto& I : sample()) {
    const auto d = decompose(I);
    const auto& cs = d.components();
    ASSERT_TRUE(oracle::agree_on_box(intersect_all(cs, I.nvars()), I, 5)) << to_string(I, RingContext::standard(I.nvars()));
    if (cs.size() < 2) continue;
    for (std::size_t skip = 0; skip < cs.size(); ++skip) {
      std::vector<IrreducibleComponent> rest;
      for (std::size_t j = 0; j < cs.size(); ++j) {
        if (j != skip) rest.push_back(cs[j]);
      }
      EXPECT_NE(intersect_all(rest, I.nvars()), I);
    }
  }
}

TEST_F(DecomposeProperties, AtLeastOneComponentPerAssociatedPrime) {
  for (const auto& I : sample()) {
    const auto d = decompose(I);
    std::set<std::vector<std::size_t>> supports;
    for (const auto& c : d.components()) supports.insert(c.support());
    EXPECT_GE(d.size(), supports.size());
    EXPECT_EQ(supports.size(), associated_primes(I).size());
  }
}

TEST_F(DecomposeProperties, StrategiesAgree) {
  std::uint64_t seed = 0;
  for (const auto& I : sample()) {
    const auto a = decompose(I, SplitStrategy::first());
    EXPECT_EQ(a, decompose(I, SplitStrategy::last()));
    EXPECT_EQ(a, decompose(I, SplitStrategy::random(++seed)));
  }
}

// Finite colength: component m^a matches socle monomial a - 1.
TEST(Decompose, ComponentsMatchSocleCorners) {
  for (const auto& I : random_artinian_ideals(23, 200, 3, 4, 4)) {
    std::set<oracle::Exps> corners;
    const auto d = decompose(I);
    for (const auto& c : d.components()) {
      oracle::Exps u;
      for (auto a : c.bounds()) u.push_back(a - 1);
      corners.insert(u);
    }
    EXPECT_EQ(corners, oracle::socle(I, 5));
  }
}

}  // namespace
