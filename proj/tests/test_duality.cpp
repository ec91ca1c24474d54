#include <gtest/gtest.h>

#include "irindex/bass.hpp"
#include "irindex/decomposition.hpp"
#include "irindex/duality.hpp"
#include "irindex/error.hpp"
#include "irindex/sample.hpp"
#include "oracle.hpp"

using namespace irindex;
using oracle::ideal;
using oracle::mono;

namespace {

const auto kStair = ideal(2, {{2, 0}, {1, 1}, {0, 3}});
const auto kMax = ideal(2, {{1, 0}, {0, 1}});
const auto kSquare = ideal(2, {{2, 0}, {0, 2}});

std::set<oracle::Exps> as_set(const std::vector<Monomial>& ms) {
  std::set<oracle::Exps> out;
  for (const auto& u : ms) out.emplace(u.exponents().begin(), u.exponents().end());
  return out;
}

TEST(Staircase, Examples) {
  EXPECT_EQ(as_set(staircase(kStair).monomials()), (std::set<oracle::Exps>{{0, 0}, {1, 0}, {0, 1}, {0, 2}}));
  EXPECT_EQ(staircase(kMax).size(), 1u);
  EXPECT_EQ(as_set(staircase(ideal(1, {{3}})).monomials()), (std::set<oracle::Exps>{{0}, {1}, {2}}));
  try {
    (void)staircase(ideal(2, {{2, 0}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InfiniteColength);
  }
}

TEST(Staircase, RejectsNonDownsets) {
  EXPECT_THROW(Staircase(2, {mono({0, 0}), mono({1, 1})}), Error);
  EXPECT_EQ(ideal_of(staircase(kStair)), kStair);
  EXPECT_THROW((void)ideal_of(Staircase(2, {})), Error);
}

TEST(SumRepresentation, Examples) {
  const auto g = staircase(kStair);
  const auto rep = sum_irreducible_representation(g);
  ASSERT_EQ(rep.index(), 2u);
  std::set<std::set<oracle::Exps>> parts;
  for (const auto& d : rep.components) parts.insert(as_set(d.members));
  EXPECT_EQ(parts, (std::set<std::set<oracle::Exps>>{{{0, 0}, {1, 0}}, {{0, 0}, {0, 1}, {0, 2}}}));
  EXPECT_EQ(sum_irreducible_representation(staircase(kMax)).index(), 1u);
  EXPECT_EQ(as_set(maximal_elements(staircase(kSquare))), (std::set<oracle::Exps>{{1, 1}}));
}

TEST(DualityCheck, Examples) {
  for (const auto& [I, expected] : std::vector<std::pair<MonomialIdeal, std::size_t>>{
           {kStair, 2}, {kMax, 1}, {ideal(2, {{3, 0}, {2, 2}, {0, 3}}), 2}}) {
    const auto r = check_finite_length_duality(I);
    EXPECT_EQ(r.ir_by_decomposition, expected);
    EXPECT_EQ(r.ir_by_bass, expected);
    EXPECT_EQ(r.ir_prime, expected);
    EXPECT_EQ(r.min_cover.value_or(0), expected);
    EXPECT_TRUE(r.pass());
  }
  EXPECT_EQ(as_set(bass0(ideal(2, {{3, 0}, {2, 2}, {0, 3}}), MonomialPrime::full(2)).witnesses),
            (std::set<oracle::Exps>{{2, 1}, {1, 2}}));
}

TEST(DualIntersection, Examples) {
  const auto g = staircase(ideal(1, {{2}}));
  const auto one = make_downset(g, {mono({0})});
  EXPECT_EQ(dual_intersection_vs_sum(g, one, one), std::make_pair(false, false));
  const auto all = make_downset(g, g.monomials());
  const auto none = make_downset(g, {});
  EXPECT_EQ(dual_intersection_vs_sum(g, all, none), std::make_pair(true, true));
}

TEST(DownsetSubmodule, Validation) {
  const auto g = staircase(kStair);
  try {
    (void)make_downset(g, {mono({2, 0})});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotInStaircase);
  }
  EXPECT_THROW((void)make_downset(g, {mono({1, 0})}), Error);
}

TEST(IrreducibleVsDual, Examples) {
  EXPECT_EQ(irreducible_vs_dual_sum_irreducible(kSquare), std::make_pair(true, true));
  EXPECT_EQ(irreducible_vs_dual_sum_irreducible(kStair), std::make_pair(false, false));
  EXPECT_EQ(irreducible_vs_dual_sum_irreducible(kMax), std::make_pair(true, true));
}

TEST(MinCover, Caps) {
  std::vector<Monomial> line;
  for (unsigned i = 0; i < 30; ++i) line.push_back(mono({i}));
  try {
    (void)min_cover_oracle(Staircase(1, line));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::TooLarge);
  }
}

// Staircases in two variables are partitions, in three plane partitions.
TEST(AllStaircases, CountsMatchPartitionNumbers) {
  for (std::size_t size = 1; size <= 8; ++size) {
    std::map<std::size_t, std::uint64_t> by_size1, by_size2, by_size3;
    for (const auto& g : all_staircases(1, size)) ++by_size1[g.size()];
    for (const auto& g : all_staircases(2, size)) ++by_size2[g.size()];
    for (const auto& g : all_staircases(3, size)) ++by_size3[g.size()];
    for (unsigned k = 1; k <= size; ++k) {
      EXPECT_EQ(by_size1[k], 1u);
      EXPECT_EQ(by_size2[k], oracle::partitions(k)) << k;
      EXPECT_EQ(by_size3[k], oracle::plane_partitions(k)) << k;
    }
  }
}

TEST(AllDownsets, CountsOnAChain) {
  std::vector<Monomial> chain;
  for (unsigned i = 0; i < 6; ++i) chain.push_back(mono({i}));
  // A chain of length 6 has 7 downsets; the 2x2 box has 6.
  EXPECT_EQ(all_downsets(Staircase(1, chain)).size(), 7u);
  EXPECT_EQ(all_downsets(staircase(kSquare)).size(), 6u);
}

TEST(DualityProperties, RandomArtinian) {
  auto sample = random_artinian_ideals(51, 300, 3, 4, 4);
  for (auto& I : all_ideals_in_box(2, 3)) {
    if (!I.is_zero() && is_finite_colength(I)) sample.push_back(std::move(I));
  }
  for (const auto& I : sample) {
    const auto r = check_finite_length_duality(I);
    ASSERT_TRUE(r.pass());
    const auto g = staircase(I);
    EXPECT_EQ(as_set(maximal_elements(g)), oracle::socle(I, 5));
    EXPECT_EQ(r.ir_prime, reducibility_index_by_decomposition(I));
  }
}

TEST(DualityProperties, QuotientIndexMonotone) {
  for (const auto& g : all_staircases(2, 7)) {
    const auto top = maximal_elements(g).size();
    for (const auto& b : all_downsets(g)) {
      const auto q = quotient_index(g, b);
      EXPECT_LE(q, top);
      EXPECT_EQ(q == 0, b.size() == g.size());
    }
  }
}

TEST(Render, Grid) {
  const auto text = render(staircase(kStair), RingContext::standard(2));
  EXPECT_NE(text.find('*'), std::string::npos);
  const auto list = render(staircase(ideal(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 2}})), RingContext::standard(3));
  EXPECT_NE(list.find("z"), std::string::npos);
}

}  // namespace
