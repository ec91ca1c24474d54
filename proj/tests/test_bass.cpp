#include <gtest/gtest.h>

#include "irindex/bass.hpp"
#include "irindex/decomposition.hpp"
#include "irindex/sample.hpp"
#include "oracle.hpp"

using namespace irindex;
using oracle::ideal;
using oracle::mono;

namespace {

const auto kStair = ideal(2, {{2, 0}, {1, 1}, {0, 3}});
const auto kEmbedded = ideal(2, {{2, 0}, {1, 1}});

std::vector<std::vector<std::size_t>> supports(std::vector<MonomialPrime> ps) {
  std::sort(ps.begin(), ps.end());
  std::vector<std::vector<std::size_t>> out;
  for (const auto& p : ps) out.push_back(p.support());
  return out;
}

TEST(LocalizedIdeal, Examples) {
  const std::vector<std::size_t> x{0}, xy{0, 1}, none{};
  EXPECT_EQ(localized_ideal(kEmbedded, x), ideal(1, {{1}}));
  EXPECT_EQ(localized_ideal(kStair, xy), kStair);
  EXPECT_TRUE(localized_ideal(ideal(2, {{1, 1}}), none).is_unit());
}

TEST(Bass0, Examples) {
  const auto full = bass0(kStair, MonomialPrime::full(2));
  EXPECT_EQ(full.mu0, 2u);
  std::set<Monomial> w(full.witnesses.begin(), full.witnesses.end());
  EXPECT_EQ(w, (std::set<Monomial>{mono({1, 0}), mono({0, 2})}));

  const auto at_x = bass0(kEmbedded, MonomialPrime(2, {0}));
  EXPECT_EQ(at_x.mu0, 1u);
  ASSERT_EQ(at_x.witnesses.size(), 1u);
  EXPECT_TRUE(at_x.witnesses.front().is_one());

  EXPECT_EQ(bass0(ideal(2, {{1, 0}}), MonomialPrime::full(2)).mu0, 0u);
}

TEST(AssociatedPrimes, Examples) {
  using S = std::vector<std::vector<std::size_t>>;
  EXPECT_EQ(supports(associated_primes(kStair)), (S{{0, 1}}));
  EXPECT_EQ(supports(associated_primes(kEmbedded)), (S{{0}, {0, 1}}));
  EXPECT_EQ(supports(associated_primes(ideal(2, {{1, 0}}))), (S{{0}}));
  EXPECT_EQ(supports(ass_by_colon_scan(kEmbedded)), (S{{0}, {0, 1}}));
  EXPECT_EQ(supports(ass_by_colon_scan(ideal(2, {{1, 0}}))), (S{{0}}));
  EXPECT_EQ(supports(ass_by_colon_scan(kStair)), (S{{0, 1}}));
}

TEST(BassFormula, Examples) {
  EXPECT_EQ(reducibility_index_by_bass(kStair).ir_by_formula, 2u);
  EXPECT_EQ(reducibility_index_by_bass(kEmbedded).ir_by_formula, 2u);
  for (unsigned a = 1; a <= 6; ++a) {
    EXPECT_EQ(reducibility_index_by_bass(ideal(1, {{a}})).ir_by_formula, 1u);
  }
}

TEST(IrOne, Examples) {
  const auto irreducible = is_ir_one(ideal(2, {{2, 0}, {0, 1}}));
  EXPECT_TRUE(irreducible.value);
  const auto stair = is_ir_one(kStair);
  EXPECT_FALSE(stair.value);
  EXPECT_EQ(stair.reason, "mu0=2");
  const auto embedded = is_ir_one(kEmbedded);
  EXPECT_FALSE(embedded.value);
  EXPECT_EQ(embedded.reason, "two associated primes");
}

TEST(BassProperties, AgreeWithDecomposition) {
  auto sample = random_ideals(31, 500, 4, 5, 5);
  for (auto& I : all_ideals_in_box(2, 2)) sample.push_back(std::move(I));
  for (const auto& I : sample) {
    const auto d = decompose(I);
    const auto report = reducibility_index_by_bass(I);
    ASSERT_EQ(report.ir_by_formula, d.size());
    EXPECT_EQ(supports(associated_primes(I)), supports(ass_by_colon_scan(I)));
    EXPECT_EQ(is_ir_one(I).value, d.size() == 1);

    std::map<std::vector<std::size_t>, std::size_t> per_prime;
    for (const auto& c : d.components()) ++per_prime[c.support()];
    for (const auto& e : report.entries) {
      EXPECT_GT(e.value.mu0, 0u);
      EXPECT_EQ(e.value.mu0, per_prime[e.prime.support()]);
    }
  }
}

TEST(BassProperties, PositiveExactlyOnAss) {
  for (const auto& I : random_ideals(37, 200, 3, 4, 4)) {
    const auto ass = supports(associated_primes(I));
    const auto n = I.nvars();
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      std::vector<std::size_t> s;
      for (std::size_t i = 0; i < n; ++i) {
        if ((mask >> i) & 1) s.push_back(i);
      }
      const bool in_ass = std::find(ass.begin(), ass.end(), s) != ass.end();
      EXPECT_EQ(bass0(I, MonomialPrime(n, s)).mu0 > 0, in_ass);
    }
  }
}

}  // namespace
