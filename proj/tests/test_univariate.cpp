#include <gtest/gtest.h>

#include "irindex/error.hpp"
#include "irindex/finite_field.hpp"
#include "irindex/sample.hpp"
#include "irindex/univariate.hpp"
#include "oracle.hpp"

using namespace irindex;

namespace {

const auto kF2 = FiniteField::prime(2);
const auto kF4 = FiniteField::extension(2, {1, 1, 1});

UniPoly P(std::vector<FiniteField::Element> c) { return UniPoly(std::move(c)); }

TEST(FiniteField, Construction) {
  EXPECT_EQ(kF4.size(), 4u);
  EXPECT_EQ(kF4.name(), "GF(4)");
  EXPECT_THROW(FiniteField::prime(4), Error);
  try {
    (void)FiniteField::prime(17);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::FieldTooLarge);
  }
  // t^2 + 1 = (t + 1)^2 over GF(2).
  EXPECT_THROW(FiniteField::extension(2, {1, 0, 1}), Error);
}

TEST(FiniteField, FieldAxioms) {
  for (const auto& f : {FiniteField::prime(5), kF4, FiniteField::with_degree(3, 2), FiniteField::with_degree(2, 3)}) {
    for (FiniteField::Element a = 0; a < f.size(); ++a) {
      EXPECT_EQ(f.add(a, f.neg(a)), 0u);
      if (a != 0) EXPECT_EQ(f.mul(a, f.inv(a)), 1u);
      EXPECT_EQ(f.pow(a, f.size()), a);
      for (FiniteField::Element b = 0; b < f.size(); ++b) {
        EXPECT_EQ(f.mul(a, b), f.mul(b, a));
        EXPECT_EQ(f.sub(f.add(a, b), b), a);
      }
    }
  }
}

TEST(PolyRing, Arithmetic) {
  const PolyRing r(kF2);
  EXPECT_EQ(r.mul(P({1, 1}), P({1, 1})), P({1, 0, 1}));
  EXPECT_EQ(r.gcd(P({1, 0, 1}), P({1, 1})), P({1, 1}));
  const auto [q, rem] = r.divmod(P({0, 0, 0, 1}), P({0, 1}));
  EXPECT_EQ(q, P({0, 0, 1}));
  EXPECT_TRUE(rem.is_zero());
  try {
    (void)r.divmod(P({1, 1}), UniPoly());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DivisionByZeroPoly);
  }
  EXPECT_EQ(r.format(P({1, 1, 1})), "x^2+x+1");
}

TEST(Factor, Examples) {
  const PolyRing r2(kF2);
  const auto a = factor(r2, P({1, 1, 1}));
  ASSERT_EQ(a.factors.size(), 1u);
  EXPECT_EQ(a.factors[0].multiplicity, 1u);
  EXPECT_TRUE(is_irreducible(r2, P({1, 1, 1})));

  const PolyRing r4(kF4);
  const auto b = factor(r4, P({1, 1, 1}));
  ASSERT_EQ(b.factors.size(), 2u);
  // t has code 2, t + 1 has code 3.
  EXPECT_EQ(b.factors[0].poly, P({2, 1}));
  EXPECT_EQ(b.factors[1].poly, P({3, 1}));
  EXPECT_EQ(r4.mul(b.factors[0].poly, b.factors[1].poly), P({1, 1, 1}));

  const PolyRing r3(FiniteField::prime(3));
  const auto c = factor(r3, P({0, 0, 0, 1}));
  ASSERT_EQ(c.factors.size(), 1u);
  EXPECT_EQ(c.factors[0].poly, P({0, 1}));
  EXPECT_EQ(c.factors[0].multiplicity, 3u);
}

TEST(Factor, DegreeCap) {
  const PolyRing r(kF2);
  std::vector<FiniteField::Element> c(kMaxFactorDegree + 2, 0);
  c.back() = 1;
  try {
    (void)factor(r, P(c));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DegreeTooLarge);
  }
}

TEST(Hypersurface, Examples) {
  EXPECT_EQ(ir_hypersurface(PolyRing(FiniteField::prime(5)), P({0, 0, 0, 1})), 1u);
  EXPECT_EQ(ir_hypersurface(PolyRing(kF2), P({0, 1, 1})), 2u);
  EXPECT_EQ(ir_hypersurface(PolyRing(kF2), P({1, 1, 1})), 1u);
  try {
    (void)ir_hypersurface(PolyRing(kF2), P({1}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnitInput);
  }
}

TEST(FieldBaseChange, Examples) {
  const auto a = base_change_field(P({1, 1, 1}), kF2, kF4);
  EXPECT_EQ(a.ir_before, 1u);
  EXPECT_EQ(a.ir_after, 2u);
  EXPECT_EQ(a.t_bound, 2u);
  EXPECT_TRUE(a.chain_holds.value_or(false));
  EXPECT_NE(a.ir_before, a.ir_after);
  EXPECT_TRUE(a.equality_criterion_holds);
  EXPECT_TRUE(a.pass());

  const auto b = base_change_field(P({0, 1, 1}), kF2, kF4);
  EXPECT_EQ(b.ir_before, 2u);
  EXPECT_EQ(b.ir_after, 2u);
  EXPECT_TRUE(b.pass());

  // x * (x^2 + x + 1)
  const auto c = base_change_field(P({0, 1, 1, 1}), kF2, kF4);
  EXPECT_EQ(c.ir_before, 2u);
  EXPECT_EQ(c.ir_after, 3u);
  EXPECT_EQ(c.formula_side, 3u);
}

TEST(FactorProperties, ReconstructsExhaustively) {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    const PolyRing r(FiniteField::prime(p));
    const unsigned max_degree = p == 2 ? 6 : (p == 3 ? 4 : 3);
    for (const auto& f : all_polynomials(r.field(), 1, max_degree)) {
      const auto fac = factor(r, f);
      ASSERT_EQ(expand(r, fac), f) << r.format(f);
      for (std::size_t i = 0; i < fac.factors.size(); ++i) {
        EXPECT_TRUE(fac.factors[i].poly.is_monic());
        EXPECT_TRUE(is_irreducible(r, fac.factors[i].poly));
        if (i) EXPECT_TRUE(canonical_less(fac.factors[i - 1].poly, fac.factors[i].poly));
      }
      // Linear factors are the roots.
      std::size_t linear = 0;
      for (const auto& g : fac.factors) linear += g.poly.degree() == 1;
      EXPECT_EQ(linear, oracle::distinct_roots(f.coeffs, p));
    }
  }
}

TEST(FactorProperties, HypersurfaceBiconditional) {
  const PolyRing r(kF2);
  for (const auto& f : all_polynomials(kF2, 1, 6)) {
    EXPECT_EQ(ir_hypersurface(r, f) == 1, factor(r, f).factors.size() == 1);
  }
}

TEST(FactorProperties, Subadditive) {
  const PolyRing r(FiniteField::prime(3));
  const auto polys = all_polynomials(r.field(), 1, 2);
  for (const auto& f : polys) {
    for (const auto& g : polys) {
      const auto a = ir_hypersurface(r, f), b = ir_hypersurface(r, g);
      const auto ab = ir_hypersurface(r, r.mul(f, g));
      const bool coprime = r.gcd(f, g).degree() == 0;
      EXPECT_LE(ab, a + b);
      EXPECT_EQ(ab == a + b, coprime);
    }
  }
}

TEST(FactorProperties, FieldBaseChangeLaws) {
  for (std::uint32_t p : {2u, 3u}) {
    const auto base = FiniteField::prime(p);
    for (unsigned k : {2u, 3u}) {
      const auto ext = FiniteField::with_degree(p, k);
      for (const auto& f : all_polynomials(base, 1, p == 2 ? 5 : 3)) {
        const auto r = base_change_field(f, base, ext);
        ASSERT_TRUE(r.pass()) << PolyRing(base).format(f);
        EXPECT_EQ(r.ir_after, ir_hypersurface(PolyRing(ext), embed(f, base, ext)));
      }
    }
  }
}

}  // namespace
