#include <gtest/gtest.h>

#include "irindex/error.hpp"
#include "irindex/parse.hpp"
#include "irindex/sample.hpp"
#include "oracle.hpp"

using namespace irindex;
using oracle::ideal;

namespace {

TEST(ParseIdeal, TwoLineForm) {
  const auto in = parse_ideal("ring: x, y\nideal: x^2, x*y, y^3\n");
  EXPECT_EQ(in.ring.names(), (std::vector<std::string>{"x", "y"}));
  EXPECT_EQ(in.ideal, ideal(2, {{2, 0}, {1, 1}, {0, 3}}));
}

TEST(ParseIdeal, SeparatorsAndWhitespace) {
  const auto a = parse_ideal("ring: x,y / ideal: x^2, x*y, y^3");
  const auto b = parse_ideal("ring:x,y;ideal:x^2,x*y,y^3");
  const auto c = parse_ideal("  ring :  x , y \n\n ideal :  y ^ 3 ,x * y, x^2  ");
  EXPECT_EQ(a.ideal, b.ideal);
  EXPECT_EQ(a.ideal, c.ideal);
}

TEST(ParseIdeal, InferredRing) {
  const auto in = parse_ideal("x2*x10, x1");
  EXPECT_EQ(in.ring.names(), (std::vector<std::string>{"x1", "x2", "x10"}));
  EXPECT_EQ(parse_ideal("ideal: x").ideal, ideal(1, {{1}}));
}

TEST(ParseIdeal, UnitAndZero) {
  EXPECT_TRUE(parse_ideal("ring: x, y\nideal: 1").ideal.is_unit());
  EXPECT_TRUE(parse_ideal("ring: x, y\nideal: 0").ideal.is_zero());
  EXPECT_TRUE(parse_ideal("ring: x, y\nideal:").ideal.is_zero());
}

TEST(ParseIdeal, ErrorsCarryPosition) {
  try {
    (void)parse_ideal("ring: x, y\nideal: x^2, z");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 13u);
  }
  EXPECT_THROW((void)parse_ideal("x^"), ParseError);
  EXPECT_THROW((void)parse_ideal("ring: x, x\nideal: x"), Error);
  try {
    (void)parse_ideal("x^99999999");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ExponentTooLarge);
  }
}

TEST(ParseIdeal, CanonicalRoundTrip) {
  for (const auto& I : random_ideals(61, 300, 4, 5, 5)) {
    const IdealInput in{RingContext::standard(I.nvars()), I};
    const auto text = canonical_text(in);
    const auto back = parse_ideal(text);
    EXPECT_EQ(back.ideal, I) << text;
    EXPECT_EQ(back.ring, in.ring);
    EXPECT_EQ(canonical_text(back), text);
  }
  const IdealInput zero{RingContext::standard(2), MonomialIdeal::zero(2)};
  EXPECT_EQ(parse_ideal(canonical_text(zero)).ideal, zero.ideal);
}

TEST(ParsePoly, Examples) {
  const auto a = parse_poly("f: x^2+x+1 over GF(2)");
  EXPECT_EQ(a.field.size(), 2u);
  EXPECT_EQ(a.f, UniPoly({1, 1, 1}));

  const auto b = parse_poly("f: x^2 + t*x + (t+1) over GF(4)\next: GF(4)=t^2+t+1");
  EXPECT_EQ(b.field.size(), 4u);
  EXPECT_EQ(b.f, UniPoly({3, 2, 1}));
  EXPECT_EQ(parse_poly(canonical_text(b)).f, b.f);

  const auto c = parse_poly("f: (x+1)^3 - x over GF(5)");
  EXPECT_EQ(c.f, UniPoly({1, 2, 3, 1}));
  EXPECT_THROW((void)parse_poly("f: x*y over GF(2)"), ParseError);
  EXPECT_THROW((void)parse_poly("f: x over GF(6)"), ParseError);
}

TEST(ParseField, Names) {
  EXPECT_EQ(parse_field_name("GF(9)"), std::make_pair(3u, 2u));
  EXPECT_EQ(parse_field_name("GF(2)"), std::make_pair(2u, 1u));
  EXPECT_THROW((void)parse_field_name("GF(12)"), ParseError);
}

TEST(ParseGroup, Examples) {
  EXPECT_EQ(parse_group("group: Z/4 + Z/2 + Z/9"), FiniteAbelianGroup({2, 4, 9}));
  EXPECT_EQ(parse_group("Z/12"), FiniteAbelianGroup({4, 3}));
  EXPECT_TRUE(parse_group("0").is_trivial());
  EXPECT_EQ(parse_group(canonical_text(FiniteAbelianGroup({2, 4, 9}))), FiniteAbelianGroup({2, 4, 9}));
  EXPECT_THROW((void)parse_group("Z/"), ParseError);
  EXPECT_THROW((void)parse_group("Z/4 * Z/2"), ParseError);
}

TEST(ParseDescriptor, Forms) {
  EXPECT_EQ(std::get<ExtendDescriptor>(parse_descriptor("extend:2")).extra, 2u);
  EXPECT_EQ(std::get<InvertDescriptor>(parse_descriptor("invert:y,z")).names,
            (std::vector<std::string>{"y", "z"}));
  const auto f = std::get<FieldDescriptor>(parse_descriptor("field:GF(2)->GF(4)"));
  EXPECT_EQ(f.from, 2u);
  EXPECT_EQ(f.to, 4u);
  EXPECT_FALSE(std::get<FieldDescriptor>(parse_descriptor("field:->GF(8)")).from.has_value());
  for (const char* text : {"extend:2", "invert:y,z", "field:GF(2)->GF(4)", "field:->GF(8)"}) {
    EXPECT_EQ(canonical_text(parse_descriptor(canonical_text(parse_descriptor(text)))),
              canonical_text(parse_descriptor(text)));
  }
  EXPECT_THROW((void)parse_descriptor("shrink:1"), ParseError);
}

}  // namespace
