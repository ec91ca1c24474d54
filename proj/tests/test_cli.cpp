#include <gtest/gtest.h>

#include "irindex/error.hpp"
#include "irindex_cli/commands.hpp"

using namespace irindex::cli;

namespace {

TEST(Decompose, Staircase) {
  const auto r = cmd_decompose("ring: x,y / ideal: x^2, x*y, y^3");
  EXPECT_EQ(r["results"]["ir"], 2);
  std::set<std::string> comps;
  for (const auto& c : r["results"]["components"]) comps.insert(c["ideal"].get<std::string>());
  EXPECT_EQ(comps, (std::set<std::string>{"(y, x^2)", "(y^3, x)"}));
  EXPECT_EQ(exit_code(r), 0);
  EXPECT_EQ(cmd_decompose("ideal: x")["results"]["ir"], 1);
}

TEST(Decompose, UnitIdealIsInputError) {
  try {
    (void)cmd_decompose("ideal: 1");
    FAIL();
  } catch (const irindex::Error& e) {
    int code = 0;
    const auto r = error_report("decompose", e, code);
    EXPECT_EQ(code, 2);
    EXPECT_EQ(r["error"]["kind"], "UnitIdeal");
  }
}

TEST(BaseChange, Examples) {
  const auto a = cmd_basechange("x^2,x*y", "extend:1");
  EXPECT_EQ(a["results"]["ir_before"], 2);
  EXPECT_EQ(a["results"]["ir_after"], 2);
  EXPECT_EQ(exit_code(a), 0);

  const auto b = cmd_basechange("x^2,x*y", "invert:y");
  EXPECT_EQ(b["results"]["ir_before"], 2);
  EXPECT_EQ(b["results"]["ir_after"], 1);
  EXPECT_TRUE(b["verdict"]["chain_holds"].is_null());

  const auto c = cmd_basechange("f: x^2+x+1 over GF(2)", "field:->GF(4)");
  EXPECT_EQ(c["results"]["ir_before"], 1);
  EXPECT_EQ(c["results"]["ir_after"], 2);
  EXPECT_EQ(exit_code(c), 0);

  EXPECT_THROW((void)cmd_basechange("x^2", "invert:q"), irindex::Error);
  EXPECT_THROW((void)cmd_basechange("f: x over GF(2)", "field:->GF(9)"), irindex::Error);
}

TEST(Dual, Examples) {
  const auto a = cmd_dual("x^2, x*y, y^3");
  EXPECT_EQ(a["results"]["ir_prime"], 2);
  std::set<std::string> corners;
  for (const auto& m : a["results"]["maximal"]) corners.insert(m.get<std::string>());
  EXPECT_EQ(corners, (std::set<std::string>{"x", "y^2"}));
  EXPECT_TRUE(a["results"]["grid"].is_string());
  EXPECT_EQ(cmd_dual("x,y")["results"]["ir_prime"], 1);

  try {
    (void)cmd_dual("ring: x,y / ideal: x^2");
    FAIL();
  } catch (const irindex::Error& e) {
    EXPECT_EQ(e.kind(), irindex::ErrorKind::InfiniteColength);
  }
}

TEST(Abelian, Examples) {
  const auto a = cmd_abelian("Z/2 + Z/2 + Z/3");
  EXPECT_EQ(a["results"]["ir_formula"], 3);
  EXPECT_EQ(a["results"]["bruteforce"]["ir_prime"], 3);
  EXPECT_EQ(exit_code(a), 0);

  EXPECT_EQ(cmd_abelian("Z/8")["results"]["bruteforce"]["ir_prime"], 1);

  const auto b = cmd_abelian("group: Z/4 + Z/9");
  EXPECT_EQ(b["results"]["ir_formula"], 2);
  EXPECT_EQ(b["results"]["attached_primes"], Json::array({2, 3}));

  const auto c = cmd_abelian("Z/128");
  EXPECT_TRUE(c["results"]["bruteforce"].is_null());
  EXPECT_EQ(exit_code(c), 0);
  EXPECT_THROW((void)cmd_abelian("Z/2", 65), irindex::Error);
}

TEST(Errors, ExitCodes) {
  int code = 0;
  const auto parse = error_report("decompose", irindex::ParseError("bad", 1, 2), code);
  EXPECT_EQ(code, 2);
  EXPECT_EQ(parse["error"]["line"], 1);
  (void)error_report("abelian", irindex::Error(irindex::ErrorKind::TooLarge, "big"), code);
  EXPECT_EQ(code, 3);
  (void)error_report("basechange", irindex::Error(irindex::ErrorKind::DegreeTooLarge, "big"), code);
  EXPECT_EQ(code, 3);
  EXPECT_EQ(exit_code(Json{{"verdict", {{"pass", false}}}}), 1);
}

TEST(Reports, DeterministicAndRendered) {
  const auto a = cmd_selftest("monomial", 7);
  const auto b = cmd_selftest("monomial", 7);
  EXPECT_EQ(a.dump(), b.dump());
  EXPECT_EQ(exit_code(a), 0);
  EXPECT_EQ(a["results"]["documented_untested"].size(), 3u);
  EXPECT_EQ(cmd_decompose("x^3*y, x*y^2, y^4", 3).dump(), cmd_decompose("x^3*y, x*y^2, y^4", 3).dump());
  for (const auto& r : {a, cmd_decompose("x^2"), cmd_dual("x^2,y"), cmd_abelian("Z/6"),
                        cmd_basechange("x*y", "extend:2")}) {
    const auto text = render_human(r);
    EXPECT_NE(text.find("PASS"), std::string::npos);
  }
}

TEST(Reports, CanonicalEchoRoundTrips) {
  const auto a = cmd_decompose("y^3, x*y,  x^2");
  const auto b = cmd_decompose(a["input"]["canonical"].get<std::string>());
  EXPECT_EQ(a.dump(), b.dump());
  const auto g = cmd_abelian("Z/12 + Z/2");
  EXPECT_EQ(cmd_abelian(g["input"]["canonical"].get<std::string>()).dump(), g.dump());
}

}  // namespace
