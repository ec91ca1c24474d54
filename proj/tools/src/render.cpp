#include <string>

#include <fmt/format.h>

#include "irindex_cli/commands.hpp"

namespace irindex::cli {

namespace {

std::string yes_no(const Json& v) {
  if (v.is_null()) return "n/a";
  return v.get<bool>() ? "yes" : "no";
}

std::string join(const Json& list, const char* sep = ", ") {
  std::string out;
  for (const auto& x : list) {
    if (!out.empty()) out += sep;
    out += x.is_string() ? x.get<std::string>() : x.dump();
  }
  return out;
}

void checks(std::string& out, const Json& verdict) {
  out += "checks:\n";
  for (const auto& [key, value] : verdict.items()) {
    if (key == "pass") continue;
    out += fmt::format("  {:<30} {}\n", key, yes_no(value));
  }
  out += fmt::format("verdict: {}\n", verdict.value("pass", false) ? "PASS" : "FAIL");
}

void render_decompose(std::string& out, const Json& r) {
  const auto& in = r["input"];
  const auto& res = r["results"];
  out += fmt::format("ring: {}\nideal: {}\n", join(in["ring"]), join(in["generators"]));
  out += fmt::format("ir = {}\n", res["ir"].get<std::size_t>());
  if (res["domain_case"].get<bool>()) out += "(0) is irreducible: k[x] is a domain\n";
  out += "components:\n";
  for (const auto& c : res["components"]) {
    out += fmt::format("  {:<24} radical {}\n", c["ideal"].get<std::string>(),
                       c["radical"].get<std::string>());
  }
  out += fmt::format("Ass = {{{}}}\n", join(res["ass"]));
  for (const auto& e : res["bass"]) {
    out += fmt::format("  mu0{} = {}   socle {}\n", e["prime"].get<std::string>(),
                       e["mu0"].get<std::size_t>(), join(e["witnesses"]));
  }
  out += fmt::format("ir by Bass numbers = {}\n", res["ir_by_bass"].get<std::size_t>());
  out += fmt::format("ir = 1: {} ({})\n", yes_no(res["ir_one"]["value"]),
                     res["ir_one"]["reason"].get<std::string>());
}

void render_basechange(std::string& out, const Json& r) {
  const auto& in = r["input"];
  const auto& res = r["results"];
  if (in.contains("polynomial")) {
    out += fmt::format("f = {} over {}\n", in["polynomial"].get<std::string>(),
                       in["field"].get<std::string>());
    out += fmt::format("extension: {} = GF(p)[t]/({})\n", in["extension"].get<std::string>(),
                       in["extension_modulus"].get<std::string>());
  } else {
    out += fmt::format("ring: {}\nideal: {}\n", join(in["ring"]), join(in["generators"]));
    if (!res["after"].is_null()) {
      out += fmt::format("after: ring {}; ideal {}\n", join(res["after"]["ring"]),
                         res["after"]["ideal"].get<std::string>());
    }
  }
  out += fmt::format("map: {} ({}faithfully flat)\n", res["kind"].get<std::string>(),
                     res["faithfully_flat"].get<bool>() ? "" : "not ");
  out += fmt::format("ir before = {}, ir after = {}\n", res["ir_before"].get<std::size_t>(),
                     res["ir_after"].get<std::size_t>());
  for (const auto& f : res["per_prime"]) {
    out += fmt::format("  {:<16} mu0 = {}  fiber ir = {}\n", f["prime"].get<std::string>(),
                       f["mu0"].get<std::size_t>(), f["fiber_ir"].get<std::size_t>());
  }
  out += fmt::format("sum of fiber ir * mu0 = {}, t = {}\n", res["formula_side"].get<std::size_t>(),
                     res["t_bound"].get<std::size_t>());
}

void render_dual(std::string& out, const Json& r) {
  const auto& in = r["input"];
  const auto& res = r["results"];
  out += fmt::format("ring: {}\nideal: {}\n", join(in["ring"]), join(in["generators"]));
  out += fmt::format("length = {}\n", res["length"].get<std::size_t>());
  if (res["grid"].is_string()) {
    out += res["grid"].get<std::string>();
    if (out.back() != '\n') out += '\n';
  } else if (!res["staircase"].is_null()) {
    out += fmt::format("standard monomials: {}\n", join(res["staircase"]));
  }
  out += fmt::format("maximal: {}\n", join(res["maximal"]));
  out += fmt::format("ir' of the dual = {}\n", res["ir_prime"].get<std::size_t>());
  out += fmt::format("ir by decomposition = {}, by Bass numbers = {}\n",
                     res["ir_by_decomposition"].get<std::size_t>(), res["ir_by_bass"].get<std::size_t>());
  if (!res["min_cover"].is_null()) {
    out += fmt::format("fewest principal downsets covering = {}\n", res["min_cover"].get<std::size_t>());
  }
  if (res.contains("irredundant_covers")) {
    out += fmt::format("irredundant covers: {}\n",
                       res["irredundant_covers"]["count"].get<std::uint64_t>());
  }
}

void render_abelian(std::string& out, const Json& r) {
  const auto& res = r["results"];
  out += fmt::format("A = {}  (order {})\n", r["input"]["group"].get<std::string>(),
                     res["order"].get<std::uint64_t>());
  out += fmt::format("ir' by formula = {}\n", res["ir_formula"].get<std::size_t>());
  if (res.contains("attached_primes")) out += fmt::format("Att = {{{}}}\n", join(res["attached_primes"]));
  if (res.contains("secondary_representation")) {
    out += "secondary components:\n";
    for (const auto& c : res["secondary_representation"]) {
      out += fmt::format("  p = {:<3} order {:<5} nilpotent {} surjective {}\n",
                         c["prime"].get<std::uint64_t>(), c["order"].get<std::size_t>(),
                         yes_no(c["nilpotent"]), yes_no(c["surjective"]));
    }
  }
  if (res["bruteforce"].is_null()) {
    out += fmt::format("brute force skipped: {}\n", res["bruteforce_skipped"].get<std::string>());
    return;
  }
  const auto& b = res["bruteforce"];
  out += fmt::format("ir' by brute force = {} over {} irredundant representations\n",
                     b["ir_prime"].get<std::size_t>(), b["representations"].get<std::uint64_t>());
  if (!b["example"].empty()) out += fmt::format("  e.g. {}\n", join(b["example"], " + "));
  if (res.contains("sum_irreducible")) {
    out += fmt::format("sum-irreducible: {}\n", yes_no(res["sum_irreducible"]));
  }
  if (res.contains("additivity")) {
    const auto& a = res["additivity"];
    for (const auto& p : a["per_prime"]) {
      out += fmt::format("  ir' of the {}-part = {}\n", p["prime"].get<std::uint64_t>(),
                         p["ir_prime"].get<std::size_t>());
    }
    out += fmt::format("embedded components: {}\n", a["embedded_hypothesis"].get<std::string>());
  }
  if (res.contains("quotients")) {
    const auto& q = res["quotients"];
    out += fmt::format("quotients A/B: {} subgroups, largest ir' {}, {} violations\n",
                       q["subgroups"].get<std::size_t>(), q["max_quotient_ir_prime"].get<std::uint64_t>(),
                       q["violations"].get<std::size_t>());
  }
}

void render_selftest(std::string& out, const Json& r) {
  const auto& res = r["results"];
  out += fmt::format("selftest scope {} seed {}\n", r["input"]["scope"].get<std::string>(),
                     r["input"]["seed"].get<std::uint64_t>());
  for (const auto& l : res["laws"]) {
    out += fmt::format("  [{}] {:<13} {:<56} {:>8} cases{}\n", l["pass"].get<bool>() ? "ok  " : "FAIL",
                       l["scope"].get<std::string>(), l["law"].get<std::string>(),
                       l["cases"].get<std::uint64_t>(), l["exhaustive"].get<bool>() ? " (exhaustive)" : "");
    if (l.contains("first_failure")) {
      out += fmt::format("         first failure: {}\n", l["first_failure"].get<std::string>());
    }
  }
  out += "documented, not tested:\n";
  for (const auto& d : res["documented_untested"]) out += fmt::format("  - {}\n", d.get<std::string>());
  out += fmt::format("verdict: {}\n", r["verdict"]["pass"].get<bool>() ? "PASS" : "FAIL");
}

}  // namespace

std::string render_human(const Json& report) {
  std::string out;
  const auto command = report.value("command", std::string());
  if (report.contains("error")) {
    const auto& e = report["error"];
    if (e.contains("line")) {
      return fmt::format("error: {}:{}: {}\n", e["line"].get<std::size_t>(), e["column"].get<std::size_t>(),
                         e["message"].get<std::string>());
    }
    return fmt::format("error: {}\n", e["message"].get<std::string>());
  }
  if (command == "selftest") {
    render_selftest(out, report);
  } else {
    if (command == "decompose") render_decompose(out, report);
    if (command == "basechange") render_basechange(out, report);
    if (command == "dual") render_dual(out, report);
    if (command == "abelian") render_abelian(out, report);
    checks(out, report["verdict"]);
  }
  if (report.contains("timing_ms")) out += fmt::format("time: {} ms\n", report["timing_ms"].get<double>());
  return out;
}

}  // namespace irindex::cli
