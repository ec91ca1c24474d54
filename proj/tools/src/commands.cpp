#include "irindex_cli/commands.hpp"

#include <algorithm>

#include <fmt/format.h>

#include "irindex/abelian.hpp"
#include "irindex/base_change.hpp"
#include "irindex/bass.hpp"
#include "irindex/decomposition.hpp"
#include "irindex/duality.hpp"
#include "irindex/error.hpp"
#include "irindex/parse.hpp"
#include "irindex/univariate.hpp"
#include "irindex/verify.hpp"

namespace irindex::cli {

namespace {

constexpr std::size_t kMaxListedMonomials = 400;

Json header(const char* command) {
  Json r;
  r["command"] = command;
  r["version"] = IRINDEX_VERSION;
  return r;
}

Json ideal_input(const IdealInput& in) {
  Json gens = Json::array();
  for (const auto& g : in.ideal.generators()) gens.push_back(to_string(g, in.ring));
  return Json{{"ring", in.ring.names()}, {"generators", gens}, {"canonical", canonical_text(in)}};
}

Json prime_list(const std::vector<MonomialPrime>& primes, const RingContext& ring) {
  Json out = Json::array();
  for (const auto& p : primes) out.push_back(to_string(p, ring));
  return out;
}

Json monomial_list(const std::vector<Monomial>& ms, const RingContext& ring) {
  Json out = Json::array();
  for (const auto& u : ms) out.push_back(to_string(u, ring));
  return out;
}

Json base_change_results(const BaseChangeReport& r) {
  Json fibers = Json::array();
  for (const auto& f : r.per_prime) {
    fibers.push_back({{"prime", f.prime}, {"mu0", f.mu0}, {"fiber_ir", f.fiber_ir}});
  }
  return Json{{"kind", to_string(r.kind)},
              {"faithfully_flat", r.faithfully_flat},
              {"ir_before", r.ir_before},
              {"ir_after", r.ir_after},
              {"formula_side", r.formula_side},
              {"t_bound", r.t_bound},
              {"per_prime", fibers}};
}

Json base_change_verdict(const BaseChangeReport& r) {
  Json v{{"formula_holds", r.formula_holds}, {"upper_bound_holds", r.upper_bound_holds}};
  v["chain_holds"] = r.chain_holds ? Json(*r.chain_holds) : Json(nullptr);
  v["equality_criterion_holds"] = r.equality_criterion_holds;
  v["pass"] = r.pass();
  return v;
}

std::string coordinates(const FiniteAbelianGroup& g, std::uint32_t code) {
  std::string out = "(";
  const auto c = g.decode(code);
  for (std::size_t i = 0; i < c.size(); ++i) out += fmt::format("{}{}", i ? "," : "", c[i]);
  return out + ")";
}

// Cyclic subgroups print as <generator>, anything else by its order.
std::string describe(const FiniteAbelianGroup& g, const Subgroup& h) {
  for (auto x : h.elements) {
    if (cyclic_subgroup(g, x).size() == h.size()) return fmt::format("<{}>", coordinates(g, x));
  }
  return fmt::format("subgroup of order {}", h.size());
}

}  // namespace

Json cmd_decompose(const std::string& text, std::uint64_t seed) {
  const auto in = parse_ideal(text);
  const auto& ideal = in.ideal;
  const auto& ring = in.ring;
  if (ideal.is_unit()) throw Error(ErrorKind::UnitIdeal, "the unit ideal has no decomposition");

  const auto d = decompose(ideal, SplitStrategy::first());
  const bool strategies_agree = d == decompose(ideal, SplitStrategy::last()) &&
                                d == decompose(ideal, SplitStrategy::random(seed));
  const auto bass = reducibility_index_by_bass(ideal);
  auto ass = associated_primes(ideal);
  auto ass_colon = ass_by_colon_scan(ideal);
  std::sort(ass.begin(), ass.end());
  std::sort(ass_colon.begin(), ass_colon.end());
  const auto one = is_ir_one(ideal);

  Json components = Json::array();
  for (const auto& c : d.components()) {
    components.push_back({{"ideal", to_string(c, ring)},
                          {"exponents", std::vector<Exponent>(c.bounds().begin(), c.bounds().end())},
                          {"radical", to_string(MonomialPrime(ideal.nvars(), c.support()), ring)}});
  }
  Json entries = Json::array();
  for (const auto& e : bass.entries) {
    entries.push_back({{"prime", to_string(e.prime, ring)},
                       {"mu0", e.value.mu0},
                       {"witnesses", monomial_list(e.value.witnesses, ring)}});
  }

  auto r = header("decompose");
  r["input"] = ideal_input(in);
  r["results"] = {{"ir", d.size()},
                  {"domain_case", d.is_domain_case()},
                  {"components", components},
                  {"ass", prime_list(ass, ring)},
                  {"bass", entries},
                  {"ir_by_bass", bass.ir_by_formula},
                  {"ass_by_colon", prime_list(ass_colon, ring)},
                  {"ir_one", {{"value", one.value}, {"reason", one.reason}}}};
  const bool counts = d.size() == bass.ir_by_formula;
  const bool ass_agree = ass == ass_colon;
  const bool one_agrees = one.value == (d.size() == 1);
  r["verdict"] = {{"decomposition_equals_bass", counts},
                  {"ass_routes_agree", ass_agree},
                  {"strategies_agree", strategies_agree},
                  {"ir_one_consistent", one_agrees},
                  {"pass", counts && ass_agree && strategies_agree && one_agrees}};
  return r;
}

Json cmd_basechange(const std::string& text, const std::string& descriptor) {
  const auto change = parse_descriptor(descriptor);
  auto r = header("basechange");

  if (const auto* field = std::get_if<FieldDescriptor>(&change)) {
    const auto in = parse_poly(text);
    const auto& base = in.field;
    if (!base.is_prime_field()) {
      throw Error(ErrorKind::InvalidArgument, "field extensions start from a prime field");
    }
    if (field->from && *field->from != base.size()) {
      throw Error(ErrorKind::InvalidArgument,
                  fmt::format("descriptor starts at GF({}) but f is over {}", *field->from, base.name()));
    }
    const auto [p, k] = parse_field_name(fmt::format("GF({})", field->to));
    if (p != base.characteristic()) {
      throw Error(ErrorKind::InvalidArgument,
                  fmt::format("GF({}) does not contain {}", field->to, base.name()));
    }
    auto ext = FiniteField::with_degree(p, k);
    for (const auto& e : in.extensions) {
      if (e.size() == field->to) ext = e;
    }
    const auto report = base_change_field(in.f, base, ext);
    const PolyRing small(base), prime_ring(FiniteField::prime(p));
    r["input"] = {{"polynomial", small.format(in.f, in.var)},
                  {"field", base.name()},
                  {"extension", ext.name()},
                  {"extension_modulus", prime_ring.format(UniPoly(ext.modulus()), "t")},
                  {"descriptor", canonical_text(change)},
                  {"canonical", canonical_text(in)}};
    r["results"] = base_change_results(report);
    r["verdict"] = base_change_verdict(report);
    return r;
  }

  const auto in = parse_ideal(text);
  const auto& ring = in.ring;
  MonomialBaseChange mono;
  Json after;
  if (const auto* e = std::get_if<ExtendDescriptor>(&change)) {
    mono = PolynomialExtension{e->extra};
    if (e->extra > 0) {
      const auto big = ring.extend(e->extra);
      after = {{"ring", big.names()},
               {"ideal", to_string(extend_polynomial(in.ideal, e->extra), big)}};
    }
  } else {
    const auto& names = std::get<InvertDescriptor>(change).names;
    std::vector<std::size_t> inverted;
    for (const auto& n : names) {
      const auto i = ring.index_of(n);
      if (!i) throw Error(ErrorKind::InvalidArgument, fmt::format("'{}' is not a ring variable", n));
      inverted.push_back(*i);
    }
    std::sort(inverted.begin(), inverted.end());
    inverted.erase(std::unique(inverted.begin(), inverted.end()), inverted.end());
    std::vector<std::size_t> kept;
    for (std::size_t i = 0; i < ring.size(); ++i) {
      if (!std::binary_search(inverted.begin(), inverted.end(), i)) kept.push_back(i);
    }
    if (!kept.empty()) {
      const auto small = ring.restrict_to(kept);
      after = {{"ring", small.names()}, {"ideal", to_string(localized_ideal(in.ideal, kept), small)}};
    }
    mono = Localization{std::move(inverted)};
  }
  const auto report = check_base_change(in.ideal, mono, ring);
  r["input"] = ideal_input(in);
  r["input"]["descriptor"] = canonical_text(change);
  r["results"] = base_change_results(report);
  r["results"]["after"] = after.is_null() ? Json(nullptr) : after;
  r["verdict"] = base_change_verdict(report);
  return r;
}

Json cmd_dual(const std::string& text) {
  const auto in = parse_ideal(text);
  const auto& ring = in.ring;
  if (in.ideal.is_unit()) throw Error(ErrorKind::UnitIdeal, "R/(1) is the zero module");
  const auto g = staircase(in.ideal);
  const auto report = check_finite_length_duality(in.ideal);

  auto r = header("dual");
  r["input"] = ideal_input(in);
  Json res;
  res["length"] = g.size();
  res["staircase"] = g.size() <= kMaxListedMonomials ? monomial_list(g.monomials(), ring) : Json(nullptr);
  res["maximal"] = monomial_list(maximal_elements(g), ring);
  res["ir_prime"] = report.ir_prime;
  res["ir_by_decomposition"] = report.ir_by_decomposition;
  res["ir_by_bass"] = report.ir_by_bass;
  res["min_cover"] = report.min_cover ? Json(*report.min_cover) : Json(nullptr);
  if (g.size() <= kAllCoversCap) {
    const auto oracle = min_cover_oracle(g);
    res["irredundant_covers"] = {{"count", oracle.irredundant_cover_count},
                                 {"sizes_uniform", oracle.uniform()}};
  }
  res["grid"] = ring.size() == 2 && g.size() <= kMaxListedMonomials ? Json(render(g, ring)) : Json(nullptr);
  r["results"] = res;
  r["verdict"] = {{"ir_equals_ir_prime", report.ir_by_decomposition == report.ir_prime},
                  {"bass_agrees", report.ir_by_bass == report.ir_prime},
                  {"min_cover_agrees", report.min_cover.value_or(report.ir_prime) == report.ir_prime},
                  {"covers_uniform", report.covers_uniform},
                  {"pass", report.pass()}};
  return r;
}

Json cmd_abelian(const std::string& text, std::uint64_t max_order) {
  if (max_order == 0 || max_order > kMaxOracleOrder) {
    throw Error(ErrorKind::InvalidArgument,
                fmt::format("--max-order must lie in [1, {}]", kMaxOracleOrder));
  }
  const auto g = parse_group(text);
  auto r = header("abelian");
  r["input"] = {{"group", to_string(g)},
                {"cyclic_orders", g.cyclic_orders()}, {"canonical", canonical_text(g)}};

  Json res;
  res["order"] = g.order();
  res["ir_formula"] = sum_reducibility_index_formula(g);
  bool pass = true;
  Json verdict;

  if (!g.is_trivial()) {
    res["attached_primes"] = attached_primes(g);
    if (g.order() <= kMaxElementOrder) {
      const auto sec = secondary_representation(g);
      Json comps = Json::array();
      for (const auto& c : sec.components) {
        comps.push_back({{"prime", c.prime},
                         {"order", c.component.size()},
                         {"nilpotent", c.nilpotent},
                         {"surjective", c.surjective}});
      }
      res["secondary_representation"] = comps;
      verdict["secondary_valid"] = sec.valid();
      pass = pass && sec.valid();
    }
  }

  if (g.order() <= max_order) {
    const auto brute = sum_reducibility_index_bruteforce(g, 1);
    Json sample = Json::array();
    if (!brute.samples.empty()) {
      for (const auto& h : brute.samples.front()) sample.push_back(describe(g, h));
    }
    res["bruteforce"] = {{"ir_prime", brute.index},
                         {"representations", brute.representation_count},
                         {"cardinalities", brute.cardinalities},
                         {"example", sample}};
    if (!g.is_trivial()) res["sum_irreducible"] = is_sum_irreducible(g);

    const bool agrees = brute.index == sum_reducibility_index_formula(g);
    verdict["bruteforce_equals_formula"] = agrees;
    verdict["representations_equicardinal"] = brute.uniform();
    pass = pass && agrees && brute.uniform();
    if (!g.is_trivial()) {
      const auto add = p3c_check(g);
      Json parts = Json::array();
      for (const auto& [p, ir] : add.per_prime) parts.push_back({{"prime", p}, {"ir_prime", ir}});
      res["additivity"] = {{"per_prime", parts},
                           {"sum_of_parts", add.sum_of_parts},
                           {"embedded_hypothesis",
                            "vacuous: attached primes pZ are maximal and pairwise incomparable"}};
      verdict["additivity"] = add.pass();
      pass = pass && add.pass();
    }

    if (g.order() <= std::min(kMaxQuotientOrder, max_order)) {
      const auto q = quotient_monotonicity_check(g);
      std::uint64_t worst = 0;
      for (const auto& e : q.entries) worst = std::max<std::uint64_t>(worst, e.ir_prime);
      res["quotients"] = {{"subgroups", q.entries.size()},
                          {"max_quotient_ir_prime", worst},
                          {"violations", q.violations},
                          {"irreducibility_inherited", q.irreducibility_inherited}};
      verdict["quotient_monotonicity"] = q.pass();
      pass = pass && q.pass();
    }
  } else {
    res["bruteforce"] = nullptr;
    res["bruteforce_skipped"] = fmt::format("order {} exceeds --max-order {}", g.order(), max_order);
  }
  r["results"] = res;
  verdict["pass"] = pass;
  r["verdict"] = verdict;
  return r;
}

Json cmd_selftest(const std::string& scope, std::uint64_t seed, std::uint64_t max_order) {
  if (max_order == 0 || max_order > kMaxOracleOrder) {
    throw Error(ErrorKind::InvalidArgument,
                fmt::format("--max-order must lie in [1, {}]", kMaxOracleOrder));
  }
  SuiteOptions options;
  options.seed = seed;
  options.max_group_order = max_order;
  const auto report = run_selftest(scope, options);

  auto r = header("selftest");
  r["input"] = {{"scope", scope}, {"seed", seed}, {"max_order", max_order}};
  Json laws = Json::array();
  Json summary = Json::object();
  for (const auto& law : report.laws) {
    Json l{{"scope", law.scope},
           {"law", law.name},
           {"cases", law.cases},
           {"failures", law.failures},
           {"exhaustive", law.exhaustive},
           {"pass", law.pass()}};
    if (!law.first_failure.empty()) l["first_failure"] = law.first_failure;
    laws.push_back(std::move(l));
    auto& s = summary[law.scope];
    if (s.is_null()) s = {{"laws", 0}, {"cases", 0}, {"failures", 0}};
    s["laws"] = s["laws"].get<std::uint64_t>() + 1;
    s["cases"] = s["cases"].get<std::uint64_t>() + law.cases;
    s["failures"] = s["failures"].get<std::uint64_t>() + law.failures;
  }
  r["results"] = {{"laws", laws}, {"summary", summary}, {"documented_untested", report.documented_untested}};
  r["verdict"] = {{"pass", report.pass()}};
  return r;
}

int exit_code(const Json& report) {
  const auto it = report.find("verdict");
  return it != report.end() && it->value("pass", false) ? 0 : 1;
}

Json error_report(const std::string& command, const std::exception& e, int& code) {
  auto r = header(command.c_str());
  code = 2;
  if (const auto* pe = dynamic_cast<const ParseError*>(&e)) {
    r["error"] = {{"kind", "ParseError"},
                  {"message", pe->message()},
                  {"line", pe->line()},
                  {"column", pe->column()}};
  } else if (const auto* err = dynamic_cast<const Error*>(&e)) {
    if (err->is_size_cap()) code = 3;
    r["error"] = {{"kind", to_string(err->kind())}, {"message", err->what()}};
  } else {
    r["error"] = {{"kind", "Internal"}, {"message", e.what()}};
  }
  return r;
}

}  // namespace irindex::cli
