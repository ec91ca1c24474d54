#include "irindex/verify.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "irindex/base_change.hpp"
#include "irindex/bass.hpp"
#include "irindex/decomposition.hpp"
#include "irindex/duality.hpp"
#include "irindex/error.hpp"
#include "irindex/sample.hpp"
#include "irindex/univariate.hpp"

namespace irindex {

namespace {

class Tally {
 public:
  Tally(std::string scope, std::string name, bool exhaustive) {
    r_.scope = std::move(scope);
    r_.name = std::move(name);
    r_.exhaustive = exhaustive;
  }

  // Runs one case; exceptions from the library count as disagreements.
  template <typename Describe, typename Check>
  void run(Describe&& describe, Check&& check) {
    ++r_.cases;
    std::string why;
    try {
      if (check()) return;
    } catch (const std::exception& e) {
      why = fmt::format(" (threw {})", e.what());
    }
    if (r_.failures++ == 0) r_.first_failure = describe() + why;
  }

  LawResult result() { return std::move(r_); }

 private:
  LawResult r_;
};

std::string show(const MonomialIdeal& ideal) {
  return to_string(ideal, RingContext::standard(std::max<std::size_t>(ideal.nvars(), 1)));
}

std::vector<std::size_t> subset(std::uint32_t mask, std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i) {
    if ((mask >> i) & 1) out.push_back(i);
  }
  return out;
}

std::vector<Staircase> staircases_up_to(std::size_t max_size) {
  std::vector<Staircase> out;
  for (std::size_t n = 1; n <= 3; ++n) {
    for (auto& g : all_staircases(n, max_size)) out.push_back(std::move(g));
  }
  return out;
}

std::vector<MonomialIdeal> artinian_sample(const SuiteOptions& o) {
  return random_artinian_ideals(o.seed + 3, o.artinian_ideals, 3, 5, 4);
}

// Brute-force indices are shared by several group laws.
const BruteForceIndex& bruteforce(const FiniteAbelianGroup& g) {
  static std::mutex mutex;
  static std::map<FiniteAbelianGroup, BruteForceIndex> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(g);
  if (it == cache.end()) it = cache.emplace(g, sum_reducibility_index_bruteforce(g, 0)).first;
  return it->second;
}

bool is_prime_power(std::uint64_t n) {
  if (n < 2) return false;
  std::uint64_t p = 2;
  while (n % p != 0) ++p;
  while (n % p == 0) n /= p;
  return n == 1;
}

}  // namespace

std::vector<MonomialIdeal> standard_sample(const SuiteOptions& options) {
  auto sample = random_ideals(options.seed, options.random_ideals, 4, 5, 5);
  for (auto& ideal : all_ideals_in_box(2, 3)) sample.push_back(std::move(ideal));
  return sample;
}

// Monomial arithmetic

LawResult law_colon_membership(const SuiteOptions& options) {
  Tally t("monomial", "v in I:u iff uv in I", false);
  Sampler s(options.seed + 11);
  for (int i = 0; i < 500; ++i) {
    const auto n = static_cast<std::size_t>(s.between(1, 4));
    const auto ideal = s.ideal(n, 5, 5);
    const auto u = s.monomial(n, 4), v = s.monomial(n, 4);
    t.run([&] { return fmt::format("I = {}", show(ideal)); },
          [&] { return contains(colon(ideal, u), v) == contains(ideal, u * v); });
  }
  return t.result();
}

LawResult law_intersection_membership(const SuiteOptions& options) {
  Tally t("monomial", "w in I∩J iff w in I and w in J", false);
  Sampler s(options.seed + 12);
  for (int i = 0; i < 500; ++i) {
    const auto n = static_cast<std::size_t>(s.between(1, 4));
    const auto a = s.ideal(n, 5, 4), b = s.ideal(n, 5, 4);
    const auto w = s.monomial(n, 7);
    t.run([&] { return fmt::format("I = {}, J = {}", show(a), show(b)); },
          [&] { return contains(intersect(a, b), w) == (contains(a, w) && contains(b, w)); });
  }
  return t.result();
}

LawResult law_minimal_generators(const SuiteOptions& options) {
  Tally t("monomial", "minimal generators form an antichain generating I", false);
  Sampler s(options.seed + 13);
  for (int i = 0; i < 500; ++i) {
    const auto n = static_cast<std::size_t>(s.between(1, 4));
    std::vector<Monomial> gens;
    const auto count = s.between(1, 8);
    for (std::uint64_t j = 0; j < count; ++j) gens.push_back(s.monomial(n, 4));
    t.run([&] { return fmt::format("{} generators in {} variables", gens.size(), n); },
          [&] {
            const MonomialIdeal ideal(n, gens);
            const auto& mins = ideal.generators();
            if (!std::is_sorted(mins.begin(), mins.end())) return false;
            for (const auto& g : gens) {
              if (!contains(ideal, g)) return false;
            }
            for (const auto& m : mins) {
              if (std::find(gens.begin(), gens.end(), m) == gens.end()) return false;
              for (const auto& other : mins) {
                if (m != other && divides(m, other)) return false;
              }
            }
            return true;
          });
  }
  return t.result();
}

// Decompositions and Bass numbers

LawResult law_ir_equals_bass_sum(const std::vector<MonomialIdeal>& sample) {
  Tally t("bass", "ir = sum of mu0 over Ass", false);
  for (const auto& ideal : sample) {
    t.run([&] { return fmt::format("I = {}", show(ideal)); },
          [&] {
            return reducibility_index_by_decomposition(ideal) ==
                   reducibility_index_by_bass(ideal).ir_by_formula;
          });
  }
  return t.result();
}

LawResult law_strategy_independence(const std::vector<MonomialIdeal>& sample, std::uint64_t seed) {
  Tally t("decomposition", "irredundant decomposition independent of the split order", false);
  std::uint64_t k = 0;
  for (const auto& ideal : sample) {
    ++k;
    t.run([&] { return fmt::format("I = {}", show(ideal)); },
          [&] {
            const auto a = decompose(ideal, SplitStrategy::first());
            const auto b = decompose(ideal, SplitStrategy::last());
            const auto c = decompose(ideal, SplitStrategy::random(seed + k));
            return a == b && b == c;
          });
  }
  return t.result();
}

LawResult law_components_per_prime(const std::vector<MonomialIdeal>& sample) {
  Tally t("decomposition", "components with radical p number mu0(p)", false);
  for (const auto& ideal : sample) {
    t.run([&] { return fmt::format("I = {}", show(ideal)); },
          [&] {
            std::map<std::vector<std::size_t>, std::size_t> per_prime;
            const auto d = decompose(ideal);
            for (const auto& c : d.components()) ++per_prime[c.support()];
            for (const auto& [support, count] : per_prime) {
              if (bass0(ideal, MonomialPrime(ideal.nvars(), support)).mu0 != count) return false;
            }
            return true;
          });
  }
  return t.result();
}

LawResult law_ass_oracle(const std::vector<MonomialIdeal>& sample) {
  Tally t("bass", "Ass from components equals Ass from colon ideals", false);
  for (const auto& ideal : sample) {
    t.run([&] { return fmt::format("I = {}", show(ideal)); },
          [&] {
            auto a = associated_primes(ideal);
            auto b = ass_by_colon_scan(ideal);
            std::sort(a.begin(), a.end());
            std::sort(b.begin(), b.end());
            return a == b;
          });
  }
  return t.result();
}

LawResult law_ir_one_criterion(const std::vector<MonomialIdeal>& sample) {
  Tally t("bass", "ir = 1 iff one associated prime with mu0 = 1", false);
  for (const auto& ideal : sample) {
    t.run([&] { return fmt::format("I = {}", show(ideal)); },
          [&] { return is_ir_one(ideal).value == (decompose(ideal).size() == 1); });
  }
  return t.result();
}

// Flat base change

LawResult law_extension_invariance(const SuiteOptions& options) {
  Tally t("basechange", "ir unchanged by adjoining 1 or 2 variables", false);
  for (const auto& ideal : random_ideals(options.seed + 1, options.extension_ideals, 4, 5, 5)) {
    const auto ring = RingContext::standard(ideal.nvars());
    for (std::size_t extra = 1; extra <= 2; ++extra) {
      t.run([&] { return fmt::format("I = {}, {} new variables", show(ideal), extra); },
            [&] {
              const auto r = check_base_change(ideal, PolynomialExtension{extra}, ring);
              return r.pass() && r.ir_before == r.ir_after;
            });
    }
  }
  return t.result();
}

LawResult law_localization(const SuiteOptions& options) {
  Tally t("basechange", "localization formula with bound and equality criterion", false);
  for (const auto& ideal : random_ideals(options.seed + 2, options.localization_ideals, 3, 5, 5)) {
    const auto n = ideal.nvars();
    const auto ring = RingContext::standard(n);
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      const auto inverted = subset(mask, n);
      t.run(
          [&] { return fmt::format("I = {}, inverting {}", show(ideal), fmt::join(inverted, ",")); },
          [&] {
            const auto r = localize_index(ideal, inverted, ring);
            return r.pass() && r.ir_after <= r.ir_before;
          });
    }
  }
  return t.result();
}

// Univariate polynomials

LawResult law_field_extension(std::uint32_t p, unsigned max_degree, std::vector<unsigned> degrees) {
  Tally t("univariate",
          fmt::format("GF({}) -> GF({}^k), k in {{{}}}: fiber formula, chain, equality criterion", p,
                      p, fmt::join(degrees, ",")),
          true);
  const auto base = FiniteField::prime(p);
  const PolyRing ring(base);
  for (auto k : degrees) {
    const auto ext = FiniteField::with_degree(p, k);
    for (const auto& f : all_polynomials(base, 1, max_degree)) {
      t.run([&] { return fmt::format("f = {} to {}", ring.format(f), ext.name()); },
            [&] {
              const auto r = base_change_field(f, base, ext);
              return r.pass() && r.chain_holds.has_value();
            });
    }
  }
  return t.result();
}

LawResult law_hypersurface(std::uint32_t p, unsigned max_degree) {
  Tally t("univariate", fmt::format("GF({})[x]/(f): ir = 1 iff one distinct irreducible factor", p),
          true);
  const PolyRing ring(FiniteField::prime(p));
  for (const auto& f : all_polynomials(ring.field(), 1, max_degree)) {
    t.run([&] { return fmt::format("f = {}", ring.format(f)); },
          [&] {
            const auto ir = ir_hypersurface(ring, f);
            const auto distinct = factor_by_berlekamp(ring, f).factors.size();
            return (ir == 1) == (distinct == 1) && ir == distinct;
          });
  }
  return t.result();
}

LawResult law_factorization_routes(std::uint32_t q, unsigned max_degree) {
  Tally t("univariate", fmt::format("GF({}): trial division and Berlekamp agree", q), true);
  std::uint32_t p = 2;
  while (q % p != 0) ++p;
  unsigned k = 0;
  for (auto r = q; r > 1; r /= p) ++k;
  const PolyRing ring(FiniteField::with_degree(p, k));
  for (const auto& f : all_polynomials(ring.field(), 1, max_degree)) {
    t.run([&] { return fmt::format("f = {}", ring.format(f)); },
          [&] {
            const auto a = factor_by_trial_division(ring, f);
            const auto b = factor_by_berlekamp(ring, f);
            return a == b && expand(ring, a) == f;
          });
  }
  return t.result();
}

// Finite-length duality

LawResult law_duality_indices(const std::vector<MonomialIdeal>& sample, const SuiteOptions& options) {
  Tally t("duality", "ir = ir' of the dual = fewest principal downsets covering", false);
  auto check = [&](const MonomialIdeal& ideal) {
    t.run([&] { return fmt::format("I = {}", show(ideal)); },
          [&] { return check_finite_length_duality(ideal).pass(); });
  };
  for (const auto& ideal : sample) {
    if (!ideal.is_unit() && is_finite_colength(ideal)) check(ideal);
  }
  for (const auto& ideal : artinian_sample(options)) check(ideal);
  for (const auto& g : staircases_up_to(options.cover_staircase_size)) check(ideal_of(g));
  return t.result();
}

LawResult law_cover_uniqueness(std::size_t max_size) {
  Tally t("duality", fmt::format("irredundant covers equicardinal, |Γ| <= {}", max_size), true);
  for (const auto& g : staircases_up_to(max_size)) {
    t.run([&] { return fmt::format("I = {}", show(ideal_of(g))); },
          [&] {
            const auto r = min_cover_oracle(g);
            const auto corners = maximal_elements(g).size();
            return r.enumerated_all && r.uniform() && r.minimum == corners &&
                   r.irredundant_cover_sizes.front() == corners;
          });
  }
  return t.result();
}

LawResult law_socle_corners(const SuiteOptions& options) {
  Tally t("duality", "dim Soc(M) = number of staircase corners", false);
  auto ideals = artinian_sample(options);
  for (const auto& g : staircases_up_to(8)) ideals.push_back(ideal_of(g));
  for (const auto& ideal : ideals) {
    t.run([&] { return fmt::format("I = {}", show(ideal)); },
          [&] {
            return bass0(ideal, MonomialPrime::full(ideal.nvars())).mu0 ==
                   maximal_elements(staircase(ideal)).size();
          });
  }
  return t.result();
}

LawResult law_top_dimension(const SuiteOptions& options) {
  Tally t("duality", "ir'(A) = dim A/mA for A = D(M)", false);
  std::vector<Staircase> gs;
  for (const auto& ideal : artinian_sample(options)) gs.push_back(staircase(ideal));
  for (auto& g : staircases_up_to(8)) gs.push_back(std::move(g));
  for (const auto& g : gs) {
    t.run([&] { return fmt::format("I = {}", show(ideal_of(g))); },
          [&] {
            // m·A is spanned by (u/x_i)*, i.e. by the v with some x_i·v in Γ.
            std::size_t in_m_a = 0;
            for (const auto& v : g.monomials()) {
              for (std::size_t i = 0; i < g.nvars(); ++i) {
                if (g.contains(v * Monomial::variable(g.nvars(), i))) {
                  ++in_m_a;
                  break;
                }
              }
            }
            const auto top = g.size() - in_m_a;
            const auto ir_prime = g.size() <= kMinCoverCap ? min_cover_oracle(g).minimum
                                                           : sum_irreducible_representation(g).index();
            return top == ir_prime;
          });
  }
  return t.result();
}

LawResult law_dual_intersection(std::size_t max_size) {
  Tally t("duality",
          fmt::format("D(A/B) ∩ D(A/C) = 0 iff A = B + C, all downset pairs, |Γ| <= {}", max_size),
          true);
  for (const auto& g : staircases_up_to(max_size)) {
    const auto downsets = all_downsets(g);
    for (std::size_t i = 0; i < downsets.size(); ++i) {
      for (std::size_t j = i; j < downsets.size(); ++j) {
        t.run([&] { return fmt::format("I = {}, pair {},{}", show(ideal_of(g)), i, j); },
              [&] {
                const auto [meet_zero, sum_all] = dual_intersection_vs_sum(g, downsets[i], downsets[j]);
                return meet_zero == sum_all;
              });
      }
    }
  }
  return t.result();
}

LawResult law_irreducible_vs_dual(const SuiteOptions& options) {
  Tally t("duality", "0 irreducible in M iff D(M) sum-irreducible", false);
  auto ideals = artinian_sample(options);
  for (const auto& g : staircases_up_to(8)) ideals.push_back(ideal_of(g));
  for (const auto& ideal : ideals) {
    t.run([&] { return fmt::format("I = {}", show(ideal)); },
          [&] {
            const auto [irreducible, sum_irreducible] = irreducible_vs_dual_sum_irreducible(ideal);
            return irreducible == sum_irreducible;
          });
  }
  return t.result();
}

LawResult law_staircase_quotients(std::size_t max_size) {
  Tally t("duality", fmt::format("ir'(A/B) <= ir'(A) for A = D(M), |Γ| <= {}", max_size), true);
  for (const auto& g : staircases_up_to(max_size)) {
    const auto ir_prime = maximal_elements(g).size();
    for (const auto& b : all_downsets(g)) {
      t.run([&] { return fmt::format("I = {}, |B| = {}", show(ideal_of(g)), b.size()); },
            [&] {
              const auto q = quotient_index(g, b);
              if (q > ir_prime) return false;
              // A sum-irreducible A has sum-irreducible nonzero quotients.
              return ir_prime != 1 || b.size() == g.size() || q == 1;
            });
    }
  }
  return t.result();
}

// Finite abelian groups

LawResult law_group_index_formula(std::uint64_t max_order) {
  Tally t("abelian", fmt::format("brute-force ir' = number of cyclic factors, |A| <= {}", max_order),
          true);
  for (const auto& g : groups_up_to(max_order)) {
    t.run([&] { return to_string(g); },
          [&] { return bruteforce(g).index == sum_reducibility_index_formula(g); });
  }
  return t.result();
}

LawResult law_group_uniqueness(std::uint64_t max_order) {
  Tally t("abelian", fmt::format("irredundant sum representations equicardinal, |A| <= {}", max_order),
          true);
  for (const auto& g : groups_up_to(max_order)) {
    t.run([&] { return to_string(g); },
          [&] { return bruteforce(g).uniform() && bruteforce(g).representation_count > 0; });
  }
  return t.result();
}

LawResult law_group_additivity(std::uint64_t max_order) {
  Tally t("abelian", fmt::format("ir' additive over primary components, |A| <= {}", max_order), true);
  for (const auto& g : groups_up_to(max_order)) {
    t.run([&] { return to_string(g); },
          [&] {
            std::size_t parts = 0;
            for (auto p : g.primes()) parts += bruteforce(g.primary_part(p)).index;
            return bruteforce(g).index == parts && p3c_check(g).pass();
          });
  }
  return t.result();
}

LawResult law_attached_bound(std::uint64_t max_order) {
  Tally t("abelian", fmt::format("ir' >= |Att|, |A| <= {}", max_order), true);
  for (const auto& g : groups_up_to(max_order)) {
    if (g.is_trivial()) continue;
    t.run([&] { return to_string(g); },
          [&] { return bruteforce(g).index >= attached_primes(g).size(); });
  }
  return t.result();
}

LawResult law_group_quotients(std::uint64_t max_order) {
  Tally t("abelian", fmt::format("ir'(A/B) <= ir'(A) for every B, |A| <= {}", max_order), true);
  for (const auto& g : groups_up_to(max_order)) {
    t.run([&] { return to_string(g); }, [&] { return quotient_monotonicity_check(g).pass(); });
  }
  return t.result();
}

LawResult law_sum_irreducible_cyclic(std::uint64_t max_order) {
  Tally t("abelian", fmt::format("sum-irreducible iff cyclic of prime-power order, |A| <= {}", max_order),
          true);
  for (const auto& g : groups_up_to(max_order)) {
    if (g.is_trivial()) continue;
    t.run([&] { return to_string(g); },
          [&] {
            const auto flagged = sum_irreducible_subgroups(g);
            for (const auto& h : all_subgroups(g)) {
              if (h.size() == 1) continue;
              const bool cyclic = std::any_of(h.elements.begin(), h.elements.end(), [&](auto x) {
                return cyclic_subgroup(g, x).size() == h.size();
              });
              const bool expected = cyclic && is_prime_power(h.size());
              const bool got = std::binary_search(flagged.begin(), flagged.end(), h, [](const Subgroup& a, const Subgroup& b) {
                return a.size() != b.size() ? a.size() < b.size() : a.elements < b.elements;
              });
              if (expected != got) return false;
            }
            return true;
          });
  }
  return t.result();
}

LawResult law_secondary_components(std::uint64_t max_order) {
  Tally t("abelian", fmt::format("primary components are p-secondary, |A| <= {}", max_order), true);
  for (const auto& g : groups_up_to(max_order)) {
    if (g.is_trivial()) continue;
    t.run([&] { return to_string(g); },
          [&] {
            const auto rep = secondary_representation(g);
            std::vector<std::uint64_t> primes;
            for (const auto& c : rep.components) primes.push_back(c.prime);
            return rep.valid() && primes == attached_primes(g);
          });
  }
  return t.result();
}

// Suites

bool SelftestReport::pass() const noexcept {
  return std::all_of(laws.begin(), laws.end(), [](const LawResult& l) { return l.pass(); });
}

const std::vector<std::string>& selftest_scopes() {
  static const std::vector<std::string> scopes{"all",        "monomial",   "decomposition", "bass",
                                               "basechange", "univariate", "duality",       "abelian"};
  return scopes;
}

const std::vector<std::string>& documented_untested() {
  static const std::vector<std::string> items{
      "strict inequality ir(M) < ir'(D(M)) over a local ring that is not complete: the known "
      "witness ring has no finite presentation",
      "ir(R) < ir of the completion of R: needs the same non-constructible ring",
      "additivity of ir' when an attached prime is embedded: finite-length modules and finite "
      "groups have no embedded attached primes",
  };
  return items;
}

SelftestReport run_selftest(std::string_view scope, const SuiteOptions& options) {
  const auto& scopes = selftest_scopes();
  if (std::find(scopes.begin(), scopes.end(), scope) == scopes.end()) {
    throw Error(ErrorKind::InvalidArgument,
                fmt::format("unknown scope '{}' (expected one of {})", scope, fmt::join(scopes, ", ")));
  }
  SelftestReport report;
  report.scope = std::string(scope);
  report.seed = options.seed;
  report.documented_untested = documented_untested();
  auto wanted = [&](std::string_view s) { return scope == "all" || scope == s; };
  auto& laws = report.laws;

  if (wanted("monomial")) {
    laws.push_back(law_colon_membership(options));
    laws.push_back(law_intersection_membership(options));
    laws.push_back(law_minimal_generators(options));
  }
  std::vector<MonomialIdeal> sample;
  if (wanted("decomposition") || wanted("bass") || wanted("duality")) sample = standard_sample(options);
  if (wanted("decomposition")) {
    laws.push_back(law_strategy_independence(sample, options.seed));
    laws.push_back(law_components_per_prime(sample));
  }
  if (wanted("bass")) {
    laws.push_back(law_ir_equals_bass_sum(sample));
    laws.push_back(law_ass_oracle(sample));
    laws.push_back(law_ir_one_criterion(sample));
  }
  if (wanted("basechange")) {
    laws.push_back(law_extension_invariance(options));
    laws.push_back(law_localization(options));
  }
  if (wanted("univariate")) {
    laws.push_back(law_field_extension(2, 5, {2, 3}));
    laws.push_back(law_field_extension(3, 3, {2}));
    laws.push_back(law_hypersurface(2, 6));
    laws.push_back(law_hypersurface(3, 4));
    laws.push_back(law_factorization_routes(2, 6));
    laws.push_back(law_factorization_routes(4, 4));
  }
  if (wanted("duality")) {
    laws.push_back(law_duality_indices(sample, options));
    laws.push_back(law_cover_uniqueness(options.cover_staircase_size));
    laws.push_back(law_socle_corners(options));
    laws.push_back(law_top_dimension(options));
    laws.push_back(law_dual_intersection(options.downset_staircase_size));
    laws.push_back(law_irreducible_vs_dual(options));
    laws.push_back(law_staircase_quotients(options.downset_staircase_size));
  }
  if (wanted("abelian")) {
    const auto order = std::min(options.max_group_order, kMaxOracleOrder);
    laws.push_back(law_group_index_formula(order));
    laws.push_back(law_group_uniqueness(order));
    laws.push_back(law_group_additivity(order));
    laws.push_back(law_attached_bound(order));
    laws.push_back(law_group_quotients(std::min(order, options.max_quotient_order)));
    laws.push_back(law_sum_irreducible_cyclic(order));
    laws.push_back(law_secondary_components(order));
  }
  return report;
}

}  // namespace irindex
