#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "irindex/abelian.hpp"
#include "irindex/monomial.hpp"

namespace irindex {

// Property suites behind `irindex selftest` and the acceptance run. Each
// law computes the same quantity along independent routes and counts the
// cases where they disagree.

struct LawResult {
  std::string scope;
  std::string name;
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  bool exhaustive = false;
  /// Description of the first disagreement.
  std::string first_failure;
  bool pass() const noexcept { return cases > 0 && failures == 0; }
};

struct SuiteOptions {
  std::uint64_t seed = 42;
  /// Random ideals in at most 4 variables with exponents <= 5.
  std::size_t random_ideals = 1000;
  std::size_t extension_ideals = 500;
  /// Random ideals in at most 3 variables, every subset inverted.
  std::size_t localization_ideals = 200;
  std::size_t artinian_ideals = 300;
  std::uint64_t max_group_order = 64;
  std::uint64_t max_quotient_order = 32;
  /// Staircases up to this size get every pair of downsets checked.
  std::size_t downset_staircase_size = 10;
  /// Staircases up to this size get every irredundant cover enumerated.
  std::size_t cover_staircase_size = 12;
};

/// The seeded random sample plus every ideal of k[x,y] generated inside
/// the box [0,3]^2.
std::vector<MonomialIdeal> standard_sample(const SuiteOptions& options);

// Monomial arithmetic.
LawResult law_colon_membership(const SuiteOptions& options);
LawResult law_intersection_membership(const SuiteOptions& options);
LawResult law_minimal_generators(const SuiteOptions& options);

// Decompositions and Bass numbers.
LawResult law_ir_equals_bass_sum(const std::vector<MonomialIdeal>& sample);
LawResult law_strategy_independence(const std::vector<MonomialIdeal>& sample, std::uint64_t seed);
LawResult law_components_per_prime(const std::vector<MonomialIdeal>& sample);
LawResult law_ass_oracle(const std::vector<MonomialIdeal>& sample);
LawResult law_ir_one_criterion(const std::vector<MonomialIdeal>& sample);

// Flat base change of monomial ideals.
LawResult law_extension_invariance(const SuiteOptions& options);
LawResult law_localization(const SuiteOptions& options);

// Univariate polynomials over finite fields.
LawResult law_field_extension(std::uint32_t p, unsigned max_degree, std::vector<unsigned> degrees);
LawResult law_hypersurface(std::uint32_t p, unsigned max_degree);
LawResult law_factorization_routes(std::uint32_t q, unsigned max_degree);

// Finite-length duality.
LawResult law_duality_indices(const std::vector<MonomialIdeal>& sample, const SuiteOptions& options);
LawResult law_cover_uniqueness(std::size_t max_size);
LawResult law_socle_corners(const SuiteOptions& options);
LawResult law_top_dimension(const SuiteOptions& options);
LawResult law_dual_intersection(std::size_t max_size);
LawResult law_irreducible_vs_dual(const SuiteOptions& options);
LawResult law_staircase_quotients(std::size_t max_size);

// Finite abelian groups.
LawResult law_group_index_formula(std::uint64_t max_order);
LawResult law_group_uniqueness(std::uint64_t max_order);
LawResult law_group_additivity(std::uint64_t max_order);
LawResult law_attached_bound(std::uint64_t max_order);
LawResult law_group_quotients(std::uint64_t max_order);
LawResult law_sum_irreducible_cyclic(std::uint64_t max_order);
LawResult law_secondary_components(std::uint64_t max_order);

struct SelftestReport {
  std::string scope;
  std::uint64_t seed = 0;
  std::vector<LawResult> laws;
  std::vector<std::string> documented_untested;
  bool pass() const noexcept;
};

/// all, monomial, decomposition, bass, basechange, univariate, duality, abelian.
const std::vector<std::string>& selftest_scopes();

/// Throws InvalidArgument for an unknown scope.
SelftestReport run_selftest(std::string_view scope, const SuiteOptions& options);

/// Statements that hold but have no finite, constructible witness here.
const std::vector<std::string>& documented_untested();

}  // namespace irindex
