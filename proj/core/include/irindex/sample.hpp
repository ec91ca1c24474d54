#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "irindex/finite_field.hpp"
#include "irindex/monomial.hpp"
#include "irindex/univariate.hpp"

namespace irindex {

/// Seeded source of random test inputs. Bounded draws reduce the raw
/// 64-bit output directly, so sequences do not depend on the standard
/// library's distribution implementation.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  /// In [0, n). n must be positive.
  std::uint64_t below(std::uint64_t n);
  /// In [lo, hi].
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }

  Monomial monomial(std::size_t nvars, Exponent max_exp);
  /// 1..max_gens generators with exponents <= max_exp, never the unit ideal.
  MonomialIdeal ideal(std::size_t nvars, Exponent max_exp, std::size_t max_gens);
  /// Like ideal() plus a pure power of every variable, so R/I has finite length.
  MonomialIdeal artinian_ideal(std::size_t nvars, Exponent max_exp, std::size_t max_gens);

 private:
  std::mt19937_64 rng_;
};

/// `count` proper ideals with a random number of variables in [1, max_vars].
std::vector<MonomialIdeal> random_ideals(std::uint64_t seed, std::size_t count, std::size_t max_vars,
                                         Exponent max_exp, std::size_t max_gens);
std::vector<MonomialIdeal> random_artinian_ideals(std::uint64_t seed, std::size_t count,
                                                  std::size_t max_vars, Exponent max_exp,
                                                  std::size_t max_gens);

/// Every proper monomial ideal (the zero ideal included) whose minimal
/// generators lie in the box [0, max_exp]^n. Throws TooLarge when the box
/// has more than 20 monomials.
std::vector<MonomialIdeal> all_ideals_in_box(std::size_t nvars, Exponent max_exp);

/// Every polynomial of degree in [min_degree, max_degree] over the field.
std::vector<UniPoly> all_polynomials(const FiniteField& field, unsigned min_degree,
                                     unsigned max_degree);

}  // namespace irindex
