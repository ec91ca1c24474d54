#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "irindex/monomial.hpp"

namespace irindex {

/// p_S = (x_i : i in S). The empty support is the zero prime.
class MonomialPrime {
 public:
  MonomialPrime() = default;
  MonomialPrime(std::size_t nvars, std::vector<std::size_t> support);

  static MonomialPrime full(std::size_t nvars);

  std::size_t nvars() const noexcept { return nvars_; }
  const std::vector<std::size_t>& support() const noexcept { return support_; }
  bool contains(std::size_t i) const;
  /// Variables outside the support.
  std::vector<std::size_t> complement() const;
  bool meets(std::span<const std::size_t> vars) const;
  MonomialIdeal to_ideal() const;

  auto operator<=>(const MonomialPrime&) const = default;
  bool operator==(const MonomialPrime&) const = default;

 private:
  std::size_t nvars_ = 0;
  std::vector<std::size_t> support_;
};

std::string to_string(const MonomialPrime& p, const RingContext& ring);

/// Image of I after inverting every variable outside `vars` (x_j <- 1),
/// as an ideal in the variables `vars`, listed in the given order.
MonomialIdeal localized_ideal(const MonomialIdeal& ideal, std::span<const std::size_t> vars);
inline MonomialIdeal localized_ideal(const MonomialIdeal& ideal, const MonomialPrime& p) {
  return localized_ideal(ideal, p.support());
}

/// mu_0(p_S, R/I) together with the socle monomials that witness it.
/// Witnesses are reported in the ambient ring (zero outside S).
struct Bass0 {
  std::size_t mu0 = 0;
  std::vector<Monomial> witnesses;
};

/// Socle dimension of (R/I)_p over k(p). Since k(p) = k(x_j : j not in S)
/// only rescales monomials, the socle has a monomial basis: u with u not in
/// J and x_i u in J for every i in S, where J = localized_ideal(I, S).
/// Returns 0 for primes that are not associated.
Bass0 bass0(const MonomialIdeal& ideal, const MonomialPrime& p);

/// Radicals of the irredundant irreducible components. Throws UnitIdeal.
std::vector<MonomialPrime> associated_primes(const MonomialIdeal& ideal);

/// Independent oracle: the primes that occur as I : u for a monomial u
/// with u_i <= max generator exponent of x_i.
std::vector<MonomialPrime> ass_by_colon_scan(const MonomialIdeal& ideal);

struct BassEntry {
  MonomialPrime prime;
  Bass0 value;
};

struct BassReport {
  MonomialIdeal ideal;
  std::vector<BassEntry> entries;
  std::size_t ir_by_formula = 0;
};

/// ir(R/I) = sum over Ass of mu_0(p, R/I).
BassReport reducibility_index_by_bass(const MonomialIdeal& ideal);

struct IrOneVerdict {
  bool value = false;
  std::string reason;
};

/// ir(R/I) = 1 iff there is one associated prime and its mu_0 is 1.
IrOneVerdict is_ir_one(const MonomialIdeal& ideal);

}  // namespace irindex
