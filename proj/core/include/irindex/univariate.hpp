#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "irindex/base_change.hpp"
#include "irindex/finite_field.hpp"

namespace irindex {

/// Dense univariate polynomial, lowest degree first, no trailing zeros.
/// The zero polynomial has no coefficients.
struct UniPoly {
  std::vector<FiniteField::Element> coeffs;

  UniPoly() = default;
  explicit UniPoly(std::vector<FiniteField::Element> c);

  static UniPoly constant(FiniteField::Element c) { return UniPoly({c}); }
  static UniPoly x() { return UniPoly({0, 1}); }

  bool is_zero() const noexcept { return coeffs.empty(); }
  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs.size()) - 1; }
  FiniteField::Element leading() const { return coeffs.empty() ? 0 : coeffs.back(); }
  bool is_monic() const noexcept { return !coeffs.empty() && coeffs.back() == 1; }

  void trim();

  auto operator<=>(const UniPoly&) const = default;
  bool operator==(const UniPoly&) const = default;
};

/// Canonical order on polynomials: by degree, then coefficients lowest first.
bool canonical_less(const UniPoly& a, const UniPoly& b);

/// F[x] for a finite field F.
class PolyRing {
 public:
  explicit PolyRing(FiniteField field) : field_(std::move(field)) {}

  const FiniteField& field() const noexcept { return field_; }

  UniPoly add(const UniPoly& a, const UniPoly& b) const;
  UniPoly sub(const UniPoly& a, const UniPoly& b) const;
  UniPoly mul(const UniPoly& a, const UniPoly& b) const;
  UniPoly scale(const UniPoly& a, FiniteField::Element c) const;
  /// Quotient and remainder. Throws DivisionByZeroPoly.
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) const;
  UniPoly rem(const UniPoly& a, const UniPoly& b) const { return divmod(a, b).second; }
  /// Monic gcd; gcd(0, 0) = 0.
  UniPoly gcd(const UniPoly& a, const UniPoly& b) const;
  UniPoly monic(const UniPoly& a) const;
  UniPoly derivative(const UniPoly& a) const;
  UniPoly pow(const UniPoly& a, unsigned e) const;
  /// base^e mod m.
  UniPoly pow_mod(const UniPoly& base, std::uint64_t e, const UniPoly& m) const;

  /// The i-th monic polynomial of degree d: the base-q digits of i are the
  /// coefficients of x^0 .. x^{d-1}.
  UniPoly monic_of_degree(unsigned d, std::uint64_t index) const;

  /// "x^2+t*x+(t+1)" style rendering in variable `var`.
  std::string format(const UniPoly& a, const std::string& var = "x") const;

 private:
  FiniteField field_;
};

struct Factor {
  UniPoly poly;
  unsigned multiplicity = 1;
  bool operator==(const Factor&) const = default;
};

/// f = unit * prod poly^multiplicity with distinct monic irreducible
/// factors in canonical order.
struct Factorization {
  FiniteField::Element unit = 1;
  std::vector<Factor> factors;
  bool operator==(const Factorization&) const = default;
};

inline constexpr unsigned kMaxFactorDegree = 8;
/// Trial division is used while the number of candidate divisors stays
/// below this; larger searches split with Berlekamp's algorithm instead.
inline constexpr std::uint64_t kTrialDivisionBudget = 1u << 20;

/// Complete factorization. Throws DegreeTooLarge beyond degree 8 and
/// InvalidArgument for the zero polynomial.
Factorization factor(const PolyRing& ring, const UniPoly& f);

/// Divides by every monic polynomial of degree 1..deg/2 in canonical
/// enumeration order. Throws TooLarge if the search exceeds the budget.
Factorization factor_by_trial_division(const PolyRing& ring, const UniPoly& f);

/// Square-free decomposition followed by Berlekamp splitting.
Factorization factor_by_berlekamp(const PolyRing& ring, const UniPoly& f);

bool is_irreducible(const PolyRing& ring, const UniPoly& f);

UniPoly expand(const PolyRing& ring, const Factorization& fac);

/// ir(F[x]/(f)): the number of distinct irreducible factors. Every primary
/// component (p_i^{n_i}) has a Gorenstein Artinian local quotient, so each
/// mu_0 equals 1 and the sum over Ass is a count.
/// Throws UnitInput for nonzero constants.
std::size_t ir_hypersurface(const PolyRing& ring, const UniPoly& f);

/// Reinterprets a polynomial over GF(p) over an extension of GF(p).
UniPoly embed(const UniPoly& f, const FiniteField& from, const FiniteField& to);

/// Base change GF(p)[x] -> GF(p^k)[x] applied to M = GF(p)[x]/(f).
BaseChangeReport base_change_field(const UniPoly& f, const FiniteField& base,
                                   const FiniteField& extension);

}  // namespace irindex
