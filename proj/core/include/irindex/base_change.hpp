#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "irindex/monomial.hpp"

namespace irindex {

enum class BaseChangeKind { PolynomialExtension, Localization, FieldExtension };

std::string_view to_string(BaseChangeKind kind);

/// One associated prime p of the source module: mu_0(p, M) and ir(S/pS).
struct FiberEntry {
  std::string prime;
  std::size_t mu0 = 0;
  std::size_t fiber_ir = 0;
};

/// Outcome of comparing ir before and after a flat ring map R -> S:
///   ir_S(S ⊗ M) = sum_p ir(S/pS) * mu_0(p, M),
///   ir_R(M) <= ir_S(S ⊗ M) <= t * ir_R(M)  (faithfully flat maps only),
///   equality iff every pS is irreducible.
struct BaseChangeReport {
  BaseChangeKind kind = BaseChangeKind::PolynomialExtension;
  bool faithfully_flat = true;
  std::size_t ir_before = 0;
  /// Computed directly in S.
  std::size_t ir_after = 0;
  /// sum of fiber_ir * mu0 over per_prime.
  std::size_t formula_side = 0;
  /// max fiber_ir.
  std::size_t t_bound = 0;
  std::vector<FiberEntry> per_prime;

  bool formula_holds = false;
  /// ir_after <= t * ir_before; true for every flat map.
  bool upper_bound_holds = false;
  /// ir_before <= ir_after <= t * ir_before. Empty when the map is not
  /// faithfully flat and the chain is not asserted.
  std::optional<bool> chain_holds;
  bool equality_criterion_holds = false;

  bool pass() const noexcept {
    return formula_holds && upper_bound_holds && chain_holds.value_or(true) &&
           equality_criterion_holds;
  }
};

/// Fills formula_side, t_bound and the three verdicts from the other fields.
void evaluate(BaseChangeReport& report);

/// I·R[x_1..x_n][t_1..t_extra].
MonomialIdeal extend_polynomial(const MonomialIdeal& ideal, std::size_t extra);

struct PolynomialExtension {
  std::size_t extra = 1;
};

/// Inverting the listed variables (the multiplicative set they generate).
struct Localization {
  std::vector<std::size_t> inverted;
};

using MonomialBaseChange = std::variant<PolynomialExtension, Localization>;

/// Localization at the monomials in `inverted`. Compares the sum of mu_0
/// over associated primes avoiding the inverted variables with a direct
/// decomposition of the localized ideal.
BaseChangeReport localize_index(const MonomialIdeal& ideal, std::span<const std::size_t> inverted,
                                const RingContext& ring);

BaseChangeReport check_base_change(const MonomialIdeal& ideal, const MonomialBaseChange& change,
                                   const RingContext& ring);

/// ir of a monomial ideal, with ir((1)) = 0 (the zero module).
std::size_t reducibility_index_or_zero(const MonomialIdeal& ideal);

}  // namespace irindex
