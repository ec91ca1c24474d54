#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "irindex/monomial.hpp"

namespace irindex {

// Finite-length duality for monomial quotients M = R/I.
//
// The standard monomials Γ of I form a basis of M. The Matlis dual D(M)
// has the dual basis u* (u in Γ) with the action x_i·u* = (u/x_i)* when
// x_i divides u and 0 otherwise. A monomial submodule of D(M) is therefore
// a subset of Γ closed under division (a downset), and D(M)/m·D(M) is
// spanned by the maximal elements of Γ, which are also the socle
// monomials of M. The graded ring stands in for a complete local ring:
// on finite-length modules completion changes nothing.

/// An order ideal Γ of monomials, closed under division.
class Staircase {
 public:
  /// Throws InvalidArgument unless `monomials` is closed under division.
  Staircase(std::size_t nvars, std::vector<Monomial> monomials);

  std::size_t nvars() const noexcept { return nvars_; }
  const std::vector<Monomial>& monomials() const noexcept { return monomials_; }
  std::size_t size() const noexcept { return monomials_.size(); }
  bool empty() const noexcept { return monomials_.empty(); }
  bool contains(const Monomial& u) const;
  /// Position of u in the sorted monomial list.
  std::optional<std::size_t> index_of(const Monomial& u) const;

  bool operator==(const Staircase&) const = default;

 private:
  std::size_t nvars_;
  std::vector<Monomial> monomials_;
};

/// A submodule of D(M) spanned by dual monomials: a downset of Γ.
struct DownsetSubmodule {
  /// Sorted, closed under division.
  std::vector<Monomial> members;

  bool contains(const Monomial& u) const;
  std::size_t size() const noexcept { return members.size(); }
  bool operator==(const DownsetSubmodule&) const = default;
};

/// Throws InfiniteColength.
Staircase staircase(const MonomialIdeal& ideal);

/// The monomial ideal whose standard monomials are Γ: the minimal
/// monomials outside Γ. Throws EmptyStaircase.
MonomialIdeal ideal_of(const Staircase& g);

/// Validates that `members` is a downset inside Γ; throws NotInStaircase or
/// InvalidArgument otherwise.
DownsetSubmodule make_downset(const Staircase& g, std::vector<Monomial> members);

/// Elements u with x_i·u outside Γ for every i.
std::vector<Monomial> maximal_elements(const Staircase& g);

/// The cyclic submodule R·u* of D(M): all divisors of u. Throws NotInStaircase.
DownsetSubmodule principal_downset(const Staircase& g, const Monomial& u);

struct SumRepresentation {
  std::vector<DownsetSubmodule> components;
  std::size_t index() const noexcept { return components.size(); }
};

/// One principal downset per maximal element of Γ: an irredundant
/// representation of D(M) as a sum of cyclic (hence sum-irreducible)
/// submodules. Throws EmptyStaircase.
SumRepresentation sum_irreducible_representation(const Staircase& g);

inline constexpr std::size_t kMinCoverCap = 25;
inline constexpr std::size_t kAllCoversCap = 12;

struct MinCoverResult {
  /// Fewest principal downsets whose union is Γ.
  std::size_t minimum = 0;
  /// Cardinalities of every irredundant cover by principal downsets;
  /// filled only when |Γ| <= kAllCoversCap.
  std::vector<std::size_t> irredundant_cover_sizes;
  std::size_t irredundant_cover_count = 0;
  bool enumerated_all = false;
  /// All irredundant covers have the same size (vacuous if not enumerated).
  bool uniform() const;
};

/// Exhaustive search over sets of principal downsets. Throws TooLarge for
/// |Γ| > kMinCoverCap and EmptyStaircase for Γ = {}.
MinCoverResult min_cover_oracle(const Staircase& g);

struct DualityReport {
  MonomialIdeal ideal;
  std::size_t ir_by_decomposition = 0;
  std::size_t ir_by_bass = 0;
  /// Number of maximal elements of Γ.
  std::size_t ir_prime = 0;
  std::optional<std::size_t> min_cover;
  bool covers_uniform = true;
  bool pass() const noexcept;
};

/// ir(M) by decomposition, by Bass numbers, the sum-reducibility index of
/// the dual, and the min-cover oracle (when |Γ| <= 25) must all agree.
DualityReport check_finite_length_duality(const MonomialIdeal& ideal);

/// Two independent evaluations of "D(A/B) ∩ D(A/C) = 0" and "A = B + C"
/// for A = D(M). Each D(A/B) is the annihilator of B, spanned by Γ \ B.
std::pair<bool, bool> dual_intersection_vs_sum(const Staircase& g, const DownsetSubmodule& b,
                                               const DownsetSubmodule& c);

/// ("0 is irreducible in M", "D(M) is sum-irreducible"), each computed on
/// its own side of the duality. Throws InfiniteColength.
std::pair<bool, bool> irreducible_vs_dual_sum_irreducible(const MonomialIdeal& ideal);

/// Sum-reducibility index of the quotient D(M)/B: the number of maximal
/// elements of Γ \ B. The complement is an upset of Γ, so its maximal
/// elements are maximal in Γ.
std::size_t quotient_index(const Staircase& g, const DownsetSubmodule& b);

/// Every downset of Γ, found by closing under removal of maximal elements.
/// Throws TooLarge if |Γ| > 20.
std::vector<DownsetSubmodule> all_downsets(const Staircase& g);

/// Every order ideal in n variables with at most `max_size` monomials.
std::vector<Staircase> all_staircases(std::size_t nvars, std::size_t max_size);

/// 2-variable staircases as a grid (row = power of the second variable),
/// otherwise a monomial list.
std::string render(const Staircase& g, const RingContext& ring);

}  // namespace irindex
