#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "irindex/monomial.hpp"

namespace irindex {

/// The irreducible monomial ideal m^a = (x_i^{a_i} : a_i >= 1). A zero
/// bound means x_i does not occur. The all-zero vector stands for the zero
/// ideal, which is irreducible in the (domain) polynomial ring.
class IrreducibleComponent {
 public:
  IrreducibleComponent() = default;
  explicit IrreducibleComponent(std::vector<Exponent> bounds);

  std::size_t nvars() const noexcept { return bounds_.size(); }
  std::span<const Exponent> bounds() const noexcept { return bounds_; }
  Exponent operator[](std::size_t i) const { return bounds_[i]; }

  bool contains(const Monomial& u) const;
  /// Indices i with a_i >= 1; this is the radical p_S of the component.
  std::vector<std::size_t> support() const;
  MonomialIdeal to_ideal() const;

  auto operator<=>(const IrreducibleComponent&) const = default;
  bool operator==(const IrreducibleComponent&) const = default;

 private:
  std::vector<Exponent> bounds_;
};

/// Which variable of a mixed generator the splitting recursion peels off.
/// Exposed so that the uniqueness of the irredundant result can be tested
/// across strategies.
struct SplitStrategy {
  enum class Kind { FirstVariable, LastVariable, Random };
  Kind kind = Kind::FirstVariable;
  std::uint64_t seed = 0;

  static SplitStrategy first() { return {Kind::FirstVariable, 0}; }
  static SplitStrategy last() { return {Kind::LastVariable, 0}; }
  static SplitStrategy random(std::uint64_t seed) { return {Kind::Random, seed}; }
};

class Decomposition {
 public:
  Decomposition(std::vector<IrreducibleComponent> components, MonomialIdeal source);

  const std::vector<IrreducibleComponent>& components() const noexcept { return components_; }
  const MonomialIdeal& source() const noexcept { return source_; }
  std::size_t size() const noexcept { return components_.size(); }
  /// The source ideal is (0), which is irreducible because k[x] is a domain.
  bool is_domain_case() const noexcept { return source_.is_zero(); }

  bool operator==(const Decomposition&) const = default;

 private:
  std::vector<IrreducibleComponent> components_;
  MonomialIdeal source_;
};

/// Splitting recursion: a generator x^a with two or more variables is
/// written x_i^{a_i} * w, and I = (I + x_i^{a_i}) ∩ (I + w). Returns the
/// duplicate-free leaves. Throws UnitIdeal on (1).
std::vector<IrreducibleComponent> split_decompose(const MonomialIdeal& ideal,
                                                  SplitStrategy strategy = SplitStrategy::first());

/// Prunes candidates down to the unique irredundant decomposition.
/// Throws InvalidCandidates if their intersection is not the ideal.
Decomposition irredundant(std::vector<IrreducibleComponent> candidates, const MonomialIdeal& ideal);

Decomposition decompose(const MonomialIdeal& ideal, SplitStrategy strategy = SplitStrategy::first());

std::size_t reducibility_index_by_decomposition(const MonomialIdeal& ideal);

bool component_contains(const IrreducibleComponent& c, const MonomialIdeal& ideal);

/// Intersection of the component ideals; the unit ideal for an empty list.
MonomialIdeal intersect_all(std::span<const IrreducibleComponent> components, std::size_t nvars);

std::string to_string(const IrreducibleComponent& c, const RingContext& ring);

}  // namespace irindex
