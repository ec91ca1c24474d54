#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace irindex {

// Finite abelian groups as Artinian Z-modules.

/// Brute-force lattice operations need every subgroup as a 64-bit mask.
inline constexpr std::uint64_t kMaxOracleOrder = 64;
/// Element-level scans (secondary components, quotient structure).
inline constexpr std::uint64_t kMaxElementOrder = 4096;
/// Quotient monotonicity enumerates every subgroup and its quotient.
inline constexpr std::uint64_t kMaxQuotientOrder = 32;

/// Direct sum of cyclic groups Z/p^k in primary form, sorted by prime and
/// then by order. Elements are mixed-radix codes in [0, order).
class FiniteAbelianGroup {
 public:
  /// Each order must be a prime power >= 2. Throws InvalidArgument, or
  /// TooLarge when the order does not fit in 32 bits.
  explicit FiniteAbelianGroup(std::vector<std::uint64_t> cyclic_orders = {});

  /// Splits arbitrary cyclic orders n >= 1 into prime powers (Z/12 -> Z/4 + Z/3).
  static FiniteAbelianGroup from_cyclic(const std::vector<std::uint64_t>& orders);

  const std::vector<std::uint64_t>& cyclic_orders() const noexcept { return orders_; }
  std::uint64_t order() const noexcept { return order_; }
  bool is_trivial() const noexcept { return orders_.empty(); }
  /// Distinct primes dividing the order, ascending.
  std::vector<std::uint64_t> primes() const;
  /// Number of cyclic factors of the p-part.
  std::size_t rank(std::uint64_t p) const;
  FiniteAbelianGroup primary_part(std::uint64_t p) const;

  std::vector<std::uint64_t> decode(std::uint32_t code) const;
  std::uint32_t encode(const std::vector<std::uint64_t>& coords) const;
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t neg(std::uint32_t a) const;
  std::uint32_t multiple(std::uint32_t a, std::uint64_t n) const;
  /// Embedding of the i-th cyclic factor's generator.
  std::uint32_t generator(std::size_t i) const;

  auto operator<=>(const FiniteAbelianGroup&) const = default;
  bool operator==(const FiniteAbelianGroup&) const = default;

 private:
  std::vector<std::uint64_t> orders_;
  std::uint64_t order_ = 1;
};

/// "Z/4 + Z/2 + Z/9"; the trivial group prints as "0".
std::string to_string(const FiniteAbelianGroup& a);

/// Subgroup of a fixed parent group, as a sorted list of element codes.
struct Subgroup {
  std::vector<std::uint32_t> elements;

  std::size_t size() const noexcept { return elements.size(); }
  bool contains(std::uint32_t code) const;
  bool operator==(const Subgroup&) const = default;
  auto operator<=>(const Subgroup&) const = default;
};

Subgroup whole_group(const FiniteAbelianGroup& a);
/// Throws InvalidArgument unless the elements form a subgroup.
Subgroup make_subgroup(const FiniteAbelianGroup& a, std::vector<std::uint32_t> elements);
Subgroup cyclic_subgroup(const FiniteAbelianGroup& a, std::uint32_t generator);
Subgroup join(const FiniteAbelianGroup& a, const Subgroup& h, const Subgroup& k);

/// The full subgroup lattice: cyclic subgroups closed under pairwise join.
/// Sorted by size, then elements. Throws TooLarge for |A| > 64.
std::vector<Subgroup> all_subgroups(const FiniteAbelianGroup& a);

/// No two proper subgroups of H join to H. Throws TrivialGroup.
bool is_sum_irreducible(const FiniteAbelianGroup& a, const Subgroup& h);
bool is_sum_irreducible(const FiniteAbelianGroup& a);
/// The nontrivial subgroups passing is_sum_irreducible, in lattice order.
std::vector<Subgroup> sum_irreducible_subgroups(const FiniteAbelianGroup& a);

struct BruteForceIndex {
  /// Cardinality of the irredundant representations (0 for the trivial group).
  std::size_t index = 0;
  std::uint64_t representation_count = 0;
  /// Distinct cardinalities met during the enumeration, ascending.
  std::vector<std::size_t> cardinalities;
  /// The first representations found, up to the requested number.
  std::vector<std::vector<Subgroup>> samples;
  bool uniform() const noexcept { return cardinalities.size() <= 1; }
};

/// Enumerates every irredundant representation of A as a sum of
/// sum-irreducible subgroups. Throws TooLarge for |A| > 64.
BruteForceIndex sum_reducibility_index_bruteforce(const FiniteAbelianGroup& a,
                                                  std::size_t keep_samples = 4);

/// Number of cyclic factors in the primary decomposition.
std::size_t sum_reducibility_index_formula(const FiniteAbelianGroup& a);

struct SecondaryComponent {
  std::uint64_t prime = 0;
  Subgroup component;
  /// Multiplication by p reaches zero after finitely many steps.
  bool nilpotent = false;
  /// Multiplication by every other prime q <= |A| is onto.
  bool surjective = false;
};

struct SecondaryRepresentation {
  std::vector<SecondaryComponent> components;
  bool sums_to_whole = false;
  bool valid() const noexcept;
};

/// The p-primary components with direct p-secondary checks. Throws
/// TrivialGroup, or TooLarge beyond kMaxElementOrder.
SecondaryRepresentation secondary_representation(const FiniteAbelianGroup& a);

/// Primes dividing |A|. Throws TrivialGroup.
std::vector<std::uint64_t> attached_primes(const FiniteAbelianGroup& a);

struct AdditivityReport {
  FiniteAbelianGroup group;
  std::size_t brute_force = 0;
  /// (p, brute-force index of the p-part).
  std::vector<std::pair<std::uint64_t, std::size_t>> per_prime;
  std::size_t sum_of_parts = 0;
  std::size_t formula = 0;
  std::size_t attached_count = 0;
  bool secondary_primes_match = false;
  bool representations_uniform = false;
  /// Attached primes of a finite group are maximal ideals, pairwise
  /// incomparable, so no component is embedded.
  bool embedded_hypothesis_vacuous = true;
  bool pass() const noexcept;
};

/// Brute force on A, brute force on each p-part, and the formula agree;
/// also checks ir'(A) >= |Att(A)|. Throws TooLarge for |A| > 64.
AdditivityReport p3c_check(const FiniteAbelianGroup& a);

/// A/B in primary form, read off from the number of elements killed by
/// each p^j. Throws TooLarge beyond kMaxElementOrder.
FiniteAbelianGroup quotient_structure(const FiniteAbelianGroup& a, const Subgroup& b);

struct QuotientEntry {
  Subgroup b;
  FiniteAbelianGroup quotient;
  std::size_t ir_prime = 0;
};

struct QuotientReport {
  FiniteAbelianGroup group;
  std::size_t ir_prime = 0;
  bool group_sum_irreducible = false;
  std::vector<QuotientEntry> entries;
  std::size_t violations = 0;
  /// If A is sum-irreducible, so is every nontrivial quotient.
  bool irreducibility_inherited = true;
  bool pass() const noexcept { return violations == 0 && irreducibility_inherited; }
};

/// For every subgroup B: ir'(A/B) <= ir'(A), both by brute force.
/// Throws TooLarge for |A| > 32.
QuotientReport quotient_monotonicity_check(const FiniteAbelianGroup& a);

/// Every isomorphism class of the given order, from partitions of the
/// prime exponents. Order 1 yields the trivial group.
std::vector<FiniteAbelianGroup> groups_of_order(std::uint64_t n);
std::vector<FiniteAbelianGroup> groups_up_to(std::uint64_t max_order);

}  // namespace irindex
