#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace irindex {

using Exponent = std::uint32_t;

/// Inputs with a larger exponent are rejected so lcm/product arithmetic
/// stays far away from overflow.
inline constexpr Exponent kMaxExponent = 1'000'000;

/// Variable names of the polynomial ring k[x_1, ..., x_n]. The coefficient
/// field is never represented: every monomial computation in this library
/// is independent of it.
class RingContext {
 public:
  explicit RingContext(std::vector<std::string> names);

  /// x, y, z, w for n <= 4, otherwise x1, ..., xn.
  static RingContext standard(std::size_t n);

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  /// The ring on the listed variables only, in the given order.
  RingContext restrict_to(std::span<const std::size_t> vars) const;
  /// This ring with `extra` fresh variables appended.
  RingContext extend(std::size_t extra) const;

  bool operator==(const RingContext&) const = default;

 private:
  std::vector<std::string> names_;
};

/// Exponent vector. Ordering is lexicographic on the exponents.
class Monomial {
 public:
  Monomial() = default;
  /// The monomial 1 in n variables.
  explicit Monomial(std::size_t n) : exps_(n, 0) {}
  explicit Monomial(std::vector<Exponent> exponents);

  static Monomial one(std::size_t n) { return Monomial(n); }
  static Monomial variable(std::size_t n, std::size_t i, Exponent power = 1);

  std::size_t size() const noexcept { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  std::span<const Exponent> exponents() const noexcept { return exps_; }

  std::uint64_t degree() const noexcept;
  bool is_one() const noexcept;
  std::size_t support_size() const noexcept;
  /// Some x_i^a with a >= 1 and nothing else.
  bool is_pure_power() const noexcept { return support_size() == 1; }

  Monomial with_exponent(std::size_t i, Exponent e) const;

  auto operator<=>(const Monomial&) const = default;
  bool operator==(const Monomial&) const = default;

 private:
  std::vector<Exponent> exps_;
};

bool divides(const Monomial& u, const Monomial& v);
Monomial operator*(const Monomial& u, const Monomial& v);
Monomial lcm(const Monomial& u, const Monomial& v);
Monomial gcd(const Monomial& u, const Monomial& v);
/// u / v; requires v | u.
Monomial quotient(const Monomial& u, const Monomial& v);

std::string to_string(const Monomial& u, const RingContext& ring);

/// A monomial ideal stored by its minimal generators in lexicographic
/// order, so that two ideals are equal iff their generator lists are.
/// The zero ideal has no generators; the unit ideal has the single
/// generator 1.
class MonomialIdeal;
MonomialIdeal minimalize(std::size_t nvars, std::vector<Monomial> gens);

class MonomialIdeal {
 public:
  explicit MonomialIdeal(std::size_t nvars = 0) : nvars_(nvars) {}
  MonomialIdeal(std::size_t nvars, std::vector<Monomial> generators);

  static MonomialIdeal zero(std::size_t nvars) { return MonomialIdeal(nvars); }
  static MonomialIdeal unit(std::size_t nvars);

  std::size_t nvars() const noexcept { return nvars_; }
  const std::vector<Monomial>& generators() const noexcept { return gens_; }
  std::size_t size() const noexcept { return gens_.size(); }
  bool is_zero() const noexcept { return gens_.empty(); }
  bool is_unit() const noexcept;

  /// Largest exponent of x_i over all generators.
  Exponent max_exponent(std::size_t i) const;

  auto operator<=>(const MonomialIdeal&) const = default;
  bool operator==(const MonomialIdeal&) const = default;

 private:
  friend MonomialIdeal minimalize(std::size_t, std::vector<Monomial>);
  std::size_t nvars_ = 0;
  std::vector<Monomial> gens_;
};

MonomialIdeal minimalize(std::size_t nvars, std::vector<Monomial> gens);
bool contains(const MonomialIdeal& ideal, const Monomial& u);
/// I : u, generated by g / gcd(g, u).
MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& u);
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal operator+(const MonomialIdeal& a, const MonomialIdeal& b);
/// True when a ⊆ b.
bool is_subset(const MonomialIdeal& a, const MonomialIdeal& b);

bool is_finite_colength(const MonomialIdeal& ideal);
/// Monomials outside the ideal; throws InfiniteColength when infinitely many.
std::vector<Monomial> standard_monomials(const MonomialIdeal& ideal);

std::string to_string(const MonomialIdeal& ideal, const RingContext& ring);

// Enumeration caps shared by the brute-force scans. Anything beyond these
// sizes is reported as TooLarge rather than attempted.
inline constexpr std::uint64_t kMaxScanBox = 10'000'000;

/// Calls f on every exponent vector u with u_i < bounds[i], in lexicographic
/// order. Throws TooLarge if the box has more than kMaxScanBox points.
template <typename F>
void for_each_in_box(std::span<const Exponent> bounds, F&& f);

namespace detail {
void check_box_volume(std::span<const Exponent> bounds);
}

template <typename F>
void for_each_in_box(std::span<const Exponent> bounds, F&& f) {
  detail::check_box_volume(bounds);
  const std::size_t n = bounds.size();
  for (Exponent b : bounds) {
    if (b == 0) return;
  }
  std::vector<Exponent> cur(n, 0);
  while (true) {
    f(Monomial(cur));
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (++cur[i] < bounds[i]) break;
      cur[i] = 0;
      if (i == 0) return;
    }
    if (n == 0) return;
  }
}

}  // namespace irindex
