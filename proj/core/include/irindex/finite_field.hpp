#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace irindex {

/// Largest characteristic accepted.
inline constexpr std::uint32_t kMaxCharacteristic = 13;
/// Largest field order accepted, 13^3.
inline constexpr std::uint32_t kMaxFieldSize = 2197;

/// GF(p^k) with elements encoded as integers in [0, p^k): the base-p digits
/// of a code are the coefficients (lowest first) of its representative
/// polynomial in t modulo the defining modulus. Codes below p are exactly
/// the prime subfield, so the embedding GF(p) -> GF(p^k) is the identity
/// on codes.
class FiniteField {
 public:
  using Element = std::uint32_t;

  /// GF(p). Throws InvalidArgument unless p is prime, FieldTooLarge if p > 13.
  static FiniteField prime(std::uint32_t p);
  /// GF(p^k) defined by a monic modulus over GF(p), coefficients lowest
  /// first. The modulus is verified irreducible by trial division.
  static FiniteField extension(std::uint32_t p, std::vector<Element> modulus);
  /// GF(p^k) defined by the first monic irreducible of degree k in the
  /// canonical enumeration order.
  static FiniteField with_degree(std::uint32_t p, unsigned k);

  std::uint32_t characteristic() const noexcept { return p_; }
  unsigned degree() const noexcept { return k_; }
  std::uint32_t size() const noexcept { return q_; }
  /// Monic, lowest coefficient first; {0, 1} ("t") for a prime field.
  const std::vector<Element>& modulus() const noexcept { return modulus_; }
  bool is_prime_field() const noexcept { return k_ == 1; }

  Element zero() const noexcept { return 0; }
  Element one() const noexcept { return 1; }
  Element add(Element a, Element b) const;
  Element sub(Element a, Element b) const;
  Element neg(Element a) const;
  Element mul(Element a, Element b) const;
  /// Throws InvalidArgument on zero.
  Element inv(Element a) const;
  Element pow(Element a, std::uint64_t e) const;

  /// "0", "2", "t", "t^2+t+1" (coefficients in the prime field).
  std::string format(Element a) const;
  std::string name() const;

  bool operator==(const FiniteField& other) const {
    return p_ == other.p_ && modulus_ == other.modulus_;
  }

 private:
  struct Tables;
  FiniteField(std::uint32_t p, std::vector<Element> modulus);

  std::uint32_t p_ = 2;
  unsigned k_ = 1;
  std::uint32_t q_ = 2;
  std::vector<Element> modulus_;
  std::shared_ptr<const Tables> tables_;
};

bool is_prime_number(std::uint32_t n);

}  // namespace irindex
