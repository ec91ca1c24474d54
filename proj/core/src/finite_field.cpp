#include "irindex/finite_field.hpp"

#include <fmt/format.h>

#include "irindex/error.hpp"
#include "irindex/univariate.hpp"

namespace irindex {

bool is_prime_number(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

struct FiniteField::Tables {
  // exp_[i] = g^i for a primitive element g, i in [0, q-1); log_[exp_[i]] = i.
  std::vector<Element> exp;
  std::vector<std::uint32_t> log;
};

namespace {

std::vector<std::uint32_t> digits(std::uint32_t code, std::uint32_t p, unsigned k) {
  std::vector<std::uint32_t> d(k);
  for (unsigned i = 0; i < k; ++i) {
    d[i] = code % p;
    code /= p;
  }
  return d;
}

std::uint32_t encode(const std::vector<std::uint32_t>& d, std::uint32_t p) {
  std::uint32_t code = 0;
  for (auto it = d.rbegin(); it != d.rend(); ++it) code = code * p + *it;
  return code;
}

// Schoolbook product of representatives reduced by the monic modulus.
std::uint32_t slow_mul(std::uint32_t a, std::uint32_t b, std::uint32_t p,
                       const std::vector<std::uint32_t>& modulus) {
  const unsigned k = static_cast<unsigned>(modulus.size() - 1);
  auto da = digits(a, p, k), db = digits(b, p, k);
  std::vector<std::uint32_t> prod(2 * k, 0);
  for (unsigned i = 0; i < k; ++i) {
    for (unsigned j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
  }
  for (unsigned deg = 2 * k - 1; deg >= k; --deg) {
    const auto c = prod[deg];
    if (c == 0) continue;
    for (unsigned j = 0; j <= k; ++j) {
      const auto sub = (c * modulus[j]) % p;
      prod[deg - k + j] = (prod[deg - k + j] + p - sub) % p;
    }
  }
  prod.resize(k);
  return encode(prod, p);
}

std::uint32_t checked_order(std::uint32_t p, unsigned k) {
  std::uint64_t q = 1;
  for (unsigned i = 0; i < k; ++i) {
    q *= p;
    if (q > kMaxFieldSize) {
      throw Error(ErrorKind::FieldTooLarge,
                  fmt::format("GF({}^{}) exceeds the field size cap {}", p, k, kMaxFieldSize));
    }
  }
  return static_cast<std::uint32_t>(q);
}

void check_characteristic(std::uint32_t p) {
  if (!is_prime_number(p)) {
    throw Error(ErrorKind::InvalidArgument, fmt::format("{} is not a prime", p));
  }
  if (p > kMaxCharacteristic) {
    throw Error(ErrorKind::FieldTooLarge,
                fmt::format("characteristic {} exceeds {}", p, kMaxCharacteristic));
  }
}

}  // namespace

FiniteField::FiniteField(std::uint32_t p, std::vector<Element> modulus)
    : p_(p), k_(static_cast<unsigned>(modulus.size() - 1)), modulus_(std::move(modulus)) {
  q_ = checked_order(p_, k_);
  auto tables = std::make_shared<Tables>();
  tables->log.assign(q_, 0);
  // The multiplicative group is cyclic; take the smallest generator.
  for (Element g = 1; g < q_; ++g) {
    std::vector<Element> powers;
    powers.reserve(q_ - 1);
    Element cur = 1;
    do {
      powers.push_back(cur);
      cur = slow_mul(cur, g, p_, modulus_);
    } while (cur != 1 && powers.size() < q_);
    if (powers.size() == q_ - 1) {
      tables->exp = std::move(powers);
      break;
    }
  }
  for (std::uint32_t i = 0; i < tables->exp.size(); ++i) tables->log[tables->exp[i]] = i;
  tables_ = std::move(tables);
}

FiniteField FiniteField::prime(std::uint32_t p) {
  check_characteristic(p);
  return FiniteField(p, {0, 1});
}

FiniteField FiniteField::extension(std::uint32_t p, std::vector<Element> modulus) {
  check_characteristic(p);
  while (!modulus.empty() && modulus.back() == 0) modulus.pop_back();
  if (modulus.size() < 2 || modulus.back() != 1) {
    throw Error(ErrorKind::InvalidArgument, "the modulus must be monic of degree >= 1");
  }
  for (auto c : modulus) {
    if (c >= p) throw Error(ErrorKind::InvalidArgument, "modulus coefficient outside GF(p)");
  }
  checked_order(p, static_cast<unsigned>(modulus.size() - 1));
  if (modulus.size() == 2) return prime(p);
  const PolyRing base(prime(p));
  if (!is_irreducible(base, UniPoly(modulus))) {
    throw Error(ErrorKind::InvalidArgument,
                fmt::format("modulus {} is reducible over GF({})", base.format(UniPoly(modulus), "t"),
                            p));
  }
  return FiniteField(p, std::move(modulus));
}

FiniteField FiniteField::with_degree(std::uint32_t p, unsigned k) {
  check_characteristic(p);
  if (k == 0) throw Error(ErrorKind::InvalidArgument, "extension degree must be positive");
  checked_order(p, k);
  if (k == 1) return prime(p);
  const PolyRing base(prime(p));
  std::uint64_t count = 1;
  for (unsigned i = 0; i < k; ++i) count *= p;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    auto m = base.monic_of_degree(k, idx);
    if (is_irreducible(base, m)) return FiniteField(p, m.coeffs);
  }
  throw Error(ErrorKind::InvalidArgument, "no irreducible polynomial found");
}

FiniteField::Element FiniteField::add(Element a, Element b) const {
  if (k_ == 1) return (a + b) % p_;
  Element out = 0, scale = 1;
  for (unsigned i = 0; i < k_; ++i) {
    out += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return out;
}

FiniteField::Element FiniteField::neg(Element a) const {
  if (k_ == 1) return (p_ - a) % p_;
  Element out = 0, scale = 1;
  for (unsigned i = 0; i < k_; ++i) {
    out += ((p_ - a % p_) % p_) * scale;
    a /= p_;
    scale *= p_;
  }
  return out;
}

FiniteField::Element FiniteField::sub(Element a, Element b) const { return add(a, neg(b)); }

FiniteField::Element FiniteField::mul(Element a, Element b) const {
  if (a == 0 || b == 0) return 0;
  const auto n = q_ - 1;
  return tables_->exp[(tables_->log[a] + tables_->log[b]) % n];
}

FiniteField::Element FiniteField::inv(Element a) const {
  if (a == 0) throw Error(ErrorKind::InvalidArgument, "inverse of zero");
  const auto n = q_ - 1;
  return tables_->exp[(n - tables_->log[a]) % n];
}

FiniteField::Element FiniteField::pow(Element a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  const std::uint64_t n = q_ - 1;
  return tables_->exp[static_cast<std::size_t>((tables_->log[a] * (e % n)) % n)];
}

std::string FiniteField::format(Element a) const {
  if (k_ == 1) return fmt::format("{}", a);
  if (a == 0) return "0";
  auto d = digits(a, p_, k_);
  std::string out;
  for (unsigned i = k_; i-- > 0;) {
    if (d[i] == 0) continue;
    if (!out.empty()) out += '+';
    if (i == 0) {
      out += fmt::format("{}", d[i]);
      continue;
    }
    if (d[i] != 1) out += fmt::format("{}*", d[i]);
    out += i == 1 ? std::string("t") : fmt::format("t^{}", i);
  }
  return out;
}

std::string FiniteField::name() const { return fmt::format("GF({})", q_); }

}  // namespace irindex
