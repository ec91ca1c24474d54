#include "irindex/monomial.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include <fmt/format.h>

#include "irindex/error.hpp"

namespace irindex {

namespace {

void require_same_size(const Monomial& u, const Monomial& v) {
  if (u.size() != v.size()) {
    throw Error(ErrorKind::DimensionMismatch,
                fmt::format("monomials in {} and {} variables", u.size(), v.size()));
  }
}

void require_same_ring(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.nvars() != b.nvars()) {
    throw Error(ErrorKind::DimensionMismatch,
                fmt::format("ideals in {} and {} variables", a.nvars(), b.nvars()));
  }
}

void require_ring(const MonomialIdeal& ideal, const Monomial& u) {
  if (ideal.nvars() != u.size()) {
    throw Error(ErrorKind::DimensionMismatch,
                fmt::format("monomial in {} variables, ideal in {}", u.size(), ideal.nvars()));
  }
}

}  // namespace

// RingContext

RingContext::RingContext(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) {
    throw Error(ErrorKind::InvalidArgument, "a ring needs at least one variable");
  }
  std::set<std::string_view> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw Error(ErrorKind::InvalidArgument, "empty variable name");
    if (!seen.insert(n).second) {
      throw Error(ErrorKind::InvalidArgument, fmt::format("duplicate variable name '{}'", n));
    }
  }
}

RingContext RingContext::standard(std::size_t n) {
  static const char* const kShort[] = {"x", "y", "z", "w"};
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back(n <= 4 ? std::string(kShort[i]) : fmt::format("x{}", i + 1));
  }
  return RingContext(std::move(names));
}

std::optional<std::size_t> RingContext::index_of(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

RingContext RingContext::restrict_to(std::span<const std::size_t> vars) const {
  std::vector<std::string> names;
  for (auto i : vars) names.push_back(names_.at(i));
  return RingContext(std::move(names));
}

RingContext RingContext::extend(std::size_t extra) const {
  auto names = names_;
  std::size_t k = 1;
  for (std::size_t added = 0; added < extra; ++k) {
    auto candidate = fmt::format("t{}", k);
    if (std::find(names.begin(), names.end(), candidate) == names.end()) {
      names.push_back(std::move(candidate));
      ++added;
    }
  }
  return RingContext(std::move(names));
}

// Monomial

Monomial::Monomial(std::vector<Exponent> exponents) : exps_(std::move(exponents)) {
  for (auto e : exps_) {
    if (e > kMaxExponent) {
      throw Error(ErrorKind::ExponentTooLarge,
                  fmt::format("exponent {} exceeds {}", e, kMaxExponent));
    }
  }
}

Monomial Monomial::variable(std::size_t n, std::size_t i, Exponent power) {
  std::vector<Exponent> e(n, 0);
  e.at(i) = power;
  return Monomial(std::move(e));
}

std::uint64_t Monomial::degree() const noexcept {
  return std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
}

bool Monomial::is_one() const noexcept {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

std::size_t Monomial::support_size() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(exps_.begin(), exps_.end(), [](Exponent e) { return e != 0; }));
}

Monomial Monomial::with_exponent(std::size_t i, Exponent e) const {
  auto copy = exps_;
  copy.at(i) = e;
  return Monomial(std::move(copy));
}

bool divides(const Monomial& u, const Monomial& v) {
  require_same_size(u, v);
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] > v[i]) return false;
  }
  return true;
}

Monomial operator*(const Monomial& u, const Monomial& v) {
  require_same_size(u, v);
  std::vector<Exponent> e(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) e[i] = u[i] + v[i];
  return Monomial(std::move(e));
}

Monomial lcm(const Monomial& u, const Monomial& v) {
  require_same_size(u, v);
  std::vector<Exponent> e(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) e[i] = std::max(u[i], v[i]);
  return Monomial(std::move(e));
}

Monomial gcd(const Monomial& u, const Monomial& v) {
  require_same_size(u, v);
  std::vector<Exponent> e(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) e[i] = std::min(u[i], v[i]);
  return Monomial(std::move(e));
}

Monomial quotient(const Monomial& u, const Monomial& v) {
  if (!divides(v, u)) {
    throw Error(ErrorKind::InvalidArgument, "quotient of monomials that do not divide");
  }
  std::vector<Exponent> e(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) e[i] = u[i] - v[i];
  return Monomial(std::move(e));
}

std::string to_string(const Monomial& u, const RingContext& ring) {
  if (u.size() != ring.size()) {
    throw Error(ErrorKind::DimensionMismatch, "monomial does not match ring");
  }
  std::string out;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += ring.name(i);
    if (u[i] > 1) out += fmt::format("^{}", u[i]);
  }
  return out.empty() ? "1" : out;
}

// MonomialIdeal

MonomialIdeal::MonomialIdeal(std::size_t nvars, std::vector<Monomial> generators)
    : nvars_(nvars) {
  *this = minimalize(nvars, std::move(generators));
}

MonomialIdeal MonomialIdeal::unit(std::size_t nvars) {
  return MonomialIdeal(nvars, {Monomial::one(nvars)});
}

bool MonomialIdeal::is_unit() const noexcept {
  return gens_.size() == 1 && gens_.front().is_one();
}

Exponent MonomialIdeal::max_exponent(std::size_t i) const {
  Exponent m = 0;
  for (const auto& g : gens_) m = std::max(m, g[i]);
  return m;
}

MonomialIdeal minimalize(std::size_t nvars, std::vector<Monomial> gens) {
  for (const auto& g : gens) {
    if (g.size() != nvars) {
      throw Error(ErrorKind::DimensionMismatch,
                  fmt::format("generator in {} variables, ring has {}", g.size(), nvars));
    }
  }
  // A divisor never has larger degree, so one forward pass in degree order
  // sees every potential divisor before the monomials it divides.
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    auto da = a.degree(), db = b.degree();
    return da != db ? da < db : a < b;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  std::vector<Monomial> kept;
  for (auto& g : gens) {
    bool redundant = std::any_of(kept.begin(), kept.end(),
                                 [&](const Monomial& k) { return divides(k, g); });
    if (!redundant) kept.push_back(std::move(g));
  }
  std::sort(kept.begin(), kept.end());

  MonomialIdeal out(nvars);
  out.gens_ = std::move(kept);
  return out;
}

bool contains(const MonomialIdeal& ideal, const Monomial& u) {
  require_ring(ideal, u);
  return std::any_of(ideal.generators().begin(), ideal.generators().end(),
                     [&](const Monomial& g) { return divides(g, u); });
}

MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& u) {
  require_ring(ideal, u);
  std::vector<Monomial> gens;
  gens.reserve(ideal.size());
  for (const auto& g : ideal.generators()) gens.push_back(quotient(g, gcd(g, u)));
  return minimalize(ideal.nvars(), std::move(gens));
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a, b);
  std::vector<Monomial> gens;
  gens.reserve(a.size() * b.size());
  for (const auto& g : a.generators()) {
    for (const auto& h : b.generators()) gens.push_back(lcm(g, h));
  }
  return minimalize(a.nvars(), std::move(gens));
}

MonomialIdeal operator+(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a, b);
  auto gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return minimalize(a.nvars(), std::move(gens));
}

bool is_subset(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a, b);
  return std::all_of(a.generators().begin(), a.generators().end(),
                     [&](const Monomial& g) { return contains(b, g); });
}

namespace {

// Smallest a with x_i^a in the ideal, or 0 if there is none.
Exponent pure_power_bound(const MonomialIdeal& ideal, std::size_t i) {
  Exponent best = 0;
  for (const auto& g : ideal.generators()) {
    if (g.is_one()) return 0;
    if (g.support_size() == 1 && g[i] > 0 && (best == 0 || g[i] < best)) best = g[i];
  }
  return best;
}

}  // namespace

bool is_finite_colength(const MonomialIdeal& ideal) {
  if (ideal.is_unit()) return true;
  for (std::size_t i = 0; i < ideal.nvars(); ++i) {
    if (pure_power_bound(ideal, i) == 0) return false;
  }
  return true;
}

std::vector<Monomial> standard_monomials(const MonomialIdeal& ideal) {
  if (ideal.is_unit()) return {};
  if (!is_finite_colength(ideal)) {
    throw Error(ErrorKind::InfiniteColength, "some variable has no pure power in the ideal");
  }
  std::vector<Exponent> bounds(ideal.nvars());
  for (std::size_t i = 0; i < ideal.nvars(); ++i) bounds[i] = pure_power_bound(ideal, i);
  std::vector<Monomial> out;
  for_each_in_box(bounds, [&](const Monomial& u) {
    if (!contains(ideal, u)) out.push_back(u);
  });
  return out;
}

std::string to_string(const MonomialIdeal& ideal, const RingContext& ring) {
  if (ideal.nvars() != ring.size()) {
    throw Error(ErrorKind::DimensionMismatch, "ideal does not match ring");
  }
  if (ideal.is_zero()) return "(0)";
  std::string out = "(";
  for (std::size_t i = 0; i < ideal.size(); ++i) {
    if (i) out += ", ";
    out += to_string(ideal.generators()[i], ring);
  }
  return out + ")";
}

namespace detail {

void check_box_volume(std::span<const Exponent> bounds) {
  std::uint64_t volume = 1;
  for (auto b : bounds) {
    if (b == 0) return;
    volume *= b;
    if (volume > kMaxScanBox) {
      throw Error(ErrorKind::TooLarge,
                  fmt::format("enumeration box exceeds {} monomials", kMaxScanBox));
    }
  }
}

}  // namespace detail

}  // namespace irindex
