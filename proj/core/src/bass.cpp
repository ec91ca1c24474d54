#include "irindex/bass.hpp"

#include <algorithm>
#include <set>

#include <fmt/format.h>

#include "irindex/decomposition.hpp"
#include "irindex/error.hpp"

namespace irindex {

MonomialPrime::MonomialPrime(std::size_t nvars, std::vector<std::size_t> support)
    : nvars_(nvars), support_(std::move(support)) {
  std::sort(support_.begin(), support_.end());
  support_.erase(std::unique(support_.begin(), support_.end()), support_.end());
  if (!support_.empty() && support_.back() >= nvars_) {
    throw Error(ErrorKind::DimensionMismatch, "prime support outside the ring");
  }
}

MonomialPrime MonomialPrime::full(std::size_t nvars) {
  std::vector<std::size_t> s(nvars);
  for (std::size_t i = 0; i < nvars; ++i) s[i] = i;
  return MonomialPrime(nvars, std::move(s));
}

bool MonomialPrime::contains(std::size_t i) const {
  return std::binary_search(support_.begin(), support_.end(), i);
}

std::vector<std::size_t> MonomialPrime::complement() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < nvars_; ++i) {
    if (!contains(i)) out.push_back(i);
  }
  return out;
}

bool MonomialPrime::meets(std::span<const std::size_t> vars) const {
  return std::any_of(vars.begin(), vars.end(), [&](std::size_t i) { return contains(i); });
}

MonomialIdeal MonomialPrime::to_ideal() const {
  std::vector<Monomial> gens;
  for (auto i : support_) gens.push_back(Monomial::variable(nvars_, i));
  return MonomialIdeal(nvars_, std::move(gens));
}

std::string to_string(const MonomialPrime& p, const RingContext& ring) {
  if (p.support().empty()) return "(0)";
  std::string out = "(";
  for (std::size_t k = 0; k < p.support().size(); ++k) {
    if (k) out += ",";
    out += ring.name(p.support()[k]);
  }
  return out + ")";
}

MonomialIdeal localized_ideal(const MonomialIdeal& ideal, std::span<const std::size_t> vars) {
  std::vector<Monomial> gens;
  gens.reserve(ideal.size());
  for (const auto& g : ideal.generators()) {
    std::vector<Exponent> e;
    e.reserve(vars.size());
    for (auto i : vars) e.push_back(g[i]);
    gens.emplace_back(std::move(e));
  }
  return minimalize(vars.size(), std::move(gens));
}

Bass0 bass0(const MonomialIdeal& ideal, const MonomialPrime& p) {
  if (p.nvars() != ideal.nvars()) throw Error(ErrorKind::DimensionMismatch, "prime ring mismatch");
  const auto& vars = p.support();
  const auto local = localized_ideal(ideal, vars);
  Bass0 out;
  if (local.is_unit()) return out;

  // A socle monomial u gives the irreducible component with bounds u + 1,
  // and those bounds never exceed the generator exponents.
  std::vector<Exponent> bounds(vars.size());
  for (std::size_t k = 0; k < vars.size(); ++k) bounds[k] = local.max_exponent(k);

  auto record = [&](const Monomial& u) {
    if (contains(local, u)) return;
    for (std::size_t k = 0; k < vars.size(); ++k) {
      if (!contains(local, u * Monomial::variable(vars.size(), k))) return;
    }
    std::vector<Exponent> ambient(ideal.nvars(), 0);
    for (std::size_t k = 0; k < vars.size(); ++k) ambient[vars[k]] = u[k];
    out.witnesses.emplace_back(std::move(ambient));
  };
  if (vars.empty()) {
    // Every variable inverted: the localization is the field k(x) or zero.
    record(Monomial(0));
  } else {
    for_each_in_box(bounds, record);
  }
  out.mu0 = out.witnesses.size();
  return out;
}

std::vector<MonomialPrime> associated_primes(const MonomialIdeal& ideal) {
  const auto d = decompose(ideal);
  std::set<MonomialPrime> primes;
  for (const auto& c : d.components()) primes.emplace(ideal.nvars(), c.support());
  return {primes.begin(), primes.end()};
}

namespace {

// S when the ideal is exactly p_S, nothing otherwise.
std::optional<MonomialPrime> as_prime(const MonomialIdeal& ideal) {
  std::vector<std::size_t> support;
  for (const auto& g : ideal.generators()) {
    if (g.degree() != 1) return std::nullopt;
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (g[i] == 1) support.push_back(i);
    }
  }
  return MonomialPrime(ideal.nvars(), std::move(support));
}

}  // namespace

std::vector<MonomialPrime> ass_by_colon_scan(const MonomialIdeal& ideal) {
  if (ideal.is_unit()) throw Error(ErrorKind::UnitIdeal, "the unit ideal has no associated primes");
  std::vector<Exponent> bounds(ideal.nvars());
  for (std::size_t i = 0; i < ideal.nvars(); ++i) bounds[i] = ideal.max_exponent(i) + 1;
  std::set<MonomialPrime> primes;
  auto probe = [&](const Monomial& u) {
    if (auto p = as_prime(colon(ideal, u))) primes.insert(*p);
  };
  if (ideal.nvars() == 0) {
    probe(Monomial(0));
  } else {
    for_each_in_box(bounds, probe);
  }
  return {primes.begin(), primes.end()};
}

BassReport reducibility_index_by_bass(const MonomialIdeal& ideal) {
  BassReport report;
  report.ideal = ideal;
  for (auto& p : associated_primes(ideal)) {
    auto value = bass0(ideal, p);
    report.ir_by_formula += value.mu0;
    report.entries.push_back({std::move(p), std::move(value)});
  }
  return report;
}

namespace {

std::string count_word(std::size_t n) {
  static const char* const kWords[] = {"zero", "one", "two",   "three", "four", "five",
                                       "six",  "seven", "eight", "nine",  "ten"};
  return n <= 10 ? kWords[n] : fmt::format("{}", n);
}

}  // namespace

IrOneVerdict is_ir_one(const MonomialIdeal& ideal) {
  const auto report = reducibility_index_by_bass(ideal);
  if (report.entries.size() != 1) {
    return {false, count_word(report.entries.size()) + " associated primes"};
  }
  const auto mu0 = report.entries.front().value.mu0;
  if (mu0 != 1) return {false, fmt::format("mu0={}", mu0)};
  return {true, "one associated prime with mu0=1"};
}

}  // namespace irindex
