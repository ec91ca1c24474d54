#include "irindex/base_change.hpp"

#include <algorithm>

#include <fmt/format.h>

#include "irindex/bass.hpp"
#include "irindex/decomposition.hpp"
#include "irindex/error.hpp"

namespace irindex {

std::string_view to_string(BaseChangeKind kind) {
  switch (kind) {
    case BaseChangeKind::PolynomialExtension: return "polynomial-extension";
    case BaseChangeKind::Localization: return "localization";
    case BaseChangeKind::FieldExtension: return "field-extension";
  }
  return "unknown";
}

void evaluate(BaseChangeReport& report) {
  report.formula_side = 0;
  report.t_bound = 0;
  bool all_irreducible = true;
  for (const auto& e : report.per_prime) {
    report.formula_side += e.fiber_ir * e.mu0;
    report.t_bound = std::max(report.t_bound, e.fiber_ir);
    all_irreducible = all_irreducible && e.fiber_ir == 1;
  }
  report.formula_holds = report.formula_side == report.ir_after;
  report.upper_bound_holds = report.ir_after <= report.t_bound * report.ir_before;
  if (report.faithfully_flat) {
    report.chain_holds = report.ir_before <= report.ir_after && report.upper_bound_holds;
  } else {
    report.chain_holds.reset();
  }
  const bool preserved = report.ir_before == report.ir_after;
  report.equality_criterion_holds = preserved == all_irreducible;
}

std::size_t reducibility_index_or_zero(const MonomialIdeal& ideal) {
  return ideal.is_unit() ? 0 : reducibility_index_by_decomposition(ideal);
}

MonomialIdeal extend_polynomial(const MonomialIdeal& ideal, std::size_t extra) {
  std::vector<Monomial> gens;
  gens.reserve(ideal.size());
  for (const auto& g : ideal.generators()) {
    std::vector<Exponent> e(g.exponents().begin(), g.exponents().end());
    e.resize(ideal.nvars() + extra, 0);
    gens.emplace_back(std::move(e));
  }
  return MonomialIdeal(ideal.nvars() + extra, std::move(gens));
}

namespace {

std::vector<MonomialPrime> primes_of(const MonomialIdeal& ideal) {
  return ideal.is_unit() ? std::vector<MonomialPrime>{} : associated_primes(ideal);
}

}  // namespace

BaseChangeReport localize_index(const MonomialIdeal& ideal, std::span<const std::size_t> inverted,
                                const RingContext& ring) {
  if (ring.size() != ideal.nvars()) throw Error(ErrorKind::DimensionMismatch, "ring mismatch");
  for (auto i : inverted) {
    if (i >= ideal.nvars()) throw Error(ErrorKind::InvalidArgument, "inverted variable out of range");
  }
  // Surviving variables are those not inverted; the inverted ones move into
  // the coefficient field.
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < ideal.nvars(); ++i) {
    if (std::find(inverted.begin(), inverted.end(), i) == inverted.end()) kept.push_back(i);
  }

  BaseChangeReport report;
  report.kind = BaseChangeKind::Localization;
  report.faithfully_flat = inverted.empty();
  report.ir_before = reducibility_index_or_zero(ideal);
  report.ir_after = reducibility_index_or_zero(localized_ideal(ideal, kept));
  for (const auto& p : primes_of(ideal)) {
    FiberEntry e;
    e.prime = to_string(p, ring);
    e.mu0 = bass0(ideal, p).mu0;
    e.fiber_ir = reducibility_index_or_zero(localized_ideal(p.to_ideal(), kept));
    report.per_prime.push_back(std::move(e));
  }
  evaluate(report);
  return report;
}

namespace {

BaseChangeReport extension_report(const MonomialIdeal& ideal, std::size_t extra,
                                  const RingContext& ring) {
  BaseChangeReport report;
  report.kind = BaseChangeKind::PolynomialExtension;
  report.faithfully_flat = true;
  report.ir_before = reducibility_index_or_zero(ideal);
  report.ir_after = reducibility_index_or_zero(extend_polynomial(ideal, extra));
  for (const auto& p : primes_of(ideal)) {
    FiberEntry e;
    e.prime = to_string(p, ring);
    e.mu0 = bass0(ideal, p).mu0;
    e.fiber_ir = reducibility_index_or_zero(extend_polynomial(p.to_ideal(), extra));
    report.per_prime.push_back(std::move(e));
  }
  evaluate(report);
  return report;
}

}  // namespace

BaseChangeReport check_base_change(const MonomialIdeal& ideal, const MonomialBaseChange& change,
                                   const RingContext& ring) {
  if (ring.size() != ideal.nvars()) throw Error(ErrorKind::DimensionMismatch, "ring mismatch");
  if (const auto* ext = std::get_if<PolynomialExtension>(&change)) {
    if (ext->extra == 0) throw Error(ErrorKind::InvalidArgument, "extension needs a new variable");
    return extension_report(ideal, ext->extra, ring);
  }
  return localize_index(ideal, std::get<Localization>(change).inverted, ring);
}

}  // namespace irindex
