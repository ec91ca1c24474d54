#include "irindex/duality.hpp"

#include <algorithm>
#include <cstdint>
#include <set>

#include <fmt/format.h>

#include "irindex/bass.hpp"
#include "irindex/decomposition.hpp"
#include "irindex/error.hpp"

namespace irindex {

namespace {

bool sorted_contains(const std::vector<Monomial>& v, const Monomial& u) {
  return std::binary_search(v.begin(), v.end(), u);
}

// u / x_i for every i with u_i > 0.
std::vector<Monomial> lower_neighbours(const Monomial& u) {
  std::vector<Monomial> out;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] > 0) out.push_back(u.with_exponent(i, u[i] - 1));
  }
  return out;
}

bool closed_under_division(const std::vector<Monomial>& sorted) {
  for (const auto& u : sorted) {
    for (const auto& v : lower_neighbours(u)) {
      if (!sorted_contains(sorted, v)) return false;
    }
  }
  return true;
}

using Mask = std::uint32_t;

// Bitmask of divisors, per element of Γ. Requires |Γ| <= 32.
std::vector<Mask> divisor_masks(const Staircase& g) {
  const auto& ms = g.monomials();
  std::vector<Mask> masks(ms.size(), 0);
  for (std::size_t a = 0; a < ms.size(); ++a) {
    for (std::size_t b = 0; b < ms.size(); ++b) {
      if (divides(ms[b], ms[a])) masks[a] |= Mask{1} << b;
    }
  }
  return masks;
}

Mask full_mask(std::size_t n) { return n >= 32 ? ~Mask{0} : (Mask{1} << n) - 1; }

bool cover_search(const std::vector<Mask>& down, Mask covered, Mask full, std::size_t budget) {
  if (covered == full) return true;
  if (budget == 0) return false;
  // The lowest uncovered element must lie below some chosen generator.
  const Mask uncovered = full & ~covered;
  const auto e = static_cast<std::size_t>(__builtin_ctz(uncovered));
  for (std::size_t v = 0; v < down.size(); ++v) {
    if ((down[v] >> e) & 1) {
      if (cover_search(down, covered | down[v], full, budget - 1)) return true;
    }
  }
  return false;
}

}  // namespace

// Staircase

Staircase::Staircase(std::size_t nvars, std::vector<Monomial> monomials)
    : nvars_(nvars), monomials_(std::move(monomials)) {
  for (const auto& u : monomials_) {
    if (u.size() != nvars_) throw Error(ErrorKind::DimensionMismatch, "staircase ring mismatch");
  }
  std::sort(monomials_.begin(), monomials_.end());
  monomials_.erase(std::unique(monomials_.begin(), monomials_.end()), monomials_.end());
  if (!closed_under_division(monomials_)) {
    throw Error(ErrorKind::InvalidArgument, "staircase is not closed under division");
  }
}

bool Staircase::contains(const Monomial& u) const { return sorted_contains(monomials_, u); }

std::optional<std::size_t> Staircase::index_of(const Monomial& u) const {
  auto it = std::lower_bound(monomials_.begin(), monomials_.end(), u);
  if (it == monomials_.end() || *it != u) return std::nullopt;
  return static_cast<std::size_t>(it - monomials_.begin());
}

bool DownsetSubmodule::contains(const Monomial& u) const { return sorted_contains(members, u); }

Staircase staircase(const MonomialIdeal& ideal) {
  return Staircase(ideal.nvars(), standard_monomials(ideal));
}

MonomialIdeal ideal_of(const Staircase& g) {
  if (g.empty()) throw Error(ErrorKind::EmptyStaircase, "the empty staircase belongs to (1)");
  // 1 lies in Γ, so every minimal monomial outside Γ is some u·x_i with u in Γ.
  std::vector<Monomial> gens;
  for (const auto& u : g.monomials()) {
    for (std::size_t i = 0; i < g.nvars(); ++i) {
      auto v = u * Monomial::variable(g.nvars(), i);
      if (!g.contains(v)) gens.push_back(std::move(v));
    }
  }
  return MonomialIdeal(g.nvars(), std::move(gens));
}

DownsetSubmodule make_downset(const Staircase& g, std::vector<Monomial> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  for (const auto& u : members) {
    if (!g.contains(u)) throw Error(ErrorKind::NotInStaircase, "downset member outside Γ");
  }
  if (!closed_under_division(members)) {
    throw Error(ErrorKind::InvalidArgument, "submodule is not closed under the dual action");
  }
  return DownsetSubmodule{std::move(members)};
}

std::vector<Monomial> maximal_elements(const Staircase& g) {
  std::vector<Monomial> out;
  for (const auto& u : g.monomials()) {
    bool maximal = true;
    for (std::size_t i = 0; i < g.nvars() && maximal; ++i) {
      maximal = !g.contains(u * Monomial::variable(g.nvars(), i));
    }
    if (maximal) out.push_back(u);
  }
  return out;
}

DownsetSubmodule principal_downset(const Staircase& g, const Monomial& u) {
  if (u.size() != g.nvars() || !g.contains(u)) {
    throw Error(ErrorKind::NotInStaircase, "generator is not a standard monomial");
  }
  DownsetSubmodule d;
  for (const auto& v : g.monomials()) {
    if (divides(v, u)) d.members.push_back(v);
  }
  return d;
}

SumRepresentation sum_irreducible_representation(const Staircase& g) {
  if (g.empty()) throw Error(ErrorKind::EmptyStaircase, "the zero module has no representation");
  SumRepresentation rep;
  for (const auto& u : maximal_elements(g)) rep.components.push_back(principal_downset(g, u));
  return rep;
}

bool MinCoverResult::uniform() const {
  return std::adjacent_find(irredundant_cover_sizes.begin(), irredundant_cover_sizes.end(),
                            std::not_equal_to<>()) == irredundant_cover_sizes.end();
}

MinCoverResult min_cover_oracle(const Staircase& g) {
  if (g.empty()) throw Error(ErrorKind::EmptyStaircase, "the zero module has no cover");
  if (g.size() > kMinCoverCap) {
    throw Error(ErrorKind::TooLarge,
                fmt::format("|Γ| = {} exceeds the oracle cap {}", g.size(), kMinCoverCap));
  }
  const auto down = divisor_masks(g);
  const Mask full = full_mask(g.size());

  MinCoverResult result;
  for (std::size_t r = 1; r <= g.size(); ++r) {
    if (cover_search(down, 0, full, r)) {
      result.minimum = r;
      break;
    }
  }

  if (g.size() <= kAllCoversCap) {
    result.enumerated_all = true;
    const std::size_t n = g.size();
    std::set<std::size_t> sizes;
    for (Mask chosen = 1; chosen < (Mask{1} << n); ++chosen) {
      auto union_of = [&](Mask set) {
        Mask u = 0;
        for (std::size_t v = 0; v < n; ++v) {
          if ((set >> v) & 1) u |= down[v];
        }
        return u;
      };
      if (union_of(chosen) != full) continue;
      bool irredundant = true;
      for (std::size_t v = 0; v < n && irredundant; ++v) {
        if ((chosen >> v) & 1) irredundant = union_of(chosen & ~(Mask{1} << v)) != full;
      }
      if (!irredundant) continue;
      ++result.irredundant_cover_count;
      result.irredundant_cover_sizes.push_back(static_cast<std::size_t>(__builtin_popcount(chosen)));
    }
    std::sort(result.irredundant_cover_sizes.begin(), result.irredundant_cover_sizes.end());
  }
  return result;
}

bool DualityReport::pass() const noexcept {
  return ir_by_decomposition == ir_by_bass && ir_by_bass == ir_prime &&
         min_cover.value_or(ir_prime) == ir_prime && covers_uniform;
}

DualityReport check_finite_length_duality(const MonomialIdeal& ideal) {
  const auto g = staircase(ideal);
  DualityReport report;
  report.ideal = ideal;
  report.ir_by_decomposition = reducibility_index_by_decomposition(ideal);
  report.ir_by_bass = reducibility_index_by_bass(ideal).ir_by_formula;
  report.ir_prime = sum_irreducible_representation(g).index();
  if (g.size() <= kMinCoverCap) {
    const auto oracle = min_cover_oracle(g);
    report.min_cover = oracle.minimum;
    report.covers_uniform = oracle.uniform();
  }
  return report;
}

std::pair<bool, bool> dual_intersection_vs_sum(const Staircase& g, const DownsetSubmodule& b,
                                               const DownsetSubmodule& c) {
  // D(A/B) inside D(A) = M: the elements of M pairing to zero with B.
  auto annihilator = [&](const DownsetSubmodule& sub) {
    std::vector<Monomial> ann;
    for (const auto& u : g.monomials()) {
      const bool pairs_nonzero = std::any_of(sub.members.begin(), sub.members.end(),
                                             [&](const Monomial& v) { return v == u; });
      if (!pairs_nonzero) ann.push_back(u);
    }
    return ann;
  };
  const auto ann_b = annihilator(b), ann_c = annihilator(c);
  std::vector<Monomial> both;
  std::set_intersection(ann_b.begin(), ann_b.end(), ann_c.begin(), ann_c.end(),
                        std::back_inserter(both));
  const bool duals_meet_trivially = both.empty();

  // B + C: the submodule generated by both, closed under the dual action.
  std::set<Monomial> sum(b.members.begin(), b.members.end());
  sum.insert(c.members.begin(), c.members.end());
  std::vector<Monomial> frontier(sum.begin(), sum.end());
  while (!frontier.empty()) {
    auto u = std::move(frontier.back());
    frontier.pop_back();
    for (auto& v : lower_neighbours(u)) {
      if (sum.insert(v).second) frontier.push_back(std::move(v));
    }
  }
  const bool sum_is_everything =
      sum.size() == g.size() &&
      std::all_of(g.monomials().begin(), g.monomials().end(),
                  [&](const Monomial& u) { return sum.count(u) == 1; });
  return {duals_meet_trivially, sum_is_everything};
}

std::pair<bool, bool> irreducible_vs_dual_sum_irreducible(const MonomialIdeal& ideal) {
  if (!is_finite_colength(ideal)) {
    throw Error(ErrorKind::InfiniteColength, "duality needs a finite-length quotient");
  }
  const bool irreducible = decompose(ideal).size() == 1;
  const bool sum_irreducible = maximal_elements(staircase(ideal)).size() == 1;
  return {irreducible, sum_irreducible};
}

std::size_t quotient_index(const Staircase& g, const DownsetSubmodule& b) {
  std::vector<Monomial> rest;
  for (const auto& u : g.monomials()) {
    if (!b.contains(u)) rest.push_back(u);
  }
  std::size_t count = 0;
  for (const auto& u : rest) {
    bool maximal = true;
    for (std::size_t i = 0; i < g.nvars() && maximal; ++i) {
      maximal = !sorted_contains(rest, u * Monomial::variable(g.nvars(), i));
    }
    if (maximal) ++count;
  }
  return count;
}

std::vector<DownsetSubmodule> all_downsets(const Staircase& g) {
  if (g.size() > 20) throw Error(ErrorKind::TooLarge, "too many monomials to enumerate downsets");
  const auto down = divisor_masks(g);
  const std::size_t n = g.size();
  std::vector<DownsetSubmodule> out;
  for (Mask set = 0; set < (Mask{1} << n); ++set) {
    bool closed = true;
    for (std::size_t v = 0; v < n && closed; ++v) {
      if ((set >> v) & 1) closed = (down[v] & ~set) == 0;
    }
    if (!closed) continue;
    DownsetSubmodule d;
    for (std::size_t v = 0; v < n; ++v) {
      if ((set >> v) & 1) d.members.push_back(g.monomials()[v]);
    }
    out.push_back(std::move(d));
  }
  return out;
}

std::vector<Staircase> all_staircases(std::size_t nvars, std::size_t max_size) {
  std::set<std::vector<Monomial>> seen;
  std::vector<std::vector<Monomial>> frontier;
  if (max_size >= 1) {
    frontier.push_back({Monomial::one(nvars)});
    seen.insert(frontier.back());
  }
  while (!frontier.empty()) {
    auto cur = std::move(frontier.back());
    frontier.pop_back();
    if (cur.size() == max_size) continue;
    // Monomials that can be added while keeping the set closed under division.
    std::set<Monomial> addable;
    for (const auto& u : cur) {
      for (std::size_t i = 0; i < nvars; ++i) {
        auto v = u * Monomial::variable(nvars, i);
        if (sorted_contains(cur, v)) continue;
        const auto below = lower_neighbours(v);
        if (std::all_of(below.begin(), below.end(),
                        [&](const Monomial& w) { return sorted_contains(cur, w); })) {
          addable.insert(std::move(v));
        }
      }
    }
    for (const auto& v : addable) {
      auto next = cur;
      next.insert(std::upper_bound(next.begin(), next.end(), v), v);
      if (seen.insert(next).second) frontier.push_back(std::move(next));
    }
  }
  std::vector<Staircase> out;
  out.reserve(seen.size());
  for (const auto& s : seen) out.emplace_back(nvars, s);
  return out;
}

std::string render(const Staircase& g, const RingContext& ring) {
  if (ring.size() != g.nvars()) throw Error(ErrorKind::DimensionMismatch, "ring mismatch");
  const auto corners = maximal_elements(g);
  if (g.nvars() != 2) {
    std::string out;
    for (const auto& u : g.monomials()) {
      out += to_string(u, ring);
      if (sorted_contains(corners, u)) out += " *";
      out += '\n';
    }
    return out;
  }
  Exponent max_a = 0, max_b = 0;
  for (const auto& u : g.monomials()) {
    max_a = std::max(max_a, u[0]);
    max_b = std::max(max_b, u[1]);
  }
  std::string out;
  for (Exponent b = max_b + 1; b-- > 0;) {
    out += fmt::format("{:>4} |", b == 0 ? std::string("1") : fmt::format("{}^{}", ring.name(1), b));
    for (Exponent a = 0; a <= max_a; ++a) {
      const auto u = Monomial(std::vector<Exponent>{a, b});
      out += g.contains(u) ? (sorted_contains(corners, u) ? " *" : " #") : " .";
    }
    out += '\n';
  }
  out += fmt::format("     +{}\n", std::string(2 * (max_a + 1), '-'));
  out += fmt::format("      {} = {}^0..{}^{}   (* marks a socle corner)\n", "cols", ring.name(0),
                     ring.name(0), max_a);
  return out;
}

}  // namespace irindex
