#include "irindex/decomposition.hpp"

#include <algorithm>
#include <map>
#include <random>

#include <fmt/format.h>

#include "irindex/error.hpp"

namespace irindex {

IrreducibleComponent::IrreducibleComponent(std::vector<Exponent> bounds)
    : bounds_(std::move(bounds)) {
  for (auto b : bounds_) {
    if (b > kMaxExponent) throw Error(ErrorKind::ExponentTooLarge, "component bound too large");
  }
}

bool IrreducibleComponent::contains(const Monomial& u) const {
  if (u.size() != bounds_.size()) {
    throw Error(ErrorKind::DimensionMismatch, "monomial does not match component");
  }
  for (std::size_t i = 0; i < bounds_.size(); ++i) {
    if (bounds_[i] >= 1 && u[i] >= bounds_[i]) return true;
  }
  return false;
}

std::vector<std::size_t> IrreducibleComponent::support() const {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < bounds_.size(); ++i) {
    if (bounds_[i] >= 1) s.push_back(i);
  }
  return s;
}

MonomialIdeal IrreducibleComponent::to_ideal() const {
  std::vector<Monomial> gens;
  for (std::size_t i = 0; i < bounds_.size(); ++i) {
    if (bounds_[i] >= 1) gens.push_back(Monomial::variable(bounds_.size(), i, bounds_[i]));
  }
  return MonomialIdeal(bounds_.size(), std::move(gens));
}

std::string to_string(const IrreducibleComponent& c, const RingContext& ring) {
  return to_string(c.to_ideal(), ring);
}

Decomposition::Decomposition(std::vector<IrreducibleComponent> components, MonomialIdeal source)
    : components_(std::move(components)), source_(std::move(source)) {}

namespace {

class Splitter {
 public:
  explicit Splitter(SplitStrategy strategy) : strategy_(strategy), rng_(strategy.seed) {}

  const std::vector<IrreducibleComponent>& run(const MonomialIdeal& ideal) {
    if (auto it = memo_.find(ideal); it != memo_.end()) return it->second;

    const auto& gens = ideal.generators();
    auto mixed = std::find_if(gens.begin(), gens.end(),
                              [](const Monomial& g) { return g.support_size() >= 2; });
    std::vector<IrreducibleComponent> result;
    if (mixed == gens.end()) {
      std::vector<Exponent> bounds(ideal.nvars(), 0);
      for (const auto& g : gens) {
        for (std::size_t i = 0; i < g.size(); ++i) {
          if (g[i] > 0) bounds[i] = g[i];
        }
      }
      result.emplace_back(std::move(bounds));
    } else {
      const Monomial g = *mixed;
      const std::size_t i = pick_variable(g);
      const auto power = Monomial::variable(g.size(), i, g[i]);
      const auto rest = quotient(g, power);
      // Copied, since it is moved into this node's own entry below.
      auto left = run(ideal + MonomialIdeal(ideal.nvars(), {power}));
      const auto& right = run(ideal + MonomialIdeal(ideal.nvars(), {rest}));
      result = std::move(left);
      result.insert(result.end(), right.begin(), right.end());
      std::sort(result.begin(), result.end());
      result.erase(std::unique(result.begin(), result.end()), result.end());
    }
    return memo_.emplace(ideal, std::move(result)).first->second;
  }

 private:
  std::size_t pick_variable(const Monomial& g) {
    std::vector<std::size_t> support;
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (g[i] > 0) support.push_back(i);
    }
    switch (strategy_.kind) {
      case SplitStrategy::Kind::FirstVariable: return support.front();
      case SplitStrategy::Kind::LastVariable: return support.back();
      case SplitStrategy::Kind::Random: {
        std::uniform_int_distribution<std::size_t> dist(0, support.size() - 1);
        return support[dist(rng_)];
      }
    }
    return support.front();
  }

  SplitStrategy strategy_;
  std::mt19937_64 rng_;
  std::map<MonomialIdeal, std::vector<IrreducibleComponent>> memo_;
};

}  // namespace

std::vector<IrreducibleComponent> split_decompose(const MonomialIdeal& ideal,
                                                  SplitStrategy strategy) {
  if (ideal.is_unit()) throw Error(ErrorKind::UnitIdeal, "the unit ideal has no decomposition");
  Splitter splitter(strategy);
  return splitter.run(ideal);
}

MonomialIdeal intersect_all(std::span<const IrreducibleComponent> components, std::size_t nvars) {
  auto acc = MonomialIdeal::unit(nvars);
  for (const auto& c : components) {
    if (c.nvars() != nvars) throw Error(ErrorKind::DimensionMismatch, "component ring mismatch");
    acc = intersect(acc, c.to_ideal());
  }
  return acc;
}

bool component_contains(const IrreducibleComponent& c, const MonomialIdeal& ideal) {
  return std::all_of(ideal.generators().begin(), ideal.generators().end(),
                     [&](const Monomial& g) { return c.contains(g); });
}

Decomposition irredundant(std::vector<IrreducibleComponent> candidates, const MonomialIdeal& ideal) {
  if (ideal.is_unit()) throw Error(ErrorKind::UnitIdeal, "the unit ideal has no decomposition");
  if (intersect_all(candidates, ideal.nvars()) != ideal) {
    throw Error(ErrorKind::InvalidCandidates, "candidate components do not intersect to the ideal");
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

  bool removed = true;
  while (removed && candidates.size() > 1) {
    removed = false;
    for (std::size_t k = 0; k < candidates.size(); ++k) {
      std::vector<IrreducibleComponent> others;
      others.reserve(candidates.size() - 1);
      for (std::size_t j = 0; j < candidates.size(); ++j) {
        if (j != k) others.push_back(candidates[j]);
      }
      if (component_contains(candidates[k], intersect_all(others, ideal.nvars()))) {
        candidates.erase(candidates.begin() + static_cast<std::ptrdiff_t>(k));
        removed = true;
        break;
      }
    }
  }
  return Decomposition(std::move(candidates), ideal);
}

Decomposition decompose(const MonomialIdeal& ideal, SplitStrategy strategy) {
  return irredundant(split_decompose(ideal, strategy), ideal);
}

std::size_t reducibility_index_by_decomposition(const MonomialIdeal& ideal) {
  return decompose(ideal).size();
}

}  // namespace irindex
