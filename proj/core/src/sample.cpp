#include "irindex/sample.hpp"

#include "irindex/error.hpp"

namespace irindex {

std::uint64_t Sampler::below(std::uint64_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "empty range");
  return rng_() % n;
}

Monomial Sampler::monomial(std::size_t nvars, Exponent max_exp) {
  std::vector<Exponent> e(nvars);
  for (auto& x : e) x = static_cast<Exponent>(below(max_exp + 1));
  return Monomial(std::move(e));
}

MonomialIdeal Sampler::ideal(std::size_t nvars, Exponent max_exp, std::size_t max_gens) {
  if (max_exp == 0) throw Error(ErrorKind::InvalidArgument, "max_exp must be positive");
  const auto count = between(1, max_gens);
  std::vector<Monomial> gens;
  while (gens.size() < count) {
    auto u = monomial(nvars, max_exp);
    if (!u.is_one()) gens.push_back(std::move(u));
  }
  return MonomialIdeal(nvars, std::move(gens));
}

MonomialIdeal Sampler::artinian_ideal(std::size_t nvars, Exponent max_exp, std::size_t max_gens) {
  auto gens = ideal(nvars, max_exp, max_gens).generators();
  for (std::size_t i = 0; i < nvars; ++i) {
    gens.push_back(Monomial::variable(nvars, i, static_cast<Exponent>(between(1, max_exp))));
  }
  return MonomialIdeal(nvars, std::move(gens));
}

std::vector<MonomialIdeal> random_ideals(std::uint64_t seed, std::size_t count, std::size_t max_vars,
                                         Exponent max_exp, std::size_t max_gens) {
  Sampler s(seed);
  std::vector<MonomialIdeal> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const auto n = static_cast<std::size_t>(s.between(1, max_vars));
    out.push_back(s.ideal(n, max_exp, max_gens));
  }
  return out;
}

std::vector<MonomialIdeal> random_artinian_ideals(std::uint64_t seed, std::size_t count,
                                                  std::size_t max_vars, Exponent max_exp,
                                                  std::size_t max_gens) {
  Sampler s(seed);
  std::vector<MonomialIdeal> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const auto n = static_cast<std::size_t>(s.between(1, max_vars));
    out.push_back(s.artinian_ideal(n, max_exp, max_gens));
  }
  return out;
}

std::vector<MonomialIdeal> all_ideals_in_box(std::size_t nvars, Exponent max_exp) {
  std::vector<Exponent> bounds(nvars, max_exp + 1);
  std::vector<Monomial> box;
  for_each_in_box(bounds, [&](Monomial e) {
    if (box.size() >= 20) throw Error(ErrorKind::TooLarge, "box exceeds 20 monomials");
    box.push_back(std::move(e));
  });
  const auto n = box.size();
  std::vector<MonomialIdeal> out;
  // Each ideal corresponds to exactly one antichain of minimal generators.
  for (std::uint32_t set = 0; set < (std::uint32_t{1} << n); ++set) {
    std::vector<Monomial> gens;
    bool antichain = true;
    for (std::size_t a = 0; a < n && antichain; ++a) {
      if (!((set >> a) & 1)) continue;
      for (std::size_t b = 0; b < n && antichain; ++b) {
        if (a != b && ((set >> b) & 1) && divides(box[a], box[b])) antichain = false;
      }
      gens.push_back(box[a]);
    }
    if (!antichain) continue;
    MonomialIdeal ideal(nvars, std::move(gens));
    if (!ideal.is_unit()) out.push_back(std::move(ideal));
  }
  return out;
}

std::vector<UniPoly> all_polynomials(const FiniteField& field, unsigned min_degree,
                                     unsigned max_degree) {
  const auto q = field.size();
  std::vector<UniPoly> out;
  for (unsigned d = min_degree; d <= max_degree; ++d) {
    std::uint64_t count = 1;
    for (unsigned i = 0; i < d; ++i) count *= q;
    for (FiniteField::Element lead = 1; lead < q; ++lead) {
      for (std::uint64_t idx = 0; idx < count; ++idx) {
        std::vector<FiniteField::Element> c(d + 1);
        auto rest = idx;
        for (unsigned i = 0; i < d; ++i) {
          c[i] = static_cast<FiniteField::Element>(rest % q);
          rest /= q;
        }
        c[d] = lead;
        out.emplace_back(std::move(c));
      }
    }
  }
  return out;
}

}  // namespace irindex
