#include "irindex/univariate.hpp"

#include <algorithm>
#include <map>

#include <fmt/format.h>

#include "irindex/error.hpp"

namespace irindex {

using Element = FiniteField::Element;

UniPoly::UniPoly(std::vector<Element> c) : coeffs(std::move(c)) { trim(); }

void UniPoly::trim() {
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

bool canonical_less(const UniPoly& a, const UniPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return a.coeffs < b.coeffs;
}

// PolyRing

UniPoly PolyRing::add(const UniPoly& a, const UniPoly& b) const {
  std::vector<Element> c(std::max(a.coeffs.size(), b.coeffs.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) {
    const Element x = i < a.coeffs.size() ? a.coeffs[i] : 0;
    const Element y = i < b.coeffs.size() ? b.coeffs[i] : 0;
    c[i] = field_.add(x, y);
  }
  return UniPoly(std::move(c));
}

UniPoly PolyRing::sub(const UniPoly& a, const UniPoly& b) const {
  std::vector<Element> c(std::max(a.coeffs.size(), b.coeffs.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) {
    const Element x = i < a.coeffs.size() ? a.coeffs[i] : 0;
    const Element y = i < b.coeffs.size() ? b.coeffs[i] : 0;
    c[i] = field_.sub(x, y);
  }
  return UniPoly(std::move(c));
}

UniPoly PolyRing::mul(const UniPoly& a, const UniPoly& b) const {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Element> c(a.coeffs.size() + b.coeffs.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
    if (a.coeffs[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs.size(); ++j) {
      c[i + j] = field_.add(c[i + j], field_.mul(a.coeffs[i], b.coeffs[j]));
    }
  }
  return UniPoly(std::move(c));
}

UniPoly PolyRing::scale(const UniPoly& a, Element c) const {
  std::vector<Element> out(a.coeffs.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = field_.mul(a.coeffs[i], c);
  return UniPoly(std::move(out));
}

std::pair<UniPoly, UniPoly> PolyRing::divmod(const UniPoly& a, const UniPoly& b) const {
  if (b.is_zero()) throw Error(ErrorKind::DivisionByZeroPoly, "division by the zero polynomial");
  if (a.degree() < b.degree()) return {UniPoly{}, a};
  auto r = a.coeffs;
  const auto db = static_cast<std::size_t>(b.degree());
  const Element lead_inv = field_.inv(b.leading());
  std::vector<Element> q(r.size() - db, 0);
  for (std::size_t k = q.size(); k-- > 0;) {
    const Element c = field_.mul(r[k + db], lead_inv);
    q[k] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) {
      r[k + j] = field_.sub(r[k + j], field_.mul(c, b.coeffs[j]));
    }
  }
  return {UniPoly(std::move(q)), UniPoly(std::move(r))};
}

UniPoly PolyRing::monic(const UniPoly& a) const {
  if (a.is_zero()) return a;
  return scale(a, field_.inv(a.leading()));
}

UniPoly PolyRing::gcd(const UniPoly& a, const UniPoly& b) const {
  UniPoly x = a, y = b;
  while (!y.is_zero()) {
    auto r = rem(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  return monic(x);
}

UniPoly PolyRing::derivative(const UniPoly& a) const {
  if (a.coeffs.size() <= 1) return {};
  std::vector<Element> d(a.coeffs.size() - 1);
  for (std::size_t i = 1; i < a.coeffs.size(); ++i) {
    // i * a_i, with i reduced into the prime subfield.
    d[i - 1] = field_.mul(static_cast<Element>(i % field_.characteristic()), a.coeffs[i]);
  }
  return UniPoly(std::move(d));
}

UniPoly PolyRing::pow(const UniPoly& a, unsigned e) const {
  UniPoly result = UniPoly::constant(1);
  for (unsigned i = 0; i < e; ++i) result = mul(result, a);
  return result;
}

UniPoly PolyRing::pow_mod(const UniPoly& base, std::uint64_t e, const UniPoly& m) const {
  UniPoly result = rem(UniPoly::constant(1), m);
  UniPoly b = rem(base, m);
  while (e > 0) {
    if (e & 1) result = rem(mul(result, b), m);
    b = rem(mul(b, b), m);
    e >>= 1;
  }
  return result;
}

UniPoly PolyRing::monic_of_degree(unsigned d, std::uint64_t index) const {
  std::vector<Element> c(d + 1, 0);
  for (unsigned i = 0; i < d; ++i) {
    c[i] = static_cast<Element>(index % field_.size());
    index /= field_.size();
  }
  c[d] = 1;
  return UniPoly(std::move(c));
}

std::string PolyRing::format(const UniPoly& a, const std::string& var) const {
  if (a.is_zero()) return "0";
  std::string out;
  for (std::size_t i = a.coeffs.size(); i-- > 0;) {
    const Element c = a.coeffs[i];
    if (c == 0) continue;
    if (!out.empty()) out += '+';
    auto coeff = field_.format(c);
    if (coeff.find('+') != std::string::npos) coeff = "(" + coeff + ")";
    if (i == 0) {
      out += coeff;
      continue;
    }
    if (c != 1) out += coeff + "*";
    out += var;
    if (i > 1) out += fmt::format("^{}", i);
  }
  return out;
}

// Factorization

namespace {

void check_factor_input(const UniPoly& f) {
  if (f.is_zero()) throw Error(ErrorKind::InvalidArgument, "cannot factor the zero polynomial");
  if (f.degree() > static_cast<long>(kMaxFactorDegree)) {
    throw Error(ErrorKind::DegreeTooLarge,
                fmt::format("degree {} exceeds {}", f.degree(), kMaxFactorDegree));
  }
}

// Number of monic candidates of degree 1..max_degree, saturating.
std::uint64_t candidate_count(std::uint32_t q, long max_degree) {
  std::uint64_t total = 0, term = 1;
  for (long d = 1; d <= max_degree; ++d) {
    term *= q;
    total += term;
    if (total > kTrialDivisionBudget) return total;
  }
  return total;
}

void sort_factors(std::vector<Factor>& factors) {
  std::sort(factors.begin(), factors.end(),
            [](const Factor& a, const Factor& b) { return canonical_less(a.poly, b.poly); });
}

// x -> x^{1/p} coefficientwise; requires every exponent divisible by p.
UniPoly pth_root(const PolyRing& ring, const UniPoly& f) {
  const auto& F = ring.field();
  const std::uint32_t p = F.characteristic();
  const std::uint64_t root_exp = F.size() / p;  // a^(q/p) is the p-th root of a
  std::vector<Element> out(f.coeffs.size() / p + 1, 0);
  for (std::size_t i = 0; i < f.coeffs.size(); i += p) out[i / p] = F.pow(f.coeffs[i], root_exp);
  return UniPoly(std::move(out));
}

std::vector<Factor> square_free(const PolyRing& ring, const UniPoly& f) {
  std::vector<Factor> out;
  if (f.degree() <= 0) return out;
  const std::uint32_t p = ring.field().characteristic();
  const auto fp = ring.derivative(f);
  if (fp.is_zero()) {
    for (auto& [g, m] : square_free(ring, pth_root(ring, f))) out.push_back({g, m * p});
    return out;
  }
  auto c = ring.gcd(f, fp);
  auto w = ring.divmod(f, c).first;
  unsigned i = 1;
  while (w.degree() > 0) {
    auto y = ring.gcd(w, c);
    auto z = ring.divmod(w, y).first;
    if (z.degree() > 0) out.push_back({ring.monic(z), i});
    ++i;
    w = std::move(y);
    c = ring.divmod(c, w).first;
  }
  if (c.degree() > 0) {
    for (auto& [g, m] : square_free(ring, pth_root(ring, c))) out.push_back({g, m * p});
  }
  return out;
}

// Nullspace of M (rows x cols) over the field, by Gaussian elimination.
std::vector<std::vector<Element>> nullspace(const FiniteField& F,
                                            std::vector<std::vector<Element>> m, std::size_t cols) {
  std::vector<long> pivot_of_col(cols, -1);
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && m[sel][col] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[sel], m[row]);
    const Element inv = F.inv(m[row][col]);
    for (auto& v : m[row]) v = F.mul(v, inv);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      const Element factor = m[r][col];
      for (std::size_t c = 0; c < cols; ++c) m[r][c] = F.sub(m[r][c], F.mul(factor, m[row][c]));
    }
    pivot_of_col[col] = static_cast<long>(row);
    ++row;
  }
  std::vector<std::vector<Element>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (pivot_of_col[free] >= 0) continue;
    std::vector<Element> v(cols, 0);
    v[free] = 1;
    for (std::size_t col = 0; col < cols; ++col) {
      if (pivot_of_col[col] < 0) continue;
      v[col] = F.neg(m[static_cast<std::size_t>(pivot_of_col[col])][free]);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

// Splits a square-free monic polynomial into its monic irreducible factors.
std::vector<UniPoly> berlekamp_split(const PolyRing& ring, const UniPoly& g) {
  const auto& F = ring.field();
  const auto n = static_cast<std::size_t>(g.degree());
  if (n <= 1) return {g};

  // Row i of Q holds x^{q i} mod g.
  const auto xq = ring.pow_mod(UniPoly::x(), F.size(), g);
  std::vector<std::vector<Element>> q_rows(n, std::vector<Element>(n, 0));
  UniPoly cur = UniPoly::constant(1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < cur.coeffs.size(); ++j) q_rows[i][j] = cur.coeffs[j];
    cur = ring.rem(ring.mul(cur, xq), g);
  }
  // v is in the Berlekamp subalgebra iff sum_i v_i Q[i][j] = v_j for all j.
  std::vector<std::vector<Element>> system(n, std::vector<Element>(n, 0));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      system[j][i] = F.sub(q_rows[i][j], i == j ? 1 : 0);
    }
  }
  const auto basis = nullspace(F, std::move(system), n);
  const std::size_t r = basis.size();
  std::vector<UniPoly> parts{g};
  if (r == 1) return parts;

  for (const auto& vec : basis) {
    UniPoly v(vec);
    if (v.degree() <= 0) continue;
    for (Element s = 0; s < F.size() && parts.size() < r; ++s) {
      const auto shifted = ring.sub(v, UniPoly::constant(s));
      std::vector<UniPoly> next;
      for (const auto& h : parts) {
        if (h.degree() <= 1) {
          next.push_back(h);
          continue;
        }
        auto d = ring.gcd(h, shifted);
        if (d.degree() > 0 && d.degree() < h.degree()) {
          next.push_back(ring.monic(ring.divmod(h, d).first));
          next.push_back(d);
        } else {
          next.push_back(h);
        }
      }
      parts = std::move(next);
    }
    if (parts.size() == r) break;
  }
  return parts;
}

}  // namespace

Factorization factor_by_trial_division(const PolyRing& ring, const UniPoly& f) {
  check_factor_input(f);
  const auto& F = ring.field();
  if (candidate_count(F.size(), f.degree() / 2) > kTrialDivisionBudget) {
    throw Error(ErrorKind::TooLarge, "trial division search exceeds its budget");
  }
  Factorization out;
  out.unit = f.leading();
  UniPoly rest = ring.monic(f);
  for (unsigned d = 1; 2 * static_cast<long>(d) <= rest.degree(); ++d) {
    std::uint64_t count = 1;
    for (unsigned i = 0; i < d; ++i) count *= F.size();
    for (std::uint64_t idx = 0; idx < count && 2 * static_cast<long>(d) <= rest.degree(); ++idx) {
      const auto candidate = ring.monic_of_degree(d, idx);
      unsigned mult = 0;
      while (true) {
        auto [quo, r] = ring.divmod(rest, candidate);
        if (!r.is_zero()) break;
        rest = std::move(quo);
        ++mult;
      }
      if (mult > 0) out.factors.push_back({candidate, mult});
    }
  }
  if (rest.degree() > 0) {
    // Every factor left has degree >= d > deg/2, so there is only one.
    out.factors.push_back({rest, 1});
  }
  sort_factors(out.factors);
  return out;
}

Factorization factor_by_berlekamp(const PolyRing& ring, const UniPoly& f) {
  check_factor_input(f);
  Factorization out;
  out.unit = f.leading();
  for (const auto& [part, mult] : square_free(ring, ring.monic(f))) {
    for (auto& irr : berlekamp_split(ring, part)) out.factors.push_back({ring.monic(irr), mult});
  }
  sort_factors(out.factors);
  return out;
}

Factorization factor(const PolyRing& ring, const UniPoly& f) {
  check_factor_input(f);
  if (candidate_count(ring.field().size(), f.degree() / 2) <= kTrialDivisionBudget) {
    return factor_by_trial_division(ring, f);
  }
  return factor_by_berlekamp(ring, f);
}

bool is_irreducible(const PolyRing& ring, const UniPoly& f) {
  if (f.degree() < 1) return false;
  const auto& F = ring.field();
  if (candidate_count(F.size(), f.degree() / 2) > kTrialDivisionBudget) {
    const auto monic = ring.monic(f);
    if (ring.gcd(monic, ring.derivative(monic)).degree() > 0) return false;
    return berlekamp_split(ring, monic).size() == 1;
  }
  for (long d = 1; 2 * d <= f.degree(); ++d) {
    std::uint64_t count = 1;
    for (long i = 0; i < d; ++i) count *= F.size();
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      if (ring.rem(f, ring.monic_of_degree(static_cast<unsigned>(d), idx)).is_zero()) return false;
    }
  }
  return true;
}

UniPoly expand(const PolyRing& ring, const Factorization& fac) {
  UniPoly out = UniPoly::constant(fac.unit);
  for (const auto& [p, m] : fac.factors) out = ring.mul(out, ring.pow(p, m));
  return out;
}

std::size_t ir_hypersurface(const PolyRing& ring, const UniPoly& f) {
  if (f.is_zero()) throw Error(ErrorKind::InvalidArgument, "f must be nonzero");
  if (f.degree() == 0) throw Error(ErrorKind::UnitInput, "a nonzero constant generates the unit ideal");
  return factor(ring, f).factors.size();
}

UniPoly embed(const UniPoly& f, const FiniteField& from, const FiniteField& to) {
  if (!from.is_prime_field() || from.characteristic() != to.characteristic()) {
    throw Error(ErrorKind::InvalidArgument,
                fmt::format("no coefficient embedding {} -> {}", from.name(), to.name()));
  }
  for (auto c : f.coeffs) {
    if (c >= from.size()) throw Error(ErrorKind::InvalidArgument, "coefficient outside the base field");
  }
  return f;
}

BaseChangeReport base_change_field(const UniPoly& f, const FiniteField& base,
                                   const FiniteField& extension) {
  const PolyRing small(base), big(extension);
  const auto lifted = embed(f, base, extension);
  BaseChangeReport report;
  report.kind = BaseChangeKind::FieldExtension;
  report.faithfully_flat = true;  // GF(p^k) is free over GF(p)
  const auto before = factor(small, f);
  report.ir_before = before.factors.size();
  report.ir_after = factor(big, lifted).factors.size();
  for (const auto& [p, m] : before.factors) {
    FiberEntry e;
    e.prime = small.format(p);
    // Each fiber GF(p)[x]/(p_i^{n_i}) is Gorenstein Artinian local, so its
    // socle is one-dimensional.
    e.mu0 = 1;
    e.fiber_ir = factor(big, embed(p, base, extension)).factors.size();
    report.per_prime.push_back(std::move(e));
  }
  evaluate(report);
  return report;
}

}  // namespace irindex
