#include "irindex/abelian.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <unordered_map>

#include <fmt/format.h>

#include "irindex/error.hpp"

namespace irindex {

namespace {

std::uint64_t smallest_prime_factor(std::uint64_t n) {
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return d;
  }
  return n;
}

// (p, k) with n = p^k, k >= 1.
std::optional<std::pair<std::uint64_t, unsigned>> prime_power(std::uint64_t n) {
  if (n < 2) return std::nullopt;
  const auto p = smallest_prime_factor(n);
  unsigned k = 0;
  while (n % p == 0) {
    n /= p;
    ++k;
  }
  if (n != 1) return std::nullopt;
  return std::make_pair(p, k);
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  while (n > 1) {
    const auto p = smallest_prime_factor(n);
    unsigned k = 0;
    while (n % p == 0) {
      n /= p;
      ++k;
    }
    out.emplace_back(p, k);
  }
  return out;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = 2; q <= n; ++q) {
    if (smallest_prime_factor(q) == q) out.push_back(q);
  }
  return out;
}

void require_order(const FiniteAbelianGroup& a, std::uint64_t cap, const char* what) {
  if (a.order() > cap) {
    throw Error(ErrorKind::TooLarge,
                fmt::format("{} needs |A| <= {}, got {}", what, cap, a.order()));
  }
}

Subgroup from_mask(std::uint64_t mask) {
  Subgroup s;
  while (mask != 0) {
    s.elements.push_back(static_cast<std::uint32_t>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
  return s;
}

std::uint64_t to_mask(const Subgroup& s) {
  std::uint64_t m = 0;
  for (auto e : s.elements) m |= std::uint64_t{1} << e;
  return m;
}

// Subgroup lattice of a group of order <= 64, subgroups as bitmasks.
class Lattice {
 public:
  explicit Lattice(const FiniteAbelianGroup& a) : n_(static_cast<std::uint32_t>(a.order())) {
    require_order(a, kMaxOracleOrder, "the subgroup lattice");
    sum_.resize(std::size_t{n_} * n_);
    for (std::uint32_t x = 0; x < n_; ++x) {
      for (std::uint32_t y = 0; y < n_; ++y) sum_[x * n_ + y] = static_cast<std::uint8_t>(a.add(x, y));
    }
    full_ = n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;

    std::set<std::uint64_t> cyclic;
    for (std::uint32_t g = 0; g < n_; ++g) cyclic.insert(add_element(1, g));
    std::set<std::uint64_t> seen(cyclic.begin(), cyclic.end());
    std::vector<std::uint64_t> queue(cyclic.begin(), cyclic.end());
    while (!queue.empty()) {
      const auto s = queue.back();
      queue.pop_back();
      for (auto c : cyclic) {
        const auto j = join(s, c);
        if (seen.insert(j).second) queue.push_back(j);
      }
    }
    subs_.assign(seen.begin(), seen.end());
    std::sort(subs_.begin(), subs_.end(), [](std::uint64_t x, std::uint64_t y) {
      const auto px = std::popcount(x), py = std::popcount(y);
      if (px != py) return px < py;
      return from_mask(x).elements < from_mask(y).elements;
    });
    for (std::uint32_t i = 0; i < subs_.size(); ++i) index_[subs_[i]] = i;
  }

  std::uint64_t full() const { return full_; }
  const std::vector<std::uint64_t>& subgroups() const { return subs_; }
  std::uint32_t index_of(std::uint64_t mask) const { return index_.at(mask); }

  std::uint64_t translate(std::uint64_t mask, std::uint32_t x) const {
    std::uint64_t out = 0;
    while (mask != 0) {
      const auto h = static_cast<std::uint32_t>(std::countr_zero(mask));
      out |= std::uint64_t{1} << sum_[h * n_ + x];
      mask &= mask - 1;
    }
    return out;
  }

  // S + <g>: the cosets S + j·g until j·g falls back into S.
  std::uint64_t add_element(std::uint64_t s, std::uint32_t g) const {
    std::uint64_t out = s;
    for (std::uint32_t x = g; ((s >> x) & 1) == 0; x = sum_[x * n_ + g]) out |= translate(s, x);
    return out;
  }

  std::uint64_t join(std::uint64_t s, std::uint64_t t) const {
    std::uint64_t out = s;
    for (std::uint64_t rest = t & ~out; rest != 0; rest &= ~out) {
      out = add_element(out, static_cast<std::uint32_t>(std::countr_zero(rest)));
    }
    return out;
  }

  bool sum_irreducible(std::uint64_t h) const {
    if (std::popcount(h) == 1) throw Error(ErrorKind::TrivialGroup, "the trivial subgroup");
    std::vector<std::uint64_t> maximal;
    const auto size = static_cast<std::uint64_t>(std::popcount(h));
    for (auto k : subs_) {
      if ((k & ~h) != 0 || k == h) continue;
      const auto index = size / static_cast<std::uint64_t>(std::popcount(k));
      if (smallest_prime_factor(index) == index) maximal.push_back(k);
    }
    // Any decomposition H = B + C enlarges to one with B, C maximal.
    for (std::size_t i = 0; i < maximal.size(); ++i) {
      for (std::size_t j = i + 1; j < maximal.size(); ++j) {
        if (join(maximal[i], maximal[j]) == h) return false;
      }
    }
    return true;
  }

 private:
  std::uint32_t n_;
  std::vector<std::uint8_t> sum_;
  std::uint64_t full_ = 0;
  std::vector<std::uint64_t> subs_;
  std::unordered_map<std::uint64_t, std::uint32_t> index_;
};

std::vector<std::uint32_t> irreducible_indices(const Lattice& lat) {
  std::vector<std::uint32_t> out;
  const auto& subs = lat.subgroups();
  for (std::uint32_t i = 1; i < subs.size(); ++i) {
    if (lat.sum_irreducible(subs[i])) out.push_back(i);
  }
  return out;
}

class RepresentationSearch {
 public:
  RepresentationSearch(const Lattice& lat, std::size_t keep, BruteForceIndex& out)
      : lat_(lat), irr_(irreducible_indices(lat)), keep_(keep), out_(out) {
    const auto& subs = lat.subgroups();
    m_ = irr_.size();
    table_.resize(subs.size() * m_);
    for (std::size_t s = 0; s < subs.size(); ++s) {
      for (std::size_t c = 0; c < m_; ++c) {
        table_[s * m_ + c] = lat.index_of(lat.join(subs[s], subs[irr_[c]]));
      }
    }
    full_ = lat.index_of(lat.full());
  }

  void run() { descend(0, 0); }

 private:
  void descend(std::size_t start, std::uint32_t current) {
    for (std::size_t c = start; c < m_; ++c) {
      const auto next = table_[current * m_ + c];
      if (next == current) continue;
      chosen_.push_back(c);
      if (next == full_) {
        leaf();
      } else {
        descend(c + 1, next);
      }
      chosen_.pop_back();
    }
  }

  // Components are added in index order, each outside the running sum, so
  // every irredundant set is reached exactly once. Redundancy can still
  // arise from a later component swallowing an earlier one.
  void leaf() {
    const auto k = chosen_.size();
    for (std::size_t skip = 0; skip < k; ++skip) {
      std::uint32_t s = 0;
      for (std::size_t i = 0; i < k; ++i) {
        if (i != skip) s = table_[s * m_ + chosen_[i]];
      }
      if (s == full_) return;
    }
    ++out_.representation_count;
    if (std::find(out_.cardinalities.begin(), out_.cardinalities.end(), k) ==
        out_.cardinalities.end()) {
      out_.cardinalities.push_back(k);
      std::sort(out_.cardinalities.begin(), out_.cardinalities.end());
    }
    if (out_.samples.size() < keep_) {
      std::vector<Subgroup> rep;
      for (auto c : chosen_) rep.push_back(from_mask(lat_.subgroups()[irr_[c]]));
      out_.samples.push_back(std::move(rep));
    }
  }

  const Lattice& lat_;
  std::vector<std::uint32_t> irr_;
  std::size_t m_ = 0;
  std::vector<std::uint32_t> table_;
  std::uint32_t full_ = 0;
  std::vector<std::size_t> chosen_;
  std::size_t keep_;
  BruteForceIndex& out_;
};

std::vector<char> membership(const FiniteAbelianGroup& a, const Subgroup& s) {
  std::vector<char> in(a.order(), 0);
  for (auto e : s.elements) {
    if (e >= a.order()) throw Error(ErrorKind::InvalidArgument, "element code out of range");
    in[e] = 1;
  }
  return in;
}

void partitions(unsigned n, unsigned max_part, std::vector<unsigned>& cur,
                std::vector<std::vector<unsigned>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (unsigned part = std::min(n, max_part); part >= 1; --part) {
    cur.push_back(part);
    partitions(n - part, part, cur, out);
    cur.pop_back();
  }
}

}  // namespace

// FiniteAbelianGroup

FiniteAbelianGroup::FiniteAbelianGroup(std::vector<std::uint64_t> cyclic_orders)
    : orders_(std::move(cyclic_orders)) {
  for (auto n : orders_) {
    if (!prime_power(n)) {
      throw Error(ErrorKind::InvalidArgument, fmt::format("Z/{} is not of prime-power order", n));
    }
    order_ *= n;
    if (order_ > 0xffffffffULL) throw Error(ErrorKind::TooLarge, "group order exceeds 2^32");
  }
  std::sort(orders_.begin(), orders_.end(), [](std::uint64_t x, std::uint64_t y) {
    const auto px = smallest_prime_factor(x), py = smallest_prime_factor(y);
    return px != py ? px < py : x < y;
  });
}

FiniteAbelianGroup FiniteAbelianGroup::from_cyclic(const std::vector<std::uint64_t>& orders) {
  std::vector<std::uint64_t> split;
  for (auto n : orders) {
    if (n == 0) throw Error(ErrorKind::InvalidArgument, "Z/0 is not finite");
    for (auto [p, k] : factorize(n)) {
      std::uint64_t pk = 1;
      for (unsigned i = 0; i < k; ++i) pk *= p;
      split.push_back(pk);
    }
  }
  return FiniteAbelianGroup(std::move(split));
}

std::vector<std::uint64_t> FiniteAbelianGroup::primes() const {
  std::vector<std::uint64_t> out;
  for (auto n : orders_) {
    const auto p = smallest_prime_factor(n);
    if (out.empty() || out.back() != p) out.push_back(p);
  }
  return out;
}

std::size_t FiniteAbelianGroup::rank(std::uint64_t p) const {
  return static_cast<std::size_t>(std::count_if(
      orders_.begin(), orders_.end(), [&](std::uint64_t n) { return smallest_prime_factor(n) == p; }));
}

FiniteAbelianGroup FiniteAbelianGroup::primary_part(std::uint64_t p) const {
  std::vector<std::uint64_t> part;
  for (auto n : orders_) {
    if (smallest_prime_factor(n) == p) part.push_back(n);
  }
  return FiniteAbelianGroup(std::move(part));
}

std::vector<std::uint64_t> FiniteAbelianGroup::decode(std::uint32_t code) const {
  std::vector<std::uint64_t> c(orders_.size());
  std::uint64_t rest = code;
  for (std::size_t i = 0; i < orders_.size(); ++i) {
    c[i] = rest % orders_[i];
    rest /= orders_[i];
  }
  return c;
}

std::uint32_t FiniteAbelianGroup::encode(const std::vector<std::uint64_t>& coords) const {
  if (coords.size() != orders_.size()) throw Error(ErrorKind::DimensionMismatch, "coordinate count");
  std::uint64_t code = 0;
  for (std::size_t i = orders_.size(); i-- > 0;) code = code * orders_[i] + coords[i] % orders_[i];
  return static_cast<std::uint32_t>(code);
}

std::uint32_t FiniteAbelianGroup::add(std::uint32_t a, std::uint32_t b) const {
  auto x = decode(a);
  const auto y = decode(b);
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = (x[i] + y[i]) % orders_[i];
  return encode(x);
}

std::uint32_t FiniteAbelianGroup::neg(std::uint32_t a) const {
  auto x = decode(a);
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = (orders_[i] - x[i]) % orders_[i];
  return encode(x);
}

std::uint32_t FiniteAbelianGroup::multiple(std::uint32_t a, std::uint64_t n) const {
  auto x = decode(a);
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = (x[i] * (n % orders_[i])) % orders_[i];
  return encode(x);
}

std::uint32_t FiniteAbelianGroup::generator(std::size_t i) const {
  std::vector<std::uint64_t> c(orders_.size(), 0);
  c.at(i) = 1;
  return encode(c);
}

std::string to_string(const FiniteAbelianGroup& a) {
  if (a.is_trivial()) return "0";
  std::string out;
  for (auto n : a.cyclic_orders()) {
    if (!out.empty()) out += " + ";
    out += fmt::format("Z/{}", n);
  }
  return out;
}

// Subgroups

bool Subgroup::contains(std::uint32_t code) const {
  return std::binary_search(elements.begin(), elements.end(), code);
}

Subgroup whole_group(const FiniteAbelianGroup& a) {
  require_order(a, kMaxElementOrder, "element enumeration");
  Subgroup s;
  for (std::uint32_t x = 0; x < a.order(); ++x) s.elements.push_back(x);
  return s;
}

Subgroup make_subgroup(const FiniteAbelianGroup& a, std::vector<std::uint32_t> elements) {
  require_order(a, kMaxElementOrder, "element enumeration");
  Subgroup s{std::move(elements)};
  std::sort(s.elements.begin(), s.elements.end());
  s.elements.erase(std::unique(s.elements.begin(), s.elements.end()), s.elements.end());
  const auto in = membership(a, s);
  if (s.elements.empty() || !in[0]) throw Error(ErrorKind::InvalidArgument, "subgroup lacks 0");
  for (auto x : s.elements) {
    for (auto y : s.elements) {
      if (!in[a.add(x, a.neg(y))]) throw Error(ErrorKind::InvalidArgument, "not closed");
    }
  }
  return s;
}

Subgroup cyclic_subgroup(const FiniteAbelianGroup& a, std::uint32_t generator) {
  require_order(a, kMaxElementOrder, "element enumeration");
  if (generator >= a.order()) throw Error(ErrorKind::InvalidArgument, "element code out of range");
  Subgroup s;
  std::uint32_t x = 0;
  do {
    s.elements.push_back(x);
    x = a.add(x, generator);
  } while (x != 0);
  std::sort(s.elements.begin(), s.elements.end());
  return s;
}

Subgroup join(const FiniteAbelianGroup& a, const Subgroup& h, const Subgroup& k) {
  require_order(a, kMaxElementOrder, "element enumeration");
  auto in = membership(a, h);
  std::vector<std::uint32_t> elems = h.elements;
  for (auto y : k.elements) {
    if (in[y]) continue;
    // Close under adding y.
    const auto before = elems;
    for (std::uint32_t x = y; !std::binary_search(before.begin(), before.end(), x); x = a.add(x, y)) {
      for (auto e : before) {
        const auto z = a.add(e, x);
        if (!in[z]) {
          in[z] = 1;
          elems.push_back(z);
        }
      }
    }
    std::sort(elems.begin(), elems.end());
  }
  return Subgroup{std::move(elems)};
}

std::vector<Subgroup> all_subgroups(const FiniteAbelianGroup& a) {
  const Lattice lat(a);
  std::vector<Subgroup> out;
  out.reserve(lat.subgroups().size());
  for (auto m : lat.subgroups()) out.push_back(from_mask(m));
  return out;
}

bool is_sum_irreducible(const FiniteAbelianGroup& a, const Subgroup& h) {
  const Lattice lat(a);
  return lat.sum_irreducible(to_mask(h));
}

bool is_sum_irreducible(const FiniteAbelianGroup& a) {
  if (a.is_trivial()) throw Error(ErrorKind::TrivialGroup, "the trivial group");
  const Lattice lat(a);
  return lat.sum_irreducible(lat.full());
}

std::vector<Subgroup> sum_irreducible_subgroups(const FiniteAbelianGroup& a) {
  const Lattice lat(a);
  std::vector<Subgroup> out;
  for (auto i : irreducible_indices(lat)) out.push_back(from_mask(lat.subgroups()[i]));
  return out;
}

BruteForceIndex sum_reducibility_index_bruteforce(const FiniteAbelianGroup& a,
                                                  std::size_t keep_samples) {
  BruteForceIndex out;
  if (a.is_trivial()) {
    out.representation_count = 1;
    out.cardinalities = {0};
    if (keep_samples > 0) out.samples.emplace_back();
    return out;
  }
  const Lattice lat(a);
  RepresentationSearch search(lat, keep_samples, out);
  search.run();
  if (!out.cardinalities.empty()) out.index = out.cardinalities.front();
  return out;
}

std::size_t sum_reducibility_index_formula(const FiniteAbelianGroup& a) {
  return a.cyclic_orders().size();
}

bool SecondaryRepresentation::valid() const noexcept {
  return sums_to_whole && std::all_of(components.begin(), components.end(),
                                      [](const auto& c) { return c.nilpotent && c.surjective; });
}

SecondaryRepresentation secondary_representation(const FiniteAbelianGroup& a) {
  if (a.is_trivial()) throw Error(ErrorKind::TrivialGroup, "the trivial group has no components");
  require_order(a, kMaxElementOrder, "the secondary representation");
  const auto n = a.order();
  const auto other_primes = primes_up_to(n);

  SecondaryRepresentation rep;
  Subgroup total{{0}};
  for (auto p : a.primes()) {
    std::uint64_t pe = 1;
    while (n % (pe * p) == 0) pe *= p;

    SecondaryComponent c;
    c.prime = p;
    for (std::uint32_t x = 0; x < n; ++x) {
      if (a.multiple(x, pe) == 0) c.component.elements.push_back(x);
    }

    // Nilpotent: repeated images under multiplication by p shrink to {0}.
    std::set<std::uint32_t> image(c.component.elements.begin(), c.component.elements.end());
    for (std::uint64_t step = 0; step <= 64 && image.size() > 1; ++step) {
      std::set<std::uint32_t> next;
      for (auto x : image) next.insert(a.multiple(x, p));
      image = std::move(next);
    }
    c.nilpotent = image.size() == 1 && *image.begin() == 0;

    // Surjective: q·A_p = A_p. Only q mod |A_p| matters, so repeats are skipped.
    c.surjective = true;
    std::set<std::uint64_t> residues;
    const auto comp_order = c.component.size();
    for (auto q : other_primes) {
      if (q == p || !residues.insert(q % comp_order).second) continue;
      std::vector<std::uint32_t> img;
      for (auto x : c.component.elements) img.push_back(a.multiple(x, q));
      std::sort(img.begin(), img.end());
      img.erase(std::unique(img.begin(), img.end()), img.end());
      if (img != c.component.elements) {
        c.surjective = false;
        break;
      }
    }
    total = join(a, total, c.component);
    rep.components.push_back(std::move(c));
  }
  rep.sums_to_whole = total.size() == n;
  return rep;
}

std::vector<std::uint64_t> attached_primes(const FiniteAbelianGroup& a) {
  if (a.is_trivial()) throw Error(ErrorKind::TrivialGroup, "the trivial group has no attached primes");
  return a.primes();
}

bool AdditivityReport::pass() const noexcept {
  return brute_force == sum_of_parts && sum_of_parts == formula && brute_force >= attached_count &&
         secondary_primes_match && representations_uniform;
}

AdditivityReport p3c_check(const FiniteAbelianGroup& a) {
  require_order(a, kMaxOracleOrder, "the additivity check");
  AdditivityReport r;
  r.group = a;
  const auto whole = sum_reducibility_index_bruteforce(a, 0);
  r.brute_force = whole.index;
  r.representations_uniform = whole.uniform();
  for (auto p : a.primes()) {
    const auto part = sum_reducibility_index_bruteforce(a.primary_part(p), 0);
    r.representations_uniform = r.representations_uniform && part.uniform();
    r.per_prime.emplace_back(p, part.index);
    r.sum_of_parts += part.index;
  }
  r.formula = sum_reducibility_index_formula(a);
  if (a.is_trivial()) {
    r.secondary_primes_match = true;
  } else {
    const auto att = attached_primes(a);
    r.attached_count = att.size();
    const auto sec = secondary_representation(a);
    std::vector<std::uint64_t> sec_primes;
    for (const auto& c : sec.components) sec_primes.push_back(c.prime);
    r.secondary_primes_match = sec.valid() && sec_primes == att;
  }
  return r;
}

FiniteAbelianGroup quotient_structure(const FiniteAbelianGroup& a, const Subgroup& b) {
  require_order(a, kMaxElementOrder, "the quotient structure");
  const auto in = membership(a, b);
  if (b.size() == 0 || a.order() % b.size() != 0) {
    throw Error(ErrorKind::InvalidArgument, "not a subgroup");
  }
  const auto q_order = a.order() / b.size();
  std::vector<std::uint64_t> orders;
  for (auto [p, e] : factorize(q_order)) {
    // b_j = log_p |{x + B : p^j x in B}|, which is sum_i min(λ_i, j).
    std::vector<unsigned> b_log{0};
    std::uint64_t pj = 1;
    while (b_log.back() < e) {
      pj *= p;
      std::uint64_t killed = 0;
      for (std::uint32_t x = 0; x < a.order(); ++x) killed += in[a.multiple(x, pj)] ? 1 : 0;
      auto cosets = killed / b.size();
      unsigned lg = 0;
      while (cosets > 1) {
        cosets /= p;
        ++lg;
      }
      b_log.push_back(lg);
    }
    // r_j = #{i : λ_i >= j}; parts of size exactly j number r_j - r_{j+1}.
    std::vector<unsigned> r;
    for (std::size_t j = 1; j < b_log.size(); ++j) r.push_back(b_log[j] - b_log[j - 1]);
    r.push_back(0);
    std::uint64_t pk = 1;
    for (std::size_t j = 0; j + 1 < r.size(); ++j) {
      pk *= p;
      for (unsigned c = 0; c < r[j] - r[j + 1]; ++c) orders.push_back(pk);
    }
  }
  return FiniteAbelianGroup(std::move(orders));
}

QuotientReport quotient_monotonicity_check(const FiniteAbelianGroup& a) {
  require_order(a, kMaxQuotientOrder, "quotient monotonicity");
  QuotientReport report;
  report.group = a;
  report.ir_prime = sum_reducibility_index_bruteforce(a, 0).index;
  report.group_sum_irreducible = !a.is_trivial() && is_sum_irreducible(a);

  std::map<FiniteAbelianGroup, std::pair<std::size_t, bool>> seen;
  for (const auto& b : all_subgroups(a)) {
    auto q = quotient_structure(a, b);
    auto it = seen.find(q);
    if (it == seen.end()) {
      const auto ir = sum_reducibility_index_bruteforce(q, 0).index;
      const bool irreducible = !q.is_trivial() && is_sum_irreducible(q);
      it = seen.emplace(q, std::make_pair(ir, irreducible)).first;
    }
    const auto [ir, irreducible] = it->second;
    if (ir > report.ir_prime) ++report.violations;
    if (report.group_sum_irreducible && !q.is_trivial() && !irreducible) {
      report.irreducibility_inherited = false;
    }
    report.entries.push_back(QuotientEntry{b, std::move(q), ir});
  }
  return report;
}

std::vector<FiniteAbelianGroup> groups_of_order(std::uint64_t n) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "order must be positive");
  std::vector<std::vector<std::uint64_t>> combos{{}};
  for (auto [p, e] : factorize(n)) {
    std::vector<std::vector<unsigned>> parts;
    std::vector<unsigned> cur;
    partitions(e, e, cur, parts);
    std::vector<std::vector<std::uint64_t>> next;
    for (const auto& base : combos) {
      for (const auto& part : parts) {
        auto orders = base;
        for (auto k : part) {
          std::uint64_t pk = 1;
          for (unsigned i = 0; i < k; ++i) pk *= p;
          orders.push_back(pk);
        }
        next.push_back(std::move(orders));
      }
    }
    combos = std::move(next);
  }
  std::vector<FiniteAbelianGroup> out;
  for (auto& orders : combos) out.emplace_back(std::move(orders));
  return out;
}

std::vector<FiniteAbelianGroup> groups_up_to(std::uint64_t max_order) {
  std::vector<FiniteAbelianGroup> out;
  for (std::uint64_t n = 1; n <= max_order; ++n) {
    for (auto& g : groups_of_order(n)) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace irindex
