#include "irindex/parse.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <tuple>

#include <fmt/format.h>
#include <fmt/ranges.h>

#include "irindex/error.hpp"

namespace irindex {

namespace {

class Cursor {
 public:
  struct Mark {
    std::size_t pos, line, col;
  };

  explicit Cursor(std::string_view s) : s_(s) {}

  bool done() const { return pos_ >= s_.size(); }
  char peek() const { return done() ? '\0' : s_[pos_]; }
  Mark mark() const { return {pos_, line_, col_}; }
  void reset(Mark m) {
    pos_ = m.pos;
    line_ = m.line;
    col_ = m.col;
  }

  char get() {
    const char c = s_[pos_++];
    if (c == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    return c;
  }

  void skip_spaces() {
    while (!done() && (peek() == ' ' || peek() == '\t' || peek() == '\r')) get();
  }

  bool accept(char c) {
    skip_spaces();
    if (peek() != c) return false;
    get();
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(fmt::format("expected '{}'", c));
  }

  std::optional<std::string> identifier() {
    skip_spaces();
    const char c = peek();
    if (!(std::isalpha(static_cast<unsigned char>(c)) || c == '_')) return std::nullopt;
    std::string out;
    while (!done() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) {
      out += get();
    }
    return out;
  }

  std::string expect_identifier(std::string_view what) {
    auto id = identifier();
    if (!id) fail(fmt::format("expected {}", what));
    return *id;
  }

  bool at_digit() {
    skip_spaces();
    return std::isdigit(static_cast<unsigned char>(peek())) != 0;
  }

  std::uint64_t integer() {
    skip_spaces();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a number");
    const auto start = mark();
    std::uint64_t v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + static_cast<std::uint64_t>(get() - '0');
      if (v > 1'000'000'000'000ULL) {
        reset(start);
        fail("number too large");
      }
    }
    return v;
  }

  // Reads "name:" if present; leaves the cursor untouched otherwise.
  std::optional<std::string> keyword() {
    const auto m = mark();
    auto id = identifier();
    if (id) {
      skip_spaces();
      if (peek() == ':') {
        get();
        return id;
      }
    }
    reset(m);
    return std::nullopt;
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, line_, col_);
  }
  [[noreturn]] static void fail_at(Mark m, const std::string& message) {
    throw ParseError(message, m.line, m.col);
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0, line_ = 1, col_ = 1;
};

bool natural_less(const std::string& a, const std::string& b) {
  auto split = [](const std::string& s) {
    auto i = s.size();
    while (i > 0 && std::isdigit(static_cast<unsigned char>(s[i - 1]))) --i;
    const auto digits = s.substr(i);
    // Numeric suffixes beyond 18 digits compare as strings below.
    const std::uint64_t value = digits.empty() || digits.size() > 18 ? 0 : std::stoull(digits);
    return std::make_tuple(s.substr(0, i), !digits.empty(), value);
  };
  const auto ka = split(a), kb = split(b);
  return ka != kb ? ka < kb : a < b;
}

// Ideals

struct RawFactor {
  std::string name;
  std::uint64_t exponent;
  Cursor::Mark where;
};

struct RawGenerator {
  bool zero = false;
  std::vector<RawFactor> factors;
};

bool at_statement_end(Cursor& c, std::string_view separators) {
  c.skip_spaces();
  return c.done() || separators.find(c.peek()) != std::string_view::npos;
}

void skip_separators(Cursor& c, std::string_view separators) {
  while (true) {
    c.skip_spaces();
    if (c.done() || separators.find(c.peek()) == std::string_view::npos) return;
    c.get();
  }
}

RawGenerator parse_generator(Cursor& c) {
  RawGenerator g;
  do {
    c.skip_spaces();
    const auto where = c.mark();
    if (c.at_digit()) {
      const auto v = c.integer();
      if (v == 0) {
        g.zero = true;
      } else if (v != 1) {
        Cursor::fail_at(where, "coefficients are not allowed in monomial ideals");
      }
      continue;
    }
    auto name = c.expect_identifier("a variable or 1");
    std::uint64_t e = 1;
    if (c.accept('^')) e = c.integer();
    g.factors.push_back({std::move(name), e, where});
  } while (c.accept('*'));
  return g;
}

}  // namespace

IdealInput parse_ideal(std::string_view text) {
  static constexpr std::string_view kSeparators = "\n;/";
  Cursor c(text);
  std::optional<std::vector<std::string>> ring_names;
  std::optional<std::vector<RawGenerator>> gens;

  while (true) {
    skip_separators(c, kSeparators);
    if (c.done()) break;
    const auto start = c.mark();
    const auto key = c.keyword().value_or("ideal");
    if (key == "ring") {
      if (ring_names) Cursor::fail_at(start, "second ring statement");
      ring_names.emplace();
      if (!at_statement_end(c, kSeparators)) {
        do {
          const auto where = c.mark();
          auto name = c.expect_identifier("a variable name");
          if (std::find(ring_names->begin(), ring_names->end(), name) != ring_names->end()) {
            Cursor::fail_at(where, fmt::format("duplicate variable '{}'", name));
          }
          ring_names->push_back(std::move(name));
        } while (c.accept(','));
      }
      if (ring_names->empty()) Cursor::fail_at(start, "the ring needs at least one variable");
    } else if (key == "ideal") {
      if (gens) Cursor::fail_at(start, "second ideal statement");
      gens.emplace();
      if (!at_statement_end(c, kSeparators)) {
        do {
          gens->push_back(parse_generator(c));
        } while (c.accept(','));
      }
    } else {
      Cursor::fail_at(start, fmt::format("unknown statement '{}'", key));
    }
    if (!at_statement_end(c, kSeparators)) c.fail("unexpected character");
  }

  if (!gens) gens.emplace();
  if (!ring_names) {
    std::vector<std::string> seen;
    for (const auto& g : *gens) {
      for (const auto& f : g.factors) {
        if (std::find(seen.begin(), seen.end(), f.name) == seen.end()) seen.push_back(f.name);
      }
    }
    std::sort(seen.begin(), seen.end(), natural_less);
    if (seen.empty()) seen.push_back("x");
    ring_names = std::move(seen);
  }

  RingContext ring(*ring_names);
  std::vector<Monomial> monomials;
  for (const auto& g : *gens) {
    if (g.zero) continue;
    std::vector<std::uint64_t> exps(ring.size(), 0);
    for (const auto& f : g.factors) {
      const auto i = ring.index_of(f.name);
      if (!i) Cursor::fail_at(f.where, fmt::format("'{}' is not a ring variable", f.name));
      exps[*i] += f.exponent;
      if (exps[*i] > kMaxExponent) {
        throw Error(ErrorKind::ExponentTooLarge,
                    fmt::format("exponent of {} exceeds {}", f.name, kMaxExponent));
      }
    }
    monomials.emplace_back(std::vector<Exponent>(exps.begin(), exps.end()));
  }
  return IdealInput{std::move(ring), MonomialIdeal(ring_names->size(), std::move(monomials))};
}

std::string canonical_text(const IdealInput& input) {
  std::string names;
  for (const auto& n : input.ring.names()) {
    if (!names.empty()) names += ", ";
    names += n;
  }
  std::string gens;
  for (const auto& g : input.ideal.generators()) {
    if (!gens.empty()) gens += ", ";
    gens += to_string(g, input.ring);
  }
  if (gens.empty()) gens = "0";
  return fmt::format("ring: {}\nideal: {}", names, gens);
}

// Polynomials

namespace {

struct Expr {
  enum class Kind { Number, Name, Add, Sub, Mul, Neg, Pow } kind;
  Cursor::Mark where;
  std::uint64_t value = 0;
  std::string name;
  std::unique_ptr<Expr> lhs, rhs;
};

using ExprPtr = std::unique_ptr<Expr>;

ExprPtr make_expr(Expr::Kind kind, Cursor::Mark where) {
  auto e = std::make_unique<Expr>();
  e->kind = kind;
  e->where = where;
  return e;
}

ExprPtr parse_sum(Cursor& c);

ExprPtr parse_atom(Cursor& c) {
  c.skip_spaces();
  const auto where = c.mark();
  if (c.accept('(')) {
    auto inner = parse_sum(c);
    c.expect(')');
    return inner;
  }
  if (c.at_digit()) {
    auto e = make_expr(Expr::Kind::Number, where);
    e->value = c.integer();
    return e;
  }
  auto e = make_expr(Expr::Kind::Name, where);
  e->name = c.expect_identifier("a term");
  if (e->name == "over") Cursor::fail_at(where, "missing polynomial before 'over'");
  return e;
}

ExprPtr parse_power(Cursor& c) {
  auto base = parse_atom(c);
  const auto where = c.mark();
  if (c.accept('^')) {
    auto e = make_expr(Expr::Kind::Pow, where);
    e->value = c.integer();
    if (e->value > 64) Cursor::fail_at(where, "exponent too large");
    e->lhs = std::move(base);
    return e;
  }
  return base;
}

ExprPtr parse_product(Cursor& c) {
  auto lhs = parse_power(c);
  while (true) {
    c.skip_spaces();
    const auto where = c.mark();
    if (!c.accept('*')) return lhs;
    auto e = make_expr(Expr::Kind::Mul, where);
    e->lhs = std::move(lhs);
    e->rhs = parse_power(c);
    lhs = std::move(e);
  }
}

ExprPtr parse_sum(Cursor& c) {
  c.skip_spaces();
  const auto start = c.mark();
  ExprPtr lhs;
  if (c.accept('-')) {
    lhs = make_expr(Expr::Kind::Neg, start);
    lhs->lhs = parse_product(c);
  } else {
    lhs = parse_product(c);
  }
  while (true) {
    c.skip_spaces();
    const auto where = c.mark();
    Expr::Kind kind;
    if (c.accept('+')) {
      kind = Expr::Kind::Add;
    } else if (c.accept('-')) {
      kind = Expr::Kind::Sub;
    } else {
      return lhs;
    }
    auto e = make_expr(kind, where);
    e->lhs = std::move(lhs);
    e->rhs = parse_product(c);
    lhs = std::move(e);
  }
}

void collect_names(const Expr& e, std::vector<std::pair<std::string, Cursor::Mark>>& out) {
  if (e.kind == Expr::Kind::Name) out.emplace_back(e.name, e.where);
  if (e.lhs) collect_names(*e.lhs, out);
  if (e.rhs) collect_names(*e.rhs, out);
}

// `generator` names the field generator t (empty over a prime field).
UniPoly evaluate(const Expr& e, const PolyRing& ring, const std::string& var,
                 const std::string& generator) {
  const auto& f = ring.field();
  switch (e.kind) {
    case Expr::Kind::Number:
      return UniPoly::constant(static_cast<FiniteField::Element>(e.value % f.characteristic()));
    case Expr::Kind::Name:
      if (e.name == var) return UniPoly::x();
      if (!generator.empty() && e.name == generator) return UniPoly::constant(f.characteristic());
      Cursor::fail_at(e.where, fmt::format("unknown name '{}'", e.name));
    case Expr::Kind::Add:
      return ring.add(evaluate(*e.lhs, ring, var, generator), evaluate(*e.rhs, ring, var, generator));
    case Expr::Kind::Sub:
      return ring.sub(evaluate(*e.lhs, ring, var, generator), evaluate(*e.rhs, ring, var, generator));
    case Expr::Kind::Mul:
      return ring.mul(evaluate(*e.lhs, ring, var, generator), evaluate(*e.rhs, ring, var, generator));
    case Expr::Kind::Neg:
      return ring.sub(UniPoly(), evaluate(*e.lhs, ring, var, generator));
    case Expr::Kind::Pow:
      return ring.pow(evaluate(*e.lhs, ring, var, generator), static_cast<unsigned>(e.value));
  }
  return {};
}

std::pair<std::uint32_t, unsigned> read_field_name(Cursor& c) {
  c.skip_spaces();
  const auto where = c.mark();
  if (c.expect_identifier("GF(q)") != "GF") Cursor::fail_at(where, "expected GF(q)");
  c.expect('(');
  const auto q_at = c.mark();
  const auto q = c.integer();
  c.expect(')');
  std::uint64_t p = 0;
  for (std::uint64_t d = 2; d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  unsigned k = 0;
  std::uint64_t rest = q;
  while (p != 0 && rest % p == 0) {
    rest /= p;
    ++k;
  }
  if (p == 0 || rest != 1) Cursor::fail_at(q_at, fmt::format("{} is not a prime power", q));
  if (q > kMaxFieldSize) {
    throw Error(ErrorKind::FieldTooLarge, fmt::format("GF({}) exceeds the field size cap", q));
  }
  return {static_cast<std::uint32_t>(p), k};
}

std::uint32_t power(std::uint32_t p, unsigned k) {
  std::uint32_t q = 1;
  for (unsigned i = 0; i < k; ++i) q *= p;
  return q;
}

}  // namespace

std::pair<std::uint32_t, unsigned> parse_field_name(std::string_view text) {
  Cursor c(text);
  auto out = read_field_name(c);
  c.skip_spaces();
  if (!c.done()) c.fail("unexpected character");
  return out;
}

PolyInput parse_poly(std::string_view text) {
  static constexpr std::string_view kSeparators = "\n;";
  Cursor c(text);

  struct PolyLine {
    ExprPtr expr;
    std::pair<std::uint32_t, unsigned> field;
    Cursor::Mark where;
  };
  struct ExtLine {
    std::pair<std::uint32_t, unsigned> field;
    ExprPtr modulus;
    Cursor::Mark where;
  };
  std::optional<PolyLine> poly;
  std::vector<ExtLine> exts;

  while (true) {
    skip_separators(c, kSeparators);
    if (c.done()) break;
    const auto start = c.mark();
    const auto key = c.keyword().value_or("f");
    if (key == "f") {
      if (poly) Cursor::fail_at(start, "second polynomial");
      PolyLine line;
      line.where = start;
      line.expr = parse_sum(c);
      c.skip_spaces();
      const auto over_at = c.mark();
      if (c.identifier().value_or("") != "over") Cursor::fail_at(over_at, "expected 'over GF(q)'");
      line.field = read_field_name(c);
      poly = std::move(line);
    } else if (key == "ext") {
      ExtLine line;
      line.where = start;
      line.field = read_field_name(c);
      c.expect('=');
      line.modulus = parse_sum(c);
      exts.push_back(std::move(line));
    } else {
      Cursor::fail_at(start, fmt::format("unknown statement '{}'", key));
    }
    if (!at_statement_end(c, kSeparators)) c.fail("unexpected character");
  }
  if (!poly) c.fail("missing 'f: ... over GF(q)'");

  PolyInput out{FiniteField::prime(2), {}, "x", {}};
  for (const auto& e : exts) {
    if (e.field.second < 2) Cursor::fail_at(e.where, "an extension needs degree >= 2");
    std::vector<std::pair<std::string, Cursor::Mark>> names;
    collect_names(*e.modulus, names);
    for (const auto& [name, where] : names) {
      if (name != "t") Cursor::fail_at(where, "moduli are written in t");
    }
    const PolyRing base(FiniteField::prime(e.field.first));
    const auto m = evaluate(*e.modulus, base, "t", "");
    if (m.degree() != static_cast<long>(e.field.second)) {
      Cursor::fail_at(e.where, fmt::format("modulus degree must be {}", e.field.second));
    }
    out.extensions.push_back(FiniteField::extension(e.field.first, m.coeffs));
  }

  const auto [p, k] = poly->field;
  const auto q = power(p, k);
  auto field = FiniteField::with_degree(p, k);
  for (const auto& ext : out.extensions) {
    if (ext.size() == q) field = ext;
  }
  const std::string generator = field.is_prime_field() ? "" : "t";

  std::vector<std::pair<std::string, Cursor::Mark>> names;
  collect_names(*poly->expr, names);
  for (const auto& [name, where] : names) {
    if (name == generator || name == out.var) continue;
    if (out.var != "x" || std::any_of(names.begin(), names.end(),
                                      [](const auto& n) { return n.first == "x"; })) {
      Cursor::fail_at(where, "only one variable is allowed");
    }
    out.var = name;
  }
  const PolyRing ring(field);
  out.f = evaluate(*poly->expr, ring, out.var, generator);
  out.field = std::move(field);
  return out;
}

std::string canonical_text(const PolyInput& input) {
  const PolyRing ring(input.field);
  std::string out = fmt::format("f: {} over {}", ring.format(input.f, input.var), input.field.name());
  auto exts = input.extensions;
  if (!input.field.is_prime_field() &&
      std::none_of(exts.begin(), exts.end(), [&](const auto& e) { return e == input.field; })) {
    exts.insert(exts.begin(), input.field);
  }
  for (const auto& e : exts) {
    const PolyRing base(FiniteField::prime(e.characteristic()));
    out += fmt::format("\next: {}={}", e.name(), base.format(UniPoly(e.modulus()), "t"));
  }
  return out;
}

// Groups

FiniteAbelianGroup parse_group(std::string_view text) {
  Cursor c(text);
  skip_separators(c, "\n");
  const auto start = c.mark();
  if (auto key = c.keyword(); key && *key != "group") {
    Cursor::fail_at(start, fmt::format("unknown statement '{}'", *key));
  }
  std::vector<std::uint64_t> orders;
  if (c.at_digit()) {
    const auto where = c.mark();
    if (c.integer() != 0) Cursor::fail_at(where, "expected 0 or Z/n");
  } else {
    do {
      c.skip_spaces();
      const auto where = c.mark();
      if (c.expect_identifier("Z/n") != "Z") Cursor::fail_at(where, "expected Z/n");
      c.expect('/');
      const auto n_at = c.mark();
      const auto n = c.integer();
      if (n == 0) Cursor::fail_at(n_at, "Z/0 is not finite");
      orders.push_back(n);
    } while (c.accept('+'));
  }
  skip_separators(c, "\n");
  if (!c.done()) c.fail("unexpected character");
  return FiniteAbelianGroup::from_cyclic(orders);
}

std::string canonical_text(const FiniteAbelianGroup& group) {
  return "group: " + to_string(group);
}

// Descriptors

Descriptor parse_descriptor(std::string_view text) {
  Cursor c(text);
  c.skip_spaces();
  const auto start = c.mark();
  const auto key = c.keyword();
  if (!key) Cursor::fail_at(start, "expected extend:, invert: or field:");
  Descriptor out;
  if (*key == "extend") {
    out = ExtendDescriptor{static_cast<std::size_t>(c.integer())};
  } else if (*key == "invert") {
    InvertDescriptor d;
    if (!at_statement_end(c, "")) {
      do {
        d.names.push_back(c.expect_identifier("a variable name"));
      } while (c.accept(','));
    }
    out = std::move(d);
  } else if (*key == "field") {
    FieldDescriptor d;
    c.skip_spaces();
    if (c.peek() != '-') {
      const auto [p, k] = read_field_name(c);
      d.from = power(p, k);
    }
    c.expect('-');
    c.expect('>');
    const auto [p, k] = read_field_name(c);
    d.to = power(p, k);
    out = d;
  } else {
    Cursor::fail_at(start, fmt::format("unknown descriptor '{}'", *key));
  }
  c.skip_spaces();
  if (!c.done()) c.fail("unexpected character");
  return out;
}

std::string canonical_text(const Descriptor& d) {
  struct Visitor {
    std::string operator()(const ExtendDescriptor& e) const { return fmt::format("extend:{}", e.extra); }
    std::string operator()(const InvertDescriptor& i) const {
      return fmt::format("invert:{}", fmt::join(i.names, ","));
    }
    std::string operator()(const FieldDescriptor& f) const {
      return f.from ? fmt::format("field:GF({})->GF({})", *f.from, f.to)
                    : fmt::format("field:->GF({})", f.to);
    }
  };
  return std::visit(Visitor{}, d);
}

}  // namespace irindex
