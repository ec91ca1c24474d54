#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "irindex/abelian.hpp"
#include "irindex/finite_field.hpp"
#include "irindex/monomial.hpp"
#include "irindex/univariate.hpp"

namespace irindex {

// Text formats read by the command line tool. Every parser throws
// ParseError with a 1-based line and column.

struct IdealInput {
  RingContext ring;
  MonomialIdeal ideal;
};

/// Statements separated by newlines, ';' or '/':
///   ring: x, y, z
///   ideal: x^2*y, y^3, x*z^2
/// The `ideal:` keyword may be dropped. `1` is the unit ideal, `0` or an
/// empty list the zero ideal. Without a ring line the ring is made of the
/// variables that occur, in natural order (x before y, x2 before x10).
IdealInput parse_ideal(std::string_view text);
/// Two lines, "ring: ..." and "ideal: ...", that parse back to the input.
std::string canonical_text(const IdealInput& input);

struct PolyInput {
  FiniteField field;
  UniPoly f;
  std::string var = "x";
  /// Extension moduli given by `ext:` lines.
  std::vector<FiniteField> extensions;
};

/// f: x^2+x+1 over GF(2)
/// ext: GF(4)=t^2+t+1
/// Over GF(p^k) coefficients are written in t, e.g. (t+1)*x. A field named
/// in `over` uses the matching `ext:` modulus when one is given.
PolyInput parse_poly(std::string_view text);
std::string canonical_text(const PolyInput& input);

/// "GF(9)" -> (3, 2). Throws ParseError unless q is a prime power.
std::pair<std::uint32_t, unsigned> parse_field_name(std::string_view text);

/// `group: Z/4 + Z/2 + Z/9`, the keyword optional; `0` is the trivial group.
/// Composite cyclic orders are split into prime powers.
FiniteAbelianGroup parse_group(std::string_view text);
std::string canonical_text(const FiniteAbelianGroup& group);

struct ExtendDescriptor {
  std::size_t extra = 1;
};
struct InvertDescriptor {
  std::vector<std::string> names;
};
/// field:GF(p)->GF(p^k), or field:->GF(p^k) to keep the input field.
struct FieldDescriptor {
  std::optional<std::uint32_t> from;
  std::uint32_t to = 0;
};
using Descriptor = std::variant<ExtendDescriptor, InvertDescriptor, FieldDescriptor>;

Descriptor parse_descriptor(std::string_view text);
std::string canonical_text(const Descriptor& d);

}  // namespace irindex
