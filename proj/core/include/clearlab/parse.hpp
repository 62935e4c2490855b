#pragma once

#include <string_view>

#include "clearlab/element.hpp"

namespace clearlab {

/// Ring descriptor grammar (whitespace-insensitive):
///
///   ring := term ('x' term)*            products associate left
///   term := 'Z' ['/' modulus]
///         | 'M' size '(' ring ')'
///         | '(' ring ')'
///
/// Examples: "Z", "Z/6", "M2(Z)", "M2(Z/4)", "Z/2 x Z/3".
/// Throws ParseError with the offending position.
RingPtr parse_ring(std::string_view text);

/// Element literal checked against the shape of `ring`:
/// integers for scalar rings (reduced mod n), "(a,b)" tuples for products,
/// row-major "[[a,b],[c,d]]" matrices. Integers are arbitrary-precision
/// decimal strings.
Element parse_element(const RingPtr& ring, std::string_view text);

} // namespace clearlab
