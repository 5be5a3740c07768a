#ifndef OGF_PARSER_HPP
#define OGF_PARSER_HPP

#include <string>

#include "ogf/polynomial.hpp"

namespace ogf {

/// Parses the canonical polynomial expression language:
///
///   expr  := term (('+'|'-') term)*
///   term  := unary ('*' unary)*
///   unary := '-' unary | atom
///   atom  := base ('^' NAT)?
///   base  := RATIONAL | VARIABLE | '(' expr ')'
///
/// with integer/rational literals ("7", "3/4"), variables x1..x9, and no
/// implicit multiplication ("2x1" is rejected; write "2*x1").  Exponents
/// are literal nonnegative integers.  Whitespace is insignificant.
///
/// Raises Error(errc::parse_error) with a 1-based character position on
/// malformed input.  Round-trips Polynomial::to_string().
Polynomial parse_polynomial(const std::string& text);

} // namespace ogf

#endif
