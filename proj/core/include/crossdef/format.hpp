#pragma once

#include <string>

#include "crossdef/crossed.hpp"
#include "crossdef/tpoly.hpp"

namespace crossdef {

/// Term grammar, shared by printing and parsing:
///
///   element  := term { ("+"|"-") term }
///   term     := [coeff "*"] factor { "*" factor } [ "*"? "[" name "]" ]
///            |  coeff | "[" name "]"
///   factor   := var [ "^" int ]
///   coeff    := "(" gauss ")" | rational | rational "*"? "i" | "i"
///
/// "[1]" (the identity group element) is omitted when printing; variable
/// and element names come from the context's GroupData.

std::string format(const Polynomial& p, const GroupData& data);
std::string format(const CrossedElement& e, const GroupData& data);
/// t-polynomials print as "P0 + t*P1 + t^2*P2"; multi-term coefficients
/// are parenthesized.
std::string format(const TElement& e, const GroupData& data);

/// Parse a crossed element in the grammar above.  Throws
/// std::invalid_argument on malformed input or unknown names.
CrossedElement parse_crossed(const std::string& text, const GroupData& data);
/// Parse a polynomial (group brackets rejected).
Polynomial parse_polynomial(const std::string& text, const GroupData& data);

}  // namespace crossdef
