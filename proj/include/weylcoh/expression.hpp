#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "weylcoh/weyl.hpp"

namespace weylcoh {

/// Parses an operator expression over D_n.
///
/// Grammar: variables x1..xn and d1..dn, integer and p/q literals, binary
/// + - *, unary -, ^ with a nonnegative integer exponent, parentheses. '*' is
/// required between factors. The result is normally ordered, so "d1*x1"
/// parses to x1*d1 + 1.
WeylElement parse_weyl(std::string_view text, std::size_t n);

/// Parses a free-module row: comma-separated component expressions,
/// optionally wrapped in [ ]. A row with one component is a plain expression.
std::vector<WeylElement> parse_row(std::string_view text, std::size_t n);

/// Canonical rendering; parse_weyl(render(f), f.n()) == f.
std::string render(const WeylElement& f);
std::string render(const SymbolPolynomial& s);
std::string render_row(const std::vector<WeylElement>& row);

}  // namespace weylcoh
