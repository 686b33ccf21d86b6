#pragma once

#include "polars/polynomial.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace polars {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " at offset " + std::to_string(offset)), offset_(offset) {}

    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

/// Parses and expands a polynomial expression.
///
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := base ('^' nat)?
///   base   := rational | var | '(' expr ')'
///
/// Variables are X0, X1, X2, with x and y accepted for X1 and X2. Rationals are
/// integers or p/q. Whitespace is ignored. The result has nvars == 3 iff X0 occurs.
Polynomial parse(std::string_view text);

}  // namespace polars
