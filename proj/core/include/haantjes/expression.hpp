#pragma once

#include <string>
#include <string_view>

#include "haantjes/scalar.hpp"

namespace haantjes {

/// Parses the expression grammar:
///
///   expr   := term (('+' | '-') term)*
///   term   := unary (('*' | '/') unary)*
///   unary  := '-' unary | power
///   power  := atom ('^' integer | '^(' '-'? integer ')')?
///   atom   := integer | name | 'sqrt(' expr ')' | '(' expr ')'
///
/// Names must belong to the context. `sqrt` takes a polynomial argument and
/// introduces it as the discriminant; perfect squares come back rational.
Scalar parse_expression(std::string_view text, const Context& ctx);

/// Canonical text form, accepted back by parse_expression.
std::string print_expression(const Scalar& value);

} // namespace haantjes
