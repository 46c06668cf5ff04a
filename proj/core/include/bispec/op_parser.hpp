#pragma once

#include <string_view>

#include "bispec/diff_operator.hpp"

namespace bispec {

/// Parses the operator grammar
///
///   expr   := term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := rational | 'x' ('^' integer)? | 'D' digit | '(' expr ')' | '-' factor
///
/// where D1..D9 denote derivatives and a product may contain at most one
/// derivative atom.  A bare constant term becomes the eigenvalue shift.
///
/// Throws ParseError (byte offset, expectation) on malformed input; degree
/// and normalization violations propagate from the operator factory.
DifferentialOperator parse_operator(std::string_view text);

}  // namespace bispec
