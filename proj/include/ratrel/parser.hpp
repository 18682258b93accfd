#ifndef RATREL_PARSER_HPP
#define RATREL_PARSER_HPP

#include <string>

#include "ratrel/ratfunc.hpp"

namespace ratrel {

// Parses an expression in t over the rationals: integers, + - * / ^ with
// nonnegative integer exponents, parentheses, and implicit multiplication
// before a parenthesized group ("t^3(t+1)^2"). The result is reduced with
// a monic denominator.
// Errors: SyntaxError (with position), ZeroDenominator, ConstantExpression.
RationalFunction parse_ratfunc(const std::string& text);

} // namespace ratrel

#endif
