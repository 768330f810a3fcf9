#pragma once

#include "symcurv/rational.hpp"

#include <map>
#include <string>
#include <string_view>

namespace symcurv::cli {

using Bindings = std::map<std::string, Rational, std::less<>>;

/// Evaluates a closed-form expression exactly.
///
/// Grammar: integers, single-letter variables, + - * /, parentheses,
/// min(a, b, ...) and floor(x). Juxtaposition multiplies, so "2pq" is
/// 2*p*q and "(n-1)(2n+1)" is a product. Throws std::invalid_argument on
/// syntax errors or unbound variables, DivisionByZero on x/0.
Rational evaluate(std::string_view expr, const Bindings& vars = {});

}  // namespace symcurv::cli
