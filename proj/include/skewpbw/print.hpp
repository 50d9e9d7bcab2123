#pragma once

#include <optional>
#include <string>

#include "skewpbw/completion.hpp"
#include "skewpbw/elements.hpp"

namespace skewpbw {

/// "x1^2*x2^-1"; "1" for the zero exponent.
std::string format_monomial(const ExponentVector& u);

/// Terms in descending order (lex unless an order is given), e.g.
/// "q*x1*x2 - 3/2*x1 + 1". The output parses back to the same element.
std::string format_element(const Element& f, const std::optional<MonomialOrder>& order = std::nullopt);

/// Terms in ascending order followed by " + O(>= B)" for a finite bound.
std::string format_series(const HahnSeries& f);

}  // namespace skewpbw
