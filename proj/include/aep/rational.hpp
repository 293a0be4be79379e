#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace aep {

// Exact arithmetic for action costs and cost thresholds. Keeping costs
// rational makes the zeta * c(optimal) cutoff platform-independent.
using Rational = boost::rational<std::int64_t>;

// Accepts "3", "-2", "5/2" and plain decimals like "1.1" or "-0.25".
std::optional<Rational> parse_rational(std::string_view text);

std::string to_string(const Rational& value);

double to_double(const Rational& value);

}  // namespace aep
