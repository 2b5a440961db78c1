#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace axial {

// Exact scalars. cpp_rational keeps the canonical form (positive denominator,
// coprime numerator/denominator) as a class invariant.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using Vec = std::vector<Rational>;

/// Parses "p/q" or "p" with optional sign; q must be nonzero.
Rational parse_rational(std::string_view text);

/// Canonical form: "p/q" with q > 0, or "p" when the value is integral.
std::string rational_to_string(const Rational& value);

}  // namespace axial
