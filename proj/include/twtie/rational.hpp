#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace twtie {

// Exact rational arithmetic. All certified quantities (separator fractions,
// LP optima, bramble weights) are computed and compared exactly; floating
// point is never used for them.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Parses "p/q" or "p". Throws input_error on malformed input or q == 0.
Rational parse_rational(const std::string& text);

// Canonical form: "p/q" in lowest terms, or "p" when q == 1.
std::string rational_str(const Rational& r);

}  // namespace twtie
