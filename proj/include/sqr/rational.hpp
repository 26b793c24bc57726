#ifndef SQR_RATIONAL_HPP
#define SQR_RATIONAL_HPP

#include <string>
#include <boost/multiprecision/cpp_int.hpp>

namespace sqr {

// Exact arbitrary-precision rational. cpp_rational keeps the canonical form
// (lowest terms, positive denominator), which every predicate here relies on.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Parses "p", "-p" or "p/q". Throws BadRational on anything else or q == 0.
Rational parse_rational(const std::string& text);

// Lowest-terms form, "p" when the denominator is 1, else "p/q".
std::string rational_to_string(const Rational& v);

}  // namespace sqr

#endif
