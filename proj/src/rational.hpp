#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>

namespace gaudin {

// Exact scalar field for all symbolic computations. GMP keeps numerator and
// denominator coprime with positive denominator, which is the canonical form
// assumed throughout. Expression templates are off so arithmetic results are
// plain values.
using Rational =
    boost::multiprecision::number<boost::multiprecision::backends::gmp_rational,
                                  boost::multiprecision::et_off>;
using BigInt = boost::multiprecision::number<boost::multiprecision::backends::gmp_int,
                                             boost::multiprecision::et_off>;

// High-precision float scalar used when Bethe roots are irrational.
// 60 decimal digits leaves ample headroom over the 1e-30 solver tolerance.
using BigFloat = boost::multiprecision::number<boost::multiprecision::backends::gmp_float<60>,
                                               boost::multiprecision::et_off>;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline BigFloat to_big_float(const Rational& q) {
    return BigFloat(boost::multiprecision::numerator(q)) /
           BigFloat(boost::multiprecision::denominator(q));
}

// Parses "p", "-p/q" style exact rationals (used by instance files).
Rational parse_rational(const std::string& text);

// Canonical "p" or "p/q" rendering.
std::string rational_to_string(const Rational& q);

std::string big_float_to_string(const BigFloat& x, unsigned digits = 40);

} // namespace gaudin
