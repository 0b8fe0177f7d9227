#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace bsroots {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

/// "p/q" in lowest terms, or "p" when the denominator is 1.
std::string to_string(const Rational& x);
std::string to_string(const Integer& x);

/// Inverse of to_string; also accepts a leading '+' and surrounding spaces.
/// Throws InputError on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

Integer floor(const Rational& x);
Integer ceil(const Rational& x);
bool is_integer(const Rational& x);

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

/// Fractional part in [0, 1).
Rational frac(const Rational& x);

/// Reduce a rational with denominator prime to `p` into {0, ..., p-1}.
Integer mod_prime(const Rational& x, const Integer& p);

/// Scale a rational vector to the primitive integer vector on the same ray.
/// The zero vector maps to the zero vector.
IntVector primitive(const RatVector& v);
IntVector primitive(IntVector v);

RatVector to_rational(const IntVector& v);
RatVector to_rational(const std::vector<long>& v);

Rational dot(const RatVector& a, const RatVector& b);
Integer dot(const IntVector& a, const IntVector& b);

}  // namespace bsroots
