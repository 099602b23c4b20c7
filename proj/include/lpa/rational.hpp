#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace lpa {

/// Arbitrary-precision integer and rational scalars (GMP-backed). An
/// mpq_class produced by arithmetic is always canonical: lowest terms with a
/// positive denominator.
using Integer = mpz_class;
using Rational = mpq_class;
using RatVector = std::vector<Rational>;

/// Parses "p", "-p" or "p/q"; throws std::invalid_argument on malformed text
/// or a zero denominator.
Rational parse_rational(const std::string& text);

std::string to_string(const Rational& value);

bool is_zero(const RatVector& v);

/// Dot product; both vectors must have the same length.
Rational dot(const RatVector& a, const RatVector& b);

/// Returns true if a = t*b for some nonzero rational t (both nonzero).
bool proportional(const RatVector& a, const RatVector& b);

}  // namespace lpa
