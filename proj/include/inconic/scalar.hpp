#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace inconic {

/// The only number type of the exact layer: an arbitrary-precision rational.
/// GMP keeps values canonical (positive denominator, coprime num/den), so
/// arithmetic is exact and equality is plain comparison.
using Scalar = mpq_class;
using Integer = mpz_class;

/// Parses "3/7", "-2", "0". Throws std::invalid_argument on malformed input
/// or a zero denominator.
Scalar parse_scalar(std::string_view text);

std::string to_string(const Scalar& value);
std::string to_string(const Integer& value);

inline double to_double(const Scalar& value) { return value.get_d(); }

}  // namespace inconic
