#pragma once

// Exact rational scalars used throughout the library.
//
// GMP's mpq_class is kept canonical (reduced, positive denominator) by the
// helpers here; raw mpq_class arithmetic already canonicalizes, but values
// built from numerator/denominator pairs must go through make_rational().

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace wfm {

using Rational = mpq_class;
using Integer = mpz_class;
using RationalVector = std::vector<Rational>;

Rational make_rational(std::int64_t num, std::int64_t den = 1);

/// Parses "p", "-p", "p/q". Throws std::invalid_argument on malformed input
/// or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" form, or "p" when the denominator is one.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

bool is_integer(const Rational& q);

/// Throws std::domain_error if q is not an integer or does not fit.
std::int64_t to_int64(const Rational& q);

Rational abs(const Rational& q);

RationalVector to_rational_vector(const std::vector<std::int64_t>& v);

}  // namespace wfm
