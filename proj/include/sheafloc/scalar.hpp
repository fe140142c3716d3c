#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace sheafloc {

/// Exact rational coefficient. GMP keeps results of arithmetic canonical
/// (lowest terms, positive denominator); values built from a numerator and
/// denominator go through make_scalar, which canonicalizes.
using Scalar = mpq_class;

Scalar make_scalar(long num, long den = 1);
Scalar make_scalar(const mpz_class& num, const mpz_class& den);

/// Parses "p" or "p/q" (optional sign). Throws UsageError on malformed input
/// or a zero denominator.
Scalar parse_scalar(std::string_view text);

std::string to_string(const Scalar& x);

inline bool is_integer(const Scalar& x) { return x.get_den() == 1; }

}  // namespace sheafloc
