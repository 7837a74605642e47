#pragma once

#include <gmpxx.h>

#include <string>

namespace fpa {

/// Exact rational coefficient. GMP keeps values canonical (lowest terms,
/// positive denominator) as long as arithmetic starts from canonical inputs.
using Scalar = mpq_class;

/// Exact integer used for dimension counts (free algebras overflow 64 bits fast).
using Count = mpz_class;

inline bool is_zero(const Scalar& s) { return sgn(s) == 0; }

inline Scalar rational(long num, long den = 1) {
    Scalar s(num, den);
    s.canonicalize();
    return s;
}

/// "3", "-5/7"; denominator omitted when 1.
std::string to_string(const Scalar& s);

/// Parses "3", "-5/7". Throws Error on malformed input.
Scalar scalar_from_string(const std::string& text);

} // namespace fpa
