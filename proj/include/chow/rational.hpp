#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>

namespace chow {

// Arbitrary-precision rational, always reduced with positive denominator.
// GMP's mpq_class canonicalizes on every arithmetic operation.
using Rational = mpq_class;
using BigInt = mpz_class;

// mpq_class does not canonicalize two-argument constructions; every num/den
// build must go through here (or call canonicalize()) to keep the reduced,
// positive-denominator invariant that exact comparison relies on.
inline Rational rat(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational rat(const BigInt& num, const BigInt& den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

/// Parse "p/q", "p", or a plain decimal string like "-1.25" into an exact
/// rational. Returns nullopt on malformed input.
std::optional<Rational> parse_rational(const std::string& s);

std::string to_string(const Rational& q);

/// Exact conversion double -> rational (every finite double is rational).
Rational rational_from_double(double x);

}  // namespace chow
