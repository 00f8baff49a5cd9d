#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

#include "sepfam/errors.hpp"

namespace sepfam {

// All coordinates and separator parameters are exact rationals. Every
// predicate in the library reduces to sign computations on these, so there is
// no rounding anywhere outside the SVG renderer.
using Rational = mpq_class;
using BigInt = mpz_class;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw precondition_error("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw precondition_error("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline int sign(const Rational& q) { return sgn(q); }

inline Rational abs_rational(const Rational& q) { return q < 0 ? Rational(-q) : q; }

// Canonical "NUM/DEN" with DEN > 0 and gcd(NUM, DEN) = 1; integers are
// written as NUM/1 so the format round-trips byte for byte.
std::string to_fraction_string(const Rational& q);

// Strict inverse of to_fraction_string: optional sign, decimal digits, '/',
// decimal digits. Rejects everything else (whitespace, hex, missing slash).
std::optional<Rational> parse_fraction(std::string_view text);

}  // namespace sepfam
