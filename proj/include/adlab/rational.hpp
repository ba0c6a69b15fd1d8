#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace adlab {

// Exact arithmetic substrate. Integers and rationals are GMP-backed;
// mpq_class keeps values canonical (reduced, positive denominator).
using Int = mpz_class;
using Rat = mpq_class;

inline Int int_gcd(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int int_lcm(const Int& a, const Int& b) {
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int int_pow(const Int& base, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

Rat rat_pow(const Rat& base, long e);

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

// Reduced a/b from a string such as "-3", "5/7".
Rat rat_from_string(const std::string& s);

// Natural log of |n| for nonzero n of arbitrary size; 0 maps to 0.
// Accurate to ~1e-13 relative, which the callers track as a radius.
double log_abs(const Int& n);

// Bit length of |n| (0 for n = 0).
std::size_t bit_length(const Int& n);

// Decimal string without exponent tricks; used for deterministic reports.
std::string to_decimal_string(double x);

// 64-bit FNV-1a over the canonical byte representation; used for orbit
// point digests (collisions are rechecked exactly).
std::uint64_t digest_ints(const std::vector<Int>& v);

}  // namespace adlab
