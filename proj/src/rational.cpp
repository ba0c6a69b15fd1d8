#include "adlab/rational.hpp"

#include <cmath>
#include <cstdio>
#include <cstring>

namespace adlab {

Rat rat_pow(const Rat& base, long e) {
    if (e == 0) return Rat(1);
    Rat b = e > 0 ? base : Rat(1) / base;
    unsigned long k = static_cast<unsigned long>(e > 0 ? e : -e);
    Rat acc(1);
    while (k > 0) {
        if (k & 1) acc *= b;
        b *= b;
        k >>= 1;
    }
    return acc;
}

Rat rat_from_string(const std::string& s) {
    Rat q;
    if (q.set_str(s, 10) != 0)
        throw std::invalid_argument("malformed rational literal: '" + s + "'");
    if (mpz_sgn(mpq_denref(q.get_mpq_t())) == 0)
        throw std::invalid_argument("zero denominator: '" + s + "'");
    q.canonicalize();
    return q;
}

double log_abs(const Int& n) {
    if (n == 0) return 0.0;
    long exp2 = 0;
    double mant = mpz_get_d_2exp(&exp2, n.get_mpz_t());
    return std::log(std::fabs(mant)) + static_cast<double>(exp2) * M_LN2;
}

std::size_t bit_length(const Int& n) {
    if (n == 0) return 0;
    return mpz_sizeinbase(n.get_mpz_t(), 2);
}

std::string to_decimal_string(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::uint64_t digest_ints(const std::vector<Int>& v) {
    std::uint64_t h = 14695981039346656037ull;
    auto mix = [&h](const unsigned char* p, std::size_t n) {
        for (std::size_t i = 0; i < n; ++i) {
            h ^= p[i];
            h *= 1099511628211ull;
        }
    };
    for (const Int& z : v) {
        int sign = mpz_sgn(z.get_mpz_t());
        unsigned char sc = static_cast<unsigned char>(sign + 1);
        mix(&sc, 1);
        std::size_t count = 0;
        if (sign != 0) {
            std::size_t bytes = (mpz_sizeinbase(z.get_mpz_t(), 2) + 7) / 8;
            std::vector<unsigned char> buf(bytes);
            mpz_export(buf.data(), &count, -1, 1, 0, 0, z.get_mpz_t());
            mix(buf.data(), count);
        }
        unsigned char sep = 0xfe;
        mix(&sep, 1);
    }
    return h;
}

}  // namespace adlab
