#pragma once

#include <optional>
#include <string>
#include <vector>

#include "adlab/rational.hpp"

namespace adlab {

// Dense univariate polynomial over Q, exact. Coefficient k is the
// coefficient of t^k; the leading coefficient is nonzero unless the
// polynomial is zero (empty coefficient vector).
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rat> coeffs);
    static UniPoly constant(const Rat& c);
    static UniPoly from_ints(const std::vector<long>& coeffs);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    const Rat& lc() const;
    const Rat& coeff(int k) const;
    const std::vector<Rat>& coeffs() const { return c_; }

    Rat eval(const Rat& x) const;
    UniPoly derivative() const;

    UniPoly operator-() const;
    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator*(const UniPoly& o) const;
    UniPoly scaled(const Rat& s) const;
    bool operator==(const UniPoly& o) const { return c_ == o.c_; }

    // Quotient and remainder over Q; divisor must be nonzero.
    std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const;

    // Monic gcd over Q (zero if both inputs are zero).
    static UniPoly gcd(const UniPoly& a, const UniPoly& b);

    UniPoly squarefree_part() const;

    // Scales to integer coefficients with content 1 and positive lc.
    UniPoly primitive_integer_form() const;

    // True when every coefficient is an integer.
    bool integer_coeffs() const;

    std::string to_string(const std::string& var = "t") const;

private:
    void trim();
    std::vector<Rat> c_;
};

// Sturm chain of p (p, p', then negated remainders).
std::vector<UniPoly> sturm_chain(const UniPoly& p);

// Number of distinct real roots in (a, b]; requires p nonzero.
int count_real_roots_in(const std::vector<UniPoly>& chain, const Rat& a, const Rat& b);

// Number of distinct real roots in (a, +inf).
int count_real_roots_above(const std::vector<UniPoly>& chain, const Rat& a);

// Cauchy bound: every complex root z of p has |z| < bound.
Rat cauchy_root_bound(const UniPoly& p);

}  // namespace adlab
