#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "adlab/errors.hpp"
#include "adlab/rational.hpp"

namespace adlab {

// Sparse multivariate polynomial over Q with exact coefficients.
//
// Terms are kept sorted in descending graded-lexicographic order (total
// degree first, then lexicographic with earlier variables weighing more),
// with no zero coefficients. Values are immutable after construction; all
// operations are pure.
class MultiPoly {
public:
    using Exp = std::vector<std::int32_t>;
    struct Term {
        Exp exps;
        Rat coeff;
        bool operator==(const Term& o) const { return exps == o.exps && coeff == o.coeff; }
    };

    MultiPoly() : nvars_(0) {}
    explicit MultiPoly(int nvars);
    static MultiPoly constant(int nvars, const Rat& c);
    static MultiPoly variable(int nvars, int index);
    static MultiPoly monomial(int nvars, Exp exps, const Rat& c);
    // Sorts, merges duplicates, drops zeros.
    static MultiPoly from_terms(int nvars, std::vector<Term> terms);

    int nvars() const { return nvars_; }
    const std::vector<Term>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // nullopt encodes the "minus infinity" degree of the zero polynomial.
    std::optional<int> total_degree() const;
    // Max exponent of one variable (-1 for the zero polynomial).
    int degree_in(int var) const;
    // Common degree when homogeneous; nullopt when inhomogeneous or zero.
    std::optional<int> homogeneous_degree() const;
    const Term& leading_term() const;  // grlex-largest
    bool integer_coeffs() const;

    bool operator==(const MultiPoly& o) const;
    MultiPoly operator-() const;
    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly scaled(const Rat& s) const;

    // Product with a term-count cap (0 = unlimited); throws
    // ResourceLimitError when the result would exceed the cap.
    static MultiPoly mul(const MultiPoly& a, const MultiPoly& b, std::size_t term_cap);

    Rat eval(const std::vector<Rat>& point) const;
    // Fast path for integer-coefficient polynomials at integer points.
    Int eval_int(const std::vector<Int>& point) const;

    // Substitutes args[i] for variable i; all args share an nvars.
    MultiPoly substitute(const std::vector<MultiPoly>& args, std::size_t term_cap = 0) const;

    // Coefficients of var^k as polynomials with var zeroed out.
    std::vector<MultiPoly> coefficients_in(int var) const;
    static MultiPoly from_coefficients_in(int var, const std::vector<MultiPoly>& coeffs,
                                          int nvars);

    // Canonical printing; parses back to the same polynomial.
    std::string to_string(const std::vector<std::string>& names) const;

    // grlex comparison on exponent vectors of equal length.
    static bool exp_less(const Exp& a, const Exp& b);

    // Products with operand-size product above this run through the packed
    // GMP path instead of hashed accumulation. Tunable for benchmarks.
    static double mul_pack_threshold;

private:
    void assert_same_shape(const MultiPoly& o) const;
    int nvars_;
    std::vector<Term> terms_;
};

}  // namespace adlab
