#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "adlab/multipoly.hpp"

namespace adlab {

// Rational point of P^N in coprime-integer normal form: gcd of coordinates
// is 1 and the first nonzero coordinate is positive.
class ProjPoint {
public:
    explicit ProjPoint(std::vector<Int> coords);
    int dim() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Int>& coords() const { return c_; }
    bool operator==(const ProjPoint& o) const { return c_ == o.c_; }
    bool operator!=(const ProjPoint& o) const { return !(*this == o); }
    std::uint64_t digest() const { return digest_ints(c_); }
    std::size_t max_coord_bits() const;
    std::string to_string() const;

private:
    std::vector<Int> c_;
};

struct DegreeSequence {
    std::vector<long> degs;  // degs[n] = deg(f^{n+1})
    bool truncated = false;  // term cap hit before reaching the requested length
    int failed_at = 0;       // iterate that could not be computed (when truncated)
};

inline constexpr std::size_t kDefaultTermCap = 5'000'000;

// Dominant rational self-map of P^N: N+1 coprime homogeneous forms of a
// common degree d >= 1, held with integer coefficients of joint content 1
// and positive leading form.
class ProjMap {
public:
    // Validates homogeneity, removes the coordinate gcd, fixes the scale.
    static ProjMap from_coords(std::vector<MultiPoly> coords);

    int dim() const { return static_cast<int>(coords_.size()) - 1; }
    int degree() const { return degree_; }
    const std::vector<MultiPoly>& coords() const { return coords_; }
    bool operator==(const ProjMap& o) const { return coords_ == o.coords_; }

    static ProjMap identity(int dim);

    // nullopt when every coordinate vanishes at p (indeterminacy).
    std::optional<ProjPoint> eval(const ProjPoint& p) const;

    std::string to_string(const std::vector<std::string>& names) const;

private:
    ProjMap() = default;
    std::vector<MultiPoly> coords_;
    int degree_ = 0;
};

// Standard names x0..xN.
std::vector<std::string> projective_names(int dim);

ProjMap map_parse(const std::vector<std::string>& coord_texts,
                  const std::vector<std::string>& variables);

// Lifts an affine self-map of A^N (expressions in the given affine
// variables, identified with x_i/x0) to its coprime homogeneous form.
ProjMap affine_lift(const std::vector<std::string>& exprs,
                    const std::vector<std::string>& affine_variables);

// compose(f, g) applies g first: it is the map x -> f(g(x)).
ProjMap compose(const ProjMap& f, const ProjMap& g, std::size_t term_cap = kDefaultTermCap);

// degs[n] = deg(f^{n+1}) for n = 0..max_iter-1, with coprime normalization
// at every step. On a term-cap overflow the partial sequence is returned
// with `truncated` set and `failed_at` the 1-based iterate that failed.
DegreeSequence degree_sequence(const ProjMap& f, int max_iter,
                               std::size_t term_cap = kDefaultTermCap);

// True iff Z(f(x)) is divisible by Z(x) as a polynomial; Z must be
// homogeneous and nonzero.
bool is_invariant_hypersurface(const ProjMap& f, const MultiPoly& Z);

}  // namespace adlab
