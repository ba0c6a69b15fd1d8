#pragma once

#include <vector>

#include "adlab/unipoly.hpp"

namespace adlab {

// Dense exact integer matrix; small sizes (matrix powers and minors stay
// exact, no floating point anywhere).
class IntMat {
public:
    explicit IntMat(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, Int(0)) {
        if (n <= 0) throw std::invalid_argument("matrix size must be positive");
    }
    static IntMat identity(int n);
    static IntMat from_rows(const std::vector<std::vector<long>>& rows);

    int size() const { return n_; }
    Int& at(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
    const Int& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }
    bool operator==(const IntMat& o) const { return n_ == o.n_ && a_ == o.a_; }

    IntMat operator*(const IntMat& o) const;
    IntMat pow(unsigned long e) const;

    Int det() const;  // fraction-free Bareiss
    Int trace() const;

    // Matrix of k x k minors over lexicographically ordered k-subsets; its
    // eigenvalues are the k-fold products of the eigenvalues.
    IntMat exterior_power(int k) const;

    // Monic characteristic polynomial det(tI - M), exact integer
    // coefficients (interpolated from exact determinants).
    UniPoly char_poly() const;

private:
    int n_;
    std::vector<Int> a_;
};

}  // namespace adlab
