#pragma once

#include <optional>
#include <vector>

#include "adlab/approx.hpp"
#include "adlab/unipoly.hpp"

namespace adlab {

// Thrown when a strict inequality cannot be certified at the requested
// precision (root too close to a decision boundary).
struct UncertifiableError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exact count of roots of p (with multiplicity) in the open disk |z| < rho,
// by the Schur-Cohn reduction over Q. Returns nullopt on a degenerate
// reduction step, which in particular happens when a root lies on the
// circle.
std::optional<int> schur_cohn_count_in_disk(const UniPoly& p, const Rat& rho);

// Certified disk count: retries with nearby radii inside
// [rho*(1-slack), rho*(1+slack)] when the reduction degenerates. All
// returned counts are exact for their (reported) radius.
struct DiskCount {
    int count;
    Rat radius_used;
};
std::optional<DiskCount> count_in_disk_near(const UniPoly& p, const Rat& rho, const Rat& slack);

// Spectral radius of the root set: max |z| over complex roots, as a
// certified rational enclosure of width <= tol. p must be nonzero of
// degree >= 1.
struct RatInterval {
    Rat lo;
    Rat hi;
    Approx to_approx() const;
};
RatInterval max_root_modulus(const UniPoly& p, const Rat& tol);

// All distinct root moduli as enclosures of width <= tol, each with the
// number of roots (with multiplicity) at that modulus, ascending.
struct ModulusCluster {
    RatInterval modulus;
    int multiplicity;
};
std::vector<ModulusCluster> root_modulus_clusters(const UniPoly& p, const Rat& tol);

// Largest real root of p as an enclosure of width <= tol; requires p to
// have at least one real root. Throws std::invalid_argument otherwise.
RatInterval largest_real_root_enclosure(const UniPoly& p, const Rat& tol);

// Certified square root enclosure of a nonnegative rational interval.
RatInterval sqrt_enclosure(const Rat& lo, const Rat& hi, const Rat& tol);

}  // namespace adlab
