#pragma once

#include <algorithm>
#include <cmath>

namespace adlab {

// A real value with an explicit error radius. Comparisons follow interval
// semantics: a claim is made only when the intervals make it certain.
struct Approx {
    double value = 0.0;
    double radius = 0.0;

    double lo() const { return value - radius; }
    double hi() const { return value + radius; }
};

inline Approx approx_exact(double v) { return Approx{v, 0.0}; }

inline bool certainly_less(const Approx& a, const Approx& b) {
    return a.hi() < b.lo();
}

inline bool certainly_greater(const Approx& a, const Approx& b) {
    return a.lo() > b.hi();
}

inline bool overlaps(const Approx& a, const Approx& b) {
    return !(certainly_less(a, b) || certainly_greater(a, b));
}

inline Approx approx_mul(const Approx& a, const Approx& b) {
    double corners[4] = {a.lo() * b.lo(), a.lo() * b.hi(), a.hi() * b.lo(), a.hi() * b.hi()};
    double lo = *std::min_element(corners, corners + 4);
    double hi = *std::max_element(corners, corners + 4);
    return Approx{(lo + hi) / 2, (hi - lo) / 2 + 1e-15 * std::fabs(hi)};
}

inline Approx approx_div(const Approx& a, const Approx& b) {
    // Caller must ensure b is bounded away from zero.
    double corners[4] = {a.lo() / b.lo(), a.lo() / b.hi(), a.hi() / b.lo(), a.hi() / b.hi()};
    double lo = *std::min_element(corners, corners + 4);
    double hi = *std::max_element(corners, corners + 4);
    return Approx{(lo + hi) / 2, (hi - lo) / 2 + 1e-15 * std::fabs(hi)};
}

}  // namespace adlab
