#include "adlab/rootbounds.hpp"

#include <algorithm>

namespace adlab {

Approx RatInterval::to_approx() const {
    double l = lo.get_d();
    double h = hi.get_d();
    double mid = (l + h) / 2;
    double rad = (h - l) / 2 + 1e-14 * (std::fabs(mid) + 1.0);
    return Approx{mid, rad};
}

namespace {

// Strips integer content (positive) in place; sign pattern is preserved.
void strip_content(std::vector<Int>& a) {
    Int g(0);
    for (const Int& x : a) g = int_gcd(g, x);
    if (g > 1)
        for (Int& x : a) x /= g;
}

}  // namespace

std::optional<int> schur_cohn_count_in_disk(const UniPoly& p, const Rat& rho) {
    if (p.is_zero()) throw std::invalid_argument("disk count of zero polynomial");
    if (rho <= 0) throw std::invalid_argument("disk radius must be positive");
    int n = p.degree();
    if (n == 0) return 0;

    // q(z) = p(rho*z), cleared to integer coefficients.
    Int num = rho.get_num(), den = rho.get_den();
    std::vector<Rat> q(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k)
        q[static_cast<std::size_t>(k)] =
            p.coeff(k) * Rat(int_pow(num, static_cast<unsigned long>(k))) *
            Rat(int_pow(den, static_cast<unsigned long>(n - k)));
    Int cden(1);
    for (const Rat& c : q) cden = int_lcm(cden, c.get_den());
    std::vector<Int> a(q.size());
    for (std::size_t i = 0; i < q.size(); ++i) a[i] = Rat(q[i] * Rat(cden)).get_num();
    strip_content(a);

    // Schur-Cohn reduction: a' = a0*a - am*reverse(a) on formal degree m.
    int negatives = 0;
    int product_sign = 1;
    for (int m = n; m >= 1; --m) {
        std::size_t sz = static_cast<std::size_t>(m) + 1;
        std::vector<Int> next(sz - 1);
        const Int& head = a[0];
        const Int& tail = a[sz - 1];
        for (std::size_t j = 0; j + 1 < sz; ++j) next[j] = head * a[j] - tail * a[sz - 1 - j];
        int gs = mpz_sgn(next[0].get_mpz_t());
        if (gs == 0) return std::nullopt;
        product_sign *= gs;
        if (product_sign < 0) ++negatives;
        strip_content(next);
        a = std::move(next);
    }
    return negatives;
}

std::optional<DiskCount> count_in_disk_near(const UniPoly& p, const Rat& rho, const Rat& slack) {
    // Deterministic jitter fractions in (-1, 1), zero first.
    static const std::pair<long, long> jit[] = {
        {0, 1},  {1, 2},   {-1, 2}, {1, 3},  {-1, 3}, {2, 3},  {-2, 3}, {1, 5},
        {-1, 5}, {3, 5},   {-3, 5}, {1, 7},  {-1, 7}, {4, 7},  {-4, 7}, {1, 11},
        {-1, 11}, {5, 11}, {-5, 11}, {1, 13}, {-1, 13}, {6, 13}, {-6, 13}, {1, 17}};
    for (const auto& [num, den] : jit) {
        Rat r = rho * (Rat(1) + slack * Rat(num, den));
        if (r <= 0) continue;
        if (auto c = schur_cohn_count_in_disk(p, r)) return DiskCount{*c, r};
    }
    return std::nullopt;
}

namespace {

// Multiplicity of the root 0 (index of first nonzero coefficient).
int zero_root_multiplicity(const UniPoly& p) {
    int m = 0;
    while (p.coeff(m) == 0) ++m;
    return m;
}

UniPoly strip_zero_roots(const UniPoly& p, int m) {
    if (m == 0) return p;
    std::vector<Rat> c(p.coeffs().begin() + m, p.coeffs().end());
    return UniPoly(std::move(c));
}

struct DiskCounter {
    const UniPoly& p;
    // Returns an exact count at a radius within [r*(1-s), r*(1+s)].
    DiskCount at(const Rat& r, const Rat& s) const {
        auto c = count_in_disk_near(p, r, s);
        if (!c)
            throw UncertifiableError("root-modulus count degenerate near radius " +
                                     Rat(r).get_str());
        return *c;
    }
};

}  // namespace

RatInterval max_root_modulus(const UniPoly& p, const Rat& tol) {
    if (p.is_zero() || p.degree() < 1)
        throw std::invalid_argument("max_root_modulus needs degree >= 1");
    if (tol <= 0) throw std::invalid_argument("tolerance must be positive");
    int zm = zero_root_multiplicity(p);
    UniPoly q = strip_zero_roots(p, zm);
    int n = q.degree();
    if (n == 0) return RatInterval{Rat(0), Rat(0)};  // all roots at zero

    DiskCounter counter{q};
    Rat lo(0);
    Rat hi = cauchy_root_bound(q);  // strict upper bound on every |z|
    while (hi - lo > tol) {
        Rat mid = (lo + hi) / 2;
        Rat slack = (hi - lo) / (mid * 16);
        DiskCount c = counter.at(mid, slack);
        if (c.count == n)
            hi = c.radius_used;  // all roots inside
        else
            lo = c.radius_used;  // some root at modulus >= radius_used
    }
    return RatInterval{lo, hi};
}

namespace {

void cluster_rec(const DiskCounter& counter, const Rat& lo, int count_lo, const Rat& hi,
                 int count_hi, const Rat& tol, std::vector<ModulusCluster>& out) {
    int inside = count_hi - count_lo;  // roots with modulus in [lo, hi)
    if (inside == 0) return;
    if (hi - lo <= tol) {
        out.push_back(ModulusCluster{RatInterval{lo, hi}, inside});
        return;
    }
    Rat mid = (lo + hi) / 2;
    Rat slack = (hi - lo) / (mid * 16);
    DiskCount c = counter.at(mid, slack);
    cluster_rec(counter, lo, count_lo, c.radius_used, c.count, tol, out);
    cluster_rec(counter, c.radius_used, c.count, hi, count_hi, tol, out);
}

}  // namespace

std::vector<ModulusCluster> root_modulus_clusters(const UniPoly& p, const Rat& tol) {
    if (p.is_zero() || p.degree() < 1)
        throw std::invalid_argument("root_modulus_clusters needs degree >= 1");
    if (tol <= 0) throw std::invalid_argument("tolerance must be positive");
    std::vector<ModulusCluster> out;
    int zm = zero_root_multiplicity(p);
    UniPoly q = strip_zero_roots(p, zm);
    if (zm > 0) out.push_back(ModulusCluster{RatInterval{Rat(0), Rat(0)}, zm});
    int n = q.degree();
    if (n == 0) return out;
    DiskCounter counter{q};
    Rat hi = cauchy_root_bound(q);
    // No root has modulus zero after stripping, so count at tiny radius is 0.
    cluster_rec(counter, Rat(0), 0, hi, n, tol, out);
    return out;
}

RatInterval largest_real_root_enclosure(const UniPoly& p, const Rat& tol) {
    if (p.is_zero() || p.degree() < 1)
        throw std::invalid_argument("largest_real_root needs degree >= 1");
    if (tol <= 0) throw std::invalid_argument("tolerance must be positive");
    auto chain = sturm_chain(p);
    Rat bound = cauchy_root_bound(p);
    Rat lo = -bound, hi = bound;
    if (count_real_roots_above(chain, lo) == 0)
        throw std::invalid_argument("polynomial has no real root");
    while (hi - lo > tol) {
        // A Sturm query needs a non-root test point; p has finitely many
        // roots, so some candidate below survives.
        Rat width = hi - lo;
        Rat mid;
        bool found = false;
        for (long k = 0; k <= 2 * p.degree() + 2 && !found; ++k) {
            long num = (k % 2 == 0) ? k / 2 : -(k / 2 + 1);
            mid = (lo + hi) / 2 + width * Rat(num, 8 * (p.degree() + 2L));
            if (lo < mid && mid < hi && p.eval(mid) != 0) found = true;
        }
        if (!found) throw UncertifiableError("no usable bisection point");
        if (count_real_roots_above(chain, mid) == 0)
            hi = mid;
        else
            lo = mid;
    }
    return RatInterval{lo, hi};
}

RatInterval sqrt_enclosure(const Rat& lo, const Rat& hi, const Rat& tol) {
    if (lo < 0 || hi < lo) throw std::invalid_argument("sqrt_enclosure needs 0 <= lo <= hi");
    if (tol <= 0) throw std::invalid_argument("tolerance must be positive");
    // Scale so the integer-sqrt granularity is below tol/2.
    Int scale(4);
    Rat inv_tol = Rat(4) / tol;
    while (Rat(scale) < inv_tol) scale *= 2;

    auto floor_sqrt_scaled = [&scale](const Rat& q) {
        Int t = (q.get_num() * scale * scale) / q.get_den();  // floor
        Int r;
        mpz_sqrt(r.get_mpz_t(), t.get_mpz_t());
        return r;
    };
    Rat out_lo = Rat(floor_sqrt_scaled(lo)) / Rat(scale);
    Rat out_hi = (Rat(floor_sqrt_scaled(hi)) + 1) / Rat(scale);
    return RatInterval{out_lo, out_hi};
}

}  // namespace adlab
