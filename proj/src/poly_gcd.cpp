#include "adlab/poly_gcd.hpp"

#include <algorithm>
#include <limits>
#include <map>

namespace adlab {

std::optional<MultiPoly> divide_exact(const MultiPoly& p, const MultiPoly& d) {
    if (p.nvars() != d.nvars()) throw std::invalid_argument("variable-count mismatch");
    if (d.is_zero()) throw std::invalid_argument("division by zero polynomial");
    if (p.is_zero()) return MultiPoly(p.nvars());

    struct ExpGreater {
        bool operator()(const MultiPoly::Exp& a, const MultiPoly::Exp& b) const {
            return MultiPoly::exp_less(b, a);
        }
    };
    std::map<MultiPoly::Exp, Rat, ExpGreater> rem;
    for (const auto& t : p.terms()) rem.emplace(t.exps, t.coeff);
    const auto& dl = d.leading_term();
    std::vector<MultiPoly::Term> quo;

    while (!rem.empty()) {
        const auto& [le, lc] = *rem.begin();
        MultiPoly::Exp qe(le.size());
        for (std::size_t i = 0; i < le.size(); ++i) {
            qe[i] = le[i] - dl.exps[i];
            if (qe[i] < 0) return std::nullopt;
        }
        Rat qc = lc / dl.coeff;
        for (const auto& t : d.terms()) {
            MultiPoly::Exp e(qe.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = qe[i] + t.exps[i];
            auto it = rem.find(e);
            Rat delta = qc * t.coeff;
            if (it == rem.end()) {
                rem.emplace(std::move(e), -delta);
            } else {
                it->second -= delta;
                if (it->second == 0) rem.erase(it);
            }
        }
        quo.push_back(MultiPoly::Term{std::move(qe), std::move(qc)});
    }
    return MultiPoly::from_terms(p.nvars(), std::move(quo));
}

MultiPoly normalize_primitive(const MultiPoly& p) {
    if (p.is_zero()) return p;
    Int den(1);
    for (const auto& t : p.terms()) den = int_lcm(den, t.coeff.get_den());
    Int content(0);
    for (const auto& t : p.terms()) {
        Rat c = t.coeff * Rat(den);
        content = int_gcd(content, c.get_num());
    }
    Rat lead = p.leading_term().coeff;
    if (lead < 0) content = -content;
    return p.scaled(Rat(den) / Rat(content));
}

namespace {

// ---------------------------------------------------------------------------
// Modular line-restriction coprimality certificate.
// ---------------------------------------------------------------------------

constexpr std::uint64_t kPrimes[] = {2147483647ull, 2147483629ull, 2147483587ull};

std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    b %= p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

std::uint64_t mod_inv(std::uint64_t a, std::uint64_t p) { return mod_pow(a, p - 2, p); }

std::uint64_t mod_of_int(const Int& z, std::uint64_t p) {
    Int r;
    mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), static_cast<unsigned long>(p));
    return r.get_ui();
}

// Evaluates an integer-coefficient polynomial at an integer point mod p.
std::uint64_t eval_mod(const MultiPoly& f, const std::vector<std::int64_t>& pt,
                       std::uint64_t p) {
    int n = f.nvars();
    std::vector<std::vector<std::uint64_t>> pow(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        int d = f.degree_in(i);
        auto& tab = pow[static_cast<std::size_t>(i)];
        tab.reserve(static_cast<std::size_t>(d + 1));
        tab.push_back(1 % p);
        std::uint64_t base =
            static_cast<std::uint64_t>(((pt[static_cast<std::size_t>(i)] % static_cast<std::int64_t>(p)) +
                                        static_cast<std::int64_t>(p)) %
                                       static_cast<std::int64_t>(p));
        for (int k = 1; k <= d; ++k) tab.push_back(tab.back() * base % p);
    }
    std::uint64_t acc = 0;
    for (const auto& t : f.terms()) {
        std::uint64_t v = mod_of_int(t.coeff.get_num(), p);
        for (int i = 0; i < n; ++i) {
            int e = t.exps[static_cast<std::size_t>(i)];
            if (e > 0) v = v * pow[static_cast<std::size_t>(i)][static_cast<std::size_t>(e)] % p;
        }
        acc = (acc + v) % p;
    }
    return acc;
}

// Newton interpolation through (0..d, vals) over F_p; returns coefficients.
std::vector<std::uint64_t> interpolate_mod(const std::vector<std::uint64_t>& vals,
                                           std::uint64_t p) {
    std::size_t m = vals.size();
    std::vector<std::uint64_t> dd(vals);  // divided differences
    for (std::size_t lvl = 1; lvl < m; ++lvl) {
        std::uint64_t inv = mod_inv(lvl % p, p);
        for (std::size_t i = m - 1; i >= lvl; --i) {
            dd[i] = (dd[i] + p - dd[i - 1]) % p * inv % p;
            if (i == lvl) break;
        }
    }
    // Expand Newton form: sum dd[k] * prod_{j<k} (t - j).
    std::vector<std::uint64_t> coeff(m, 0), basis(m, 0);
    basis[0] = 1;
    std::size_t blen = 1;
    for (std::size_t k = 0; k < m; ++k) {
        for (std::size_t j = 0; j < blen; ++j) coeff[j] = (coeff[j] + dd[k] * basis[j]) % p;
        if (k + 1 < m) {
            // basis *= (t - k)
            std::uint64_t kk = k % p;
            for (std::size_t j = blen; j-- > 0;) {
                std::uint64_t hi = basis[j];
                basis[j + 1] = (basis[j + 1] + hi) % p;
                basis[j] = hi * (p - kk) % p;
            }
            ++blen;
        }
    }
    while (coeff.size() > 1 && coeff.back() == 0) coeff.pop_back();
    return coeff;
}

int gcd_degree_mod(std::vector<std::uint64_t> a, std::vector<std::uint64_t> b,
                   std::uint64_t p) {
    auto deg = [](const std::vector<std::uint64_t>& v) {
        int d = static_cast<int>(v.size()) - 1;
        while (d >= 0 && v[static_cast<std::size_t>(d)] == 0) --d;
        return d;
    };
    int da = deg(a), db = deg(b);
    while (db >= 0) {
        // a mod b
        std::uint64_t inv = mod_inv(b[static_cast<std::size_t>(db)], p);
        for (int k = da; k >= db; --k) {
            std::uint64_t q = a[static_cast<std::size_t>(k)] * inv % p;
            if (q == 0) continue;
            for (int j = 0; j <= db; ++j)
                a[static_cast<std::size_t>(k - db + j)] =
                    (a[static_cast<std::size_t>(k - db + j)] + p -
                     q * b[static_cast<std::size_t>(j)] % p) %
                    p;
        }
        std::swap(a, b);
        da = deg(a);
        db = deg(b);
    }
    return da;
}

// Deterministic small test vectors.
std::vector<std::int64_t> candidate_vector(int n, int k) {
    std::vector<std::int64_t> v(static_cast<std::size_t>(n));
    std::uint64_t s = 0x243f6a8885a308d3ull + static_cast<std::uint64_t>(k) * 0x9e3779b97f4a7c15ull;
    for (auto& x : v) {
        s ^= s >> 12;
        s ^= s << 25;
        s ^= s >> 27;
        x = static_cast<std::int64_t>((s * 0x2545f4914f6cdd1dull >> 40) % 17) - 8;
    }
    return v;
}

}  // namespace

bool certified_coprime_homogeneous(const std::vector<MultiPoly>& ps) {
    if (ps.size() < 2) return false;
    int n = ps[0].nvars();
    if (n < 2) return false;
    for (const auto& f : ps) {
        if (f.is_zero() || f.nvars() != n) return false;
        if (!f.homogeneous_degree()) return false;
        if (!f.integer_coeffs()) return false;
        if (f.is_constant()) return true;  // a unit in the family
    }
    std::size_t ref = 0;
    for (std::size_t i = 1; i < ps.size(); ++i)
        if (ps[i].term_count() < ps[ref].term_count()) ref = i;

    for (int attempt = 0; attempt < 6; ++attempt) {
        std::uint64_t p = kPrimes[attempt % 3];
        // Base point with ps[ref](P) != 0, exactly.
        std::vector<std::int64_t> P;
        bool found = false;
        for (int k = attempt * 8; k < attempt * 8 + 24 && !found; ++k) {
            P = candidate_vector(n, k);
            std::vector<Int> pz(P.begin(), P.end());
            if (ps[ref].eval_int(pz) != 0) found = true;
        }
        if (!found) continue;
        std::vector<std::int64_t> w = candidate_vector(n, 1000 + attempt * 7);

        // Restrictions t -> f(P + t*w) mod p, as coefficient vectors.
        std::vector<std::vector<std::uint64_t>> phi(ps.size());
        std::vector<int> full_deg(ps.size());
        for (std::size_t i = 0; i < ps.size(); ++i) {
            int D = *ps[i].total_degree();
            full_deg[i] = D;
            std::vector<std::uint64_t> vals(static_cast<std::size_t>(D) + 1);
            std::vector<std::int64_t> pt(static_cast<std::size_t>(n));
            for (int t = 0; t <= D; ++t) {
                for (int j = 0; j < n; ++j)
                    pt[static_cast<std::size_t>(j)] =
                        P[static_cast<std::size_t>(j)] +
                        static_cast<std::int64_t>(t) * w[static_cast<std::size_t>(j)];
                vals[static_cast<std::size_t>(t)] = eval_mod(ps[i], pt, p);
            }
            phi[i] = interpolate_mod(vals, p);
            if (phi[i].size() == 1 && phi[i][0] == 0) {
                phi[i].clear();  // vanished mod p; unusable
            }
        }
        for (std::size_t a = 0; a < ps.size(); ++a) {
            if (phi[a].empty()) continue;
            for (std::size_t b = a + 1; b < ps.size(); ++b) {
                if (phi[b].empty()) continue;
                int ta = static_cast<int>(phi[a].size()) - 1;
                int tb = static_cast<int>(phi[b].size()) - 1;
                bool shared_s = (ta < full_deg[a]) && (tb < full_deg[b]);
                if (shared_s) continue;
                if (gcd_degree_mod(phi[a], phi[b], p) == 0) return true;
            }
        }
    }
    return false;
}

// ---------------------------------------------------------------------------
// Subresultant PRS.
// ---------------------------------------------------------------------------

namespace {

MultiPoly one_poly(int nvars) { return MultiPoly::constant(nvars, Rat(1)); }

int last_active_var(const MultiPoly& a, const MultiPoly& b) {
    for (int v = a.nvars() - 1; v >= 0; --v)
        if (a.degree_in(v) > 0 || b.degree_in(v) > 0) return v;
    return -1;
}

MultiPoly gcd_rec(const MultiPoly& a, const MultiPoly& b);

MultiPoly gcd_list(std::vector<MultiPoly> ps) {
    std::erase_if(ps, [](const MultiPoly& p) { return p.is_zero(); });
    if (ps.empty()) throw std::invalid_argument("gcd of all-zero family");
    std::sort(ps.begin(), ps.end(), [](const MultiPoly& x, const MultiPoly& y) {
        return x.term_count() < y.term_count();
    });
    MultiPoly g = normalize_primitive(ps[0]);
    for (std::size_t i = 1; i < ps.size() && !g.is_constant(); ++i)
        g = gcd_rec(g, normalize_primitive(ps[i]));
    return g;
}

struct VarView {
    int var;
    std::vector<MultiPoly> c;  // coefficients by var-degree, var-free
    int deg() const { return static_cast<int>(c.size()) - 1; }
    const MultiPoly& lc() const { return c.back(); }
    void trim() {
        while (!c.empty() && c.back().is_zero()) c.pop_back();
    }
    bool zero() const { return c.empty(); }
    MultiPoly assemble(int nvars) const { return MultiPoly::from_coefficients_in(var, c, nvars); }
};

VarView view_in(const MultiPoly& p, int var) {
    VarView v{var, p.coefficients_in(var)};
    v.trim();
    return v;
}

VarView scale_view(const VarView& a, const MultiPoly& s) {
    VarView r{a.var, {}};
    r.c.reserve(a.c.size());
    for (const auto& q : a.c) r.c.push_back(q * s);
    return r;
}

VarView divide_view(const VarView& a, const MultiPoly& s) {
    VarView r{a.var, {}};
    r.c.reserve(a.c.size());
    for (const auto& q : a.c) {
        auto quo = divide_exact(q, s);
        if (!quo) throw std::logic_error("subresultant scale division failed");
        r.c.push_back(std::move(*quo));
    }
    return r;
}

// Pseudo-remainder of a by b in their main variable: lc(b)^(da-db+1) * a mod b.
VarView pseudo_rem(const VarView& a, const VarView& b) {
    VarView r = a;
    const MultiPoly& d = b.lc();
    int db = b.deg();
    int steps_needed = a.deg() - db + 1;
    int steps = 0;
    while (!r.zero() && r.deg() >= db) {
        const MultiPoly lead = r.lc();
        int shift = r.deg() - db;
        // r = d*r - lead * x^shift * b
        for (auto& q : r.c) q = q * d;
        for (int j = 0; j <= db; ++j) {
            std::size_t k = static_cast<std::size_t>(j + shift);
            r.c[k] = r.c[k] - b.c[static_cast<std::size_t>(j)] * lead;
        }
        r.trim();
        ++steps;
        if (!r.zero() && r.deg() >= db + shift)
            throw std::logic_error("pseudo-remainder failed to reduce degree");
    }
    // Match the standard lc(b)^(delta+1) scaling.
    for (; steps < steps_needed; ++steps)
        for (auto& q : r.c) q = q * d;
    return r;
}

MultiPoly content_of_view(const VarView& v, int nvars) {
    std::vector<MultiPoly> cs = v.c;
    (void)nvars;
    return gcd_list(std::move(cs));
}

// gcd of nonzero integer-primitive polynomials, up to sign/scale.
MultiPoly gcd_rec(const MultiPoly& a, const MultiPoly& b) {
    int nvars = a.nvars();
    if (a.is_constant() || b.is_constant()) return one_poly(nvars);

    int var = last_active_var(a, b);
    if (var < 0) return one_poly(nvars);

    VarView A = view_in(a, var);
    VarView B = view_in(b, var);
    if (A.deg() == 0) {
        // a does not involve var: gcd(a, content_var(b))
        return gcd_rec(a, normalize_primitive(content_of_view(B, nvars)));
    }
    if (B.deg() == 0) return gcd_rec(normalize_primitive(content_of_view(A, nvars)), b);

    MultiPoly contA = normalize_primitive(content_of_view(A, nvars));
    MultiPoly contB = normalize_primitive(content_of_view(B, nvars));
    MultiPoly cont = contA.is_constant() || contB.is_constant() ? one_poly(nvars)
                                                                : gcd_rec(contA, contB);
    VarView PA = contA.is_constant() ? A : divide_view(A, contA);
    VarView PB = contB.is_constant() ? B : divide_view(B, contB);
    if (PA.deg() < PB.deg()) std::swap(PA, PB);

    MultiPoly g = one_poly(nvars);
    MultiPoly h = one_poly(nvars);
    while (true) {
        int delta = PA.deg() - PB.deg();
        VarView R = pseudo_rem(PA, PB);
        if (R.zero()) {
            MultiPoly ppB =
                normalize_primitive(*divide_exact(PB.assemble(nvars), content_of_view(PB, nvars)));
            return normalize_primitive(cont * ppB);
        }
        if (R.deg() == 0) return cont;  // coprime primitive parts
        // B_next = R / (g * h^delta), exact in the coefficient ring.
        MultiPoly scale = g;
        for (int i = 0; i < delta; ++i) scale = scale * h;
        PA = PB;
        PB = divide_view(R, scale);
        g = PA.lc();
        if (delta >= 1) {
            MultiPoly gh = g;
            for (int i = 1; i < delta; ++i) gh = gh * g;
            if (delta == 1) {
                h = gh;
            } else {
                auto q = divide_exact(gh, [&] {
                    MultiPoly hh = h;
                    for (int i = 2; i < delta; ++i) hh = hh * h;
                    return hh;
                }());
                if (!q) throw std::logic_error("subresultant h-update failed");
                h = *q;
            }
        }
    }
}

}  // namespace

MultiPoly poly_gcd(const MultiPoly& p, const MultiPoly& q) {
    if (p.nvars() != q.nvars()) throw std::invalid_argument("variable-count mismatch");
    if (p.is_zero() && q.is_zero()) throw std::invalid_argument("gcd(0, 0) undefined");
    if (p.is_zero()) return normalize_primitive(q);
    if (q.is_zero()) return normalize_primitive(p);
    return poly_gcd_many({p, q});
}

MultiPoly poly_gcd_many(const std::vector<MultiPoly>& ps_in) {
    std::vector<MultiPoly> ps;
    for (const auto& p : ps_in)
        if (!p.is_zero()) ps.push_back(normalize_primitive(p));
    if (ps.empty()) throw std::invalid_argument("gcd of all-zero family");
    int nvars = ps[0].nvars();
    for (const auto& p : ps)
        if (p.nvars() != nvars) throw std::invalid_argument("variable-count mismatch");
    if (ps.size() == 1) return ps[0];

    // Common monomial factor first.
    MultiPoly::Exp shared(static_cast<std::size_t>(nvars),
                          std::numeric_limits<std::int32_t>::max());
    for (const auto& p : ps)
        for (std::size_t i = 0; i < shared.size(); ++i) {
            std::int32_t m = std::numeric_limits<std::int32_t>::max();
            for (const auto& t : p.terms()) m = std::min(m, t.exps[i]);
            shared[i] = std::min(shared[i], m);
        }
    bool any_monomial = false;
    for (auto e : shared) any_monomial |= (e > 0);
    if (any_monomial) {
        MultiPoly mono = MultiPoly::monomial(nvars, shared, Rat(1));
        for (auto& p : ps) p = *divide_exact(p, mono);
    }

    MultiPoly g(nvars);
    bool any_constant = false;
    for (const auto& p : ps) any_constant |= p.is_constant();
    bool all_homog = true;
    for (const auto& p : ps) all_homog &= p.homogeneous_degree().has_value();

    if (any_constant || (all_homog && certified_coprime_homogeneous(ps))) {
        g = one_poly(nvars);
    } else {
        g = gcd_list(ps);
    }
    if (any_monomial) g = g * MultiPoly::monomial(nvars, shared, Rat(1));
    return normalize_primitive(g);
}

}  // namespace adlab
