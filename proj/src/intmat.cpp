#include "adlab/intmat.hpp"

#include <algorithm>

namespace adlab {

IntMat IntMat::identity(int n) {
    IntMat m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

IntMat IntMat::from_rows(const std::vector<std::vector<long>>& rows) {
    int n = static_cast<int>(rows.size());
    IntMat m(n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != n)
            throw std::invalid_argument("matrix rows must be square");
        for (int j = 0; j < n; ++j) m.at(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    return m;
}

IntMat IntMat::operator*(const IntMat& o) const {
    if (n_ != o.n_) throw std::invalid_argument("matrix size mismatch");
    IntMat r(n_);
    Int acc;
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) {
            acc = 0;
            for (int k = 0; k < n_; ++k) acc += at(i, k) * o.at(k, j);
            r.at(i, j) = acc;
        }
    return r;
}

IntMat IntMat::pow(unsigned long e) const {
    IntMat acc = identity(n_);
    IntMat base = *this;
    while (e > 0) {
        if (e & 1) acc = acc * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return acc;
}

Int IntMat::det() const {
    // Bareiss: exact divisions, row pivoting with sign tracking.
    std::vector<Int> w(a_);
    auto el = [&](int i, int j) -> Int& { return w[static_cast<std::size_t>(i) * n_ + j]; };
    Int prev(1);
    int sign = 1;
    for (int k = 0; k + 1 < n_; ++k) {
        if (el(k, k) == 0) {
            int piv = -1;
            for (int i = k + 1; i < n_; ++i)
                if (el(i, k) != 0) {
                    piv = i;
                    break;
                }
            if (piv < 0) return Int(0);
            for (int j = 0; j < n_; ++j) std::swap(el(k, j), el(piv, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n_; ++i)
            for (int j = k + 1; j < n_; ++j) {
                Int num = el(i, j) * el(k, k) - el(i, k) * el(k, j);
                mpz_divexact(num.get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
                el(i, j) = num;
            }
        prev = el(k, k);
    }
    Int d = el(n_ - 1, n_ - 1);
    return sign > 0 ? d : Int(-d);
}

Int IntMat::trace() const {
    Int t(0);
    for (int i = 0; i < n_; ++i) t += at(i, i);
    return t;
}

namespace {

void subsets_rec(int n, int k, int start, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == k) {
        out.push_back(cur);
        return;
    }
    for (int v = start; v < n; ++v) {
        cur.push_back(v);
        subsets_rec(n, k, v + 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace

IntMat IntMat::exterior_power(int k) const {
    if (k < 1 || k > n_) throw std::invalid_argument("exterior power index out of range");
    std::vector<std::vector<int>> subs;
    std::vector<int> cur;
    subsets_rec(n_, k, 0, cur, subs);
    int m = static_cast<int>(subs.size());
    IntMat r(m);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            IntMat minor(k);
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j)
                    minor.at(i, j) = at(subs[static_cast<std::size_t>(a)][static_cast<std::size_t>(i)],
                                        subs[static_cast<std::size_t>(b)][static_cast<std::size_t>(j)]);
            r.at(a, b) = minor.det();
        }
    return r;
}

UniPoly IntMat::char_poly() const {
    // Interpolate det(xI - M) at x = 0..n; the result is monic with integer
    // coefficients.
    int n = n_;
    std::vector<Rat> xs, ys;
    for (int x = 0; x <= n; ++x) {
        IntMat s(*this);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) s.at(i, j) = (i == j ? Int(x) - at(i, j) : Int(-at(i, j)));
        xs.emplace_back(x);
        ys.emplace_back(s.det());
    }
    // Newton divided differences over Q.
    std::vector<Rat> dd(ys);
    for (std::size_t lvl = 1; lvl < dd.size(); ++lvl)
        for (std::size_t i = dd.size() - 1; i >= lvl; --i) {
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - lvl]);
            if (i == lvl) break;
        }
    UniPoly acc;
    UniPoly basis = UniPoly::constant(Rat(1));
    for (std::size_t kk = 0; kk < dd.size(); ++kk) {
        acc = acc + basis.scaled(dd[kk]);
        if (kk + 1 < dd.size())
            basis = basis * UniPoly(std::vector<Rat>{-xs[kk], Rat(1)});
    }
    if (!acc.integer_coeffs() || acc.degree() != n || acc.lc() != 1)
        throw std::logic_error("characteristic polynomial interpolation failed");
    return acc;
}

}  // namespace adlab
