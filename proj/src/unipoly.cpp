#include "adlab/unipoly.hpp"

#include <sstream>

namespace adlab {

UniPoly::UniPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::constant(const Rat& c) {
    if (c == 0) return UniPoly();
    return UniPoly(std::vector<Rat>{c});
}

UniPoly UniPoly::from_ints(const std::vector<long>& coeffs) {
    std::vector<Rat> c;
    c.reserve(coeffs.size());
    for (long v : coeffs) c.emplace_back(v);
    return UniPoly(std::move(c));
}

void UniPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Rat& UniPoly::lc() const {
    if (c_.empty()) throw std::logic_error("lc of zero polynomial");
    return c_.back();
}

const Rat& UniPoly::coeff(int k) const {
    static const Rat zero(0);
    if (k < 0 || k >= static_cast<int>(c_.size())) return zero;
    return c_[static_cast<std::size_t>(k)];
}

Rat UniPoly::eval(const Rat& x) const {
    Rat acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) {
        acc *= x;
        acc += c_[i];
    }
    return acc;
}

UniPoly UniPoly::derivative() const {
    if (c_.size() <= 1) return UniPoly();
    std::vector<Rat> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * Rat(static_cast<long>(k));
    return UniPoly(std::move(d));
}

UniPoly UniPoly::operator-() const {
    std::vector<Rat> r(c_);
    for (auto& x : r) x = -x;
    return UniPoly(std::move(r));
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return UniPoly(std::move(r));
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + (-o); }

UniPoly UniPoly::operator*(const UniPoly& o) const {
    if (is_zero() || o.is_zero()) return UniPoly();
    std::vector<Rat> r(c_.size() + o.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return UniPoly(std::move(r));
}

UniPoly UniPoly::scaled(const Rat& s) const {
    if (s == 0) return UniPoly();
    std::vector<Rat> r(c_);
    for (auto& x : r) x *= s;
    return UniPoly(std::move(r));
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& d) const {
    if (d.is_zero()) throw std::invalid_argument("division by zero polynomial");
    std::vector<Rat> rem(c_);
    int dd = d.degree();
    int dr = static_cast<int>(rem.size()) - 1;
    if (dr < dd) return {UniPoly(), *this};
    std::vector<Rat> quo(static_cast<std::size_t>(dr - dd + 1), Rat(0));
    for (int k = dr; k >= dd; --k) {
        Rat q = rem[static_cast<std::size_t>(k)] / d.lc();
        if (q == 0) continue;
        quo[static_cast<std::size_t>(k - dd)] = q;
        for (int j = 0; j <= dd; ++j)
            rem[static_cast<std::size_t>(k - dd + j)] -= q * d.coeff(j);
    }
    return {UniPoly(std::move(quo)), UniPoly(std::move(rem))};
}

UniPoly UniPoly::gcd(const UniPoly& a, const UniPoly& b) {
    UniPoly f = a, g = b;
    while (!g.is_zero()) {
        UniPoly r = f.divmod(g).second;
        f = std::move(g);
        g = std::move(r);
    }
    if (f.is_zero()) return f;
    return f.scaled(Rat(1) / f.lc());
}

UniPoly UniPoly::squarefree_part() const {
    if (is_zero() || degree() == 0) return *this;
    UniPoly g = gcd(*this, derivative());
    if (g.degree() == 0) return *this;
    return divmod(g).first;
}

bool UniPoly::integer_coeffs() const {
    for (const auto& q : c_)
        if (q.get_den() != 1) return false;
    return true;
}

UniPoly UniPoly::primitive_integer_form() const {
    if (is_zero()) return *this;
    Int den(1);
    for (const auto& q : c_) den = int_lcm(den, q.get_den());
    Int content(0);
    std::vector<Rat> r(c_);
    for (auto& q : r) {
        q *= Rat(den);
        content = int_gcd(content, q.get_num());
    }
    if (mpz_sgn(r.back().get_num().get_mpz_t()) < 0) content = -content;
    for (auto& q : r) q /= Rat(content);
    return UniPoly(std::move(r));
}

std::string UniPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Rat& c = coeff(k);
        if (c == 0) continue;
        Rat a = c;
        if (!first) {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool unit = (a == 1) && k > 0;
        if (!unit) os << a.get_str();
        if (k > 0) {
            if (!unit) os << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

std::vector<UniPoly> sturm_chain(const UniPoly& p) {
    std::vector<UniPoly> chain;
    if (p.is_zero()) return chain;
    chain.push_back(p);
    UniPoly d = p.derivative();
    if (d.is_zero()) return chain;
    chain.push_back(d);
    while (true) {
        const UniPoly& a = chain[chain.size() - 2];
        const UniPoly& b = chain[chain.size() - 1];
        UniPoly r = a.divmod(b).second;
        if (r.is_zero()) break;
        UniPoly next = -r;
        // Rescale by a positive constant to control coefficient growth.
        UniPoly scaled = next.primitive_integer_form();
        if (next.lc() < 0) scaled = -scaled;
        chain.push_back(std::move(scaled));
    }
    return chain;
}

namespace {

int sign_at(const UniPoly& p, const Rat& x) {
    Rat v = p.eval(x);
    return mpz_sgn(v.get_num().get_mpz_t());
}

int sign_at_plus_inf(const UniPoly& p) {
    if (p.is_zero()) return 0;
    return mpz_sgn(p.lc().get_num().get_mpz_t());
}

int variations(const std::vector<int>& signs) {
    int v = 0, prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

int variations_at(const std::vector<UniPoly>& chain, const Rat& x) {
    std::vector<int> s;
    s.reserve(chain.size());
    for (const auto& p : chain) s.push_back(sign_at(p, x));
    return variations(s);
}

int variations_at_plus_inf(const std::vector<UniPoly>& chain) {
    std::vector<int> s;
    s.reserve(chain.size());
    for (const auto& p : chain) s.push_back(sign_at_plus_inf(p));
    return variations(s);
}

}  // namespace

int count_real_roots_in(const std::vector<UniPoly>& chain, const Rat& a, const Rat& b) {
    if (chain.empty()) throw std::invalid_argument("Sturm chain of zero polynomial");
    if (!(a < b)) return 0;
    return variations_at(chain, a) - variations_at(chain, b);
}

int count_real_roots_above(const std::vector<UniPoly>& chain, const Rat& a) {
    if (chain.empty()) throw std::invalid_argument("Sturm chain of zero polynomial");
    return variations_at(chain, a) - variations_at_plus_inf(chain);
}

Rat cauchy_root_bound(const UniPoly& p) {
    if (p.is_zero() || p.degree() == 0) return Rat(1);
    Rat m(0);
    for (int k = 0; k < p.degree(); ++k) {
        Rat a = p.coeff(k) / p.lc();
        if (a < 0) a = -a;
        if (a > m) m = a;
    }
    return m + 1;
}

}  // namespace adlab
