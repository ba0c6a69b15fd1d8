#include "adlab/projmap.hpp"

#include <algorithm>
#include <sstream>

#include "adlab/poly_gcd.hpp"
#include "adlab/poly_parse.hpp"

namespace adlab {

ProjPoint::ProjPoint(std::vector<Int> coords) : c_(std::move(coords)) {
    if (c_.size() < 2) throw std::invalid_argument("projective point needs dimension >= 1");
    Int g(0);
    for (const Int& x : c_) g = int_gcd(g, x);
    if (g == 0) throw std::invalid_argument("projective point cannot be all-zero");
    for (Int& x : c_) x /= g;
    for (const Int& x : c_) {
        if (x == 0) continue;
        if (x < 0)
            for (Int& y : c_) y = -y;
        break;
    }
}

std::size_t ProjPoint::max_coord_bits() const {
    std::size_t b = 0;
    for (const Int& x : c_) b = std::max(b, bit_length(x));
    return b;
}

std::string ProjPoint::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i) os << " : ";
        os << c_[i].get_str();
    }
    os << "]";
    return os.str();
}

std::vector<std::string> projective_names(int dim) {
    std::vector<std::string> names;
    for (int i = 0; i <= dim; ++i) names.push_back("x" + std::to_string(i));
    return names;
}

ProjMap ProjMap::from_coords(std::vector<MultiPoly> coords) {
    if (coords.size() < 2) throw std::invalid_argument("map needs at least two coordinates");
    int nv = coords[0].nvars();
    if (nv != static_cast<int>(coords.size()))
        throw std::invalid_argument("coordinate count must equal variable count");
    bool all_zero = true;
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (coords[i].nvars() != nv) throw std::invalid_argument("variable-count mismatch");
        if (coords[i].is_zero()) continue;
        all_zero = false;
        if (!coords[i].homogeneous_degree())
            throw std::invalid_argument("coordinate " + std::to_string(i) +
                                        " is not homogeneous");
    }
    if (all_zero) throw std::invalid_argument("all-zero map");

    MultiPoly g = poly_gcd_many(coords);
    if (!g.is_constant())
        for (auto& c : coords)
            if (!c.is_zero()) c = *divide_exact(c, g);

    std::optional<int> d;
    for (const auto& c : coords) {
        if (c.is_zero()) continue;
        auto hd = c.homogeneous_degree();
        if (d && hd != d)
            throw std::invalid_argument("mixed coordinate degrees after gcd removal");
        d = hd;
    }
    if (*d < 1) throw std::invalid_argument("map degree must be at least 1");

    // Joint scale: integer coefficients, content 1, first nonzero coordinate
    // has positive leading coefficient.
    Int den(1);
    for (const auto& c : coords)
        for (const auto& t : c.terms()) den = int_lcm(den, t.coeff.get_den());
    Int content(0);
    for (const auto& c : coords)
        for (const auto& t : c.terms()) content = int_gcd(content, Rat(t.coeff * Rat(den)).get_num());
    for (const auto& c : coords) {
        if (c.is_zero()) continue;
        if (c.leading_term().coeff < 0) content = -content;
        break;
    }
    Rat scale = Rat(den) / Rat(content);
    ProjMap m;
    m.coords_.reserve(coords.size());
    for (auto& c : coords) m.coords_.push_back(c.scaled(scale));
    m.degree_ = *d;
    return m;
}

ProjMap ProjMap::identity(int dim) {
    std::vector<MultiPoly> cs;
    for (int i = 0; i <= dim; ++i) cs.push_back(MultiPoly::variable(dim + 1, i));
    return from_coords(std::move(cs));
}

std::optional<ProjPoint> ProjMap::eval(const ProjPoint& p) const {
    if (p.dim() != dim()) throw std::invalid_argument("dimension mismatch");
    std::vector<Int> out;
    out.reserve(coords_.size());
    bool all_zero = true;
    for (const auto& c : coords_) {
        out.push_back(c.is_zero() ? Int(0) : c.eval_int(p.coords()));
        if (out.back() != 0) all_zero = false;
    }
    if (all_zero) return std::nullopt;
    return ProjPoint(std::move(out));
}

std::string ProjMap::to_string(const std::vector<std::string>& names) const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (i) os << " : ";
        os << coords_[i].to_string(names);
    }
    os << "]";
    return os.str();
}

ProjMap map_parse(const std::vector<std::string>& coord_texts,
                  const std::vector<std::string>& variables) {
    std::vector<MultiPoly> cs;
    cs.reserve(coord_texts.size());
    for (const auto& s : coord_texts) cs.push_back(poly_parse(s, variables));
    return ProjMap::from_coords(std::move(cs));
}

ProjMap affine_lift(const std::vector<std::string>& exprs,
                    const std::vector<std::string>& affine_variables) {
    int n = static_cast<int>(exprs.size());
    if (n < 1) throw std::invalid_argument("affine map needs at least one coordinate");
    if (affine_variables.size() != exprs.size())
        throw std::invalid_argument("affine variable count must match coordinate count");
    std::vector<MultiPoly> affine;
    int dmax = 1;
    for (const auto& s : exprs) {
        affine.push_back(poly_parse(s, affine_variables));
        if (auto d = affine.back().total_degree()) dmax = std::max(dmax, *d);
    }
    // x0^dmax * p(x1/x0, ..., xN/x0), written directly on exponents.
    std::vector<MultiPoly> cs;
    MultiPoly::Exp e0(static_cast<std::size_t>(n) + 1, 0);
    e0[0] = static_cast<std::int32_t>(dmax);
    cs.push_back(MultiPoly::monomial(n + 1, e0, Rat(1)));
    for (const auto& p : affine) {
        std::vector<MultiPoly::Term> ts;
        for (const auto& t : p.terms()) {
            MultiPoly::Exp e(static_cast<std::size_t>(n) + 1, 0);
            int total = 0;
            for (int i = 0; i < n; ++i) {
                e[static_cast<std::size_t>(i) + 1] = t.exps[static_cast<std::size_t>(i)];
                total += t.exps[static_cast<std::size_t>(i)];
            }
            e[0] = static_cast<std::int32_t>(dmax - total);
            ts.push_back(MultiPoly::Term{std::move(e), t.coeff});
        }
        cs.push_back(MultiPoly::from_terms(n + 1, std::move(ts)));
    }
    return ProjMap::from_coords(std::move(cs));
}

ProjMap compose(const ProjMap& f, const ProjMap& g, std::size_t term_cap) {
    if (f.dim() != g.dim()) throw std::invalid_argument("dimension mismatch");
    std::vector<MultiPoly> cs;
    cs.reserve(f.coords().size());
    for (const auto& c : f.coords()) cs.push_back(c.substitute(g.coords(), term_cap));
    return ProjMap::from_coords(std::move(cs));
}

DegreeSequence degree_sequence(const ProjMap& f, int max_iter, std::size_t term_cap) {
    if (max_iter < 1) throw std::invalid_argument("iterate count must be >= 1");
    DegreeSequence seq;
    seq.degs.push_back(f.degree());
    ProjMap cur = f;
    for (int n = 2; n <= max_iter; ++n) {
        try {
            cur = compose(f, cur, term_cap);
        } catch (const ResourceLimitError&) {
            seq.truncated = true;
            seq.failed_at = n;
            return seq;
        }
        seq.degs.push_back(cur.degree());
    }
    return seq;
}

bool is_invariant_hypersurface(const ProjMap& f, const MultiPoly& Z) {
    if (Z.is_zero()) throw std::invalid_argument("hypersurface polynomial is zero");
    if (!Z.homogeneous_degree()) throw std::invalid_argument("hypersurface must be homogeneous");
    if (Z.nvars() != f.dim() + 1) throw std::invalid_argument("variable-count mismatch");
    MultiPoly pulled = Z.substitute(f.coords());
    if (pulled.is_zero()) return true;
    return divide_exact(pulled, Z).has_value();
}

}  // namespace adlab
