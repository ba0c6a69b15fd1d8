#include "adlab/multipoly.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <sstream>
#include <unordered_map>

namespace adlab {

namespace {

int exp_total(const MultiPoly::Exp& e) {
    long t = 0;
    for (auto x : e) t += x;
    return static_cast<int>(t);
}

// grlex, descending order comparator for canonical term storage.
struct TermGreater {
    bool operator()(const MultiPoly::Term& a, const MultiPoly::Term& b) const {
        return MultiPoly::exp_less(b.exps, a.exps);
    }
};

}  // namespace

bool MultiPoly::exp_less(const Exp& a, const Exp& b) {
    int ta = exp_total(a), tb = exp_total(b);
    if (ta != tb) return ta < tb;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i];
    return false;
}

MultiPoly::MultiPoly(int nvars) : nvars_(nvars) {
    if (nvars < 0) throw std::invalid_argument("negative variable count");
}

MultiPoly MultiPoly::constant(int nvars, const Rat& c) {
    MultiPoly p(nvars);
    if (c != 0) p.terms_.push_back(Term{Exp(static_cast<std::size_t>(nvars), 0), c});
    return p;
}

MultiPoly MultiPoly::variable(int nvars, int index) {
    if (index < 0 || index >= nvars) throw std::invalid_argument("variable index out of range");
    MultiPoly p(nvars);
    Exp e(static_cast<std::size_t>(nvars), 0);
    e[static_cast<std::size_t>(index)] = 1;
    p.terms_.push_back(Term{std::move(e), Rat(1)});
    return p;
}

MultiPoly MultiPoly::monomial(int nvars, Exp exps, const Rat& c) {
    if (static_cast<int>(exps.size()) != nvars)
        throw std::invalid_argument("exponent vector length mismatch");
    for (auto x : exps)
        if (x < 0) throw std::invalid_argument("negative exponent");
    MultiPoly p(nvars);
    if (c != 0) p.terms_.push_back(Term{std::move(exps), c});
    return p;
}

MultiPoly MultiPoly::from_terms(int nvars, std::vector<Term> terms) {
    for (const auto& t : terms) {
        if (static_cast<int>(t.exps.size()) != nvars)
            throw std::invalid_argument("exponent vector length mismatch");
        for (auto x : t.exps)
            if (x < 0) throw std::invalid_argument("negative exponent");
    }
    std::sort(terms.begin(), terms.end(), TermGreater{});
    std::vector<Term> merged;
    merged.reserve(terms.size());
    for (auto& t : terms) {
        if (!merged.empty() && merged.back().exps == t.exps)
            merged.back().coeff += t.coeff;
        else
            merged.push_back(std::move(t));
    }
    std::erase_if(merged, [](const Term& t) { return t.coeff == 0; });
    MultiPoly p(nvars);
    p.terms_ = std::move(merged);
    return p;
}

bool MultiPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && exp_total(terms_[0].exps) == 0);
}

std::optional<int> MultiPoly::total_degree() const {
    if (terms_.empty()) return std::nullopt;
    return exp_total(terms_.front().exps);  // grlex-descending: first term is maximal
}

int MultiPoly::degree_in(int var) const {
    if (var < 0 || var >= nvars_) throw std::invalid_argument("variable index out of range");
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.exps[var]));
    return d;
}

std::optional<int> MultiPoly::homogeneous_degree() const {
    if (terms_.empty()) return std::nullopt;
    int d = exp_total(terms_.front().exps);
    for (const auto& t : terms_)
        if (exp_total(t.exps) != d) return std::nullopt;
    return d;
}

const MultiPoly::Term& MultiPoly::leading_term() const {
    if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
    return terms_.front();
}

bool MultiPoly::integer_coeffs() const {
    for (const auto& t : terms_)
        if (t.coeff.get_den() != 1) return false;
    return true;
}

bool MultiPoly::operator==(const MultiPoly& o) const {
    return nvars_ == o.nvars_ && terms_ == o.terms_;
}

void MultiPoly::assert_same_shape(const MultiPoly& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("variable-count mismatch");
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(*this);
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    assert_same_shape(o);
    std::vector<Term> out;
    out.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        if (terms_[i].exps == o.terms_[j].exps) {
            Rat c = terms_[i].coeff + o.terms_[j].coeff;
            if (c != 0) out.push_back(Term{terms_[i].exps, std::move(c)});
            ++i, ++j;
        } else if (exp_less(o.terms_[j].exps, terms_[i].exps)) {
            out.push_back(terms_[i++]);
        } else {
            out.push_back(o.terms_[j++]);
        }
    }
    while (i < terms_.size()) out.push_back(terms_[i++]);
    while (j < o.terms_.size()) out.push_back(o.terms_[j++]);
    MultiPoly r(nvars_);
    r.terms_ = std::move(out);
    return r;
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

MultiPoly MultiPoly::scaled(const Rat& s) const {
    if (s == 0) return MultiPoly(nvars_);
    MultiPoly r(*this);
    for (auto& t : r.terms_) t.coeff *= s;
    return r;
}

// ---------------------------------------------------------------------------
// Multiplication.
//
// Small products use hashed accumulation on mixed-radix packed exponents.
// Large integer products are packed into single GMP integers (Kronecker
// substitution) so the product runs through GMP's subquadratic
// multiplication, then unpacked with signed-digit reconstruction.
// ---------------------------------------------------------------------------

namespace {

struct RadixPlan {
    std::vector<std::uint64_t> radix;   // per variable: dA + dB + 1
    std::vector<std::uint64_t> stride;  // mixed-radix strides
    std::uint64_t slots = 1;
    bool key64 = false;  // packed index fits in 64 bits

    static RadixPlan make(const MultiPoly& a, const MultiPoly& b) {
        RadixPlan p;
        int n = a.nvars();
        p.radix.resize(static_cast<std::size_t>(n));
        p.stride.resize(static_cast<std::size_t>(n));
        bool fits = true;
        unsigned __int128 slots = 1;
        for (int i = 0; i < n; ++i) {
            long da = std::max(0, a.degree_in(i));
            long db = std::max(0, b.degree_in(i));
            long r = da + db + 1;
            if (r > std::numeric_limits<std::int32_t>::max())
                throw std::overflow_error("exponent overflow in product");
            p.radix[static_cast<std::size_t>(i)] = static_cast<std::uint64_t>(r);
            slots *= static_cast<unsigned>(r);
            if (slots > std::numeric_limits<std::uint64_t>::max()) fits = false;
        }
        if (fits) {
            p.slots = static_cast<std::uint64_t>(slots);
            std::uint64_t s = 1;
            for (int i = n - 1; i >= 0; --i) {
                p.stride[static_cast<std::size_t>(i)] = s;
                s *= p.radix[static_cast<std::size_t>(i)];
            }
            p.key64 = true;
        }
        return p;
    }

    std::uint64_t encode(const MultiPoly::Exp& e) const {
        std::uint64_t k = 0;
        for (std::size_t i = 0; i < e.size(); ++i)
            k += static_cast<std::uint64_t>(e[i]) * stride[i];
        return k;
    }

    MultiPoly::Exp decode(std::uint64_t k) const {
        MultiPoly::Exp e(radix.size());
        for (std::size_t i = 0; i < radix.size(); ++i) {
            e[i] = static_cast<std::int32_t>(k / stride[i]);
            k %= stride[i];
        }
        return e;
    }
};

std::size_t max_coeff_bits(const MultiPoly& p) {
    std::size_t b = 1;
    for (const auto& t : p.terms()) b = std::max(b, bit_length(t.coeff.get_num()));
    return b;
}

void check_cap(std::size_t size, std::size_t cap) {
    if (cap > 0 && size > cap)
        throw ResourceLimitError("term count " + std::to_string(size) + " exceeds cap " +
                                 std::to_string(cap));
}

// Writes |value| (nonzero) at the given bit offset of buf; slots never
// overlap so plain OR suffices.
void write_bits(std::vector<std::uint64_t>& buf, std::uint64_t bitpos, const Int& value,
                std::vector<std::uint64_t>& scratch) {
    std::size_t tmp_words = (mpz_sizeinbase(value.get_mpz_t(), 2) + 63) / 64;
    if (scratch.size() < tmp_words) scratch.resize(tmp_words);
    std::size_t count = 0;
    mpz_export(scratch.data(), &count, -1, 8, 0, 0, value.get_mpz_t());
    std::size_t word = bitpos >> 6;
    unsigned shift = static_cast<unsigned>(bitpos & 63);
    for (std::size_t j = 0; j < count; ++j) {
        buf[word + j] |= scratch[j] << shift;
        if (shift) buf[word + j + 1] |= scratch[j] >> (64 - shift);
    }
}

Int pack_poly(const MultiPoly& p, const RadixPlan& plan, std::size_t slot_bits) {
    std::size_t words = static_cast<std::size_t>((plan.slots * slot_bits + 63) / 64) + 2;
    std::vector<std::uint64_t> pos(words, 0), neg(words, 0), scratch;
    Int tmp;
    for (const auto& t : p.terms()) {
        std::uint64_t bitpos = plan.encode(t.exps) * slot_bits;
        const Int& num = t.coeff.get_num();
        if (num > 0) {
            write_bits(pos, bitpos, num, scratch);
        } else {
            tmp = -num;
            write_bits(neg, bitpos, tmp, scratch);
        }
    }
    Int P, N;
    mpz_import(P.get_mpz_t(), words, -1, 8, 0, 0, pos.data());
    mpz_import(N.get_mpz_t(), words, -1, 8, 0, 0, neg.data());
    return P - N;
}

std::vector<MultiPoly::Term> unpack_product(const Int& prod, const RadixPlan& plan,
                                            std::size_t slot_bits, std::size_t cap) {
    std::vector<MultiPoly::Term> out;
    if (prod == 0) return out;
    int sign = mpz_sgn(prod.get_mpz_t());
    Int absprod = sign < 0 ? Int(-prod) : prod;
    std::size_t words = (mpz_sizeinbase(absprod.get_mpz_t(), 2) + 63) / 64;
    std::vector<std::uint64_t> buf(words + 4, 0);
    std::size_t count = 0;
    mpz_export(buf.data(), &count, -1, 8, 0, 0, absprod.get_mpz_t());

    Int digit, value;
    Int half = Int(1) << (slot_bits - 1);
    Int full = Int(1) << slot_bits;
    int carry = 0;
    std::size_t span = slot_bits / 64 + 2;
    for (std::uint64_t idx = 0; idx < plan.slots; ++idx) {
        std::uint64_t bitpos = idx * slot_bits;
        std::size_t word = bitpos >> 6;
        unsigned shift = static_cast<unsigned>(bitpos & 63);
        if (word >= buf.size()) {
            if (carry == 0) break;
            digit = 0;
        } else {
            std::size_t take = std::min(span, buf.size() - word);
            mpz_import(digit.get_mpz_t(), take, -1, 8, 0, 0, buf.data() + word);
            mpz_tdiv_q_2exp(digit.get_mpz_t(), digit.get_mpz_t(), shift);
            mpz_fdiv_r_2exp(digit.get_mpz_t(), digit.get_mpz_t(), slot_bits);
        }
        if (carry) digit += 1;
        if (digit >= half) {
            value = digit - full;
            carry = 1;
        } else {
            value = digit;
            carry = 0;
        }
        if (value != 0) {
            if (sign < 0) value = -value;
            out.push_back(MultiPoly::Term{plan.decode(idx), Rat(value)});
            check_cap(out.size(), cap);
        }
    }
    if (carry != 0) throw std::logic_error("Kronecker unpack: dangling carry");
    return out;
}

struct KeyHash {
    std::size_t operator()(std::uint64_t x) const {
        x += 0x9e3779b97f4a7c15ull;
        x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
        x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
        return static_cast<std::size_t>(x ^ (x >> 31));
    }
};

// Hashed sparse product; used when the operand sizes are modest.
std::vector<MultiPoly::Term> hash_product(const MultiPoly& a, const MultiPoly& b,
                                          const RadixPlan& plan, std::size_t cap) {
    std::unordered_map<std::uint64_t, Rat, KeyHash> acc;
    acc.reserve(a.term_count() + b.term_count());
    const auto& big = a.term_count() >= b.term_count() ? a : b;
    const auto& small = a.term_count() >= b.term_count() ? b : a;
    std::vector<std::uint64_t> small_keys;
    small_keys.reserve(small.term_count());
    for (const auto& t : small.terms()) small_keys.push_back(plan.encode(t.exps));
    Rat prod;
    std::size_t pulse = 0;
    for (const auto& tb : big.terms()) {
        std::uint64_t kb = plan.encode(tb.exps);
        for (std::size_t i = 0; i < small_keys.size(); ++i) {
            prod = tb.coeff * small.terms()[i].coeff;
            auto [it, fresh] = acc.emplace(kb + small_keys[i], prod);
            if (!fresh) it->second += prod;
            if (cap > 0 && (++pulse & 0xFFFF) == 0) check_cap(acc.size(), cap * 2);
        }
    }
    std::vector<MultiPoly::Term> out;
    out.reserve(acc.size());
    for (auto& [k, c] : acc)
        if (c != 0) out.push_back(MultiPoly::Term{plan.decode(k), std::move(c)});
    check_cap(out.size(), cap);
    return out;
}

// Fallback for exponent spaces too large to pack into 64 bits.
std::vector<MultiPoly::Term> map_product(const MultiPoly& a, const MultiPoly& b,
                                         std::size_t cap) {
    std::map<MultiPoly::Exp, Rat> acc;
    for (const auto& ta : a.terms()) {
        for (const auto& tb : b.terms()) {
            MultiPoly::Exp e(ta.exps.size());
            for (std::size_t i = 0; i < e.size(); ++i) {
                std::int64_t s = static_cast<std::int64_t>(ta.exps[i]) + tb.exps[i];
                if (s > std::numeric_limits<std::int32_t>::max())
                    throw std::overflow_error("exponent overflow in product");
                e[i] = static_cast<std::int32_t>(s);
            }
            acc[e] += ta.coeff * tb.coeff;
        }
    }
    std::vector<MultiPoly::Term> out;
    for (auto& [e, c] : acc)
        if (c != 0) out.push_back(MultiPoly::Term{e, std::move(c)});
    check_cap(out.size(), cap);
    return out;
}

constexpr std::uint64_t kPackedBitBudget = 6'000'000'000ull;  // ~750 MB per packed integer

}  // namespace

double MultiPoly::mul_pack_threshold = 4e6;

MultiPoly MultiPoly::mul(const MultiPoly& a, const MultiPoly& b, std::size_t term_cap) {
    a.assert_same_shape(b);
    MultiPoly r(a.nvars_);
    if (a.is_zero() || b.is_zero()) return r;

    RadixPlan plan = RadixPlan::make(a, b);
    if (!plan.key64) {
        r.terms_ = map_product(a, b, term_cap);
        std::sort(r.terms_.begin(), r.terms_.end(), TermGreater{});
        return r;
    }

    double work = static_cast<double>(a.term_count()) * static_cast<double>(b.term_count());
    bool kron = work > mul_pack_threshold;
    Rat denscale(1);
    if (kron) {
        // The packed path multiplies integer polynomials; clear denominators.
        Int da(1), db(1);
        for (const auto& t : a.terms_) da = int_lcm(da, t.coeff.get_den());
        for (const auto& t : b.terms_) db = int_lcm(db, t.coeff.get_den());
        const MultiPoly& ia = da == 1 ? a : a.scaled(Rat(da));
        const MultiPoly& ib = db == 1 ? b : b.scaled(Rat(db));
        std::size_t slot_bits = max_coeff_bits(ia) + max_coeff_bits(ib) +
                                64 - static_cast<std::size_t>(__builtin_clzll(
                                         std::min(ia.term_count(), ib.term_count()))) +
                                2;
        if (plan.slots * slot_bits <= kPackedBitBudget) {
            Int pa = pack_poly(ia, plan, slot_bits);
            Int pb = pack_poly(ib, plan, slot_bits);
            Int prod = pa * pb;
            r.terms_ = unpack_product(prod, plan, slot_bits, term_cap);
            std::sort(r.terms_.begin(), r.terms_.end(), TermGreater{});
            if (da != 1 || db != 1) {
                denscale = Rat(1) / Rat(da * db);
                for (auto& t : r.terms_) t.coeff *= denscale;
            }
            return r;
        }
    }
    r.terms_ = hash_product(a, b, plan, term_cap);
    std::sort(r.terms_.begin(), r.terms_.end(), TermGreater{});
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const { return mul(*this, o, 0); }

Rat MultiPoly::eval(const std::vector<Rat>& point) const {
    if (static_cast<int>(point.size()) != nvars_)
        throw std::invalid_argument("point length mismatch");
    std::vector<std::vector<Rat>> pow(static_cast<std::size_t>(nvars_));
    for (int i = 0; i < nvars_; ++i) {
        int d = degree_in(i);
        auto& tab = pow[static_cast<std::size_t>(i)];
        tab.reserve(static_cast<std::size_t>(d + 1));
        tab.emplace_back(1);
        for (int k = 1; k <= d; ++k) tab.push_back(tab.back() * point[static_cast<std::size_t>(i)]);
    }
    Rat acc(0);
    for (const auto& t : terms_) {
        Rat v = t.coeff;
        for (int i = 0; i < nvars_; ++i)
            if (t.exps[static_cast<std::size_t>(i)] > 0)
                v *= pow[static_cast<std::size_t>(i)][static_cast<std::size_t>(
                    t.exps[static_cast<std::size_t>(i)])];
        acc += v;
    }
    return acc;
}

Int MultiPoly::eval_int(const std::vector<Int>& point) const {
    if (static_cast<int>(point.size()) != nvars_)
        throw std::invalid_argument("point length mismatch");
    std::vector<std::vector<Int>> pow(static_cast<std::size_t>(nvars_));
    for (int i = 0; i < nvars_; ++i) {
        int d = degree_in(i);
        auto& tab = pow[static_cast<std::size_t>(i)];
        tab.reserve(static_cast<std::size_t>(d + 1));
        tab.emplace_back(1);
        for (int k = 1; k <= d; ++k) tab.push_back(tab.back() * point[static_cast<std::size_t>(i)]);
    }
    Int acc(0), v;
    for (const auto& t : terms_) {
        if (t.coeff.get_den() != 1)
            throw std::invalid_argument("eval_int requires integer coefficients");
        v = t.coeff.get_num();
        for (int i = 0; i < nvars_; ++i)
            if (t.exps[static_cast<std::size_t>(i)] > 0)
                v *= pow[static_cast<std::size_t>(i)][static_cast<std::size_t>(
                    t.exps[static_cast<std::size_t>(i)])];
        acc += v;
    }
    return acc;
}

MultiPoly MultiPoly::substitute(const std::vector<MultiPoly>& args, std::size_t term_cap) const {
    if (static_cast<int>(args.size()) != nvars_)
        throw std::invalid_argument("substitution arity mismatch");
    int out_vars = args.empty() ? 0 : args[0].nvars();
    for (const auto& a : args)
        if (a.nvars() != out_vars) throw std::invalid_argument("substitution arity mismatch");

    std::vector<std::vector<MultiPoly>> pow(static_cast<std::size_t>(nvars_));
    for (int i = 0; i < nvars_; ++i) {
        int d = degree_in(i);
        auto& tab = pow[static_cast<std::size_t>(i)];
        tab.push_back(MultiPoly::constant(out_vars, Rat(1)));
        for (int k = 1; k <= d; ++k)
            tab.push_back(mul(tab.back(), args[static_cast<std::size_t>(i)], term_cap));
    }
    MultiPoly acc(out_vars);
    for (const auto& t : terms_) {
        MultiPoly v = MultiPoly::constant(out_vars, t.coeff);
        for (int i = 0; i < nvars_; ++i) {
            int e = t.exps[static_cast<std::size_t>(i)];
            if (e > 0) v = mul(v, pow[static_cast<std::size_t>(i)][static_cast<std::size_t>(e)],
                               term_cap);
        }
        acc = acc + v;
        check_cap(acc.term_count(), term_cap);
    }
    return acc;
}

std::vector<MultiPoly> MultiPoly::coefficients_in(int var) const {
    if (var < 0 || var >= nvars_) throw std::invalid_argument("variable index out of range");
    int d = degree_in(var);
    std::vector<MultiPoly> out(static_cast<std::size_t>(std::max(0, d) + 1), MultiPoly(nvars_));
    std::vector<std::vector<Term>> buckets(out.size());
    for (const auto& t : terms_) {
        Term u = t;
        int k = u.exps[static_cast<std::size_t>(var)];
        u.exps[static_cast<std::size_t>(var)] = 0;
        buckets[static_cast<std::size_t>(k)].push_back(std::move(u));
    }
    for (std::size_t k = 0; k < buckets.size(); ++k)
        out[k] = from_terms(nvars_, std::move(buckets[k]));
    return out;
}

MultiPoly MultiPoly::from_coefficients_in(int var, const std::vector<MultiPoly>& coeffs,
                                          int nvars) {
    std::vector<Term> terms;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        for (const auto& t : coeffs[k].terms()) {
            Term u = t;
            if (u.exps[static_cast<std::size_t>(var)] != 0)
                throw std::invalid_argument("coefficient uses the carrier variable");
            u.exps[static_cast<std::size_t>(var)] = static_cast<std::int32_t>(k);
            terms.push_back(std::move(u));
        }
    }
    return from_terms(nvars, std::move(terms));
}

std::string MultiPoly::to_string(const std::vector<std::string>& names) const {
    if (static_cast<int>(names.size()) != nvars_)
        throw std::invalid_argument("variable name list length mismatch");
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        Rat c = t.coeff;
        if (!first) {
            os << (c < 0 ? " - " : " + ");
            if (c < 0) c = -c;
        } else if (c < 0) {
            os << "-";
            c = -c;
        }
        first = false;
        bool has_vars = exp_total(t.exps) > 0;
        bool unit = (c == 1) && has_vars;
        if (!unit) os << c.get_str();
        bool lead = !unit;
        for (int i = 0; i < nvars_; ++i) {
            int e = t.exps[static_cast<std::size_t>(i)];
            if (e == 0) continue;
            if (lead) os << "*";
            lead = true;
            os << names[static_cast<std::size_t>(i)];
            if (e > 1) os << "^" << e;
        }
    }
    return os.str();
}

}  // namespace adlab
