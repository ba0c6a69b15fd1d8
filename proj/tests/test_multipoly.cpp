#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "adlab/multipoly.hpp"
#include "test_util.hpp"

using namespace adlab;
using testutil::random_poly;

namespace {
MultiPoly var(int n, int i) { return MultiPoly::variable(n, i); }
}

TEST_CASE("construction and degree bookkeeping") {
    MultiPoly z(3);
    CHECK(z.is_zero());
    CHECK(!z.total_degree().has_value());  // minus-infinity marker
    MultiPoly c = MultiPoly::constant(3, Rat(5));
    CHECK(c.total_degree() == 0);
    MultiPoly x0 = var(3, 0);
    CHECK(x0.total_degree() == 1);
    CHECK(x0.degree_in(0) == 1);
    CHECK(x0.degree_in(1) == 0);
    MultiPoly p = x0 * x0 + var(3, 1);
    CHECK(p.total_degree() == 2);
    CHECK(!p.homogeneous_degree().has_value());
    CHECK((x0 * var(3, 1)).homogeneous_degree() == 2);
}

TEST_CASE("difference of squares and annihilator") {
    int n = 2;
    MultiPoly x0 = var(n, 0), x1 = var(n, 1);
    MultiPoly prod = (x0 + x1) * (x0 - x1);
    CHECK(prod == x0 * x0 - x1 * x1);
    CHECK((prod * MultiPoly(n)).is_zero());
}

TEST_CASE("schoolbook expansion oracle: (x1x2-x0^2)(x1x2+x0^2)") {
    int n = 3;
    MultiPoly x0 = var(n, 0), x1 = var(n, 1), x2 = var(n, 2);
    MultiPoly a = x1 * x2 - x0 * x0;
    MultiPoly b = x1 * x2 + x0 * x0;
    // independent expansion: x1^2 x2^2 - x0^4
    MultiPoly expect =
        MultiPoly::monomial(n, {0, 2, 2}, Rat(1)) + MultiPoly::monomial(n, {4, 0, 0}, Rat(-1));
    CHECK(a * b == expect);
}

TEST_CASE("evaluation") {
    int n = 2;
    MultiPoly p = var(n, 0) * var(n, 0) + var(n, 1);  // x0^2 + x1
    CHECK(p.eval({Rat(2), Rat(3)}) == Rat(7));
    MultiPoly q = random_poly(*(new std::mt19937(7)), 2, 6, 4);
    // value at origin = constant term
    Rat at0 = q.eval({Rat(0), Rat(0)});
    Rat cterm(0);
    for (const auto& t : q.terms())
        if (t.exps[0] == 0 && t.exps[1] == 0) cterm = t.coeff;
    CHECK(at0 == cterm);
    // 4-variable quadric at (1,2,3,4): x1x4 - x2x3 -> 4 - 6 = -2
    MultiPoly quad = var(4, 0) * var(4, 3) - var(4, 1) * var(4, 2);
    CHECK(quad.eval({Rat(1), Rat(2), Rat(3), Rat(4)}) == Rat(-2));
    CHECK(quad.eval_int({Int(1), Int(2), Int(3), Int(4)}) == Int(-2));
    CHECK_THROWS_AS(p.eval({Rat(1)}), std::invalid_argument);
}

TEST_CASE("ring axioms on random triples") {
    std::mt19937 rng(123);
    for (int trial = 0; trial < 60; ++trial) {
        MultiPoly p = random_poly(rng, 3, 8, 5);
        MultiPoly q = random_poly(rng, 3, 8, 5);
        MultiPoly r = random_poly(rng, 3, 8, 5);
        CHECK((p + q) * r == p * r + q * r);
        CHECK(p * q == q * p);
    }
}

TEST_CASE("degree is additive for nonzero products") {
    std::mt19937 rng(321);
    for (int trial = 0; trial < 60; ++trial) {
        MultiPoly p = random_poly(rng, 2, 6, 5);
        MultiPoly q = random_poly(rng, 2, 6, 5);
        if (p.is_zero() || q.is_zero()) continue;
        CHECK(*(p * q).total_degree() == *p.total_degree() + *q.total_degree());
    }
}

TEST_CASE("packed multiplication agrees with hashed multiplication") {
    std::mt19937 rng(77);
    double saved = MultiPoly::mul_pack_threshold;
    for (int trial = 0; trial < 40; ++trial) {
        MultiPoly p = random_poly(rng, 3, 20, 7, 1000);
        MultiPoly q = random_poly(rng, 3, 20, 7, 1000);
        MultiPoly::mul_pack_threshold = 1e18;
        MultiPoly hashed = p * q;
        MultiPoly::mul_pack_threshold = 0;  // force packed path
        MultiPoly packed = p * q;
        MultiPoly::mul_pack_threshold = saved;
        CHECK(hashed == packed);
    }
    // rational coefficients go through denominator clearing
    MultiPoly a = MultiPoly::constant(2, Rat(1, 2)) * var(2, 0) + MultiPoly::constant(2, Rat(1, 3));
    MultiPoly b = MultiPoly::constant(2, Rat(3, 5)) * var(2, 1) - MultiPoly::constant(2, Rat(7));
    MultiPoly::mul_pack_threshold = 0;
    MultiPoly packed = a * b;
    MultiPoly::mul_pack_threshold = saved;
    CHECK(packed == MultiPoly::mul(a, b, 0));
    CHECK(packed.eval({Rat(1), Rat(1)}) == a.eval({Rat(1), Rat(1)}) * b.eval({Rat(1), Rat(1)}));
}

TEST_CASE("substitution composes polynomials") {
    int n = 2;
    MultiPoly p = var(n, 0) * var(n, 1) + MultiPoly::constant(n, Rat(1));  // xy + 1
    std::vector<MultiPoly> args = {var(2, 1) + MultiPoly::constant(2, Rat(1)), var(2, 0)};
    MultiPoly s = p.substitute(args);  // (y+1)x + 1
    CHECK(s == var(2, 0) * var(2, 1) + var(2, 0) + MultiPoly::constant(2, Rat(1)));
}

TEST_CASE("term cap aborts oversized products") {
    std::mt19937 rng(99);
    MultiPoly p = random_poly(rng, 3, 30, 6);
    MultiPoly q = random_poly(rng, 3, 30, 6);
    CHECK_THROWS_AS(MultiPoly::mul(p, q, 3), ResourceLimitError);
}

TEST_CASE("variable-count mismatch is rejected") {
    CHECK_THROWS_AS(var(2, 0) * var(3, 0), std::invalid_argument);
}

TEST_CASE("coefficients_in splits and reassembles") {
    int n = 3;
    std::mt19937 rng(5);
    MultiPoly p = random_poly(rng, n, 12, 4);
    for (int v = 0; v < n; ++v) {
        auto cs = p.coefficients_in(v);
        CHECK(MultiPoly::from_coefficients_in(v, cs, n) == p);
    }
}
