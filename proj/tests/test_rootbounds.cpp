#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "adlab/rootbounds.hpp"
#include "test_util.hpp"

using namespace adlab;

TEST_CASE("disk count on hand-checked cases") {
    // roots 1/2 -> one inside unit disk
    CHECK(*schur_cohn_count_in_disk(UniPoly::from_ints({-1, 2}), Rat(1)) == 1);
    // root 2 -> none inside
    CHECK(*schur_cohn_count_in_disk(UniPoly::from_ints({-2, 1}), Rat(1)) == 0);
    // t^2 - 1/4 style: (2t-1)(2t+1)
    CHECK(*schur_cohn_count_in_disk(UniPoly::from_ints({-1, 0, 4}), Rat(1)) == 2);
    // roots at 0 are inside
    CHECK(*schur_cohn_count_in_disk(UniPoly::from_ints({0, 0, 1}), Rat(1)) == 2);
}

TEST_CASE("self-reciprocal degeneracy is handled by the jittered wrapper") {
    UniPoly p = UniPoly::from_ints({1, -3, 1});  // roots (3±sqrt5)/2
    CHECK(!schur_cohn_count_in_disk(p, Rat(1)).has_value());
    auto c = count_in_disk_near(p, Rat(1), Rat(1, 1000000));
    REQUIRE(c.has_value());
    CHECK(c->count == 1);
}

TEST_CASE("disk counts agree with a numeric root oracle on random polynomials") {
    std::mt19937 rng(20240811);
    std::uniform_int_distribution<int> degd(2, 8), cd(-9, 9);
    int tested = 0;
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<Rat> c;
        int deg = degd(rng);
        for (int k = 0; k < deg; ++k) c.emplace_back(cd(rng));
        c.emplace_back(1);  // monic
        UniPoly p{std::vector<Rat>(c)};
        auto roots = testutil::numeric_roots(p);
        for (Rat rho : {Rat(1), Rat(1, 2), Rat(3, 2), Rat(5)}) {
            double r = rho.get_d();
            // Skip radii too close to a root modulus for the float oracle.
            bool near = false;
            int inside = 0;
            for (auto z : roots) {
                double m = std::abs(z);
                if (std::fabs(m - r) < 1e-6) near = true;
                if (m < r) ++inside;
            }
            if (near) continue;
            auto got = count_in_disk_near(p, rho, Rat(1, 10000000));
            REQUIRE(got.has_value());
            CHECK(got->count == inside);
            ++tested;
        }
    }
    CHECK(tested > 800);
}

TEST_CASE("max root modulus: exact and irrational cases") {
    // t^2 - 2t + 5 has roots 1±2i, modulus sqrt(5).
    auto e = max_root_modulus(UniPoly::from_ints({5, -2, 1}), Rat(1, 1000000000));
    double v = e.to_approx().value;
    CHECK(std::fabs(v - std::sqrt(5.0)) < 1e-8);
    // (t-3)(t+1): spectral radius 3 even though largest real root is 3.
    auto e2 = max_root_modulus(UniPoly::from_ints({-3, -2, 1}), Rat(1, 100000));
    CHECK(e2.lo <= Rat(3));
    CHECK(Rat(3) <= e2.hi + Rat(1, 100000));
    // (t+4)(t-1): dominant root is negative.
    auto e3 = max_root_modulus(UniPoly::from_ints({-4, 3, 1}), Rat(1, 100000));
    CHECK(std::fabs(e3.to_approx().value - 4.0) < 1e-4);
}

TEST_CASE("modulus clusters separate distinct moduli") {
    // t(t-2)(t^2+9): moduli 0, 2, 3 (pair).
    UniPoly p = UniPoly::from_ints({0, -18, 9, -2, 1});
    auto cl = root_modulus_clusters(p, Rat(1, 10000));
    REQUIRE(cl.size() == 3);
    CHECK(cl[0].multiplicity == 1);
    CHECK(cl[0].modulus.hi == 0);
    CHECK(cl[1].multiplicity == 1);
    CHECK(std::fabs(cl[1].modulus.to_approx().value - 2.0) < 1e-3);
    CHECK(cl[2].multiplicity == 2);
    CHECK(std::fabs(cl[2].modulus.to_approx().value - 3.0) < 1e-3);
}

TEST_CASE("largest real root") {
    // Golden ratio: t^2 - t - 1.
    auto e = largest_real_root_enclosure(UniPoly::from_ints({-1, -1, 1}), Rat(1, 10000000));
    CHECK(std::fabs(e.to_approx().value - (1 + std::sqrt(5.0)) / 2) < 1e-6);
    // t^2 - 1 -> 1.
    auto e2 = largest_real_root_enclosure(UniPoly::from_ints({-1, 0, 1}), Rat(1, 1000000));
    CHECK(e2.lo <= Rat(1));
    CHECK(Rat(1) <= e2.hi);
    CHECK_THROWS_AS(largest_real_root_enclosure(UniPoly::from_ints({1, 0, 1}), Rat(1, 100)),
                    std::invalid_argument);
}

TEST_CASE("sqrt enclosure") {
    auto e = sqrt_enclosure(Rat(2), Rat(2), Rat(1, 1000000000));
    CHECK(e.lo <= e.hi);
    CHECK(std::fabs(e.to_approx().value - std::sqrt(2.0)) < 1e-8);
    auto z = sqrt_enclosure(Rat(0), Rat(0), Rat(1, 100));
    CHECK(z.lo == 0);
}
