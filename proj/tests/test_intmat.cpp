#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "adlab/intmat.hpp"

using namespace adlab;

TEST_CASE("multiplication and powers") {
    IntMat m = IntMat::from_rows({{1, 2}, {-2, 1}});
    IntMat m2 = m * m;
    CHECK(m2 == IntMat::from_rows({{-3, 4}, {-4, -3}}));
    IntMat p5 = m.pow(5);
    IntMat naive = m * m * m * m * m;
    CHECK(p5 == naive);
    CHECK(m.pow(0) == IntMat::identity(2));
}

TEST_CASE("determinants") {
    CHECK(IntMat::from_rows({{1, 2}, {-2, 1}}).det() == 5);
    CHECK(IntMat::from_rows({{0, 1}, {1, 0}}).det() == -1);
    CHECK(IntMat::from_rows({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}).det() == 0);
    CHECK(IntMat::from_rows({{2, 0, 0}, {0, 3, 0}, {0, 0, 5}}).det() == 30);
    // det is multiplicative (random check)
    std::mt19937 rng(3);
    std::uniform_int_distribution<long> d(-5, 5);
    for (int t = 0; t < 30; ++t) {
        std::vector<std::vector<long>> ra(4, std::vector<long>(4)), rb(4, std::vector<long>(4));
        for (auto& row : ra) for (auto& v : row) v = d(rng);
        for (auto& row : rb) for (auto& v : row) v = d(rng);
        IntMat A = IntMat::from_rows(ra), B = IntMat::from_rows(rb);
        CHECK((A * B).det() == A.det() * B.det());
    }
}

TEST_CASE("characteristic polynomial") {
    // trace 2, det 5 -> t^2 - 2t + 5
    CHECK(IntMat::from_rows({{1, 2}, {-2, 1}}).char_poly() == UniPoly::from_ints({5, -2, 1}));
    // companion of t^3 - t^2 - t - 1
    IntMat c = IntMat::from_rows({{0, 0, 1}, {1, 0, 1}, {0, 1, 1}});
    CHECK(c.char_poly() == UniPoly::from_ints({-1, -1, -1, 1}));
    CHECK(IntMat::identity(3).char_poly() == UniPoly::from_ints({-1, 3, -3, 1}));
}

TEST_CASE("exterior powers") {
    IntMat d = IntMat::from_rows({{2, 0, 0}, {0, 3, 0}, {0, 0, 5}});
    IntMat w2 = d.exterior_power(2);
    CHECK(w2.size() == 3);
    // subsets {0,1},{0,2},{1,2} -> products 6, 10, 15
    CHECK(w2.at(0, 0) == 6);
    CHECK(w2.at(1, 1) == 10);
    CHECK(w2.at(2, 2) == 15);
    CHECK(d.exterior_power(1) == d);
    CHECK(d.exterior_power(3).at(0, 0) == d.det());

    // trace of the 2nd exterior power equals e2 of the eigenvalues, which is
    // the t-coefficient of a cubic characteristic polynomial.
    std::mt19937 rng(9);
    std::uniform_int_distribution<long> dist(-4, 4);
    for (int t = 0; t < 25; ++t) {
        std::vector<std::vector<long>> rows(3, std::vector<long>(3));
        for (auto& row : rows) for (auto& v : row) v = dist(rng);
        IntMat m = IntMat::from_rows(rows);
        UniPoly cp = m.char_poly();
        CHECK(m.exterior_power(2).trace() == cp.coeff(1).get_num());
        CHECK(m.exterior_power(2).det() == rat_pow(Rat(m.det()), 2).get_num());
    }
}
