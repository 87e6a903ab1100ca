#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lattangle/surface.hpp"

using namespace lattangle;

namespace {

QuadraticPair symbolic_pair() {
    return {MPoly::variable("A1"), MPoly::variable("A2"), MPoly::variable("B1"),
            MPoly::variable("B2")};
}

QuadraticPair const_pair(const Rational& a1, const Rational& a2, const Rational& b1,
                         const Rational& b2) {
    auto C = [](const Rational& v) { return MPoly::constant(Cyclo(v)); };
    return {C(a1), C(a2), C(b1), C(b2)};
}

}  // namespace

TEST_CASE("resultant forms agree symbolically") {
    QuadraticPair qp = symbolic_pair();
    MPoly e = resultant_E(qp);
    CHECK(e == resultant_E_elimination(qp));
    CHECK(e == sylvester_resultant(qp));
}

TEST_CASE("resultant values") {
    QuadraticPair same = symbolic_pair();
    same.B1 = same.A1;
    same.B2 = same.A2;
    CHECK(resultant_E(same).is_zero());

    // roots {1, -1} against {2, -2}: product of differences is 9
    MPoly e = resultant_E(const_pair(0, -1, 0, -4));
    REQUIRE(e.is_constant());
    CHECK(e.constant_value() == Cyclo(9));
}

TEST_CASE("weighted homogeneity of degree 4") {
    QuadraticPair qp = symbolic_pair();
    MPoly l = MPoly::variable("l");
    MPoly scaled = resultant_E(qp).substitute({{"A1", l * qp.A1},
                                               {"A2", l * l * qp.A2},
                                               {"B1", l * qp.B1},
                                               {"B2", l * l * qp.B2}});
    CHECK(scaled == l.pow(4) * resultant_E(qp).with_vars({"A1", "A2", "B1", "B2", "l"}));
}

TEST_CASE("resultant against the Sylvester oracle on random data") {
    std::mt19937 rng(424242);
    auto r = [&] {
        long num = (long)(rng() % 21) - 10;
        long den = 1 + rng() % 6;
        return rat(num, den);
    };
    for (int trial = 0; trial < 200; ++trial) {
        QuadraticPair qp = const_pair(r(), r(), r(), r());
        CHECK(resultant_E(qp) == sylvester_resultant(qp));
        CHECK(resultant_E(qp) == resultant_E_elimination(qp));
    }
}

TEST_CASE("degenerate factorization at (-1, -1, -1)") {
    auto res = estar(ru_make(1, 2), ru_make(1, 2), ru_make(1, 2));
    MPoly a = MPoly::variable("a"), b = MPoly::variable("b");
    MPoly c = MPoly::variable("c"), d = MPoly::variable("d");
    MPoly diff = a * b - c * d;
    CHECK(res.estar == diff * diff);
    CHECK(res.identityHolds);
    CHECK(res.warning);
}

TEST_CASE("substitution warning flag") {
    CHECK(estar(ru_make(1, 2), ru_make(1, 2), ru_make(1, 3)).warning);
    CHECK(estar(ru_make(1, 2), ru_make(1, 3), ru_make(1, 2)).warning);
    CHECK(!estar(ru_make(1, 3), ru_make(1, 2), ru_make(1, 2)).warning);
    CHECK(!estar(ru_make(1, 4), ru_make(1, 8), ru_make(3, 8)).warning);
    CHECK_THROWS(estar(ru_make(0, 1), ru_make(1, 2), ru_make(1, 2)));
}

TEST_CASE("scaling identity for all root triples of order dividing 12") {
    for (long i = 1; i < 12; ++i)
        for (long j = 1; j < 12; ++j)
            for (long k = 1; k < 12; ++k) {
                auto res = estar(ru_make(i, 12), ru_make(j, 12), ru_make(k, 12));
                CHECK(res.identityHolds);
            }
}

TEST_CASE("defined over Q: closed form and coefficient ratios") {
    CHECK(defined_over_q(ru_make(1, 4), ru_make(1, 4), ru_make(1, 2)));
    CHECK(defined_over_q(ru_make(1, 3), ru_make(1, 6), ru_make(1, 2)));
    CHECK(!defined_over_q(ru_make(1, 5), ru_make(1, 5), ru_make(1, 5)));

    // the function throws if its two routes ever disagree; sweep them
    for (long i = 1; i < 12; ++i)
        for (long j = 1; j < 12; ++j)
            for (long k = 1; k < 12; ++k)
                (void)defined_over_q(ru_make(i, 12), ru_make(j, 12), ru_make(k, 12));

    std::mt19937 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        long n = 2 + rng() % 39;  // common order of the triple
        auto pick = [&] {
            while (true) {
                RootOfUnity r = ru_make(rng() % n, n);
                if (!r.is_one()) return r;
            }
        };
        (void)defined_over_q(pick(), pick(), pick());
    }
}
