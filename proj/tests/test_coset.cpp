#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lattangle/coset.hpp"

using namespace lattangle;

static SolutionPoint doubled_family_point(long n) {
    // tuple family specialization: (a, b) = (2, 1), (x, y, z) = (t, -t, t^2)
    RootOfUnity t = ru_make(1, n);
    return make_solution(
        {CaseId::C4, {2, 1}, {t, minus_one() * t, ru_make(2, n)}});
}

static SolutionPoint right_angle_family_point(long n) {
    // three-pair family specialization: (a, b, c, d) = (-2, 1, -1, 2), y = z
    return make_solution(
        {CaseId::C222, {-2, 1, -1, 2}, {minus_one(), ru_make(1, n), ru_make(1, n)}});
}

static SolutionPoint dodecagonal_point() {
    return make_solution(
        {CaseId::C4, {1, -1}, {ru_make(3, 12), ru_make(1, 12), ru_make(10, 12)}});
}

TEST_CASE("bound constants") {
    auto c = constants();
    Integer prod("247357937827");  // 7*11*13*17*19*23*29*31*37
    Integer p = 7;
    p *= 11, p *= 13, p *= 17, p *= 19, p *= 23, p *= 29, p *= 31, p *= 37;
    CHECK(p == prod);
    CHECK(c.N0 == Integer(64) * 81 * 125 * prod * prod);
    CHECK(c.thmBound == 2 * c.N0);
    // the two-adic valuation of N0 is exactly six
    CHECK(c.N0 % 64 == 0);
    CHECK(c.N0 % 128 != 0);
}

TEST_CASE("solution points and their orders") {
    CHECK(doubled_family_point(7).order == 14);
    CHECK(right_angle_family_point(5).order == 10);
    CHECK(dodecagonal_point().order == 12);
    CHECK_THROWS(make_solution(
        {CaseId::C4, {1, -1}, {ru_make(1, 4), ru_make(1, 3), ru_make(1, 5)}}));
}

TEST_CASE("regrouped coefficients of a family member vanish") {
    auto sol = doubled_family_point(7);
    auto g = gamma_decompose(sol, 7, 1);
    REQUIRE(g.size() == 7);
    for (const auto& gi : g) CHECK(gi.is_zero());
}

TEST_CASE("regrouped coefficients of a sporadic solution do not all vanish") {
    auto sol = dodecagonal_point();
    auto g = gamma_decompose(sol, 3, 1);
    REQUIRE(g.size() == 3);
    bool allZero = true;
    for (const auto& gi : g) allZero = allZero && gi.is_zero();
    CHECK(!allZero);
}

TEST_CASE("regrouping sum rule") {
    struct Probe {
        SolutionPoint sol;
        long p, m;
    };
    Probe probes[] = {{doubled_family_point(7), 7, 1},
                      {doubled_family_point(7), 2, 1},
                      {doubled_family_point(9), 3, 2},
                      {right_angle_family_point(5), 5, 1},
                      {right_angle_family_point(8), 2, 3},
                      {dodecagonal_point(), 3, 1},
                      {dodecagonal_point(), 2, 2}};
    for (const auto& pr : probes) {
        auto g = gamma_decompose(pr.sol, pr.p, pr.m);
        long pm = 1;
        for (long i = 0; i < pr.m; ++i) pm *= pr.p;
        Cyclo zeta = Cyclo::zeta(pm), total(0);
        for (size_t i = 0; i < g.size(); ++i) total += zeta.pow((long)i) * g[i];
        CHECK(total.is_zero());
    }
}

TEST_CASE("regrouping preconditions") {
    auto sol = dodecagonal_point();  // order 12 = 2^2 * 3
    CHECK_THROWS(gamma_decompose(sol, 2, 1));  // 2^1 does not divide exactly
    CHECK_THROWS(gamma_decompose(sol, 3, 2));
    CHECK_THROWS(gamma_decompose(sol, 5, 1));
    CHECK_THROWS(p_part_exponents(sol, 2, 3));
}

TEST_CASE("prime-power exponent vectors") {
    auto v = p_part_exponents(dodecagonal_point(), 3, 1);
    CHECK(v == std::array<long, 3>{0, 1, 1});
    auto v2 = p_part_exponents(doubled_family_point(7), 7, 1);
    CHECK(v2 == std::array<long, 3>{1, 1, 2});
    // p = 2 parts of (1/4, 1/12, 5/6) are zeta_4^1, zeta_4^3, zeta_4^2
    auto v3 = p_part_exponents(dodecagonal_point(), 2, 2);
    CHECK(v3 == std::array<long, 3>{1, 3, 2});
}

TEST_CASE("shortest lattice vectors by enumeration") {
    CHECK(short_vector({1, 0, 0}, 2) == std::array<long, 3>{1, 0, 0});

    auto w = short_vector({1, 2, 3}, 5);
    long long n = (long long)w[0] * w[0] + w[1] * w[1] + w[2] * w[2];
    // (2, -1, 1) = 2*(1,2,3) + (0,-5,-5) lies in the lattice
    CHECK(n == 6);

    auto w3 = short_vector({1, 1, 1}, 3);
    long long n3 = (long long)w3[0] * w3[0] + w3[1] * w3[1] + w3[2] * w3[2];
    CHECK(n3 == 3);

    CHECK_THROWS(short_vector({2, 4, 6}, 2));
    CHECK_THROWS(short_vector({0, 0, 0}, 7));
    CHECK_THROWS(short_vector({1, 1, 1}, 20000));
}

TEST_CASE("shortest vector minimality against full enumeration") {
    std::mt19937 rng(20260824);
    for (long M = 2; M <= 50; ++M) {
        for (int trial = 0; trial < 3; ++trial) {
            std::array<long, 3> v{(long)(rng() % M), (long)(rng() % M),
                                  (long)(rng() % M)};
            if (v[0] % M == 0 && v[1] % M == 0 && v[2] % M == 0) continue;
            auto w = short_vector(v, M);
            long long got = (long long)w[0] * w[0] + w[1] * w[1] + w[2] * w[2];
            // brute force over the full box of lattice representatives
            long long best = -1;
            for (long k = 0; k < M; ++k)
                for (long a = -M; a <= M; ++a)
                    for (long b = -M; b <= M; ++b)
                        for (long c = -M; c <= M; ++c) {
                            if (((a - k * v[0]) % M + M) % M != 0) continue;
                            if (((b - k * v[1]) % M + M) % M != 0) continue;
                            if (((c - k * v[2]) % M + M) % M != 0) continue;
                            if (a == 0 && b == 0 && c == 0) continue;
                            long long nn =
                                (long long)a * a + (long long)b * b + (long long)c * c;
                            if (best < 0 || nn < best) best = nn;
                        }
            CHECK(got == best);
        }
    }
}

TEST_CASE("coset family test recognizes the two families") {
    auto f2 = coset_family_test(doubled_family_point(7), {1, 1, 2});
    REQUIRE(f2.has_value());
    CHECK(f2->w == std::array<long, 3>{1, 1, 2});
    CHECK(!coset_family_test(doubled_family_point(7), {1, 0, 0}).has_value());

    auto f1 = coset_family_test(right_angle_family_point(5), {0, 1, 1});
    REQUIRE(f1.has_value());

    // the sporadic dodecagonal solution lies on no coset line
    auto sol = dodecagonal_point();
    for (long a = -2; a <= 2; ++a)
        for (long b = -2; b <= 2; ++b)
            for (long c = -2; c <= 2; ++c) {
                if (a == 0 && b == 0 && c == 0) continue;
                CHECK(!coset_family_test(sol, {a, b, c}).has_value());
            }
}

TEST_CASE("witness specializations stay on the equation") {
    std::mt19937 rng(7);
    FamilyWitness ws[] = {*coset_family_test(doubled_family_point(7), {1, 1, 2}),
                          *coset_family_test(right_angle_family_point(5), {0, 1, 1})};
    for (const auto& fw : ws) {
        int done = 0;
        while (done < 50) {
            long n = 3 + rng() % 38;
            RootOfUnity u = ru_make(1 + rng() % (n - 1), n);
            AngleConfig cfg = fw.basePoint.cfg;
            bool valid = true;
            for (int j = 0; j < 3; ++j) {
                cfg.roots[j] = cfg.roots[j] * u.pow(fw.w[j]);
                if (cfg.roots[j].is_one()) valid = false;
            }
            if (!valid) continue;
            CHECK(eliminant(cfg).is_zero());
            ++done;
        }
    }
}

TEST_CASE("family verification report") {
    auto rep = verify_families();
    CHECK(rep.rightAngleFamilySymbolic);
    CHECK(rep.doubledFamilySymbolic);
    CHECK(rep.samplesChecked == 20);
    CHECK(rep.allSamplesVerified);
}

TEST_CASE("degenerate parameters of the three-pair family are rejected") {
    // a = 0 or a = -1 collapses the parameter tuple (a, 1, -1, -a)
    CHECK_THROWS(eliminant(
        {CaseId::C222, {0, 1, -1, 0}, {minus_one(), ru_make(1, 5), ru_make(1, 5)}}));
    CHECK_THROWS(eliminant(
        {CaseId::C222, {-1, 1, -1, 1}, {minus_one(), ru_make(1, 5), ru_make(1, 5)}}));
}

TEST_CASE("solution certifier") {
    // small order: every prime power is below the thresholds
    auto small = certify_solution(dodecagonal_point());
    CHECK(small.kind == CertifyResult::BoundedOrder);
    CHECK(!small.witness.has_value());

    // order 2 * 3^5: the power 3^5 exceeds the odd threshold 3^4 >= 39,
    // so a coset-family witness is required and found
    auto big = certify_solution(doubled_family_point(243));
    CHECK(big.kind == CertifyResult::Family);
    REQUIRE(big.witness.has_value());
    CHECK(big.witness->w == std::array<long, 3>{1, 1, 2});
}
