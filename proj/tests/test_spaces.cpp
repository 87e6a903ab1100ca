#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "lattangle/embed.hpp"
#include "lattangle/spaces.hpp"

using namespace lattangle;

static SpaceSpec space_of(const Cyclo& tau) {
    SpaceSpec s;
    s.tau.kind = TauValue::ExplicitCyclo;
    s.tau.value = tau;
    return s;
}

static Cyclo dodecagonal_tau1() {
    Cyclo z = Cyclo::zeta(12);
    return -z.pow(3) + z.pow(2) + z - Cyclo(1);
}

TEST_CASE("normalization of a generating pair") {
    auto a = normalize_space(Cyclo(1), Cyclo::zeta(4));
    CHECK(a.tau.value == Cyclo::zeta(4));
    CHECK(!a.conjugated);

    // ratio (1-i)/2 gets reflected to (1+i)/2
    Cyclo half = Cyclo(Rational(1, 2));
    auto b = normalize_space(Cyclo(2), Cyclo(1) - Cyclo::zeta(4));
    CHECK(b.tau.value == half + half * Cyclo::zeta(4));
    CHECK(b.conjugated);

    auto c = normalize_space(Cyclo(1) + Cyclo::zeta(5), Cyclo::zeta(5).pow(2));
    CHECK(embed(c.tau.value).im > 0);
    CHECK(sign_real(c.tau.value + c.tau.value.conj()) >= 0);

    CHECK_THROWS(normalize_space(Cyclo(1), Cyclo(2)));
    CHECK_THROWS(normalize_space(Cyclo::zeta(5), Cyclo(3) * Cyclo::zeta(5)));
    CHECK_THROWS(normalize_space(Cyclo(0), Cyclo::zeta(4)));
}

TEST_CASE("square roots of negative squarefree integers") {
    for (long d : {1, 2, 3, 5, 6, 7, 10, 11, 13, 14, 15}) {
        Cyclo s = sqrt_minus(d);
        CHECK(*(s * s).reduced().as_rational() == -d);
        CHECK(embed(s).im > 0);
    }
    CHECK(sqrt_minus(1) == Cyclo::zeta(4));
    CHECK_THROWS(sqrt_minus(4));
    CHECK_THROWS(sqrt_minus(0));
}

TEST_CASE("complex multiplication detection") {
    CHECK(is_cm(space_of(Cyclo::zeta(4)))->d == 1);
    CHECK(is_cm(space_of(Cyclo::zeta(3)))->d == 3);
    CHECK(is_cm(space_of(Cyclo(1) + Cyclo(2) * Cyclo::zeta(4)))->d == 1);
    CHECK(is_cm(space_of(sqrt_minus(5)))->d == 5);
    CHECK(is_cm(space_of(Cyclo(Rational(1, 3)) + sqrt_minus(7)))->d == 7);
    CHECK(!is_cm(space_of(Cyclo::zeta(5))));
    CHECK(!is_cm(space_of(dodecagonal_tau1())));
}

TEST_CASE("angle generator catalogs of the imaginary quadratic fields") {
    auto c1 = cm_catalog(1);
    REQUIRE(c1.catalog.size() == 3);
    CHECK(c1.catalog[0] == Cyclo::zeta(4));
    CHECK(c1.catalog[1] == Cyclo::zeta(4) + Cyclo(1));
    CHECK(c1.catalog[2] == Cyclo::zeta(4) - Cyclo(1));

    auto c3 = cm_catalog(3);
    REQUIRE(c3.catalog.size() == 5);
    CHECK(*(c3.catalog[0] * c3.catalog[0]).reduced().as_rational() == -3);
    CHECK(c3.catalog[1] == Cyclo::zeta(3));

    auto c2 = cm_catalog(2);
    REQUIRE(c2.catalog.size() == 1);
    CHECK(*(c2.catalog[0] * c2.catalog[0]).reduced().as_rational() == -2);

    CHECK_THROWS(cm_catalog(4));
    CHECK_THROWS(cm_catalog(-3));
}

TEST_CASE("symmetry predicates") {
    auto f5 = symmetry_predicates(space_of(Cyclo::zeta(5)));
    CHECK(f5.selfConjClass);
    CHECK(f5.homConjClass);
    CHECK(f5.rectangular);
    CHECK(f5.superrectangular);

    // first dodecagonal shape: conjugate-homothetic only
    auto fd = symmetry_predicates(space_of(dodecagonal_tau1()));
    CHECK(fd.homConjClass);
    CHECK(!fd.selfConjClass);
    CHECK(!fd.rectangular);
    CHECK(!fd.superrectangular);

    // 1 + 2i spans Q(i), which contains the fourth roots of unity
    auto fg = symmetry_predicates(space_of(Cyclo(1) + Cyclo(2) * Cyclo::zeta(4)));
    CHECK(fg.selfConjClass);
    CHECK(fg.homConjClass);
    CHECK(fg.rectangular);
    CHECK(fg.superrectangular);

    // CM field without nontrivial roots of unity
    auto f6 = symmetry_predicates(space_of(sqrt_minus(6)));
    CHECK(f6.selfConjClass);
    CHECK(f6.rectangular);
    CHECK(!f6.superrectangular);

    // implication chain on a batch of shapes
    for (const Cyclo& tau :
         {Cyclo::zeta(5), Cyclo::zeta(7) + Cyclo(1), Cyclo::zeta(8) + Cyclo(2),
          dodecagonal_tau1(), Cyclo::zeta(9), sqrt_minus(10), Cyclo::zeta(12) + Cyclo(3)}) {
        auto f = symmetry_predicates(space_of(tau));
        if (f.superrectangular) CHECK(f.selfConjClass);
        if (f.selfConjClass) CHECK(f.homConjClass);
    }
}

TEST_CASE("root-of-unity content of the relevant fields") {
    CHECK(roots_of_unity_order(Cyclo::zeta(5)) == 10);
    CHECK(roots_of_unity_order(Cyclo::zeta(4)) == 4);
    CHECK(roots_of_unity_order(dodecagonal_tau1()) == 12);
    CHECK(roots_of_unity_order(sqrt_minus(5)) == 2);
    CHECK(roots_of_unity_order(Cyclo(1) + Cyclo(2) * Cyclo::zeta(4)) == 4);
}

using PPoint = std::pair<Rational, Rational>;
static std::set<std::set<PPoint>> pair_sets(const AngleSearchResult& r) {
    std::set<std::set<PPoint>> out;
    for (const auto& a : r.angles) out.insert({a.v0, a.v1});
    return out;
}

TEST_CASE("angle search on the pentagonal shape") {
    auto r = find_rational_angles(space_of(Cyclo::zeta(5)));
    CHECK(!r.cmInfinite);
    // exactly the six pairwise angles of (1, tau, tau+1, tau-1)
    std::vector<PPoint> pts = {{Rational(0), Rational(1)},
                               {Rational(1), Rational(0)},
                               {Rational(1), Rational(1)},
                               {Rational(-1), Rational(1)}};
    std::set<std::set<PPoint>> expect;
    for (size_t i = 0; i < pts.size(); ++i)
        for (size_t j = i + 1; j < pts.size(); ++j) expect.insert({pts[i], pts[j]});
    CHECK(r.angles.size() == 6);
    CHECK(pair_sets(r) == expect);
    // every reported angle checks out exactly
    TauValue t;
    t.kind = TauValue::ExplicitCyclo;
    t.value = Cyclo::zeta(5);
    for (const auto& a : r.angles) {
        auto enc = [](const PPoint& p) -> AngleVector {
            if (p.second == 0) return Rational(0);
            if (p.first == 0) return std::nullopt;
            return p.second / p.first;  // u*tau + 1 is proportional to tau + 1/u
        };
        CHECK(verify_angle(t, enc(a.v0), enc(a.v1), a.muSq));
    }
}

TEST_CASE("angle search on CM and dodecagonal shapes") {
    auto rg = find_rational_angles(space_of(Cyclo::zeta(4)));
    CHECK(rg.cmInfinite);
    REQUIRE(rg.cm.has_value());
    CHECK(rg.cm->d == 1);

    auto rd = find_rational_angles(space_of(dodecagonal_tau1()));
    CHECK(!rd.cmInfinite);
    CHECK(rd.angles.size() == 6);
}

TEST_CASE("CM marker is equivalent to quadratic shape") {
    std::vector<Cyclo> quad, nonquad;
    long ds[] = {1, 2, 3, 5, 6, 7, 10, 11, 13, 15};
    for (long d : ds) {
        quad.push_back(sqrt_minus(d));
        quad.push_back(sqrt_minus(d) + Cyclo(1));
        quad.push_back(Cyclo(Rational(1, 2)) * sqrt_minus(d) - Cyclo(2));
    }
    for (long n : {5, 7, 8, 9, 11, 12, 13, 15, 16, 20}) {
        Cyclo z = Cyclo::zeta(n);
        nonquad.push_back(n == 12 ? dodecagonal_tau1() : z);
        nonquad.push_back(z + Cyclo(1));
        nonquad.push_back(z - Cyclo(3));
    }
    for (const auto& tau : quad) {
        auto s = space_of(tau);
        CHECK(is_cm(s).has_value());
        CHECK(find_rational_angles(s).cmInfinite);
    }
    for (const auto& tau : nonquad) {
        auto s = space_of(tau);
        REQUIRE(!is_cm(s).has_value());
        auto r = find_rational_angles(s);
        CHECK(!r.cmInfinite);
        // finiteness bound from the two-curve intersection argument
        long M = roots_of_unity_order(tau);
        CHECK((long)r.angles.size() <= 2 * M);
    }
}

TEST_CASE("transcendental shapes carry a single angle") {
    SpaceSpec s;
    s.transcendental = true;
    auto r = find_rational_angles(s);
    CHECK(r.angles.size() == 1);
    CHECK(!r.cmInfinite);
}

TEST_CASE("root orders of the classical lattices") {
    auto m = lattice_root_orders();
    CHECK(m.at("gaussian") == 8);
    CHECK(m.at("eisenstein") == 12);
}
