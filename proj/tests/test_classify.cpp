#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <set>

#include "lattangle/classify.hpp"

using namespace lattangle;

TEST_CASE("homothety detection between shapes") {
    Cyclo t1 = dodecagonal_tau(1), t2 = dodecagonal_tau(2);
    CHECK(homothetic_shapes(t1, t1));
    // rational fractional-linear images stay in the class
    Cyclo img = (Cyclo(2) * t1 + Cyclo(3)) * (t1 - Cyclo(5)).inv();
    CHECK(homothetic_shapes(t1, img));
    CHECK(homothetic_shapes(Cyclo::zeta(5), Cyclo::zeta(5) + Cyclo(1)));
    // the two dodecagonal shapes are inequivalent
    CHECK(!homothetic_shapes(t1, t2));
    CHECK(!homothetic_shapes(t1, Cyclo::zeta(5)));
}

TEST_CASE("4-tuple search at orders dividing 30") {
    auto sols = search_case4(divisors(30));
    CHECK(sols.size() == 204);
    for (const auto& s : sols) CHECK(s.cls == Case4Class::Superrectangular);

    // swapping the two parameterized vectors maps solutions to solutions
    std::set<Case4Solution> all(sols.begin(), sols.end());
    for (const auto& s : sols) {
        Case4Solution sw = s;
        std::swap(sw.roots[1], sw.roots[2]);
        sw.ratio = 1 / s.ratio;
        CHECK(all.count(sw) == 1);
    }
}

TEST_CASE("4-tuple search at orders dividing 12") {
    auto sols = search_case4(divisors(12));
    CHECK(sols.size() == 138);
    long sup = 0, dod = 0, oth = 0;
    std::vector<Case4Solution> dods;
    for (const auto& s : sols) {
        if (s.cls == Case4Class::Superrectangular) ++sup;
        if (s.cls == Case4Class::Dodecagonal) {
            ++dod;
            dods.push_back(s);
        }
        if (s.cls == Case4Class::Other) ++oth;
    }
    CHECK(sup == 90);
    CHECK(dod == 48);
    CHECK(oth == 0);

    // every emitted solution is a genuine configuration with verified angles
    for (const auto& s : sols) {
        AngleConfig cfg{CaseId::C4, {s.ratio, 1}, {s.roots[0], s.roots[1], s.roots[2]}};
        CHECK(eliminant(cfg).is_zero());
        CHECK(verify_config(cfg));
    }

    // the dodecagonal solutions collapse to exactly two classes, one per shape
    auto red = reduce_case4(dods);
    REQUIRE(red.size() == 2);
    int hits1 = 0, hits2 = 0;
    for (const auto& s : red) {
        Cyclo tau = tau_from_tuple(s.ratio, s.roots[0], s.roots[1]).value;
        if (homothetic_shapes(tau, dodecagonal_tau(1)) ||
            homothetic_shapes(tau.conj(), dodecagonal_tau(1)))
            ++hits1;
        if (homothetic_shapes(tau, dodecagonal_tau(2)) ||
            homothetic_shapes(tau.conj(), dodecagonal_tau(2)))
            ++hits2;
    }
    CHECK(hits1 == 1);
    CHECK(hits2 == 1);
}

TEST_CASE("parallel and serial searches agree") {
    auto a = search_case4(divisors(12), true);
    auto b = search_case4_serial(divisors(12));
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i] == b[i]);
        CHECK(a[i].cls == b[i].cls);
    }
}

TEST_CASE("dodecagonal shape report") {
    auto rep = dodecagonal_report();
    CHECK(rep.tau1ClosedForm);
    CHECK(rep.tau2ClosedForm);
    CHECK(rep.argumentsVerified);
    CHECK(rep.independent);
    CHECK(rep.galoisInvariantDet);
    CHECK(rep.ok());
}

TEST_CASE("5-tuple obstruction") {
    auto sols = fivetuple_search(24);
    CHECK(sols.size() == 8);
    for (const auto& s : sols) {
        CHECK(6 % s.theta0.den == 0);
        CHECK(s.theta0.den != 8);
        // the excluded two-term degeneration x3 = theta0^2 never appears
        CHECK(s.x3 != s.theta0.pow(2));
    }
}

TEST_CASE("extra angles in superrectangular spaces") {
    auto sols = superrect_extra_angles(30);
    CHECK(!sols.empty());
    bool order3or6 = false;
    for (const auto& s : sols) {
        CHECK(s.degenerate);  // nothing outside order-6 / y1 = -1 degenerations
        if (s.theta0.den == 3 || s.theta0.den == 6) order3or6 = true;
    }
    CHECK(order3or6);  // the hexagonal CM space does carry solutions
    CHECK_THROWS(superrect_extra_angles(120));
}

TEST_CASE("extra angles in dodecagonal spaces") {
    auto rep = dodecagonal_extra_angles();
    CHECK(rep.ok());
    CHECK(rep.entries.size() == 12);
    bool witness = false;
    for (const auto& e : rep.entries) {
        auto in_cat = [&](const Rational& b) {
            return e.j == 1 ? (b == 0 || b == 1 || b == -1)
                            : (b == 0 || b == 1 || b == 3);
        };
        CHECK(in_cat(e.b0));
        CHECK(in_cat(e.b1));
        if (e.j == 1 && e.k == 9 && e.b0 == 1 && e.b1 == -1) witness = true;
    }
    CHECK(witness);
}

TEST_CASE("classification summary table") {
    auto table = nlohmann::json::parse(classification_table());
    REQUIRE(table.is_array());
    CHECK(table.size() == 7);
    bool hexField = false, elliptic = false;
    for (const auto& row : table) {
        if (row.at("description").get<std::string>().find("Q(sqrt(-3))") !=
            std::string::npos)
            hexField = true;
        if (row.at("verifiedBy") == "elliptic_family") elliptic = true;
    }
    CHECK(hexField);
    CHECK(elliptic);
}

TEST_CASE("sub-case regressions") {
    auto regs = subcase_regressions();
    REQUIRE(regs.size() == 2);
    CHECK(regs[0].totalCount == 24);
    CHECK(regs[0].nontrivialCount == 12);
    CHECK(regs[0].noneIdenticallyInT);
    CHECK(regs[1].totalCount == 4);
    CHECK(regs[1].nontrivialCount == 3);
    CHECK(regs[1].noneIdenticallyInT);
}
