#include "lattangle/classify.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "lattangle/coset.hpp"
#include "lattangle/io.hpp"
#include "lattangle/uniteq.hpp"

namespace lattangle {

namespace {

/// All roots of unity of order in orderSet, excluding 1, sorted.
std::vector<RootOfUnity> roots_of_orders(const std::vector<long>& orderSet) {
    std::set<RootOfUnity> out;
    for (long n : orderSet) {
        if (n > 10000) throw std::invalid_argument("order cap exceeded");
        for (long k = 1; k < n; ++k)
            if (std::gcd(k, n) == 1) out.insert(RootOfUnity(k, n));
    }
    return {out.begin(), out.end()};
}

/// All roots of unity of order between 2 and bound, sorted.
std::vector<RootOfUnity> roots_up_to(long bound) {
    std::vector<long> orders(bound - 1);
    std::iota(orders.begin(), orders.end(), 2);
    return roots_of_orders(orders);
}

bool is_superrect_triple(const std::array<RootOfUnity, 3>& r) {
    for (int i = 0; i < 3; ++i) {
        if (r[i] == minus_one()) return true;
        for (int j = i + 1; j < 3; ++j)
            if (r[i] * r[j].inverse() == minus_one()) return true;
    }
    return false;
}

Case4Class classify_triple(const std::array<RootOfUnity, 3>& roots,
                           const Rational& ratio) {
    if (is_superrect_triple(roots)) return Case4Class::Superrectangular;
    try {
        Cyclo tau = tau_from_tuple(ratio, roots[0], roots[1]).value;
        for (int i : {1, 2}) {
            const Cyclo ti = dodecagonal_tau(i);
            if (homothetic_shapes(tau, ti) || homothetic_shapes(tau.conj(), ti))
                return Case4Class::Dodecagonal;
        }
    } catch (const std::invalid_argument&) {
        // real tau: a degenerate shape, fall through
    }
    return Case4Class::Other;
}

std::vector<Case4Solution> search_case4_impl(const std::vector<long>& orderSet,
                                             bool parallel) {
    auto roots = roots_of_orders(orderSet);
    const long n = (long)roots.size();
    std::vector<Cyclo> vals(n), vm1(n);  // root values and root - 1
    long L = 1;
    for (const auto& r : roots) L = std::lcm(L, r.den);
    for (long i = 0; i < n; ++i) {
        vals[i] = Cyclo::root(roots[i]).lifted(L);
        vm1[i] = (Cyclo::root(roots[i]) - Cyclo(1)).lifted(L);
    }
    std::vector<std::vector<Case4Solution>> shards(n);
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (long i0 = 0; i0 < n; ++i0) {
        for (long i1 = 0; i1 < n; ++i1) {
            if (i1 == i0) continue;
            Cyclo d01 = vals[i0] - vals[i1];
            Cyclo den1 = vm1[i1];
            for (long i2 = 0; i2 < n; ++i2) {
                if (i2 == i0 || i2 == i1) continue;
                // ratio a1/a2 = (x2-1)(x0-x1) / ((x1-1)(x0-x2))
                Cyclo num = vm1[i2] * d01;
                Cyclo den = den1 * (vals[i0] - vals[i2]);
                auto rr = rational_ratio(num, den);
                if (rr.kind != RatioResult::Ratio) continue;
                if (rr.value == 0 || rr.value == 1) continue;
                Case4Solution s;
                s.roots = {roots[i0], roots[i1], roots[i2]};
                s.ratio = rr.value;
                s.commonOrder =
                    std::lcm(std::lcm(roots[i0].den, roots[i1].den), roots[i2].den);
                s.cls = classify_triple(s.roots, s.ratio);
                shards[i0].push_back(s);
            }
        }
    }
    std::vector<Case4Solution> out;
    for (auto& sh : shards) out.insert(out.end(), sh.begin(), sh.end());
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

Cyclo dodecagonal_tau(int i) {
    Cyclo z = Cyclo::zeta(12);
    if (i == 1) return -z.pow(3) + z.pow(2) + z - Cyclo(1);
    if (i == 2) return z.pow(3) - z.pow(2) + z - Cyclo(1);
    throw std::invalid_argument("dodecagonal shape index must be 1 or 2");
}

bool homothetic_shapes(const Cyclo& t1, const Cyclo& t2) {
    // t2 = (p t1 + q) / (r t1 + s) with rational p, q, r, s is equivalent
    // to a Q-linear dependence among 1, t1, t2, t1 t2
    return q_rank({Cyclo(1), t1, t2, t1 * t2}) <= 3;
}

std::vector<Case4Solution> search_case4(const std::vector<long>& orderSet,
                                        bool parallel) {
    return search_case4_impl(orderSet, parallel);
}

std::vector<Case4Solution> search_case4_serial(const std::vector<long>& orderSet) {
    return search_case4_impl(orderSet, false);
}

std::vector<Case4Solution> reduce_case4(const std::vector<Case4Solution>& sols) {
    // the root equation is preserved by:
    //   swap of the parameterized vectors  (x1, x2, r) -> (x2, x1, 1/r),
    //   relabeling the base pair           (x1, x2, r) -> (x1 swapped with x0,
    //                                       ratio r/(r-1)),
    //   homothety inversion                (x0, x1, x2, r) ->
    //                                      (1/x0, x1/x0, x2/x0, 1/r),
    //   Galois action                      all roots -> same power (the
    //                                      conjugation is the power -1)
    auto orbit_of = [](const Case4Solution& s) {
        std::set<Case4Solution> seen;
        std::vector<Case4Solution> queue{s};
        seen.insert(s);
        while (!queue.empty()) {
            Case4Solution c = queue.back();
            queue.pop_back();
            std::vector<Case4Solution> next;
            Case4Solution g = c;
            std::swap(g.roots[1], g.roots[2]);
            g.ratio = 1 / c.ratio;
            next.push_back(g);
            g = c;
            std::swap(g.roots[0], g.roots[1]);
            g.ratio = c.ratio / (c.ratio - 1);
            next.push_back(g);
            g = c;
            g.roots = {c.roots[0].inverse(), c.roots[1] * c.roots[0].inverse(),
                       c.roots[2] * c.roots[0].inverse()};
            g.ratio = 1 / c.ratio;
            next.push_back(g);
            long N = c.commonOrder;
            for (long u = 2; u < N; ++u) {
                if (std::gcd(u, N) != 1) continue;
                g = c;
                for (auto& r : g.roots) r = r.pow(u);
                next.push_back(g);
            }
            for (auto& n : next) {
                n.commonOrder =
                    std::lcm(std::lcm(n.roots[0].den, n.roots[1].den), n.roots[2].den);
                if (seen.insert(n).second) queue.push_back(n);
            }
        }
        return *seen.begin();
    };
    std::set<Case4Solution> canon;
    for (const auto& s : sols) canon.insert(orbit_of(s));
    return {canon.begin(), canon.end()};
}

namespace {

std::optional<RootOfUnity> squared_arg(const Cyclo& v) {
    return as_root_of_unity(v * v.conj().inv());
}

/// Coordinates of the product of two symbolic elements in the basis
/// (1, s, i, i*s) with s^2 = 3: the 8 variables are a0..a3, b0..b3.
std::array<MPoly, 4> product_coords() {
    auto v = [](const std::string& s) { return MPoly::variable(s); };
    MPoly a0 = v("a0"), a1 = v("a1"), a2 = v("a2"), a3 = v("a3");
    MPoly b0 = v("b0"), b1 = v("b1"), b2 = v("b2"), b3 = v("b3");
    MPoly three = MPoly::constant(Cyclo(3));
    return {a0 * b0 + three * a1 * b1 - a2 * b2 - three * a3 * b3,
            a0 * b1 + a1 * b0 - a2 * b3 - a3 * b2,
            a0 * b2 + a2 * b0 + three * (a1 * b3 + a3 * b1),
            a0 * b3 + a3 * b0 + a1 * b2 + a2 * b1};
}

/// det of the 4x4 matrix with columns 1, v1, v2, v1 v2 in that basis.
MPoly homothety_det() {
    auto v = [](const std::string& s) { return MPoly::variable(s); };
    std::array<MPoly, 4> a = {v("a0"), v("a1"), v("a2"), v("a3")};
    std::array<MPoly, 4> b = {v("b0"), v("b1"), v("b2"), v("b3")};
    std::array<MPoly, 4> c = product_coords();
    // expand along the first column (1, 0, 0, 0)
    auto m2 = [](const MPoly& p, const MPoly& q, const MPoly& r, const MPoly& s) {
        return p * s - q * r;
    };
    return a[1] * m2(b[2], b[3], c[2], c[3]) - a[2] * m2(b[1], b[3], c[1], c[3]) +
           a[3] * m2(b[1], b[2], c[1], c[2]);
}

}  // namespace

DodecagonalReport dodecagonal_report() {
    DodecagonalReport rep;
    Cyclo z = Cyclo::zeta(12), one(1);
    Cyclo i4 = Cyclo::zeta(4);
    Cyclo sqrt3 = Cyclo::zeta(12) + Cyclo::zeta(12, 11);
    Cyclo half(Rational(1, 2));

    AngleConfig cfg1{CaseId::C4, {1, -1},
                     {ru_make(3, 12), ru_make(1, 12), ru_make(10, 12)}};
    AngleConfig cfg2{CaseId::C4, {1, 3},
                     {ru_make(9, 12), ru_make(4, 12), ru_make(1, 12)}};
    auto r1 = tau_recover(cfg1), r2 = tau_recover(cfg2);
    Cyclo t1 = r1.tau.value, t2 = r2.tau.value;
    rep.tau1ClosedForm = !r1.conjugated && t1 == dodecagonal_tau(1) &&
                         t1 == (i4 + one) * (sqrt3 - one) * half;
    rep.tau2ClosedForm = !r2.conjugated && t2 == dodecagonal_tau(2) &&
                         t2 == (i4 - one) * (Cyclo(3) - sqrt3) * half;

    auto check = [&](const Cyclo& v, long k) {
        auto s = squared_arg(v);
        return s.has_value() && *s == ru_make(k, 12);
    };
    rep.argumentsVerified = check(t1, 3) && check(t1 + one, 1) && check(t1 - one, 10) &&
                            check(t2, 9) && check(t2 + one, 4) && check(t2 + Cyclo(3), 1);

    rep.independent = q_rank({one, t1, t2, t1 * t2}) == 4;

    MPoly det = homothety_det();
    rep.galoisInvariantDet = true;
    const std::string names[2][3] = {{"a1", "a2", "a3"}, {"b1", "b2", "b3"}};
    for (int mask = 0; mask < 8; ++mask) {
        std::map<std::string, MPoly> sub;
        for (int j = 0; j < 3; ++j)
            if (mask & (1 << j))
                for (int side = 0; side < 2; ++side)
                    sub[names[side][j]] = -MPoly::variable(names[side][j]);
        if (det.substitute(sub) != det) rep.galoisInvariantDet = false;
    }
    return rep;
}

std::vector<FiveTupleSolution> fivetuple_search(long bound) {
    std::vector<FiveTupleSolution> out;
    auto roots = roots_up_to(bound);
    for (const auto& th : roots) {
        if (th.den < 3) continue;  // the generator is a root of order >= 3
        Cyclo T = Cyclo::root(th), Tinv = Cyclo::root(th.inverse());
        for (const auto& x3 : roots) {
            // a3 = (theta0 - x3/theta0) / (x3 - 1)
            Cyclo X = Cyclo::root(x3);
            auto rr = rational_ratio(T - X * Tinv, X - Cyclo(1));
            if (rr.kind != RatioResult::Ratio) continue;
            if (rr.value == 0 || rr.value == 1 || rr.value == -1) continue;
            out.push_back({th, x3, rr.value});
        }
    }
    return out;
}

std::vector<ExtraAngleSolution> superrect_extra_angles(long D) {
    if (D > 60) throw std::invalid_argument("sweep order cap exceeded");
    std::vector<ExtraAngleSolution> out;
    auto roots = roots_of_orders(divisors(D));
    Cyclo one(1);
    for (const auto& th : roots) {
        if (th.den < 3) continue;
        Cyclo T = Cyclo::root(th), Tinv = Cyclo::root(th.inverse());
        for (const auto& y1 : roots) {
            Cyclo Y = Cyclo::root(y1);
            // (1 + b0 b1)(1 - y) + b0 (th - y/th) + b1 (1/th - th y) = 0
            auto res = monomial_linear_solve(one - Y, T - Y * Tinv, Tinv - T * Y,
                                             one - Y);
            bool degen = y1 == minus_one() || 6 % std::lcm(th.den, y1.den) == 0;
            if (res.infinite) {
                out.push_back({th, y1, 0, 0, degen, true});
                continue;
            }
            for (const auto& [b0, b1] : res.solutions) {
                if (b0 == b1) continue;
                auto bad = [](const Rational& b) {
                    return b == 0 || b == 1 || b == -1;
                };
                if (bad(b0) || bad(b1)) continue;
                out.push_back({th, y1, b0, b1, degen, false});
            }
        }
    }
    return out;
}

DodecExtraReport dodecagonal_extra_angles() {
    DodecExtraReport rep;
    rep.tau1PairsInCatalog = rep.tau2PairsInCatalog = true;
    rep.noFiveTupleExtension = true;
    Cyclo one(1);
    for (int j : {1, 2}) {
        Cyclo tau = dodecagonal_tau(j), taub = tau.conj();
        for (long k = 1; k < 12; ++k) {
            Cyclo Y = Cyclo::zeta(12, k);
            // y (tau + b0)(conj tau + b1) = (conj tau + b0)(tau + b1)
            auto res = monomial_linear_solve(tau * taub * (Y - one), Y * taub - tau,
                                             Y * tau - taub, Y - one);
            if (res.infinite) {
                rep.tau1PairsInCatalog = rep.tau2PairsInCatalog = false;
                continue;
            }
            for (const auto& [b0, b1] : res.solutions) {
                if (b0 == b1) continue;
                rep.entries.push_back({j, k, b0, b1});
                auto in_cat = [&](const Rational& b) {
                    return j == 1 ? (b == 0 || b == 1 || b == -1)
                                  : (b == 0 || b == 1 || b == 3);
                };
                bool& flag = j == 1 ? rep.tau1PairsInCatalog : rep.tau2PairsInCatalog;
                if (!in_cat(b0) || !in_cat(b1)) flag = false;
                if (j == 1 && k == 9 && b0 == 1 && b1 == -1)
                    rep.witnessPairPresent = true;
            }
        }
        // no extension of the defining 4-tuple to a 5-tuple: for every
        // candidate squared argument x3, a3 = tau (x0 - x3) / (x0 (x3 - 1))
        // must not be a fresh rational parameter
        AngleConfig cfg = j == 1
                              ? AngleConfig{CaseId::C4, {1, -1},
                                            {ru_make(3, 12), ru_make(1, 12),
                                             ru_make(10, 12)}}
                              : AngleConfig{CaseId::C4, {1, 3},
                                            {ru_make(9, 12), ru_make(4, 12),
                                             ru_make(1, 12)}};
        Cyclo X0 = Cyclo::root(cfg.roots[0]);
        for (long k = 1; k < 12; ++k) {
            RootOfUnity x3 = ru_make(k, 12);
            if (x3 == cfg.roots[0] || x3 == cfg.roots[1] || x3 == cfg.roots[2])
                continue;
            Cyclo X = Cyclo::root(x3);
            auto rr = rational_ratio(tau * (X0 - X), X0 * (X - one));
            if (rr.kind != RatioResult::Ratio) continue;
            if (rr.value == 0 || rr.value == cfg.params[0] || rr.value == cfg.params[1])
                continue;
            rep.noFiveTupleExtension = false;
        }
    }
    return rep;
}

std::string classification_table() {
    Json rows = Json::array();
    rows.push_back({{"angles", "infinitely many pairs"},
                    {"description",
                     "space homothetic to an imaginary quadratic field other than "
                     "Q(sqrt(-1)) and Q(sqrt(-3))"},
                    {"type", "CM, rectangular"},
                    {"verifiedBy", "find_rational_angles"}});
    rows.push_back({{"angles", "infinitely many 4-tuples"},
                    {"description", "space homothetic to Q(sqrt(-1))"},
                    {"type", "CM, superrectangular"},
                    {"verifiedBy", "find_rational_angles"}});
    rows.push_back({{"angles", "infinitely many 6-tuples"},
                    {"description", "space homothetic to Q(sqrt(-3))"},
                    {"type", "CM, superrectangular"},
                    {"verifiedBy", "find_rational_angles"}});
    rows.push_back({{"angles", "one 4-tuple"},
                    {"description", "non-CM superrectangular space"},
                    {"type", "superrectangular"},
                    {"verifiedBy", "superrect_extra_angles"}});
    rows.push_back({{"angles", "one 4-tuple"},
                    {"description", "one of the two dodecagonal spaces"},
                    {"type", "dodecagonal"},
                    {"verifiedBy", "search_case4"}});
    rows.push_back({{"angles", "a 3-tuple and a pair"},
                    {"description", "expected elliptic families and a finite list"},
                    {"type", "open"},
                    {"verifiedBy", "subcase_regressions"}});
    rows.push_back({{"angles", "three pairs"},
                    {"description", "expected elliptic families and a finite list"},
                    {"type", "open"},
                    {"verifiedBy", "elliptic_family"}});
    return rows.dump(2);
}

std::vector<SubcaseRegression> subcase_regressions() {
    std::vector<SubcaseRegression> out;
    auto check24 = [](const AngleConfig& cfg, const std::array<long, 3>& w) {
        long order = 1;
        for (const auto& r : cfg.roots) order = std::lcm(order, r.den);
        return !coset_family_test({cfg, order}, w).has_value();
    };

    {
        // top-degree coefficient relation for exponents (1, 1, 0):
        //   c x z - b x + (a - c) y z + (b - a) y = 0
        // sampled on the vanishing-subsum locus c = a - b with (a, b) = (3, 1)
        SubcaseRegression reg;
        reg.name = "triple-relation, exponents (1,1,0)";
        UnitRelation rel;
        rel.nunknowns = 3;
        rel.terms = {{2, RootOfUnity(), {1, 0, 1}},
                     {-1, RootOfUnity(), {1, 0, 0}},
                     {1, RootOfUnity(), {0, 1, 1}},
                     {-2, RootOfUnity(), {0, 1, 0}}};
        for (const auto& sol : brute_solve(rel, 6)) {
            ++reg.totalCount;
            if (sol.assignment[0].is_one() || sol.assignment[1].is_one() ||
                sol.assignment[2].is_one())
                continue;
            ++reg.nontrivialCount;
            AngleConfig cfg{CaseId::C32, {3, 1, 2},
                            {sol.assignment[0], sol.assignment[1], sol.assignment[2]}};
            if (!check24(cfg, {1, 1, 0})) reg.noneIdenticallyInT = false;
        }
        out.push_back(reg);
    }
    {
        // top-degree coefficient relation for exponents (1, 0, 0):
        //   b (a - c) - a b y - c (a - b) z + a c y z = 0
        // sampled on the vanishing-subsum locus c = ab/(b - a), (a, b) = (2, 3)
        SubcaseRegression reg;
        reg.name = "pair-relation, exponents (1,0,0)";
        UnitRelation rel;
        rel.nunknowns = 2;
        rel.terms = {{-12, RootOfUnity(), {0, 0}},
                     {-6, RootOfUnity(), {1, 0}},
                     {6, RootOfUnity(), {0, 1}},
                     {12, RootOfUnity(), {1, 1}}};
        for (const auto& sol : brute_solve(rel, 6)) {
            ++reg.totalCount;
            if (sol.assignment[0].is_one() || sol.assignment[1].is_one()) continue;
            ++reg.nontrivialCount;
            // the x-root is free in this sub-case: test every candidate of
            // order dividing 24
            for (const auto& x0 : roots_of_orders(divisors(24))) {
                AngleConfig cfg{CaseId::C32, {2, 3, 6},
                                {x0, sol.assignment[0], sol.assignment[1]}};
                if (!check24(cfg, {1, 0, 0})) reg.noneIdenticallyInT = false;
            }
        }
        out.push_back(reg);
    }
    return out;
}

}  // namespace lattangle
