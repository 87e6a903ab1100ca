#include <cmath>
#include <complex>

#include "lattangle/embed.hpp"
#include "lattangle/examples.hpp"
#include "lattangle/io.hpp"

namespace lattangle {

namespace {

std::complex<long double> embed_c(const Cyclo& x) {
    ComplexApprox a = embed(x, 192);
    return {a.re, a.im};
}

}  // namespace

Genus5Report genus5_verify() {
    Genus5Report rep;
    Json p = load_checked_data(std::string(LATTANGLE_DATA_DIR) + "/genus5.json");
    MPoly f1 = MPoly::parse(p.at("f1").get<std::string>());
    MPoly f2 = MPoly::parse(p.at("f2").get<std::string>());

    auto eval4 = [](const MPoly& f, Rational a, Rational b, Rational c, Rational d) {
        return f.eval({{"a", Cyclo(a)}, {"b", Cyclo(b)}, {"c", Cyclo(c)}, {"d", Cyclo(d)}});
    };
    rep.transcriptionOk =
        eval4(f1, 1, 1, 1, 1).is_zero() && eval4(f2, 1, 1, 1, 1).is_zero();
    rep.nontrivialPoint =
        eval4(f1, 12, 2, -8, -3).is_zero() && eval4(f2, 12, 2, -8, -3).is_zero();

    // amplitudes (3/5, 3/10, -1/10) pi <-> squared arguments (z5^3, z10^3, z10^9)
    AngleConfig cfg{CaseId::C222,
                    {12, 2, -8, -3},
                    {ru_make(3, 5), ru_make(3, 10), ru_make(9, 10)}};
    rep.eliminantVanishes = eliminant(cfg).is_zero();

    // ab = cd = 24: the two pair quadratics collapse to one
    auto qy = pair_quadratic(12, 2, cfg.roots[0], cfg.roots[1]);
    auto qz = pair_quadratic(-8, -3, cfg.roots[0], cfg.roots[2]);
    rep.minorsVanish = true;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (!(qy[i] * qz[j] - qy[j] * qz[i]).is_zero()) rep.minorsVanish = false;

    auto prop = proportional_branch(cfg);
    rep.proportionalBranch =
        prop.status == ProportionalResult::Proportional && prop.cosineCheck;
    if (prop.status != ProportionalResult::Proportional) return rep;

    TauValue tv;
    tv.kind = TauValue::QuadraticRoot;
    tv.q1 = prop.q1;
    tv.q0 = prop.q0;
    tv.x0 = cfg.roots[0];

    // |tau| has the closed form 9/2 + sqrt5/2 + sqrt(30+22 sqrt5)/4 - sqrt(150+110 sqrt5)/4
    long double s5 = sqrtl(5.0L);
    long double r = 4.5L + s5 / 2 + sqrtl(30 + 22 * s5) / 4 - sqrtl(150 + 110 * s5) / 4;
    std::complex<long double> target = std::polar(r, 3 * acosl(-1.0L) / 5);
    std::complex<long double> q1 = embed_c(tv.q1), q0 = embed_c(tv.q0);
    std::complex<long double> disc = std::sqrt(q1 * q1 - 4.0L * q0);
    long double best = 1e30L;
    for (int s : {-1, 1}) {
        std::complex<long double> root = (-q1 + (long double)s * disc) / 2.0L;
        best = std::min(best, std::abs(root - target));
    }
    rep.tauClosedForm = best < 1e-6L;

    rep.anglesVerified = verify_angle(tv, std::nullopt, Rational(0), cfg.roots[0]) &&
                         verify_angle(tv, 12, 2, cfg.roots[1]) &&
                         verify_angle(tv, -8, -3, cfg.roots[2]) &&
                         verify_angle(tv, -3, -8, ru_make(1, 10));
    return rep;
}

}  // namespace lattangle
