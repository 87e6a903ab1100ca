#include <map>
#include <stdexcept>

#include "lattangle/examples.hpp"
#include "lattangle/io.hpp"

namespace lattangle {

namespace {

// Y^2 = X^3 + c2 X^2 + c4 X + c6
const Rational kC2 = 4, kC4 = 6, kC6 = 4;

Rational curve_rhs(const Rational& X) { return ((X + kC2) * X + kC4) * X + kC6; }

struct SystemData {
    MPoly eq1ab, eq1ad, eq2, quartic;
};

const SystemData& system_data() {
    static const SystemData data = [] {
        Json p = load_checked_data(std::string(LATTANGLE_DATA_DIR) + "/ec7.json");
        SystemData d;
        d.eq1ab = MPoly::parse(p.at("eq1_ab").get<std::string>());
        d.eq1ad = MPoly::parse(p.at("eq1_ad").get<std::string>());
        d.eq2 = MPoly::parse(p.at("eq2").get<std::string>());
        d.quartic = MPoly::parse(p.at("quartic_buv").get<std::string>());
        return d;
    }();
    return data;
}

Cyclo eval_abcd(const MPoly& f, const Quadruple& q) {
    return f.eval({{"a", Cyclo(q.a)},
                   {"b", Cyclo(q.b)},
                   {"c", Cyclo(q.c)},
                   {"d", Cyclo(q.d)}});
}

}  // namespace

ECPoint ec_infinity() { return ECPoint{}; }

ECPoint ec_point(const Rational& X, const Rational& Y) {
    ECPoint P{false, X, Y};
    if (!ec_on_curve(P)) throw std::invalid_argument("point is not on the curve");
    return P;
}

bool ec_on_curve(const ECPoint& P) {
    return P.infinity || P.Y * P.Y == curve_rhs(P.X);
}

ECPoint ec_neg(const ECPoint& P) {
    if (P.infinity) return P;
    return ECPoint{false, P.X, -P.Y};
}

ECPoint ec_add(const ECPoint& P, const ECPoint& Q) {
    if (!ec_on_curve(P) || !ec_on_curve(Q))
        throw std::invalid_argument("point is not on the curve");
    if (P.infinity) return Q;
    if (Q.infinity) return P;
    if (P.X == Q.X) {
        if (P.Y != Q.Y || P.Y == 0) return ec_infinity();
        // tangent slope
        Rational s = (3 * P.X * P.X + 2 * kC2 * P.X + kC4) / (2 * P.Y);
        Rational X3 = s * s - kC2 - 2 * P.X;
        return ECPoint{false, X3, s * (P.X - X3) - P.Y};
    }
    Rational s = (Q.Y - P.Y) / (Q.X - P.X);
    Rational X3 = s * s - kC2 - P.X - Q.X;
    return ECPoint{false, X3, s * (P.X - X3) - P.Y};
}

ECPoint ec_double(const ECPoint& P) { return ec_add(P, P); }

Rational ec_j_invariant() {
    Rational b2 = 4 * kC2, b4 = 2 * kC4, b6 = 4 * kC6;
    Rational b8 = (b2 * b6 - b4 * b4) / 4;
    Rational disc = -b2 * b2 * b8 - 8 * b4 * b4 * b4 - 27 * b6 * b6 + 9 * b2 * b4 * b6;
    Rational c4 = b2 * b2 - 24 * b4;
    return c4 * c4 * c4 / disc;
}

Quadruple ec_to_quadruple(const ECPoint& P) {
    if (P.infinity) throw std::invalid_argument("affine point required");
    const Rational &X = P.X, &Y = P.Y;
    Rational bden = 4 + 4 * X + 2 * X * X - 4 * Y - 2 * X * Y + Y * Y;
    Rational uden = 2 + 2 * X - Y;
    if (bden == 0 || uden == 0)
        throw std::domain_error("parameter map undefined at this point");
    Rational b = (-4 - 2 * X + 2 * X * X + X * X * X + 4 * Y + X * Y - Y * Y) / bden;
    Rational u = -(-2 + Y) / uden;
    Rational v = 1;
    Cyclo quartic = system_data().quartic.eval(
        {{"b", Cyclo(b)}, {"u", Cyclo(u)}, {"v", Cyclo(v)}});
    if (!quartic.is_zero())
        throw std::logic_error("plane-quartic identity violated");
    Quadruple q;
    q.a = b + u;
    q.b = b;
    q.d = b + v;
    Rational cden = 2 * b - q.d;
    if (cden == 0) {
        // 0/0 only in already-degenerate quadruples; a genuine pole is an error
        if (q.a * b != 0) throw std::domain_error("parameter map undefined at this point");
        q.c = 0;
        q.valid = false;
        return q;
    }
    q.c = q.a * b / cden;
    Rational vals[4] = {q.a, q.b, q.c, q.d};
    q.valid = true;
    for (int i = 0; i < 4; ++i) {
        if (vals[i] == 0) q.valid = false;
        for (int j = i + 1; j < 4; ++j)
            if (vals[i] == vals[j]) q.valid = false;
    }
    return q;
}

ECVerifyReport ec_verify(const ECPoint& P) {
    ECVerifyReport rep;
    rep.q = ec_to_quadruple(P);
    if (!rep.q.valid) throw std::domain_error("degenerate parameter quadruple");

    bool ab = eval_abcd(system_data().eq1ab, rep.q).is_zero();
    bool ad = eval_abcd(system_data().eq1ad, rep.q).is_zero();
    rep.variant = ab ? "ab" : (ad ? "ad" : "none");
    rep.systemSatisfied = (ab || ad) && eval_abcd(system_data().eq2, rep.q).is_zero();

    AngleConfig cfg{CaseId::C222,
                    {rep.q.a, rep.q.b, rep.q.c, rep.q.d},
                    {ru_make(1, 4), ru_make(1, 8), ru_make(3, 8)}};
    rep.eliminantVanishes = eliminant(cfg).is_zero();
    rep.configVerified = rep.eliminantVanishes && verify_config(cfg);

    // tau = (1 - i)(ab - cd) / (sqrt2 (a - b - sqrt2 b - c + sqrt2 c + d))
    Cyclo i = Cyclo::zeta(8).pow(2);
    Cyclo sqrt2 = Cyclo::zeta(8) + Cyclo::zeta(8).pow(7);
    Cyclo A(rep.q.a), B(rep.q.b), C(rep.q.c), D(rep.q.d);
    Cyclo den = sqrt2 * (A - B - sqrt2 * B - C + sqrt2 * C + D);
    if (den.is_zero()) throw std::domain_error("tau formula denominator vanishes");
    TauValue tv;
    tv.kind = TauValue::ExplicitCyclo;
    // Under the principal embedding the formula realizes the mirrored
    // lattice; conjugating matches the stated argument orientation.
    tv.value = ((Cyclo(1) - i) * (A * B - C * D) * den.inv()).conj();
    rep.tauAnglesVerified =
        verify_angle(tv, std::nullopt, Rational(0), cfg.roots[0]) &&
        verify_angle(tv, rep.q.a, rep.q.b, cfg.roots[1]) &&
        verify_angle(tv, rep.q.c, rep.q.d, cfg.roots[2]);
    return rep;
}

Rational phi_invariant(const Quadruple& q) {
    const Rational &a = q.a, &b = q.b, &c = q.c, &d = q.d;
    Rational den = a * a - 2 * a * b + 3 * b * b - 2 * a * c - 2 * b * c +
                   3 * c * c + 2 * a * d - 2 * b * d - 2 * c * d + d * d;
    if (den == 0) throw std::domain_error("cross-ratio denominator vanishes");
    Rational num = a - b - c + d;
    return 2 * num * num / den;
}

}  // namespace lattangle
