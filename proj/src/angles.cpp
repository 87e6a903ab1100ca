#include "lattangle/angles.hpp"

#include <mutex>
#include <stdexcept>

#include "lattangle/embed.hpp"
#include "lattangle/io.hpp"

namespace lattangle {

AngleConfig conj_config(const AngleConfig& cfg) {
    AngleConfig out = cfg;
    for (auto& r : out.roots) r = r.inverse();
    return out;
}

AngleCurveCoeffs angle_coeffs_ABC(const Cyclo& tau, const RootOfUnity& muSq) {
    if (muSq.is_one()) throw std::invalid_argument("squared argument must differ from 1");
    Cyclo taubar = tau.conj();
    if (tau == taubar) throw std::invalid_argument("tau must not be real");
    Cyclo y = Cyclo::root(muSq);
    Cyclo den = (y - Cyclo(1)).inv();
    AngleCurveCoeffs out;
    out.A = tau * taubar;
    out.B = (y * tau - taubar) * den;
    out.C = (y * taubar - tau) * den;
    return out;
}

TauValue tau_from_tuple(const Rational& a, const RootOfUnity& x0, const RootOfUnity& xj) {
    if (a == 0) throw std::invalid_argument("tuple parameter must be nonzero");
    if (x0 == xj || x0.is_one() || xj.is_one())
        throw std::invalid_argument("tuple roots must be distinct and different from 1");
    Cyclo X0 = Cyclo::root(x0), Xj = Cyclo::root(xj);
    TauValue t;
    t.kind = TauValue::ExplicitCyclo;
    t.value = Cyclo(a) * X0 * (Xj - Cyclo(1)) * (X0 - Xj).inv();
    if (t.value == t.value.conj()) throw std::logic_error("recovered tau is real");
    return t;
}

std::array<Cyclo, 3> pair_quadratic(const Rational& b0, const Rational& bj,
                                    const RootOfUnity& x0, const RootOfUnity& yj) {
    if (b0 == bj || b0 == 0 || bj == 0)
        throw std::invalid_argument("pair parameters must be distinct and nonzero");
    if (yj.is_one()) throw std::invalid_argument("pair squared argument must differ from 1");
    Cyclo X = Cyclo::root(x0), Y = Cyclo::root(yj), one(1);
    Cyclo c2 = Y - one;
    Cyclo c1 = Cyclo(b0) * (Y - X) + Cyclo(bj) * (X * Y - one);
    Cyclo c0 = Cyclo(b0 * bj) * X * (Y - one);
    return {c2, c1, c0};
}

const MPoly& case4_poly() {
    static const MPoly p = MPoly::parse(
        "(a-b)*x + b*y - a*z - a*x*y + b*x*z + (a-b)*y*z");
    return p;
}

const MPoly& case32_poly() {
    static const MPoly p = MPoly::parse(
        "(2*a^2 - a*(b+c) + 2*b*c)*x*y - a*b*x^2*y - a*c*y - a*(a-b)*x*y^2 - a*(a-c)*x"
        " + b*(a-c)*x^2 + c*(a-b)*y^2 - (2*a^2 - a*(b+c) + 2*b*c)*x*y*z"
        " + a*c*x^2*y*z + a*b*y*z + a*(a-c)*x*y^2*z + a*(a-b)*x*z - c*(a-b)*x^2*z"
        " - b*(a-c)*y^2*z");
    return p;
}

const MPoly& case222_poly() {
    static MPoly poly;
    static std::once_flag flag;
    std::call_once(flag, [] {
        Json payload = load_checked_data(std::string(LATTANGLE_DATA_DIR) + "/c222_table.json");
        MPoly sum;
        for (const auto& row : payload.at("rows")) {
            MPoly coeff = MPoly::parse(row.at("coeff").get<std::string>());
            for (const auto& mono : row.at("monomials")) {
                MPoly::Exps e = mono.get<MPoly::Exps>();
                sum += coeff * MPoly::monomial(Cyclo(1), {"x", "y", "z"}, e);
            }
        }
        poly = std::move(sum);
    });
    return poly;
}

static void check_config(const AngleConfig& cfg) {
    size_t nparams = cfg.caseId == CaseId::C4 ? 2 : cfg.caseId == CaseId::C32 ? 3 : 4;
    if (cfg.params.size() != nparams || cfg.roots.size() != 3)
        throw std::invalid_argument("malformed configuration");
    for (size_t i = 0; i < nparams; ++i) {
        if (cfg.params[i] == 0) throw std::invalid_argument("zero parameter");
        for (size_t j = i + 1; j < nparams; ++j)
            if (cfg.params[i] == cfg.params[j])
                throw std::invalid_argument("parameters must be distinct");
    }
    for (const auto& r : cfg.roots)
        if (r.is_one()) throw std::invalid_argument("roots must differ from 1");
}

Cyclo eliminant(const AngleConfig& cfg) {
    check_config(cfg);
    std::map<std::string, Cyclo> pt;
    const char* pnames[] = {"a", "b", "c", "d"};
    for (size_t i = 0; i < cfg.params.size(); ++i) pt[pnames[i]] = Cyclo(cfg.params[i]);
    const char* rnames[] = {"x", "y", "z"};
    for (size_t i = 0; i < 3; ++i) pt[rnames[i]] = Cyclo::root(cfg.roots[i]);
    switch (cfg.caseId) {
        case CaseId::C4: return case4_poly().eval(pt);
        case CaseId::C32: return case32_poly().eval(pt);
        case CaseId::C222: return case222_poly().eval(pt);
    }
    throw std::logic_error("unreachable");
}

TauRecovery tau_recover(const AngleConfig& cfg) {
    if (!eliminant(cfg).is_zero())
        throw std::invalid_argument("configuration does not satisfy the case equation");
    Cyclo tau;
    Cyclo one(1);
    Cyclo X = Cyclo::root(cfg.roots[0]), Y = Cyclo::root(cfg.roots[1]),
          Z = Cyclo::root(cfg.roots[2]);
    if (cfg.caseId == CaseId::C222) {
        Rational ab = cfg.params[0] * cfg.params[1], cd = cfg.params[2] * cfg.params[3];
        if (ab == cd)
            throw std::invalid_argument("degenerate product equality: use proportional_branch");
        Cyclo a(cfg.params[0]), b(cfg.params[1]), c(cfg.params[2]), d(cfg.params[3]);
        Cyclo den = a * (Y - X) * (Z - one) + b * (X * Y - one) * (Z - one) -
                    c * (Z - X) * (Y - one) - d * (X * Z - one) * (Y - one);
        tau = Cyclo(cd - ab) * X * (Y - one) * (Z - one) * den.inv();
    } else {
        tau = Cyclo(cfg.params[0]) * X * (Y - one) * (X - Y).inv();
    }
    if (tau == tau.conj()) throw std::logic_error("recovered tau is real");
    TauRecovery out;
    out.conjugated = false;
    // branch normalization (display orientation only): conjugate the whole
    // configuration when the imaginary part is negative
    if (embed(tau).im < 0) {
        tau = tau.conj();
        out.conjugated = true;
    }
    out.tau.kind = TauValue::ExplicitCyclo;
    out.tau.value = tau;
    return out;
}

ProportionalResult proportional_branch(const AngleConfig& cfg) {
    if (cfg.caseId != CaseId::C222) throw std::invalid_argument("proportional branch is for the three-pair case");
    check_config(cfg);
    if (cfg.params[0] * cfg.params[1] != cfg.params[2] * cfg.params[3])
        throw std::invalid_argument("requires equal parameter products");
    auto q1 = pair_quadratic(cfg.params[0], cfg.params[1], cfg.roots[0], cfg.roots[1]);
    auto q2 = pair_quadratic(cfg.params[2], cfg.params[3], cfg.roots[0], cfg.roots[2]);
    ProportionalResult out;
    bool prop = (q1[0] * q2[1] - q1[1] * q2[0]).is_zero() &&
                (q1[0] * q2[2] - q1[2] * q2[0]).is_zero() &&
                (q1[1] * q2[2] - q1[2] * q2[1]).is_zero();
    if (!prop) {
        out.status = ProportionalResult::UniqueZero;
        return out;
    }
    out.status = ProportionalResult::Proportional;
    Cyclo inv = q1[0].inv();
    out.q1 = q1[1] * inv;
    out.q0 = q1[2] * inv;
    // four-cosine relation with half-argument roots
    auto half = [](const RootOfUnity& r) { return Cyclo::root(RootOfUnity(r.num, 2 * r.den)); };
    Cyclo th = half(cfg.roots[0]), mu = half(cfg.roots[1]), eta = half(cfg.roots[2]);
    auto re = [](const Cyclo& w) { return w + w.conj(); };  // 2*Re, sign-equivalent
    Cyclo a(cfg.params[0]), b(cfg.params[1]), c(cfg.params[2]);
    Cyclo expr = b * (a - c) * re(th * mu * eta) - c * (a - c) * re(mu * eta * th.inv()) -
                 a * (b - c) * re(th * eta * mu.inv()) + c * (b - c) * re(th * mu * eta.inv());
    out.cosineCheck = expr.is_zero();
    return out;
}

namespace {

// elements of Q(zeta)[tau] / (tau^2 + q1 tau + q0): c0 + c1 * tau
struct QuadElem {
    Cyclo c0, c1;
};

QuadElem qmul(const QuadElem& x, const QuadElem& y, const Cyclo& q1, const Cyclo& q0) {
    // (x0 + x1 t)(y0 + y1 t) = x0y0 + (x0y1 + x1y0) t + x1y1 t^2,
    // t^2 = -q1 t - q0
    Cyclo t2 = x.c1 * y.c1;
    return {x.c0 * y.c0 - t2 * q0, x.c0 * y.c1 + x.c1 * y.c0 - t2 * q1};
}

}  // namespace

bool verify_angle(const TauValue& tau, const AngleVector& v0, const AngleVector& v1,
                  const RootOfUnity& muSq) {
    Cyclo y = Cyclo::root(muSq);
    if (tau.kind == TauValue::ExplicitCyclo) {
        Cyclo t = tau.value, tb = tau.value.conj();
        Cyclo a = v0 ? t + Cyclo(*v0) : Cyclo(1);
        Cyclo ab = v0 ? tb + Cyclo(*v0) : Cyclo(1);
        Cyclo b = v1 ? t + Cyclo(*v1) : Cyclo(1);
        Cyclo bb = v1 ? tb + Cyclo(*v1) : Cyclo(1);
        return (y * a * bb - ab * b).is_zero();
    }
    // quadratic tau: conj(tau) = tau / x0; work modulo the quadratic
    Cyclo xinv = Cyclo::root(tau.x0.inverse());
    auto vec = [&](const AngleVector& v, bool conj) -> QuadElem {
        if (!v) return {Cyclo(1), Cyclo(0)};
        return {Cyclo(*v), conj ? xinv : Cyclo(1)};
    };
    QuadElem lhs = qmul({y * Cyclo(1), Cyclo(0)}, qmul(vec(v0, false), vec(v1, true), tau.q1, tau.q0),
                        tau.q1, tau.q0);
    QuadElem rhs = qmul(vec(v0, true), vec(v1, false), tau.q1, tau.q0);
    return (lhs.c0 - rhs.c0).is_zero() && (lhs.c1 - rhs.c1).is_zero();
}

bool verify_config(const AngleConfig& cfg) {
    TauRecovery rec = tau_recover(cfg);
    const AngleConfig c = rec.conjugated ? conj_config(cfg) : cfg;
    const RootOfUnity x = c.roots[0], y = c.roots[1], z = c.roots[2];
    const TauValue& t = rec.tau;
    auto tv = [](const Rational& b) { return AngleVector(b); };
    const AngleVector one = std::nullopt, tauv = tv(0);
    switch (c.caseId) {
        case CaseId::C4: {
            // tuple (1, tau, tau+a, tau+b) with squared arguments x, y, z
            AngleVector vs[] = {one, tauv, tv(c.params[0]), tv(c.params[1])};
            RootOfUnity args[] = {RootOfUnity(), x, y, z};
            for (int i = 0; i < 4; ++i)
                for (int j = i + 1; j < 4; ++j)
                    if (!verify_angle(t, vs[i], vs[j], args[j] * args[i].inverse()))
                        return false;
            return true;
        }
        case CaseId::C32: {
            AngleVector vs[] = {one, tauv, tv(c.params[0])};
            RootOfUnity args[] = {RootOfUnity(), x, y};
            for (int i = 0; i < 3; ++i)
                for (int j = i + 1; j < 3; ++j)
                    if (!verify_angle(t, vs[i], vs[j], args[j] * args[i].inverse()))
                        return false;
            return verify_angle(t, tv(c.params[1]), tv(c.params[2]), z);
        }
        case CaseId::C222:
            return verify_angle(t, one, tauv, x) &&
                   verify_angle(t, tv(c.params[0]), tv(c.params[1]), y) &&
                   verify_angle(t, tv(c.params[2]), tv(c.params[3]), z);
    }
    return false;
}

}  // namespace lattangle
