#include "lattangle/coset.hpp"

#include <numeric>
#include <stdexcept>

#include "lattangle/embed.hpp"

namespace lattangle {

namespace {

const MPoly& case_poly(CaseId id) {
    switch (id) {
        case CaseId::C4: return case4_poly();
        case CaseId::C32: return case32_poly();
        case CaseId::C222: return case222_poly();
    }
    throw std::logic_error("unreachable");
}

std::map<std::string, MPoly> param_subst(const AngleConfig& cfg) {
    std::map<std::string, MPoly> m;
    const char* names[] = {"a", "b", "c", "d"};
    for (size_t i = 0; i < cfg.params.size(); ++i)
        m[names[i]] = MPoly::constant(Cyclo(cfg.params[i]));
    return m;
}

long mod_inverse(long a, long n) {
    long t = 0, newt = 1, r = n, newr = ((a % n) + n) % n;
    while (newr != 0) {
        long q = r / newr;
        t -= q * newt;
        std::swap(t, newt);
        r -= q * newr;
        std::swap(r, newr);
    }
    if (r != 1) throw std::invalid_argument("not invertible");
    return ((t % n) + n) % n;
}

long ipow(long b, long e) {
    long r = 1;
    while (e--) r *= b;
    return r;
}

/// Split a root of unity into zeta_{p^m}^v times a part coprime to p.
void split_root(const RootOfUnity& r, long p, long m, long& v, RootOfUnity& coprime) {
    long den = r.den, a = 0;
    while (den % p == 0) {
        den /= p;
        ++a;
    }
    if (a > m) throw std::invalid_argument("p-adic valuation exceeds m");
    long pa = ipow(p, a), c = den;
    if (a == 0) {
        v = 0;
        coprime = r;
        return;
    }
    long A = c == 1 ? (r.num % pa) : (r.num % pa) * mod_inverse(c, pa) % pa;
    long B = c == 1 ? 0 : (r.num % c) * mod_inverse(pa, c) % c;
    v = ((A % pa) + pa) % pa * ipow(p, m - a);
    coprime = c == 1 ? RootOfUnity() : RootOfUnity(B, c);
}

}  // namespace

SolutionPoint make_solution(const AngleConfig& cfg) {
    if (!eliminant(cfg).is_zero())
        throw std::invalid_argument("configuration does not satisfy the case equation");
    SolutionPoint s;
    s.cfg = cfg;
    s.order = 1;
    for (const auto& r : cfg.roots) s.order = std::lcm(s.order, r.den);
    return s;
}

BoundConstants constants() {
    Integer prod = 1;
    for (long p : {7, 11, 13, 17, 19, 23, 29, 31, 37}) prod *= p;
    Integer base;
    mpz_ui_pow_ui(base.get_mpz_t(), 2, 6);
    Integer t1, t2;
    mpz_ui_pow_ui(t1.get_mpz_t(), 3, 4);
    mpz_ui_pow_ui(t2.get_mpz_t(), 5, 3);
    BoundConstants c;
    c.N0 = base * t1 * t2 * prod * prod;
    c.thmBound = 2 * c.N0;
    return c;
}

std::array<long, 3> p_part_exponents(const SolutionPoint& sol, long p, long m) {
    long pm = ipow(p, m);
    if (sol.order % pm != 0 || (sol.order / pm) % p == 0)
        throw std::invalid_argument("p^m must divide the order exactly");
    std::array<long, 3> v{};
    for (int j = 0; j < 3; ++j) {
        RootOfUnity cop;
        split_root(sol.cfg.roots[j], p, m, v[j], cop);
    }
    return v;
}

std::vector<Cyclo> gamma_decompose(const SolutionPoint& sol, long p, long m) {
    long pm = ipow(p, m);
    if (sol.order % pm != 0 || (sol.order / pm) % p == 0)
        throw std::invalid_argument("p^m must divide the order exactly");
    std::array<long, 3> v{};
    std::array<RootOfUnity, 3> xi;
    for (int j = 0; j < 3; ++j) split_root(sol.cfg.roots[j], p, m, v[j], xi[j]);

    long modulus = m == 1 ? p : ipow(p, m - 1);
    Cyclo zeta = Cyclo::zeta(pm);
    MPoly poly = case_poly(sol.cfg.caseId)
                     .substitute(param_subst(sol.cfg))
                     .with_vars({"x", "y", "z"});

    std::vector<Cyclo> gamma(modulus, Cyclo(0));
    for (const auto& [e, coeff] : poly.terms()) {
        long dot = v[0] * e[0] + v[1] * e[1] + v[2] * e[2];
        long i = dot % modulus;
        RootOfUnity xe = xi[0].pow(e[0]) * xi[1].pow(e[1]) * xi[2].pow(e[2]);
        gamma[i] += coeff * Cyclo::root(xe) * zeta.pow(dot - i);
    }
    return gamma;
}

std::array<long, 3> short_vector(const std::array<long, 3>& v, long M) {
    if (M < 1 || M > 10000) throw std::invalid_argument("enumeration range exceeded");
    if (v[0] % M == 0 && v[1] % M == 0 && v[2] % M == 0)
        throw std::invalid_argument("v must be nonzero modulo M");
    std::array<long, 3> best{};
    long long bestNorm = -1;
    for (long k = 0; k < M; ++k) {
        std::array<long, 3> base;
        for (int j = 0; j < 3; ++j) base[j] = ((k * v[j]) % M + M) % M;
        for (int s0 = -1; s0 <= 1; ++s0)
            for (int s1 = -1; s1 <= 1; ++s1)
                for (int s2 = -1; s2 <= 1; ++s2) {
                    std::array<long, 3> w{base[0] + s0 * M, base[1] + s1 * M,
                                          base[2] + s2 * M};
                    if (w[0] == 0 && w[1] == 0 && w[2] == 0) continue;
                    // w and -w generate the same coset line: fix the sign so
                    // the first nonzero coordinate is positive
                    for (long c : w) {
                        if (c == 0) continue;
                        if (c < 0)
                            for (auto& x : w) x = -x;
                        break;
                    }
                    long long n = 0;
                    for (long c : w) n += (long long)c * c;
                    if (bestNorm < 0 || n < bestNorm || (n == bestNorm && w < best)) {
                        bestNorm = n;
                        best = w;
                    }
                }
    }
    // Hermite-constant bound |w|^6 <= 2 M^4, exact in integers
    Integer lhs(static_cast<long>(bestNorm));
    lhs = lhs * lhs * lhs;
    Integer rhs(M);
    rhs = 2 * rhs * rhs * rhs * rhs;
    if (lhs > rhs) throw std::logic_error("short vector exceeds the volume bound");
    return best;
}

std::optional<FamilyWitness> coset_family_test(const SolutionPoint& sol,
                                               const std::array<long, 3>& w) {
    auto subst = param_subst(sol.cfg);
    const char* names[] = {"x", "y", "z"};
    for (int j = 0; j < 3; ++j)
        subst[names[j]] =
            MPoly::monomial(Cyclo::root(sol.cfg.roots[j]), {"t"}, {w[j]});
    if (!case_poly(sol.cfg.caseId).substitute(subst).is_zero()) return std::nullopt;
    FamilyWitness fw;
    fw.w = w;
    fw.basePoint = sol;
    return fw;
}

FamilyReport verify_families() {
    FamilyReport rep;
    MPoly t = MPoly::variable("t");
    MPoly mb = -MPoly::variable("b"), ma = -MPoly::variable("a");

    // three-pair family: x = -1, y = z = t, c = -b, d = -a
    rep.rightAngleFamilySymbolic =
        case222_poly()
            .substitute({{"c", mb}, {"d", ma}, {"x", MPoly::constant(Cyclo(-1))},
                         {"y", t}, {"z", t}})
            .is_zero();

    // four-tuple family: a = 2b, (x, y, z) = (t, -t, t^2)
    rep.doubledFamilySymbolic =
        case4_poly()
            .substitute({{"a", MPoly::constant(Cyclo(2)) * MPoly::variable("b")},
                         {"x", t}, {"y", -t}, {"z", t * t}})
            .is_zero();

    rep.allSamplesVerified = true;
    auto fail = [&] { rep.allSamplesVerified = false; };

    // right-angle family samples: negative a guarantees the quadratic has a
    // purely imaginary root
    Rational as[] = {-2, -3, -5, Rational(-1, 2), Rational(-3, 4)};
    long ns[] = {5, 7, 8, 9, 12, 16, 20, 11, 13, 15};
    int idx = 0;
    for (long n : ns) {
        Rational a = as[idx++ % 5];
        AngleConfig cfg{CaseId::C222, {a, 1, -1, -a},
                        {ru_make(1, 2), ru_make(1, n), ru_make(1, n)}};
        ++rep.samplesChecked;
        if (!eliminant(cfg).is_zero()) {
            fail();
            continue;
        }
        auto pr = proportional_branch(cfg);
        Cyclo y = Cyclo::zeta(n), one(1);
        Cyclo q1ref = Cyclo(a - 1) * (y + one) * (y - one).inv();
        // purely imaginary root exists iff -q1^2 - 4 q0 >= 0 on the real axis
        bool ok = pr.status == ProportionalResult::Proportional && pr.cosineCheck &&
                  pr.q1 == q1ref && pr.q0 == Cyclo(-a) &&
                  sign_real(-pr.q1 * pr.q1 - Cyclo(4) * pr.q0) >= 0;
        if (ok) {
            TauValue tv;
            tv.kind = TauValue::QuadraticRoot;
            tv.q1 = pr.q1;
            tv.q0 = pr.q0;
            tv.x0 = ru_make(1, 2);
            ok = verify_angle(tv, std::nullopt, Rational(0), ru_make(1, 2)) &&
                 verify_angle(tv, a, Rational(1), ru_make(1, n)) &&
                 verify_angle(tv, Rational(-1), -a, ru_make(1, n));
        }
        if (!ok) fail();
    }

    // doubled family samples: tuple parameters (2b, b), roots (t, -t, t^2)
    Rational bs[] = {1, 2, -1, 3, Rational(1, 2)};
    idx = 0;
    for (long n : ns) {
        Rational b = bs[idx++ % 5];
        RootOfUnity tr = ru_make(1, n);
        AngleConfig cfg{CaseId::C4, {2 * b, b},
                        {tr, ru_make(1, 2) * tr, ru_make(2, n)}};
        ++rep.samplesChecked;
        if (!eliminant(cfg).is_zero() || !verify_config(cfg)) {
            fail();
            continue;
        }
        // the homothety representative (t+1)/(t-1) is purely imaginary
        Cyclo tc = Cyclo::zeta(n), one(1);
        if (!is_imaginary((tc + one) * (tc - one).inv())) fail();
    }
    return rep;
}

CertifyResult certify_solution(const SolutionPoint& sol) {
    CertifyResult res;
    long n = sol.order;
    for (const auto& [pf, m] : factorize(Integer(n))) {
        long p = pf.get_si();
        long pm1 = ipow(p, m - 1);
        bool large = p == 2 ? m > 6 : pm1 >= 39;
        if (!large) continue;
        long M = m == 1 ? p : pm1;
        auto v = p_part_exponents(sol, p, m);
        auto w = short_vector(v, M);
        auto fw = coset_family_test(sol, w);
        if (!fw) {
            res.kind = CertifyResult::ContractViolation;
            res.witness.reset();
            return res;
        }
        res.kind = CertifyResult::Family;
        if (!res.witness) res.witness = fw;
    }
    return res;
}

}  // namespace lattangle
