#include "lattangle/spaces.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "lattangle/embed.hpp"
#include "lattangle/uniteq.hpp"

namespace lattangle {

namespace {

int imag_sign(const Cyclo& x) {
    // (x - conj x) * (-i) = 2 Im(x)
    return sign_real((x - x.conj()) * Cyclo::root(ru_make(3, 4)));
}

bool is_rational_square(const Rational& q) {
    if (q <= 0) return false;
    return mpz_perfect_square_p(q.get_num().get_mpz_t()) &&
           mpz_perfect_square_p(q.get_den().get_mpz_t());
}

/// Nullspace of the Q-linear map (x_1..x_n) -> sum x_i * elems[i].
std::vector<QVec> cyclo_nullspace(const std::vector<Cyclo>& elems) {
    long L = 1;
    for (const auto& e : elems) L = std::lcm(L, e.order());
    std::vector<Cyclo> lifted;
    for (const auto& e : elems) lifted.push_back(e.lifted(L));
    size_t rows = lifted.empty() ? 0 : lifted[0].coords().size();
    QMat m(rows, QVec(elems.size(), Rational(0)));
    for (size_t j = 0; j < lifted.size(); ++j)
        for (size_t i = 0; i < rows; ++i) m[i][j] = lifted[j].coords()[i];
    return nullspace(std::move(m), elems.size());
}

/// Q-vector-space basis of the ring generated by the given elements.
std::vector<Cyclo> ring_basis(const std::vector<Cyclo>& gens) {
    std::vector<Cyclo> basis{Cyclo(1)};
    bool grew = true;
    while (grew) {
        grew = false;
        for (const auto& g : gens) {
            for (size_t i = 0; i < basis.size(); ++i) {
                Cyclo x = basis[i] * g;
                if (!q_decompose(x, basis)) {
                    basis.push_back(x.reduced());
                    grew = true;
                }
            }
        }
    }
    return basis;
}

long legendre_symbol(long a, long p) {
    a %= p;
    if (a < 0) a += p;
    long r = 1, base = a, e = (p - 1) / 2;
    while (e) {
        if (e & 1) r = r * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return r == p - 1 ? -1 : r;
}

}  // namespace

Cyclo sqrt_minus(long d) {
    if (d <= 0 || !is_squarefree(d)) throw std::invalid_argument("d must be positive squarefree");
    Cyclo s(1);
    long m = d;
    if (m % 2 == 0) {
        s = Cyclo::zeta(8) + Cyclo::zeta(8, 7);  // sqrt(2)
        m /= 2;
    }
    for (const auto& [pf, e] : factorize(Integer(m))) {
        long p = pf.get_si();
        Cyclo g(0);
        for (long a = 1; a < p; ++a)
            g += Cyclo(legendre_symbol(a, p)) * Cyclo::zeta(p, a);
        s *= g;  // g^2 = +p or -p depending on p mod 4
    }
    Cyclo sq = (s * s).reduced();
    auto r = sq.as_rational();
    if (!r || (*r != d && *r != -d)) throw std::logic_error("square-root construction failed");
    if (*r == d) s *= Cyclo::zeta(4);
    if (imag_sign(s) < 0) s = -s;
    return s.reduced();
}

CmInfo cm_catalog(long d) {
    if (d <= 0 || !is_squarefree(d)) throw std::invalid_argument("d must be positive squarefree");
    CmInfo info;
    info.d = d;
    if (d == 1) {
        Cyclo i = Cyclo::zeta(4);
        info.catalog = {i, i + Cyclo(1), i - Cyclo(1)};
    } else if (d == 3) {
        Cyclo z = Cyclo::zeta(3);
        info.catalog = {sqrt_minus(3), z, z - Cyclo(1), z + Cyclo(1), z + Cyclo(2)};
    } else {
        info.catalog = {sqrt_minus(d)};
    }
    return info;
}

SpaceSpec normalize_space(const Cyclo& v1, const Cyclo& v2) {
    if (v1.is_zero() || v2.is_zero()) throw std::invalid_argument("zero generator");
    Cyclo tau = (v2 * v1.inv()).reduced();
    if (tau == tau.conj()) throw std::invalid_argument("proportional generators: ratio is real");
    SpaceSpec s;
    int im = imag_sign(tau), re = sign_real(tau + tau.conj());
    if (im < 0 && re > 0) {
        tau = tau.conj();  // reflect across the real axis
        s.conjugated = true;
    } else if (im < 0) {
        tau = -tau;  // free move: <1,tau> = <1,-tau>
    } else if (re < 0) {
        tau = -tau.conj();  // reflect, then negate to restore Im > 0
        s.conjugated = true;
    }
    s.tau.kind = TauValue::ExplicitCyclo;
    s.tau.value = tau.reduced();
    return s;
}

std::optional<CmInfo> is_cm(const SpaceSpec& s) {
    if (s.transcendental) return std::nullopt;
    if (s.tau.kind == TauValue::QuadraticRoot) {
        // the quadratic already witnesses [Q(tau):Q] = 2 when rational
        auto q1 = s.tau.q1.as_rational(), q0 = s.tau.q0.as_rational();
        if (!q1 || !q0) return std::nullopt;
        Rational disc = *q1 * *q1 - 4 * *q0;
        if (disc >= 0) return std::nullopt;
        return cm_catalog(squarefree_part(-disc).get_si());
    }
    QPoly p = min_poly(s.tau.value);
    if (p.size() != 3) return std::nullopt;  // degree != 2
    Rational disc = p[1] * p[1] - 4 * p[0];
    if (disc >= 0) throw std::logic_error("real quadratic shape parameter");
    Rational m = -disc;
    Integer w = m.get_num() * m.get_den();
    return cm_catalog(squarefree_part(w).get_si());
}

long roots_of_unity_order(const Cyclo& tau, bool withConjugate) {
    std::vector<Cyclo> gens{tau};
    if (withConjugate) gens.push_back(tau.conj());
    std::vector<Cyclo> basis = ring_basis(gens);
    long n0 = 1;
    for (const auto& b : basis) n0 = std::lcm(n0, b.order());
    long ambient = n0 % 2 == 0 ? n0 : 2 * n0;
    long M = 1;
    for (long m : divisors(ambient))
        if (q_decompose(Cyclo::zeta(m), basis)) M = std::lcm(M, m);
    return M;
}

SymmetryFlags symmetry_predicates(const SpaceSpec& s) {
    if (s.tau.kind != TauValue::ExplicitCyclo)
        throw std::invalid_argument("predicates require an explicit shape parameter");
    const Cyclo& tau = s.tau.value;
    Cyclo taubar = tau.conj();
    SymmetryFlags f;
    bool cm = is_cm(s).has_value();

    // homothetic to the conjugate space: some mu = a + b*tau satisfies
    // mu * conj(tau) in <1, tau>
    auto null1 = cyclo_nullspace({taubar, tau * taubar, Cyclo(-1), -tau});
    f.homConjClass = !null1.empty();

    // conjugation-stable representative exists: CM spaces always qualify;
    // otherwise the multiplier mu is unique up to rational scaling and the
    // class is determined by whether |mu|^2 is a rational square
    if (cm) {
        f.selfConjClass = true;
    } else if (f.homConjClass) {
        const QVec& v = null1[0];
        Cyclo mu = Cyclo(v[0]) + Cyclo(v[1]) * tau;
        auto r = (mu * mu.conj()).reduced().as_rational();
        if (!r) throw std::logic_error("multiplier norm must be rational");
        f.selfConjClass = is_rational_square(*r);
    }

    // right angle: u * conj(v) + conj(u) * v = 0 with u = a + b tau,
    // v = c + d tau reduces to 2ac + (ad + bc)(tau + conj tau)
    // + 2bd |tau|^2 = 0; solve for (P1, P2, P3) = (ac, ad + bc, bd) and
    // demand P2^2 - 4 P1 P3 = (ad - bc)^2 a positive rational square
    Cyclo trace = tau + taubar, norm = tau * taubar;
    auto null2 = cyclo_nullspace({Cyclo(2), trace, Cyclo(2) * norm});
    if (null2.size() >= 2) {
        f.rectangular = true;  // CM: a two-parameter family always realizes one
    } else if (null2.size() == 1) {
        const QVec& p = null2[0];
        f.rectangular = is_rational_square(p[1] * p[1] - 4 * p[0] * p[2]);
    }

    // homothetic to <1, omega> with omega a root of unity: some omega of
    // order >= 3 in Q(tau) makes {1, tau, omega, omega*tau} degenerate
    long M = roots_of_unity_order(tau, false);
    for (long k = 1; k < M && !f.superrectangular; ++k) {
        RootOfUnity w = ru_make(k, M);
        if (w.den < 3) continue;  // real omega
        Cyclo omega = Cyclo::root(w);
        if (q_rank({Cyclo(1), tau, omega, omega * tau}) <= 3) f.superrectangular = true;
    }
    return f;
}

AngleSearchResult find_rational_angles(const SpaceSpec& s,
                                       const std::vector<RootOfUnity>& muSqSet) {
    AngleSearchResult out;
    if (s.transcendental) {
        // only the defining angle exists, up to equivalence
        out.angles.push_back({RootOfUnity(), {Rational(0), Rational(1)}, {Rational(1), Rational(0)}});
        return out;
    }
    if (s.tau.kind != TauValue::ExplicitCyclo)
        throw std::invalid_argument("angle search requires an explicit shape parameter");
    const Cyclo& tau = s.tau.value;

    std::vector<RootOfUnity> cands = muSqSet;
    if (cands.empty()) {
        long M = roots_of_unity_order(tau, true);
        for (long k = 1; k < M; ++k) cands.push_back(ru_make(k, M));
    }

    std::vector<AngleRecord> raw;
    for (const auto& muSq : cands) {
        if (muSq.is_one()) continue;
        auto abc = angle_coeffs_ABC(tau, muSq);
        if (abc.A.is_rational() && abc.B.is_rational() && abc.C.is_rational()) {
            out.cmInfinite = true;
            continue;
        }
        // rational points of A uv + B u + C v + 1 = 0 where the vectors are
        // u*tau + 1 and v*tau + 1; poles u or v = infinity are the tau axis
        auto res = monomial_linear_solve(Cyclo(1), abc.B, abc.C, abc.A);
        if (res.infinite) {
            out.cmInfinite = true;
            continue;
        }
        for (const auto& [u, v] : res.solutions)
            raw.push_back({muSq, {u, Rational(1)}, {v, Rational(1)}});
        Cyclo ainv = abc.A.inv();
        Cyclo bOverA = (-abc.B * ainv).reduced(), cOverA = (-abc.C * ainv).reduced();
        if (auto vb = bOverA.as_rational())
            raw.push_back({muSq, {Rational(1), Rational(0)}, {*vb, Rational(1)}});
        if (auto uc = cOverA.as_rational())
            raw.push_back({muSq, {*uc, Rational(1)}, {Rational(1), Rational(0)}});
    }

    if (out.cmInfinite) out.cm = is_cm(s);

    // canonical representative of each angle: the smaller of the record and
    // its orientation reversal
    for (auto& r : raw) {
        AngleRecord rev{r.muSq.inverse(), r.v1, r.v0};
        if (rev < r) r = rev;
    }
    std::sort(raw.begin(), raw.end());
    raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
    out.angles = std::move(raw);
    return out;
}

std::map<std::string, long> lattice_root_orders() {
    std::map<std::string, long> catalog{{"gaussian", 8}, {"eisenstein", 12}};
    // re-verify: every catalog angle of the two CM fields has an argument mu
    // with mu^2 of order dividing the tabulated value (mu of twice that order)
    for (auto [name, d] : {std::pair<std::string, long>{"gaussian", 1}, {"eisenstein", 3}}) {
        long bound = catalog[name];
        for (const auto& lam : cm_catalog(d).catalog) {
            auto muSq = as_root_of_unity(lam * lam.conj().inv());
            // both square roots of a primitive m-th root have order dividing 2m
            if (!muSq || bound % (2 * muSq->den) != 0)
                throw std::logic_error("catalog verification failed for " + name);
        }
    }
    return catalog;
}

}  // namespace lattangle
