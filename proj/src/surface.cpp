#include <stdexcept>

#include "lattangle/angles.hpp"
#include "lattangle/surface.hpp"

namespace lattangle {

namespace {

Cyclo ru_val(const RootOfUnity& r) { return Cyclo::root(r); }

// determinant by cofactor expansion; n is small (4)
MPoly det(std::vector<std::vector<MPoly>> m) {
    size_t n = m.size();
    if (n == 1) return m[0][0];
    MPoly acc;
    for (size_t j = 0; j < n; ++j) {
        std::vector<std::vector<MPoly>> minor;
        for (size_t i = 1; i < n; ++i) {
            std::vector<MPoly> row;
            for (size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(m[i][k]);
            minor.push_back(std::move(row));
        }
        MPoly term = m[0][j] * det(std::move(minor));
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

}  // namespace

MPoly resultant_E(const QuadraticPair& qp) {
    const MPoly &A1 = qp.A1, &A2 = qp.A2, &B1 = qp.B1, &B2 = qp.B2;
    MPoly two = MPoly::constant(Cyclo(2));
    return B2 * B2 - A1 * B1 * B2 + (A1 * A1 - two * A2) * B2 + A2 * B1 * B1 -
           A1 * A2 * B1 + A2 * A2;
}

MPoly resultant_E_elimination(const QuadraticPair& qp) {
    MPoly d1 = qp.B1 - qp.A1, d2 = qp.B2 - qp.A2;
    return d2 * d2 - qp.A1 * d1 * d2 + qp.A2 * d1 * d1;
}

MPoly sylvester_resultant(const QuadraticPair& qp) {
    MPoly one = MPoly::constant(Cyclo(1)), zero;
    return det({{one, qp.A1, qp.A2, zero},
                {zero, one, qp.A1, qp.A2},
                {one, qp.B1, qp.B2, zero},
                {zero, one, qp.B1, qp.B2}});
}

EStarResult estar(const RootOfUnity& x, const RootOfUnity& y, const RootOfUnity& z) {
    if (x.is_one() || y.is_one() || z.is_one())
        throw std::invalid_argument("roots must differ from 1");
    Cyclo xv = ru_val(x), yv = ru_val(y), zv = ru_val(z);
    MPoly a = MPoly::variable("a"), b = MPoly::variable("b");
    MPoly c = MPoly::variable("c"), d = MPoly::variable("d");
    auto C = [](const Cyclo& v) { return MPoly::constant(v); };
    Cyclo yd = (yv - Cyclo(1)).inv(), zd = (zv - Cyclo(1)).inv();

    QuadraticPair qp;
    qp.A1 = C((yv - xv) * yd) * a + C((xv * yv - Cyclo(1)) * yd) * b;
    qp.A2 = C(xv) * a * b;
    qp.B1 = C((zv - xv) * zd) * c + C((xv * zv - Cyclo(1)) * zd) * d;
    qp.B2 = C(xv) * c * d;

    EStarResult res;
    res.estar = resultant_E(qp);
    res.warning = (ru_val(x) + Cyclo(1)).is_zero() &&
                  ((yv + Cyclo(1)).is_zero() || (zv + Cyclo(1)).is_zero());

    MPoly p = case222_poly().substitute(
        {{"x", C(xv)}, {"y", C(yv)}, {"z", C(zv)}});
    Cyclo scale = (yv - Cyclo(1)).pow(2) * (zv - Cyclo(1)).pow(2) * ru_val(x).inv();
    res.identityHolds = (p - C(scale) * res.estar).is_zero();
    return res;
}

bool defined_over_q(const RootOfUnity& x, const RootOfUnity& y, const RootOfUnity& z) {
    if (x.is_one() || y.is_one() || z.is_one())
        throw std::invalid_argument("roots must differ from 1");
    auto all_divide = [&](long n) {
        return n % x.den == 0 && n % y.den == 0 && n % z.den == 0;
    };
    bool closedForm = all_divide(4) || all_divide(6);

    // independent route: all pairwise ratios of the nonzero coefficients of
    // the specialized polynomial must be rational
    MPoly p = case222_poly().substitute({{"x", MPoly::constant(ru_val(x))},
                                         {"y", MPoly::constant(ru_val(y))},
                                         {"z", MPoly::constant(ru_val(z))}});
    if (p.is_zero())
        throw std::logic_error("specialized surface polynomial vanishes identically");
    const Cyclo* ref = nullptr;
    bool ratiosRational = true;
    for (const auto& [e, coef] : p.terms()) {
        if (!ref) {
            ref = &coef;
            continue;
        }
        RatioResult r = rational_ratio(coef, *ref);
        if (r.kind != RatioResult::Ratio) ratiosRational = false;
    }
    if (closedForm != ratiosRational)
        throw std::logic_error("defined-over-Q routes disagree");
    return closedForm;
}

}  // namespace lattangle
