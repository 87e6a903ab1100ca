#include "lattangle/embed.hpp"

#include <cmath>
#include <stdexcept>

#include <mpfr.h>

namespace lattangle {

ComplexApprox embed(const Cyclo& x, long precision_bits) {
    if (precision_bits < 60) precision_bits = 60;
    const long n = x.order();
    mpfr_t pi, angle, t, c, re, im, coef;
    mpfr_inits2(precision_bits, pi, angle, t, c, re, im, coef, (mpfr_ptr)nullptr);
    mpfr_const_pi(pi, MPFR_RNDN);
    mpfr_set_zero(re, 1);
    mpfr_set_zero(im, 1);
    long double abs_sum = 0;
    size_t nterms = 0;
    for (size_t i = 0; i < x.coords().size(); ++i) {
        const Rational& q = x.coords()[i];
        if (q == 0) continue;
        ++nterms;
        mpfr_set_q(coef, q.get_mpq_t(), MPFR_RNDN);
        abs_sum += fabsl(mpfr_get_ld(coef, MPFR_RNDA));
        // angle = 2*pi*i/n
        mpfr_mul_si(angle, pi, 2 * (long)i, MPFR_RNDN);
        mpfr_div_si(angle, angle, n, MPFR_RNDN);
        mpfr_cos(t, angle, MPFR_RNDN);
        mpfr_mul(t, t, coef, MPFR_RNDN);
        mpfr_add(re, re, t, MPFR_RNDN);
        mpfr_sin(t, angle, MPFR_RNDN);
        mpfr_mul(t, t, coef, MPFR_RNDN);
        mpfr_add(im, im, t, MPFR_RNDN);
    }
    ComplexApprox out;
    out.re = mpfr_get_ld(re, MPFR_RNDN);
    out.im = mpfr_get_ld(im, MPFR_RNDN);
    // Forward error: each of the O(nterms) rounded operations contributes at
    // most 2^{1-p} relative error on quantities bounded by abs_sum; the final
    // conversion to long double adds at most 2^-63 relative. Factor 8 margin.
    long double eps = ldexpl(1.0L, (int)(1 - precision_bits));
    out.errBound = 8.0L * (long double)(nterms + 2) * (abs_sum + 1.0L) * eps +
                   ldexpl(fabsl(out.re) + fabsl(out.im) + 1.0L, -62);
    mpfr_clears(pi, angle, t, c, re, im, coef, (mpfr_ptr)nullptr);
    return out;
}

int sign_real(const Cyclo& x) {
    if (x.is_zero() || is_imaginary(x)) return 0;
    for (long prec = 128; prec <= (1L << 16); prec *= 2) {
        ComplexApprox a = embed(x, prec);
        if (fabsl(a.re) > a.errBound) return a.re > 0 ? 1 : -1;
    }
    throw std::runtime_error("sign_real: could not separate from zero");
}

}  // namespace lattangle
