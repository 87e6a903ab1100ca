#pragma once

// Controlled numeric embedding of cyclotomic values into C. Quarantined:
// used only for branch selection among exact conjugates and for display,
// never for equality decisions.

#include "lattangle/cyclo.hpp"

namespace lattangle {

struct ComplexApprox {
    long double re = 0, im = 0;
    long double errBound = 0;  // |exact - (re + i*im)| <= errBound
};

/// Evaluate x at the principal embedding zeta_n -> e^{2*pi*i/n}.
ComplexApprox embed(const Cyclo& x, long precision_bits = 128);

/// Sign of the real part of x (-1, 0, +1). Exact zero cases are decided
/// symbolically; otherwise the numeric bound is refined until conclusive.
/// Intended for real or purely imaginary algebraic inputs.
int sign_real(const Cyclo& x);

}  // namespace lattangle
