#pragma once

// The surface cut out by the three-pair equation at fixed roots: the
// resultant of two monic quadratics (two displayed forms plus a Sylvester
// oracle), the parameter substitution E*, the scaling identity relating
// E* to the three-pair polynomial, the degenerate factorization at
// (-1, -1, -1), and the defined-over-Q criterion.

#include "lattangle/mpoly.hpp"
#include "lattangle/rational.hpp"

namespace lattangle {

struct QuadraticPair {
    MPoly A1, A2, B1, B2;  // tau^2 + A1 tau + A2 = tau^2 + B1 tau + B2 = 0
};

/// Expanded form: B2^2 - A1 B1 B2 + (A1^2 - 2 A2) B2 + A2 B1^2 - A1 A2 B1 + A2^2.
MPoly resultant_E(const QuadraticPair& qp);

/// Elimination form: (B2-A2)^2 - A1 (B1-A1)(B2-A2) + A2 (B1-A1)^2.
MPoly resultant_E_elimination(const QuadraticPair& qp);

/// Independent oracle: 4x4 Sylvester determinant of the two quadratics.
MPoly sylvester_resultant(const QuadraticPair& qp);

struct EStarResult {
    MPoly estar;               // polynomial in a, b, c, d over Q(x, y, z)
    bool identityHolds = false;  // (y-1)^2 (z-1)^2 / x * E* equals the
                                 // three-pair polynomial at these roots
    bool warning = false;        // non-injective substitution: x = -1 and
                                 // y = -1 or z = -1
};
/// Substitute A1, A2, B1, B2 by their expressions in (a, b, c, d) at the
/// given roots (all != 1) and relate the result to the three-pair
/// polynomial.
EStarResult estar(const RootOfUnity& x, const RootOfUnity& y, const RootOfUnity& z);

/// Is the surface at these roots defined over Q (up to a scalar)? True
/// exactly when the three roots are all fourth or all sixth roots of
/// unity; asserted against the rationality of all pairwise coefficient
/// ratios of the specialized polynomial.
bool defined_over_q(const RootOfUnity& x, const RootOfUnity& y, const RootOfUnity& z);

}  // namespace lattangle
