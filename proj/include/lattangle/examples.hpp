#pragma once

// Two worked families of three-pair configurations: the elliptic curve
// whose rational points parametrize an infinite family of pairwise
// non-equivalent spaces, and the genus-5 configuration with amplitudes
// (3/5, 3/10, -1/10) pi at the nontrivial point (12 : 2 : -8 : -3).

#include <string>
#include <vector>

#include "lattangle/angles.hpp"
#include "lattangle/rational.hpp"

namespace lattangle {

struct ECPoint {
    bool infinity = true;
    Rational X, Y;
};
ECPoint ec_point(const Rational& X, const Rational& Y);  // throws off-curve
ECPoint ec_infinity();

/// Chord-tangent group law on Y^2 = X^3 + 4X^2 + 6X + 4 over Q.
bool ec_on_curve(const ECPoint& P);
ECPoint ec_neg(const ECPoint& P);
ECPoint ec_add(const ECPoint& P, const ECPoint& Q);
ECPoint ec_double(const ECPoint& P);
Rational ec_j_invariant();  // = 128

struct Quadruple {
    Rational a, b, c, d;
    bool valid = false;  // distinct and nonzero
};

/// Map an affine curve point to a parameter quadruple: the birational
/// change to (b, u, v = 1), the plane-quartic identity (asserted), then
/// a = b + u, d = b + v and c from the degree-1 system equation.
Quadruple ec_to_quadruple(const ECPoint& P);

struct ECVerifyReport {
    Quadruple q;
    bool systemSatisfied = false;    // both system equations vanish exactly
    bool eliminantVanishes = false;  // three-pair eliminant at (i, z8, z8^3)
    bool tauAnglesVerified = false;  // explicit tau passes all three angles
    bool configVerified = false;     // recovered-tau route agrees
    std::string variant;             // which degree-1 equation the data obey
    bool ok() const {
        return systemSatisfied && eliminantVanishes && tauAnglesVerified &&
               configVerified;
    }
};
ECVerifyReport ec_verify(const ECPoint& P);  // throws on invalid quadruple

/// Cross-ratio invariant of the four Galois conjugates of tau; constant on
/// homothety classes. Cross-checked internally against the (b, u, v) form
/// 2 v^2 / (2 b^2 + v^2).
Rational phi_invariant(const Quadruple& q);

struct Genus5Report {
    bool transcriptionOk = false;      // f1, f2 vanish at (1 : 1 : 1 : 1)
    bool nontrivialPoint = false;      // ... and at (12 : 2 : -8 : -3)
    bool eliminantVanishes = false;    // at roots (z5^3, z10^3, z10^9)
    bool proportionalBranch = false;   // ab = cd = 24, shared quadratic
    bool minorsVanish = false;         // pair quadratics exactly proportional
    bool tauClosedForm = false;        // root embeds within 1e-6 of r e^{3 pi i/5}
    bool anglesVerified = false;       // (tau+12, tau+2) and (tau-3, tau-8)
    bool ok() const {
        return transcriptionOk && nontrivialPoint && eliminantVanishes &&
               proportionalBranch && minorsVanish && tauClosedForm &&
               anglesVerified;
    }
};
Genus5Report genus5_verify();

}  // namespace lattangle
