#pragma once

// Configuration equations for rational angles: single-angle curve
// coefficients, tuple equations, the three case eliminants, recovery of
// tau, the proportional branch, and exact verification of claimed angles.

#include <array>
#include <optional>

#include "lattangle/cyclo.hpp"
#include "lattangle/mpoly.hpp"
#include "lattangle/rational.hpp"

namespace lattangle {

enum class CaseId { C4, C32, C222 };

struct AngleConfig {
    CaseId caseId;
    std::vector<Rational> params;    // C4: a,b | C32: a,b,c | C222: a,b,c,d
    std::vector<RootOfUnity> roots;  // x, y, z
};

/// Conjugate configuration (all roots inverted); solutions map to solutions.
AngleConfig conj_config(const AngleConfig& cfg);

struct TauValue {
    enum Kind { ExplicitCyclo, QuadraticRoot } kind = ExplicitCyclo;
    Cyclo value;       // ExplicitCyclo
    Cyclo q1, q0;      // QuadraticRoot: tau^2 + q1*tau + q0 = 0
    RootOfUnity x0;    // QuadraticRoot: squared argument of tau (tau/conj(tau))
};

struct AngleCurveCoeffs {
    Cyclo A, B, C;
};

/// Coefficients of the bilinear angle curve for squared argument muSq.
AngleCurveCoeffs angle_coeffs_ABC(const Cyclo& tau, const RootOfUnity& muSq);

/// tau = a * x0 * (xj - 1) / (x0 - xj); asserts the value is non-real.
TauValue tau_from_tuple(const Rational& a, const RootOfUnity& x0, const RootOfUnity& xj);

/// Monic-free quadratic {c2, c1, c0} with c2 = yj - 1:
/// tau^2 (yj-1) + tau [b0 (yj-x0) + bj (x0 yj - 1)] + b0 bj x0 (yj-1) = 0.
std::array<Cyclo, 3> pair_quadratic(const Rational& b0, const Rational& bj,
                                    const RootOfUnity& x0, const RootOfUnity& yj);

/// The case polynomials as symbolic data (variables a,b[,c[,d]],x,y,z).
const MPoly& case4_poly();
const MPoly& case32_poly();
const MPoly& case222_poly();  // loaded from the transcription data file

/// Exact value of the case polynomial at the configuration.
Cyclo eliminant(const AngleConfig& cfg);

struct TauRecovery {
    TauValue tau;      // normalized: positive imaginary part
    bool conjugated;   // whole configuration conjugated to achieve it
};
/// Requires eliminant(cfg) == 0; for C222 additionally ab != cd.
TauRecovery tau_recover(const AngleConfig& cfg);

struct ProportionalResult {
    enum Status { UniqueZero, Proportional } status = UniqueZero;
    Cyclo q1, q0;       // shared monic quadratic when proportional
    bool cosineCheck = false;  // four-cosine relation evaluates to zero
};
/// C222 configurations with ab = cd.
ProportionalResult proportional_branch(const AngleConfig& cfg);

/// A tuple vector: nullopt encodes the vector 1, a rational b encodes tau+b.
using AngleVector = std::optional<Rational>;

/// Exact check of y * v0 * conj(v1) == conj(v0) * v1 for the claimed squared
/// argument muSq; for quadratic tau the identity is checked modulo the
/// quadratic, using conj(tau) = tau / x0.
bool verify_angle(const TauValue& tau, const AngleVector& v0, const AngleVector& v1,
                  const RootOfUnity& muSq);

/// Full verification: recover tau and check every angle the configuration
/// claims (defining angles plus all pairwise combinations within tuples).
bool verify_config(const AngleConfig& cfg);

}  // namespace lattangle
