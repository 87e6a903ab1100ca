#pragma once

// Large-order machinery for the root-of-unity equations: the absolute
// bound constants, prime-power regrouping of a solution, short-vector
// certificates in the associated lattice, testing whether a solution
// extends to a one-parameter (coset) family, and the verification of the
// two infinite families.

#include <array>
#include <optional>
#include <vector>

#include "lattangle/angles.hpp"
#include "lattangle/rational.hpp"

namespace lattangle {

struct SolutionPoint {
    AngleConfig cfg;
    long order = 1;  // minimal common order of the three roots
};

/// Validates eliminant(cfg) == 0 and fills in the common order.
SolutionPoint make_solution(const AngleConfig& cfg);

struct FamilyWitness {
    std::array<long, 3> w{};  // exponent vector of the parameter
    SolutionPoint basePoint;
};

struct BoundConstants {
    Integer N0;        // divisor bound for orders outside the families
    Integer thmBound;  // denominator bound for angles outside the families
};
/// N0 = 2^6 3^4 5^3 (7·11·...·37)^2 and thmBound = 2 N0; the factor two
/// between them is exposed as-is, without interpretation.
BoundConstants constants();

/// The regrouped coefficients gamma_i of the solution with respect to the
/// prime power p^m exactly dividing its order: each root is split into its
/// p-power part zeta^{v_j} and a part of order coprime to p, and the terms
/// of the case equation are grouped by (v, e) modulo p^{max(m-1,1)}. A
/// solution of large order must have all gamma_i equal to zero.
std::vector<Cyclo> gamma_decompose(const SolutionPoint& sol, long p, long m);

/// Exponent vector (v_1, v_2, v_3) of the p-power parts of the roots.
std::array<long, 3> p_part_exponents(const SolutionPoint& sol, long p, long m);

/// Shortest nonzero vector of v*Z + M*Z^3 by exhaustive enumeration,
/// canonicalized (first nonzero coordinate positive, then smallest
/// lexicographically); checks the volume-based norm bound |w|^6 <= 2 M^4
/// exactly.
std::array<long, 3> short_vector(const std::array<long, 3>& v, long M);

/// Does substituting (x t^{w1}, y t^{w2}, z t^{w3}) into the case equation
/// vanish identically in t?
std::optional<FamilyWitness> coset_family_test(const SolutionPoint& sol,
                                               const std::array<long, 3>& w);

struct FamilyReport {
    bool rightAngleFamilySymbolic = false;  // three-pair family, x = -1, y = z = t
    bool doubledFamilySymbolic = false;     // four-tuple family, a = 2b, (t, -t, t^2)
    long samplesChecked = 0;
    bool allSamplesVerified = false;
};
/// Symbolic annihilation of the case polynomials by the two families, plus
/// exact verification of the claimed angles on sampled specializations.
FamilyReport verify_families();

struct CertifyResult {
    enum Kind { BoundedOrder, Family, ContractViolation } kind = BoundedOrder;
    std::optional<FamilyWitness> witness;
};
/// Dichotomy certifier: if some prime power p^m of sol.order exceeds the
/// thresholds (p^{m-1} >= 39, or m > 6 for p = 2), a family witness must
/// exist; otherwise the order is bounded.
CertifyResult certify_solution(const SolutionPoint& sol);

}  // namespace lattangle
