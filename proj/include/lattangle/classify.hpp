#pragma once

// Computational classification of the spaces with a rational 4-tuple:
// bounded-order search over the tuple equation, the two exceptional
// dodecagonal shapes with their verifications, the 5-tuple obstruction,
// extra-angle sweeps, the summary table, and the scripted sub-case
// regressions combining the bounded solver with the coset-family test.

#include <array>
#include <string>
#include <vector>

#include "lattangle/angles.hpp"
#include "lattangle/cyclo.hpp"
#include "lattangle/rational.hpp"

namespace lattangle {

enum class Case4Class { Superrectangular, Dodecagonal, Other };

struct Case4Solution {
    std::array<RootOfUnity, 3> roots;  // x0, x1, x2
    Rational ratio;                    // a1 : a2, normalized to a2 = 1
    long commonOrder = 1;
    Case4Class cls = Case4Class::Other;

    friend bool operator==(const Case4Solution& a, const Case4Solution& b) {
        return a.roots == b.roots && a.ratio == b.ratio;
    }
    friend bool operator<(const Case4Solution& a, const Case4Solution& b) {
        if (a.roots != b.roots) return a.roots < b.roots;
        return a.ratio < b.ratio;
    }
};

/// The two exceptional shapes (positive imaginary part, common order 12).
Cyclo dodecagonal_tau(int i);  // i = 1 or 2

/// Are <1, t1> and <1, t2> related by a rational homothety (fractional
/// linear map with rational coefficients)?
bool homothetic_shapes(const Cyclo& t1, const Cyclo& t2);

/// All solutions of the 4-tuple root equation
///   a1 (x1 - 1)(x0 - x2) = a2 (x2 - 1)(x0 - x1)
/// with x0, x1, x2 distinct roots of unity (each of order in orderSet,
/// never 1) and a1 : a2 a rational ratio other than 0 and 1. Output is
/// sorted canonically; `parallel` toggles the multi-worker kernel.
std::vector<Case4Solution> search_case4(const std::vector<long>& orderSet,
                                        bool parallel = true);
std::vector<Case4Solution> search_case4_serial(const std::vector<long>& orderSet);

/// Canonical representatives modulo the full solution symmetries: Galois
/// action on the roots (global conjugation included), the relabelings of
/// the underlying 4-tuple (permuting the three angle arguments with the
/// induced parameter changes), and the homothety inversion.
std::vector<Case4Solution> reduce_case4(const std::vector<Case4Solution>& sols);

struct DodecagonalReport {
    bool tau1ClosedForm = false;   // recovered tau matches both closed forms
    bool tau2ClosedForm = false;
    bool argumentsVerified = false;  // all six squared-argument claims
    bool independent = false;        // (1, tau1, tau2, tau1*tau2) has rank 4
    bool galoisInvariantDet = false; // determinant fixed by all 8 sign patterns
    bool ok() const {
        return tau1ClosedForm && tau2ClosedForm && argumentsVerified &&
               independent && galoisInvariantDet;
    }
};
DodecagonalReport dodecagonal_report();

struct FiveTupleSolution {
    RootOfUnity theta0, x3;
    Rational a3;
};
/// Solutions of theta0 - x3/theta0 - a3 x3 + a3 = 0 with theta0 of order
/// at least 3, x3 != 1, and a3 rational outside {0, 1, -1}; both roots
/// enumerated up to the given order bound.
std::vector<FiveTupleSolution> fivetuple_search(long bound = 24);

struct ExtraAngleSolution {
    RootOfUnity theta0, y1;
    Rational b0, b1;
    bool degenerate = false;      // y1 = -1 or common order dividing 6
    bool infiniteFamily = false;  // positive-dimensional solution locus
};
/// Sweep of the extra-angle relation for <1, theta0> over roots of order
/// dividing D; keeps only nondegenerate parameter pairs (b0 != b1, both
/// outside {0, 1, -1}).
std::vector<ExtraAngleSolution> superrect_extra_angles(long D = 30);

struct DodecExtraReport {
    // (j, k, b0, b1): solution pair for tau_j at y = zeta_12^k
    struct Entry {
        int j;
        long k;
        Rational b0, b1;
    };
    std::vector<Entry> entries;
    bool tau1PairsInCatalog = false;  // all pairs within {0, 1, -1}
    bool tau2PairsInCatalog = false;  // all pairs within {0, 1, 3}
    bool witnessPairPresent = false;  // j=1, y = zeta_12^9 yields (1, -1)
    bool noFiveTupleExtension = false;
    bool ok() const {
        return tau1PairsInCatalog && tau2PairsInCatalog && witnessPairPresent &&
               noFiveTupleExtension;
    }
};
DodecExtraReport dodecagonal_extra_angles();

/// Machine-readable summary of the classification, one row per class of
/// spaces, each linked to the operation that verifies it. JSON text.
std::string classification_table();

struct SubcaseRegression {
    std::string name;
    long totalCount = 0;       // all bounded-order solutions of the relation
    long nontrivialCount = 0;  // solutions with every root different from 1
    bool noneIdenticallyInT = true;  // no nontrivial solution extends to a
                                     // coset family
};
/// The scripted sub-case checks: four-term relations arising from
/// top-degree coefficients, solved at order bound 6, each solution tested
/// against identical-in-t vanishing.
std::vector<SubcaseRegression> subcase_regressions();

}  // namespace lattangle
