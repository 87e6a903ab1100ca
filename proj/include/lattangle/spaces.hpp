#pragma once

// Space-level predicates and catalogs: homothety normalization, detection
// of complex multiplication together with the full angle catalogs, the
// conjugation-symmetry predicates, and the finite angle search for
// non-CM spaces.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lattangle/angles.hpp"
#include "lattangle/cyclo.hpp"
#include "lattangle/rational.hpp"

namespace lattangle {

struct SpaceSpec {
    TauValue tau;            // shape parameter, Im > 0 after normalization
    std::string provenance;  // free-form tag: which search or example produced it
    bool conjugated = false;     // orientation fix applied during normalization
    bool transcendental = false; // symbolic marker: tau not algebraic
};

struct CmInfo {
    long d = 0;                 // squarefree positive integer, field Q(sqrt(-d))
    std::vector<Cyclo> catalog; // angle generators lambda, up to equivalence
};

/// The space spanned by v1, v2 as <1, tau> with tau = v2/v1 normalized to
/// Im > 0 and Re >= 0 (negation is free; conjugation sets the flag).
SpaceSpec normalize_space(const Cyclo& v1, const Cyclo& v2);

/// CM detection: present iff tau is imaginary quadratic.
std::optional<CmInfo> is_cm(const SpaceSpec& s);

/// Fixed representatives of the rational-angle generators of Q(sqrt(-d)):
/// {i, i+1, i-1} for d=1, {sqrt(-3), zeta3, zeta3-1, zeta3+1, zeta3+2} for
/// d=3, and exactly {sqrt(-d)} otherwise.
CmInfo cm_catalog(long d);

/// sqrt(-d) as a cyclotomic number with positive imaginary part.
Cyclo sqrt_minus(long d);

struct SymmetryFlags {
    bool selfConjClass = false;      // homothetic to a conjugation-stable space
    bool homConjClass = false;       // homothetic to its conjugate
    bool rectangular = false;        // contains a right rational angle
    bool superrectangular = false;   // homothetic to <1, root of unity>
};
SymmetryFlags symmetry_predicates(const SpaceSpec& s);

/// Largest m such that zeta_m lies in Q(tau, conj tau) (or Q(tau) only).
long roots_of_unity_order(const Cyclo& tau, bool withConjugate = true);

struct AngleRecord {
    RootOfUnity muSq;                  // squared argument of the angle
    std::pair<Rational, Rational> v0;  // (p, q) encodes the vector p*tau + q
    std::pair<Rational, Rational> v1;
    friend bool operator==(const AngleRecord& a, const AngleRecord& b) {
        return a.muSq == b.muSq && a.v0 == b.v0 && a.v1 == b.v1;
    }
    friend bool operator<(const AngleRecord& a, const AngleRecord& b) {
        if (!(a.muSq == b.muSq)) return a.muSq < b.muSq;
        if (a.v0 != b.v0) return a.v0 < b.v0;
        return a.v1 < b.v1;
    }
};

struct AngleSearchResult {
    std::vector<AngleRecord> angles;  // canonical, sorted, deduplicated
    bool cmInfinite = false;          // rational curve coefficients found
    std::optional<CmInfo> cm;         // catalog when cmInfinite
};

/// All rational angles of the space, searching each candidate squared
/// argument (defaults to every root of unity in Q(tau, conj tau)). For CM
/// spaces the infinite family is reported through the marker instead of an
/// exhaustive list.
AngleSearchResult find_rational_angles(
    const SpaceSpec& s, const std::vector<RootOfUnity>& muSqSet = {});

/// Fixed catalog of maximal root-of-unity orders of angle arguments in the
/// two classical lattices, re-verified against the angle search.
std::map<std::string, long> lattice_root_orders();

}  // namespace lattangle
