#pragma once

// Linear relations among roots of unity: admissible-order bound for
// relations without vanishing subsums, exhaustive bounded search,
// structural solve via vanishing-subsum partitions, and the rational
// linear-in-monomials solver used by the extra-angle sweeps.

#include <optional>
#include <vector>

#include "lattangle/cyclo.hpp"
#include "lattangle/rational.hpp"

namespace lattangle {

/// One term  coeff * root * prod_i xi_i^{exps[i]}  of a relation, where the
/// xi_i are the symbolic root-of-unity unknowns.
struct UnitTerm {
    Rational coeff;
    RootOfUnity root;        // fixed root-of-unity multiplier (1 by default)
    std::vector<long> exps;  // one exponent per unknown (may be empty = all zero)
};

struct UnitRelation {
    size_t nunknowns = 0;
    std::vector<UnitTerm> terms;

    /// Simple form: sum of coeff_i * xi_i, one fresh unknown per term.
    static UnitRelation linear(const std::vector<Rational>& coeffs);
    /// Constant first term plus one fresh unknown per remaining coefficient.
    static UnitRelation affine(const Rational& constant,
                               const std::vector<Rational>& coeffs);

    Cyclo term_value(size_t t, const std::vector<RootOfUnity>& assignment) const;
    Cyclo value(const std::vector<RootOfUnity>& assignment) const;
};

struct SolutionRecord {
    std::vector<RootOfUnity> assignment;           // one entry per unknown
    std::vector<std::vector<size_t>> subsumPartition;  // term indices
    long commonOrder = 1;  // lcm of assignment orders

    friend bool operator==(const SolutionRecord& a, const SolutionRecord& b) {
        return a.assignment == b.assignment;
    }
    friend bool operator<(const SolutionRecord& a, const SolutionRecord& b) {
        return a.assignment < b.assignment;
    }
};

/// Squarefree Q with sum over p | Q of (p-2) at most k-2, ascending.
std::vector<long> cj_admissible_orders(long k);

/// Exhaustive search over assignments with every unknown of order dividing
/// `orderBound`; deterministic lexicographic output. `parallel` toggles the
/// multi-worker kernel (the serial one is the reference implementation).
std::vector<SolutionRecord> brute_solve(const UnitRelation& rel, long orderBound,
                                        bool parallel = true);
std::vector<SolutionRecord> brute_solve_serial(const UnitRelation& rel, long orderBound);

/// Structural solutions: a partition of the terms into minimal vanishing
/// subsums, with each block either anchored (contains a constant term) or
/// carrying a free rotation.
struct CjBlock {
    std::vector<size_t> termIndices;
    // canonical root per term in the block (first unknown term normalized
    // to 1 when the block is free)
    std::vector<RootOfUnity> roots;
    bool freeRotation = false;
};
struct CjSolution {
    std::vector<CjBlock> blocks;
};

/// Requires each term to involve at most one unknown, with exponent 1, and
/// each unknown to appear in exactly one term.
std::vector<CjSolution> cj_solve(const UnitRelation& rel);

/// Concrete assignments represented by structural solutions, with free
/// rotations expanded over roots of order dividing `bound`.
std::vector<SolutionRecord> cj_expand(const UnitRelation& rel,
                                      const std::vector<CjSolution>& sols, long bound);

/// Solutions (u, v) in Q^2 of c1 + cu*u + cv*v + cw*u*v = 0 with cyclotomic
/// coefficients, via Q-basis decomposition. `infinite` is set when the
/// solution variety has positive dimension (degenerate coefficient loci).
struct MonomialLinearResult {
    std::vector<std::pair<Rational, Rational>> solutions;
    bool infinite = false;
};
MonomialLinearResult monomial_linear_solve(const Cyclo& c1, const Cyclo& cu,
                                           const Cyclo& cv, const Cyclo& cw);

}  // namespace lattangle
