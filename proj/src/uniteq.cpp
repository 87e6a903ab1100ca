#include "lattangle/uniteq.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <functional>
#include <unordered_map>

#include <omp.h>

namespace lattangle {

// ---------- relation helpers ----------

UnitRelation UnitRelation::linear(const std::vector<Rational>& coeffs) {
    UnitRelation r;
    r.nunknowns = coeffs.size();
    for (size_t i = 0; i < coeffs.size(); ++i) {
        UnitTerm t;
        t.coeff = coeffs[i];
        t.exps.assign(coeffs.size(), 0);
        t.exps[i] = 1;
        r.terms.push_back(std::move(t));
    }
    return r;
}

UnitRelation UnitRelation::affine(const Rational& constant,
                                  const std::vector<Rational>& coeffs) {
    UnitRelation r;
    r.nunknowns = coeffs.size();
    UnitTerm c;
    c.coeff = constant;
    c.exps.assign(coeffs.size(), 0);
    r.terms.push_back(std::move(c));
    for (size_t i = 0; i < coeffs.size(); ++i) {
        UnitTerm t;
        t.coeff = coeffs[i];
        t.exps.assign(coeffs.size(), 0);
        t.exps[i] = 1;
        r.terms.push_back(std::move(t));
    }
    return r;
}

Cyclo UnitRelation::term_value(size_t t, const std::vector<RootOfUnity>& a) const {
    const UnitTerm& term = terms[t];
    RootOfUnity r = term.root;
    for (size_t i = 0; i < term.exps.size(); ++i)
        if (term.exps[i] != 0) r = r * a[i].pow(term.exps[i]);
    return Cyclo(term.coeff) * Cyclo::root(r);
}

Cyclo UnitRelation::value(const std::vector<RootOfUnity>& a) const {
    Cyclo s(0);
    for (size_t t = 0; t < terms.size(); ++t) s += term_value(t, a);
    return s;
}

// ---------- admissible orders ----------

std::vector<long> cj_admissible_orders(long k) {
    if (k < 2) throw std::invalid_argument("relation length must be >= 2");
    std::vector<long> primes;
    for (long p = 2; p <= k; ++p) {
        bool is_p = p >= 2;
        for (long d = 2; d * d <= p; ++d)
            if (p % d == 0) is_p = false;
        if (is_p) primes.push_back(p);
    }
    std::vector<long> out;
    size_t np = primes.size();
    for (size_t mask = 0; mask < (size_t(1) << np); ++mask) {
        long budget = 0, q = 1;
        for (size_t i = 0; i < np; ++i)
            if (mask >> i & 1) {
                budget += primes[i] - 2;
                q *= primes[i];
            }
        if (budget <= k - 2) out.push_back(q);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ---------- integer root table ----------

namespace {

// Coordinates of zeta_L^j (j = 0..L-1) are integer vectors; the table also
// supports reverse lookup from a coordinate vector to the root exponent.
struct RootTable {
    long L = 1;
    size_t phi = 1;
    std::vector<std::vector<long>> coords;  // [j][i]
    bool packed = false;                    // 64-bit keys available
    std::unordered_map<uint64_t, long> packed_lookup;
    std::map<std::vector<long>, long> slow_lookup;

    static uint64_t pack(const std::vector<long>& v) {
        uint64_t k = 0;
        for (long x : v) k = (k << 8) | (uint64_t)(uint8_t)(x + 120);
        return k;
    }

    explicit RootTable(long L_) : L(L_) {
        phi = cyclotomic_poly(L).size() - 1;
        packed = phi <= 8;
        coords.resize(L);
        for (long j = 0; j < L; ++j) {
            Cyclo r = Cyclo::root(RootOfUnity(j, L)).lifted(L);
            std::vector<long> v(phi);
            for (size_t i = 0; i < phi; ++i) {
                const Rational& q = r.coords()[i];
                if (q.get_den() != 1) throw std::logic_error("non-integer root coordinate");
                v[i] = q.get_num().get_si();
                if (v[i] < -100 || v[i] > 100) packed = false;
            }
            coords[j] = std::move(v);
        }
        for (long j = 0; j < L; ++j) {
            if (packed) packed_lookup.emplace(pack(coords[j]), j);
            slow_lookup.emplace(coords[j], j);
        }
    }

    // exponent of the root with these coordinates, or -1
    long find(const std::vector<long>& v) const {
        if (packed) {
            for (long x : v)
                if (x < -100 || x > 100) return -1;
            auto it = packed_lookup.find(pack(v));
            return it == packed_lookup.end() ? -1 : it->second;
        }
        auto it = slow_lookup.find(v);
        return it == slow_lookup.end() ? -1 : it->second;
    }
};

struct CompiledRelation {
    long B;                 // unknown order bound
    long L;                 // field order (lcm of B and fixed-root orders)
    long step;              // L / B
    std::vector<long> intCoeff;   // cleared-denominator coefficients
    std::vector<long> shift;      // fixed root exponent in mu_L
    // terms grouped by the largest unknown they involve (-1 = constant)
    std::vector<std::vector<size_t>> termsByLevel;  // index: unknown
    std::vector<size_t> constTerms;
};

CompiledRelation compile_relation(const UnitRelation& rel, long B) {
    CompiledRelation c;
    c.B = B;
    long L = B;
    for (const auto& t : rel.terms) L = std::lcm(L, t.root.den);
    c.L = L;
    c.step = L / B;
    Integer den = 1;
    for (const auto& t : rel.terms) {
        Integer d(t.coeff.get_den());
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
    }
    for (const auto& t : rel.terms) {
        Rational scaled = t.coeff * Rational(den);
        c.intCoeff.push_back(scaled.get_num().get_si());
        c.shift.push_back(t.root.num * (L / t.root.den));
    }
    c.termsByLevel.assign(rel.nunknowns, {});
    for (size_t t = 0; t < rel.terms.size(); ++t) {
        long level = -1;
        for (size_t i = 0; i < rel.terms[t].exps.size(); ++i)
            if (rel.terms[t].exps[i] != 0) level = (long)i;
        if (level < 0) c.constTerms.push_back(t);
        else c.termsByLevel[level].push_back(t);
    }
    return c;
}

void add_scaled(std::vector<long>& acc, const std::vector<long>& v, long f) {
    for (size_t i = 0; i < acc.size(); ++i) acc[i] += f * v[i];
}

// Greedy partition into minimal vanishing subsums, lexicographically first.
std::vector<std::vector<size_t>> greedy_partition(
    const std::vector<std::vector<long>>& vecs) {
    size_t k = vecs.size(), phi = k ? vecs[0].size() : 0;
    std::vector<bool> used(k, false);
    std::vector<std::vector<size_t>> blocks;
    auto is_zero = [&](const std::vector<long>& v) {
        for (long x : v)
            if (x) return false;
        return true;
    };
    size_t remaining = k;
    while (remaining) {
        size_t first = 0;
        while (used[first]) ++first;
        std::vector<size_t> pool;
        for (size_t i = first + 1; i < k; ++i)
            if (!used[i]) pool.push_back(i);
        std::vector<size_t> found;
        // smallest subset containing `first` whose sum vanishes, lex-first
        for (size_t extra = 0; extra <= pool.size() && found.empty(); ++extra) {
            std::vector<size_t> pick(extra);
            std::vector<long> sum(phi);
            // iterate lexicographic combinations of `pool` of size `extra`
            std::function<bool(size_t, size_t, std::vector<long>&)> rec =
                [&](size_t start, size_t depth, std::vector<long>& acc) -> bool {
                if (depth == extra) {
                    std::vector<long> total = acc;
                    add_scaled(total, vecs[first], 1);
                    if (is_zero(total)) {
                        found.assign(1, first);
                        found.insert(found.end(), pick.begin(), pick.begin() + extra);
                        return true;
                    }
                    return false;
                }
                for (size_t s = start; s < pool.size(); ++s) {
                    pick[depth] = pool[s];
                    add_scaled(acc, vecs[pool[s]], 1);
                    if (rec(s + 1, depth + 1, acc)) return true;
                    add_scaled(acc, vecs[pool[s]], -1);
                }
                return false;
            };
            std::vector<long> acc(phi);
            rec(0, 0, acc);
        }
        if (found.empty()) {
            // not actually a solution; report the rest as one block
            found.assign(1, first);
            for (size_t i : pool) found.push_back(i);
        }
        for (size_t i : found) used[i] = true;
        remaining -= found.size();
        blocks.push_back(std::move(found));
    }
    return blocks;
}

}  // namespace

// ---------- brute-force search ----------

static std::vector<SolutionRecord> brute_solve_impl(const UnitRelation& rel,
                                                    long orderBound, bool parallel) {
    if (orderBound < 1 || orderBound > 360)
        throw std::invalid_argument("order bound out of range");
    const RootTable table(
        [&] {
            long L = orderBound;
            for (const auto& t : rel.terms) L = std::lcm(L, t.root.den);
            return L;
        }());
    const CompiledRelation cr = compile_relation(rel, orderBound);
    const long L = cr.L, B = cr.B, step = cr.step;
    const size_t phi = table.phi;
    const size_t u = rel.nunknowns;
    const size_t k = rel.terms.size();

    // exponent of term t in mu_L given assignment indices (in mu_B)
    auto term_exp = [&](size_t t, const std::vector<long>& j) {
        long m = cr.shift[t];
        for (size_t i = 0; i < rel.terms[t].exps.size(); ++i)
            if (rel.terms[t].exps[i] != 0) m += rel.terms[t].exps[i] * j[i] * step;
        m %= L;
        if (m < 0) m += L;
        return m;
    };

    std::vector<long> base(phi, 0);
    for (size_t t : cr.constTerms)
        add_scaled(base, table.coords[cr.shift[t]], cr.intCoeff[t]);

    if (u == 0) {
        std::vector<SolutionRecord> out;
        bool zero = std::all_of(base.begin(), base.end(), [](long x) { return x == 0; });
        if (zero && k > 0) {
            SolutionRecord s;
            std::vector<std::vector<long>> vecs(k);
            for (size_t t = 0; t < k; ++t) {
                vecs[t].assign(phi, 0);
                add_scaled(vecs[t], table.coords[cr.shift[t]], cr.intCoeff[t]);
            }
            s.subsumPartition = greedy_partition(vecs);
            out.push_back(std::move(s));
        }
        return out;
    }

    // last-unknown lookup applies when the final unknown occurs in exactly
    // one term, with exponent +-1
    long lastTerm = -1, lastExp = 0;
    bool lookup_ok = cr.termsByLevel[u - 1].size() == 1;
    if (lookup_ok) {
        lastTerm = (long)cr.termsByLevel[u - 1][0];
        lastExp = rel.terms[lastTerm].exps[u - 1];
        if (lastExp != 1 && lastExp != -1) lookup_ok = false;
        if (lookup_ok && cr.intCoeff[lastTerm] == 0) lookup_ok = false;
    }
    const bool use_lookup = lookup_ok;

    auto record_solution = [&](const std::vector<long>& j,
                               std::vector<SolutionRecord>& out) {
        SolutionRecord s;
        long common = 1;
        for (size_t i = 0; i < u; ++i) {
            s.assignment.push_back(RootOfUnity(j[i], B));
            common = std::lcm(common, s.assignment.back().den);
        }
        s.commonOrder = common;
        std::vector<std::vector<long>> vecs(k);
        for (size_t t = 0; t < k; ++t) {
            vecs[t].assign(phi, 0);
            add_scaled(vecs[t], table.coords[term_exp(t, j)], cr.intCoeff[t]);
        }
        s.subsumPartition = greedy_partition(vecs);
        out.push_back(std::move(s));
    };

    // depth-first over unknowns with incremental partial sums
    auto search_from = [&](long j0, std::vector<SolutionRecord>& out) {
        std::vector<long> j(u, 0);
        j[0] = j0;
        std::vector<std::vector<long>> partial(u + 1, std::vector<long>(phi));
        partial[0] = base;
        size_t depth = 0;
        auto apply_level = [&](size_t lvl) {
            partial[lvl + 1] = partial[lvl];
            for (size_t t : cr.termsByLevel[lvl])
                add_scaled(partial[lvl + 1], table.coords[term_exp(t, j)],
                           cr.intCoeff[t]);
        };
        const size_t lastFree = use_lookup ? u - 1 : u;
        std::function<void(size_t)> dfs = [&](size_t lvl) {
            if (lvl == lastFree) {
                if (use_lookup) {
                    // solve c * zeta^m = -partial for the final unknown
                    long c = cr.intCoeff[lastTerm];
                    std::vector<long> target(phi);
                    for (size_t i = 0; i < phi; ++i) {
                        long num = -partial[lvl][i];
                        if (num % c != 0) return;
                        target[i] = num / c;
                    }
                    long m = table.find(target);
                    if (m < 0) return;
                    long fixed = cr.shift[lastTerm];
                    for (size_t i = 0; i + 1 < u; ++i)
                        if (rel.terms[lastTerm].exps[i] != 0)
                            fixed += rel.terms[lastTerm].exps[i] * j[i] * step;
                    long rest = ((m - fixed) % L + L) % L;
                    if (lastExp == -1) rest = (L - rest) % L;
                    if (rest % step != 0) return;
                    j[u - 1] = rest / step;
                    record_solution(j, out);
                } else {
                    bool zero = std::all_of(partial[lvl].begin(), partial[lvl].end(),
                                            [](long x) { return x == 0; });
                    if (zero) record_solution(j, out);
                }
                return;
            }
            for (long v = 0; v < B; ++v) {
                j[lvl] = v;
                apply_level(lvl);
                dfs(lvl + 1);
            }
        };
        // level 0 is fixed to j0
        if (u == 1 && lastFree == 0) {
            // single unknown handled directly by the lookup
            dfs(0);
        } else {
            apply_level(0);
            dfs(1);
        }
    };

    std::vector<std::vector<SolutionRecord>> buckets((size_t)B);
    if (u == 1 && use_lookup) {
        std::vector<SolutionRecord> out;
        search_from(0, out);
        std::sort(out.begin(), out.end());
        return out;
    }
    if (parallel) {
#pragma omp parallel for schedule(dynamic)
        for (long j0 = 0; j0 < B; ++j0) search_from(j0, buckets[j0]);
    } else {
        for (long j0 = 0; j0 < B; ++j0) search_from(j0, buckets[j0]);
    }
    std::vector<SolutionRecord> out;
    for (auto& b : buckets)
        for (auto& s : b) out.push_back(std::move(s));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<SolutionRecord> brute_solve(const UnitRelation& rel, long orderBound,
                                        bool parallel) {
    return brute_solve_impl(rel, orderBound, parallel);
}

std::vector<SolutionRecord> brute_solve_serial(const UnitRelation& rel,
                                               long orderBound) {
    return brute_solve_impl(rel, orderBound, false);
}

// ---------- structural (subsum-partition) solver ----------

namespace {

// all set partitions of {0..n-1} with every block of size >= 2
void partitions_min2(size_t n, std::vector<std::vector<std::vector<size_t>>>& out) {
    std::vector<std::vector<size_t>> cur;
    std::function<void(size_t)> rec = [&](size_t i) {
        if (i == n) {
            for (const auto& b : cur)
                if (b.size() < 2) return;
            out.push_back(cur);
            return;
        }
        for (size_t bi = 0, nb = cur.size(); bi < nb; ++bi) {
            cur[bi].push_back(i);
            rec(i + 1);
            cur[bi].pop_back();
        }
        cur.push_back({i});
        rec(i + 1);
        cur.pop_back();
    };
    rec(0);
}

bool has_proper_vanishing_subsum(const std::vector<Cyclo>& vals) {
    size_t n = vals.size();
    for (size_t mask = 1; mask + 1 < (size_t(1) << n); ++mask) {
        Cyclo s(0);
        for (size_t i = 0; i < n; ++i)
            if (mask >> i & 1) s += vals[i];
        if (s.is_zero()) return true;
    }
    return false;
}

}  // namespace

std::vector<CjSolution> cj_solve(const UnitRelation& rel) {
    const size_t k = rel.terms.size();
    // shape check: each term has at most one unknown (exponent 1), and each
    // unknown appears in exactly one term
    std::vector<long> unknown_term(rel.nunknowns, -1);
    std::vector<long> term_unknown(k, -1);
    for (size_t t = 0; t < k; ++t) {
        for (size_t i = 0; i < rel.terms[t].exps.size(); ++i) {
            long e = rel.terms[t].exps[i];
            if (e == 0) continue;
            if (e != 1 || term_unknown[t] != -1 || unknown_term[i] != -1)
                throw std::invalid_argument("cj_solve: unsupported relation shape");
            term_unknown[t] = (long)i;
            unknown_term[i] = (long)t;
        }
    }
    for (long t : unknown_term)
        if (t < 0) throw std::invalid_argument("cj_solve: unused unknown");

    std::vector<std::vector<std::vector<size_t>>> parts;
    partitions_min2(k, parts);

    std::vector<CjSolution> out;
    for (const auto& part : parts) {
        // solve each block independently
        std::vector<std::vector<CjBlock>> block_solutions;
        bool feasible = true;
        for (const auto& block : part) {
            size_t b = block.size();
            long M = 1;
            for (long q : cj_admissible_orders((long)b)) M = std::lcm(M, q);
            std::vector<size_t> anchors, movers;
            for (size_t t : block)
                (term_unknown[t] < 0 ? anchors : movers).push_back(t);
            std::vector<CjBlock> sols;
            if (movers.empty()) {
                // fully constant block: vanishes or not
                Cyclo s(0);
                for (size_t t : block) s += Cyclo(rel.terms[t].coeff) * Cyclo::root(rel.terms[t].root);
                std::vector<Cyclo> vals;
                for (size_t t : block) vals.push_back(Cyclo(rel.terms[t].coeff) * Cyclo::root(rel.terms[t].root));
                if (s.is_zero() && !has_proper_vanishing_subsum(vals)) {
                    CjBlock cb;
                    cb.termIndices = block;
                    for (size_t t : block) cb.roots.push_back(rel.terms[t].root);
                    sols.push_back(cb);
                }
            } else {
                const bool anchored = !anchors.empty();
                // reference root: first anchor, else normalize first mover to 1
                RootOfUnity ref = anchored ? rel.terms[anchors[0]].root : RootOfUnity();
                // Auxiliary relation in the rotation unknowns rho (one per
                // mover, except the normalized one): term = c * ref * rho.
                UnitRelation blockRel;
                std::vector<long> term_rho(k, -1);  // original term -> rho index
                size_t nrho = movers.size() - (anchored ? 0 : 1);
                blockRel.nunknowns = nrho;
                size_t ri = 0;
                for (size_t t : block) {
                    UnitTerm bt;
                    bt.coeff = rel.terms[t].coeff;
                    bt.exps.assign(nrho, 0);
                    if (term_unknown[t] < 0) bt.root = rel.terms[t].root;
                    else if (!anchored && t == movers[0]) bt.root = ref;
                    else {
                        bt.root = ref;
                        term_rho[t] = (long)ri;
                        bt.exps[ri++] = 1;
                    }
                    blockRel.terms.push_back(std::move(bt));
                }
                for (const auto& sol : brute_solve(blockRel, M, false)) {
                    // minimality: the block must vanish with no proper subsum
                    if (sol.subsumPartition.size() != 1) continue;
                    CjBlock cb;
                    cb.termIndices = block;
                    cb.freeRotation = !anchored;
                    for (size_t t : block) {
                        if (term_unknown[t] < 0) cb.roots.push_back(rel.terms[t].root);
                        else {
                            RootOfUnity rho = term_rho[t] >= 0
                                                  ? sol.assignment[term_rho[t]]
                                                  : RootOfUnity();
                            cb.roots.push_back(ref * rho * rel.terms[t].root.inverse());
                        }
                    }
                    sols.push_back(std::move(cb));
                }
            }
            if (sols.empty()) {
                feasible = false;
                break;
            }
            block_solutions.push_back(std::move(sols));
        }
        if (!feasible) continue;
        // cartesian product of per-block solutions
        std::vector<size_t> idx(block_solutions.size(), 0);
        for (;;) {
            CjSolution cs;
            for (size_t i = 0; i < idx.size(); ++i)
                cs.blocks.push_back(block_solutions[i][idx[i]]);
            out.push_back(std::move(cs));
            size_t i = 0;
            while (i < idx.size() && ++idx[i] == block_solutions[i].size())
                idx[i++] = 0;
            if (i == idx.size()) break;
        }
    }
    return out;
}

std::vector<SolutionRecord> cj_expand(const UnitRelation& rel,
                                      const std::vector<CjSolution>& sols, long bound) {
    std::vector<SolutionRecord> out;
    for (const auto& cs : sols) {
        std::vector<size_t> freeIdx;
        for (size_t i = 0; i < cs.blocks.size(); ++i)
            if (cs.blocks[i].freeRotation) freeIdx.push_back(i);
        std::vector<long> eta(freeIdx.size(), 0);
        for (;;) {
            std::vector<RootOfUnity> assign(rel.nunknowns);
            bool ok = true;
            for (size_t bi = 0; bi < cs.blocks.size(); ++bi) {
                const CjBlock& b = cs.blocks[bi];
                RootOfUnity rot;
                for (size_t fi = 0; fi < freeIdx.size(); ++fi)
                    if (freeIdx[fi] == bi) rot = RootOfUnity(eta[fi], bound);
                for (size_t ti = 0; ti < b.termIndices.size(); ++ti) {
                    size_t t = b.termIndices[ti];
                    long unknown = -1;
                    for (size_t i = 0; i < rel.terms[t].exps.size(); ++i)
                        if (rel.terms[t].exps[i] != 0) unknown = (long)i;
                    if (unknown < 0) continue;
                    RootOfUnity v = b.roots[ti] * rot;
                    if (bound % v.den != 0) ok = false;  // outside expansion range
                    assign[unknown] = v;
                }
            }
            if (ok) {
                SolutionRecord s;
                s.assignment = assign;
                long common = 1;
                for (const auto& r : assign) common = std::lcm(common, r.den);
                s.commonOrder = common;
                out.push_back(std::move(s));
            }
            size_t i = 0;
            while (i < eta.size() && ++eta[i] == (long)bound) eta[i++] = 0;
            if (i == eta.size() && !eta.empty()) break;
            if (eta.empty()) break;
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// ---------- rational solutions of c1 + cu u + cv v + cw uv = 0 ----------

static bool rational_sqrt(const Rational& q, Rational& root) {
    if (q < 0) return false;
    Integer n = q.get_num(), d = q.get_den(), rn, rd;
    if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return false;
    if (mpz_perfect_square_p(d.get_mpz_t()) == 0) return false;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    root = Rational(rn) / Rational(rd);
    return true;
}

MonomialLinearResult monomial_linear_solve(const Cyclo& c1, const Cyclo& cu,
                                           const Cyclo& cv, const Cyclo& cw) {
    MonomialLinearResult res;
    long m = std::lcm(std::lcm(c1.order(), cu.order()), std::lcm(cv.order(), cw.order()));
    QVec b = c1.lifted(m).coords();
    QVec u = cu.lifted(m).coords(), v = cv.lifted(m).coords(), w = cw.lifted(m).coords();
    size_t rows = b.size();
    QMat a(rows, QVec(3));
    QVec rhs(rows);
    for (size_t i = 0; i < rows; ++i) {
        a[i][0] = u[i];
        a[i][1] = v[i];
        a[i][2] = w[i];
        rhs[i] = -b[i];
    }
    auto part = solve(a, rhs);
    if (!part) return res;
    auto null_basis = nullspace(a, 3);
    auto push_if_consistent = [&](const Rational& U, const Rational& V, const Rational& W) {
        if (W == U * V) res.solutions.emplace_back(U, V);
    };
    if (null_basis.empty()) {
        push_if_consistent((*part)[0], (*part)[1], (*part)[2]);
    } else if (null_basis.size() == 1) {
        // (u,v,w) = p + s*d with w = u*v: quadratic in s
        const QVec& d = null_basis[0];
        Rational A = d[0] * d[1];
        Rational B = (*part)[0] * d[1] + (*part)[1] * d[0] - d[2];
        Rational C = (*part)[0] * (*part)[1] - (*part)[2];
        std::vector<Rational> roots;
        if (A == 0) {
            if (B != 0) roots.push_back(-C / B);
            else if (C == 0) res.infinite = true;
        } else {
            Rational disc = B * B - 4 * A * C, sq;
            if (rational_sqrt(disc, sq)) {
                roots.push_back((-B + sq) / (2 * A));
                if (sq != 0) roots.push_back((-B - sq) / (2 * A));
            }
        }
        for (const Rational& s : roots)
            push_if_consistent((*part)[0] + s * d[0], (*part)[1] + s * d[1],
                               (*part)[2] + s * d[2]);
    } else {
        res.infinite = true;
    }
    std::sort(res.solutions.begin(), res.solutions.end());
    res.solutions.erase(std::unique(res.solutions.begin(), res.solutions.end()),
                        res.solutions.end());
    return res;
}

}  // namespace lattangle
