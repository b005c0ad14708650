// Test-only oracles and generators.  Everything here is deliberately
// independent of the library paths it checks: shadows are recomputed from
// popcount masks, maxima by plain depth-first enumeration, ranks by dense
// elimination over the full coefficient matrix.
#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <random>
#include <vector>

#include "setpair/exterior.hpp"
#include "setpair/hypergraph.hpp"
#include "setpair/instance.hpp"
#include "setpair/subset.hpp"

namespace oracle {

using namespace setpair;

// ---- shadow minimum by pruned exhaustive search ----------------------------

inline std::uint64_t brute_min_lower_shadow(int n, int k, int kp, int m) {
    std::vector<std::uint64_t> edges = k_subsets(n, k);
    std::vector<std::uint64_t> subs = k_subsets(n, kp);
    // per-edge shadow as a bitmask over the k'-subset index space
    std::vector<std::uint64_t> shadow(edges.size(), 0);
    for (std::size_t e = 0; e < edges.size(); ++e)
        for (std::size_t s = 0; s < subs.size(); ++s)
            if ((subs[s] & edges[e]) == subs[s]) shadow[e] |= std::uint64_t(1) << s;

    std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
    auto dfs = [&](auto&& self, std::size_t start, int count, std::uint64_t acc) -> void {
        if (count == m) {
            best = std::min<std::uint64_t>(best, std::popcount(acc));
            return;
        }
        if (static_cast<std::uint64_t>(std::popcount(acc)) >= best) return;  // only grows
        for (std::size_t i = start; i < edges.size(); ++i) {
            if (edges.size() - i < static_cast<std::size_t>(m - count)) return;
            self(self, i + 1, count + 1, acc | shadow[i]);
        }
    };
    dfs(dfs, 0, 0, 0);
    return best;
}

// ---- maximum t-intersecting k-uniform family --------------------------------

inline int brute_max_t_intersecting(int n, int k, int t) {
    std::vector<std::uint64_t> edges = k_subsets(n, k);
    std::vector<std::uint64_t> chosen;
    int best = 0;
    auto dfs = [&](auto&& self, std::size_t start) -> void {
        best = std::max(best, static_cast<int>(chosen.size()));
        for (std::size_t i = start; i < edges.size(); ++i) {
            if (chosen.size() + (edges.size() - i) <= static_cast<std::size_t>(best)) return;
            bool ok = true;
            for (std::uint64_t c : chosen)
                if (std::popcount(c & edges[i]) < t) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            chosen.push_back(edges[i]);
            self(self, i + 1);
            chosen.pop_back();
        }
    };
    dfs(dfs, 0);
    return best;
}

// ---- unpruned search maximum (the pruning-correctness oracle) ---------------
// No symmetry fixing, no counting bound, no precedence digraph: hemi-bundled
// admissibility is decided by trying every ordering of the family.

enum class BruteProfile { Hemibundled, Bollobas, Conj41 };

inline bool brute_family_ok(const std::vector<std::pair<std::uint64_t, std::uint64_t>>& fam,
                            BruteProfile profile, int t) {
    const std::size_t m = fam.size();
    for (std::size_t i = 0; i < m; ++i) {
        if (profile == BruteProfile::Hemibundled) {
            if (std::popcount(fam[i].first & fam[i].second) > t) return false;
        } else {
            if ((fam[i].first & fam[i].second) != 0) return false;
        }
        for (std::size_t j = 0; j < m; ++j) {
            if (i == j) continue;
            if (profile == BruteProfile::Hemibundled &&
                std::popcount(fam[i].first & fam[j].first) <= t)
                return false;
            if (profile == BruteProfile::Conj41 &&
                std::popcount(fam[i].first & fam[j].first) < t)
                return false;
            if (profile != BruteProfile::Hemibundled && (fam[i].first & fam[j].second) == 0)
                return false;
        }
    }
    if (profile != BruteProfile::Hemibundled) return true;
    // some ordering must satisfy the one-sided cross condition
    std::vector<std::size_t> perm(m);
    for (std::size_t i = 0; i < m; ++i) perm[i] = i;
    std::sort(perm.begin(), perm.end());
    do {
        bool ok = true;
        for (std::size_t i = 0; i < m && ok; ++i)
            for (std::size_t j = i + 1; j < m && ok; ++j)
                if (std::popcount(fam[perm[i]].first & fam[perm[j]].second) <= t) ok = false;
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return m == 0;
}

inline int brute_search_max(int a, int b, int t, int n, BruteProfile profile) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> cands;
    for (std::uint64_t am : k_subsets(n, a))
        for (std::uint64_t bm : k_subsets(n, b)) {
            int inter = std::popcount(am & bm);
            if (profile == BruteProfile::Hemibundled ? inter <= t : inter == 0)
                cands.emplace_back(am, bm);
        }
    std::vector<std::pair<std::uint64_t, std::uint64_t>> fam;
    int best = 0;
    auto dfs = [&](auto&& self, std::size_t start) -> void {
        if (brute_family_ok(fam, profile, t))
            best = std::max(best, static_cast<int>(fam.size()));
        else
            return;  // supersets of an inadmissible family stay inadmissible
        for (std::size_t i = start; i < cands.size(); ++i) {
            fam.push_back(cands[i]);
            self(self, i + 1);
            fam.pop_back();
        }
    };
    dfs(dfs, 0);
    return best;
}

// ---- random generators -------------------------------------------------------

inline BigRatio random_ratio(std::mt19937_64& rng, long lo = -4, long hi = 4) {
    std::uniform_int_distribution<long> dist(lo, hi);
    return BigRatio(dist(rng));
}

inline QVec random_vector(std::mt19937_64& rng, int n, long lo = -4, long hi = 4) {
    QVec v(n);
    for (int i = 0; i < n; ++i) v[i] = random_ratio(rng, lo, hi);
    return v;
}

inline QVec random_nonzero_vector(std::mt19937_64& rng, int n) {
    for (;;) {
        QVec v = random_vector(rng, n);
        if (!is_zero_vec(v)) return v;
    }
}

inline BasisMatrix random_invertible(std::mt19937_64& rng, int n) {
    for (;;) {
        QMat cols(n);
        for (int j = 0; j < n; ++j) cols[j] = random_vector(rng, n);
        try {
            return BasisMatrix(cols);
        } catch (const PreconditionError&) {
        }
    }
}

inline Hypergraph random_hypergraph(std::mt19937_64& rng, int n, int r, int want) {
    std::vector<std::uint64_t> all = k_subsets(n, r);
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(std::min<std::size_t>(want, all.size()));
    return Hypergraph(n, r, std::move(all));
}

// A random subspace of the full star space v ^ Wedge^{r-1} V: always
// self-annihilating, with dim at most C(n-1, r-1).
inline ExteriorSubspace random_self_annihilating(std::mt19937_64& rng, int n, int r, int dim) {
    QVec v = random_nonzero_vector(rng, n);
    Multivector base = Multivector::from_vector(v);
    std::vector<Multivector> star;
    for (std::uint64_t j : k_subsets(n, r - 1))
        star.push_back(wedge(base, Multivector::basis_element(n, j)));
    ExteriorSubspace full = echelonize(n, r, star);
    if (dim >= full.dim()) return full;
    std::vector<Multivector> gens;
    for (int i = 0; i < dim; ++i) {
        Multivector combo(n, r);
        for (const Multivector& b : full.basis()) {
            Multivector term = b;
            term *= random_ratio(rng);
            combo += term;
        }
        gens.push_back(std::move(combo));
    }
    return echelonize(n, r, gens);
}

// Dense rank of a list of grade-r multivectors over the C(n, r) monomial
// coordinates; the fallback oracle for echelonize.
inline int dense_rank(const std::vector<Multivector>& vecs, int n, int r) {
    std::vector<std::uint64_t> cols = k_subsets(n, r);
    QMat mat;
    for (const Multivector& v : vecs) {
        QVec row(cols.size(), BigRatio(0));
        for (std::size_t c = 0; c < cols.size(); ++c) row[c] = v.coeff(cols[c]);
        mat.push_back(std::move(row));
    }
    return rank_of(std::move(mat));
}

}  // namespace oracle
