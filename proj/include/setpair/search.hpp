#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "setpair/instance.hpp"
#include "setpair/rational.hpp"

namespace setpair {

// Hypothesis menus the search can enforce:
//   Hemibundled - A-side (t+1)-intersecting, |A_i cap B_i| <= t,
//                 |A_i cap B_j| > t for i < j (order-sensitive);
//   Bollobas    - A_i cap B_i empty, A_i cap B_j nonempty off-diagonal;
//   Conj41      - A-side t-intersecting, A_i cap B_i empty,
//                 A_i cap B_j nonempty off-diagonal.
enum class ConstraintProfile { Hemibundled, Bollobas, Conj41 };

struct SearchSpec {
    int a = 0;
    int b = 0;
    int t = 0;
    int n_max = 0;
    ConstraintProfile profile = ConstraintProfile::Hemibundled;
    bool isomorphism_reduction = true;
    // Admissibility of a hemi-bundled family quantifies over pair orderings
    // (feasible iff the mandatory-precedence digraph is acyclic).  With the
    // flag off, the one-sided condition is checked in insertion order only.
    bool order_quantified = true;
    // Strengthen the hemi-bundled cross condition to both orders of (i, j).
    // This is the hypothesis set of the stability theorem, whose extremal
    // structure is unique; the one-sided search has many tight families.
    bool two_sided_cross = false;
    std::uint64_t node_budget = 100000000;
    int jobs = 1;

    void validate() const;
};

struct PerNResult {
    int n = 0;
    int max_m = 0;
    std::uint64_t nodes = 0;
    bool truncated = false;
};

struct SearchResult {
    int max_m = 0;
    BigInt bound;
    bool bound_is_theorem = false;  // false for the conjectural AK bound
    bool tight = false;
    std::vector<PairFamilyInstance> witnesses;
    std::optional<bool> unique_structure;
    std::vector<PerNResult> per_n;
    bool truncated = false;
    std::uint64_t nodes = 0;
};

// Exact maximum family size over all ground sets of size a+b..n_max, by
// depth-first extension in a fixed global pair order with a symmetry-fixed
// first pair.  Witnesses are every family attaining the maximum, reduced to
// canonical representatives under relabeling when reduction is enabled, and
// re-verified by the matching theorem verifier.
SearchResult search_max_family(const SearchSpec& spec);

struct UniquenessReport {
    bool unique = false;
    int witness_count = 0;
};

// Enumerates all hemi-bundled t=0 families attaining m = C(a+b-1, a-1) and
// reports whether the star-plus-complements structure is the only
// isomorphism class.  Requires a < b.
UniquenessReport certify_uniqueness_t0(int a, int b, int n_max);

// Maximum size of a k-uniform t-intersecting family on [n]: the largest of
// the Frankl families {F : |F cap [t+2r]| >= t+r}.  External closed form,
// cross-checked against brute force in the tests.
BigInt ak_bound(int n, int k, int t);

struct ConjectureProbe {
    int max_m = 0;
    BigInt ak;
    bool consistent = false;
    SearchResult detail;
};

// Searches under the Conj41 constraints and compares against ak_bound; a
// violation would be a counterexample and is carried in detail.witnesses.
// t = 0 routes to the Bollobas profile with bound C(a+b, a).
ConjectureProbe conjecture41_probe(int a, int b, int t, int n_max);

// Canonical form of a labeled family under relabeling of [n]: the minimum,
// over all permutations, of the sorted list of (A, B) mask pairs.
using Family = std::vector<std::pair<std::uint64_t, std::uint64_t>>;
Family canonical_family(Family f, int n);

}  // namespace setpair
