#pragma once

#include <optional>
#include <string>
#include <vector>

#include "setpair/instance.hpp"
#include "setpair/rational.hpp"

namespace setpair {

struct ConditionFlag {
    std::string name;
    bool holds = true;
    std::optional<std::pair<int, int>> witness;  // first violating (i, j), 1-based
};

struct ExtremalStructure {
    SubsetMask x;              // the ground set X
    std::optional<int> center;  // star center (hemi-bundled t=0); empty for the full layer
};

struct VerifierReport {
    std::vector<ConditionFlag> hypothesis_flags;
    bool hypotheses_hold = false;
    std::optional<BigRatio> weighted_sum;  // present only when hypotheses hold
    std::optional<BigInt> bound_value;
    bool conclusion_holds = false;
    bool equality = false;
    std::optional<ExtremalStructure> extremal;
    std::vector<int> order;  // verifier's sort permutation, 1-based original indices
    std::vector<std::string> notes;
};

// Theorem: disjoint on the diagonal, meeting off it, m <= C(a+b, a); at
// equality the family is the full a-layer of an (a+b)-set with complements.
VerifierReport check_bollobas(const PairFamilyInstance& inst);

// The hemi-bundled weighted theorem for a_i + b_i = N:
//   A-side (t+1)-intersecting, |A_i cap B_i| <= t, |A_i cap B_j| > t (i<j),
//   then sum_i 1/C(N-(2t+1), a_i-(t+1)) <= 1.
// Pairs are re-sorted by a_i ascending; the permutation is recorded.
VerifierReport check_hemibundled(const PairFamilyInstance& inst);

// Threshold theorem for subspace pairs with uniform dims:
//   dim(A_i cap B_i) <= t, dim(A_i cap B_j) >= t+1 off the diagonal,
//   then m <= C(a+b-2t, a-t).
VerifierReport check_furedi_subspaces(const PairFamilyInstance& inst);

// Weighted theorem for subspace pairs: trivial diagonal intersections,
// nontrivial off the diagonal, a_i ascending and b_i descending, then
//   sum_i 1/C(a_i+b_i, a_i) <= 1.
VerifierReport check_weighted_space(const PairFamilyInstance& inst);

// (X, center) iff |X| = a+b, {A_i} is all a-subsets of X containing the
// center, and B_i = X \ A_i throughout.  Requires sets, t = 0, uniform a < b.
std::optional<ExtremalStructure> recognize_extremal_t0(const PairFamilyInstance& inst);

}  // namespace setpair
