#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "setpair/exterior.hpp"
#include "setpair/instance.hpp"

namespace setpair {

// Assignment of rational d-vectors to ground elements.
struct GeneralPositionConfig {
    int d = 0;
    std::map<int, QVec> assignment;

    bool covers(const SubsetMask& s) const;
};

// v(x) = (1, p_x, p_x^2, ..., p_x^{d-1}) with distinct integer parameters,
// so every d of the vectors are independent (Vandermonde), deterministically.
GeneralPositionConfig moment_curve_config(const std::vector<int>& ground, int d);

// v(x) = e_x; the coordinate lift of the ground set.
GeneralPositionConfig basis_config(const std::vector<int>& ground, int d);

// Exhaustively checks that every d of the assigned vectors are independent.
bool verify_general_position(const GeneralPositionConfig& cfg);

// Lifts a set-pair instance to the subspace pairs spanned by the assigned
// vectors.  In basis mode intersection dimensions match intersection sizes
// exactly; in general-position mode the lifted dims are whatever exact rank
// computation yields.
PairFamilyInstance lift_sets(const PairFamilyInstance& inst, const GeneralPositionConfig& cfg);

struct GpSample {
    RationalSubspace space;
    int attempts = 0;
};

// A k-dimensional subspace V' of Q^n with dim(U cap V') = max(dim U + k - n, 0)
// for every obstacle U, found by seeded random rational frames with exact
// verification.  Throws ResampleError (naming the failing obstacle) when the
// attempt budget runs out; never returns an unverified subspace.
GpSample general_position_subspace(int ambient, const std::vector<RationalSubspace>& obstacles,
                                   int k, std::uint64_t seed);

struct BulletCheck {
    std::string name;
    bool holds = false;
};

struct ReductionRecord {
    int t = 0;
    int n_before = 0;
    int n_after = 0;
    RationalSubspace v_prime;   // in original coordinates
    RationalSubspace v_dprime;  // in V' coordinates
    RationalSubspace q;         // orthogonal complement of V'' in V' coordinates
    std::vector<int> order;     // sort by a_i, 1-based original indices
    std::vector<BulletCheck> bullets;
    std::uint64_t seed = 0;
    int attempts = 0;

    ReductionRecord() : v_prime(0), v_dprime(0), q(0) {}
};

struct ReductionOutcome {
    PairFamilyInstance base;  // t = 0, ambient N - 2t, pairs sorted by a_i
    ReductionRecord record;
};

// The two-stage reduction of the general case to t = 0, n = N: a general
// position V' of dimension n - t kills the <= t intersections, then a V''
// avoiding all traces is split off orthogonally and everything is projected
// onto its complement Q.  Every bullet of the construction is verified
// exactly on the output.
ReductionOutcome reduce_instance(const PairFamilyInstance& inst, std::uint64_t seed);

struct ChainStep {
    int index = 0;       // this step forms Z_index, 1-based
    int z_dim = 0;       // dim(Z_index)
    int y_prev_dim = 0;  // dim(Y_{index-1})
    BigRatio lym_lhs;    // dim(Y_{index-1}) / C(N-1, a_index - 1)
    BigRatio lym_rhs;    // dim(Z_{index-1}) / C(N-1, a_{index-1} - 1)
    bool lym_holds = false;
    bool lym_equality = false;
    bool self_annihilating = false;
};

struct ProofTrace {
    std::vector<int> order;  // chain position -> original pair index, 1-based
    std::optional<ReductionRecord> reduction;
    std::vector<std::pair<RationalSubspace, RationalSubspace>> lifted_pairs;
    std::vector<ChainStep> chain;
    BigRatio weighted_sum;  // sum_i 1/C(N-1, a_i-1) in base-case coordinates
    BigRatio chain_bound;   // dim(Z_m) / C(N-1, a_m-1)
    BigRatio final_slack;   // 1 - weighted_sum
    bool tight = false;
    std::uint64_t seed = 0;
};

// Builds the Z-chain Z_{i+1} = span{Z_i ^ Wedge^{da}V, A~_{i+1}} on a base
// case instance (t = 0, ambient = N), recording dimensions, the per-step
// local LYM ratios and self-annihilation, and the final chain inequality.
ProofTrace build_z_chain(const PairFamilyInstance& base);

// Full pipeline: (lift if sets) -> (reduce if t > 0 or n > N) -> chain.
ProofTrace replay_proof(const PairFamilyInstance& inst, std::uint64_t seed);

// Local LYM for a self-annihilating subspace W of grade r with 0 < 2r <= n:
//   dim(W ^ Wedge^c V) / C(n-1, r+c-1)  >=  dim(W) / C(n-1, r-1).
LymReport local_lym_subspace_check(const ExteriorSubspace& w, int c);

// True iff v_i ^ w_i != 0 for all i and v_i ^ w_j = 0 for i < j; truth
// implies linear independence of the v_i, which is re-checked directly.
bool triangular_criterion(const std::vector<Multivector>& v, const std::vector<Multivector>& w);

// For an extremal candidate (t = 0, a < b, m = C(a+b-1, a-1)): lifts in
// general position, forms W = span{^A~_i}, checks that the initial
// hypergraph is a full 1-star, and returns the center's preimage, verifying
// that it lies in every A_i and that deleting it leaves a tight family.
std::optional<int> forced_center_check(const PairFamilyInstance& inst,
                                       const GeneralPositionConfig& cfg);

}  // namespace setpair
