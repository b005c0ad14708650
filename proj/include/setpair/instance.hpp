#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "setpair/linalg.hpp"
#include "setpair/subset.hpp"

namespace setpair {

enum class PairKind { Sets, Subspaces };

// A collection {(A_i, B_i)} of set pairs or subspace pairs over a common
// ground set [n] / ambient space Q^n, with an intersection threshold t.
struct PairFamilyInstance {
    PairKind kind = PairKind::Sets;
    int ground_n = 0;
    int t = 0;
    std::vector<std::pair<SubsetMask, SubsetMask>> set_pairs;
    std::vector<std::pair<RationalSubspace, RationalSubspace>> space_pairs;

    static PairFamilyInstance sets(int ground_n, int t,
                                   std::vector<std::pair<SubsetMask, SubsetMask>> pairs);
    static PairFamilyInstance subspaces(
        int ground_n, int t, std::vector<std::pair<RationalSubspace, RationalSubspace>> pairs);

    std::size_t size() const {
        return kind == PairKind::Sets ? set_pairs.size() : space_pairs.size();
    }

    int a(std::size_t i) const;  // |A_i| or dim(A_i)
    int b(std::size_t i) const;

    // |A_i cap B_j| or dim(A_i cap B_j)
    int inter_ab(std::size_t i, std::size_t j) const;
    // |A_i cap A_j| or dim(A_i cap A_j)
    int inter_aa(std::size_t i, std::size_t j) const;

    std::optional<int> uniform_n_sum() const;  // N when all a_i + b_i agree
    std::optional<int> uniform_a() const;
    std::optional<int> uniform_b() const;

    // Reordered copy (perm[i] = original index of new position i).
    PairFamilyInstance reordered(const std::vector<std::size_t>& perm) const;

    void validate() const;  // sides nonempty, common ground/ambient
};

}  // namespace setpair
