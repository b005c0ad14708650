#include "setpair/instance.hpp"

#include <bit>

namespace setpair {

PairFamilyInstance PairFamilyInstance::sets(
    int ground_n, int t, std::vector<std::pair<SubsetMask, SubsetMask>> pairs) {
    PairFamilyInstance inst;
    inst.kind = PairKind::Sets;
    inst.ground_n = ground_n;
    inst.t = t;
    inst.set_pairs = std::move(pairs);
    inst.validate();
    return inst;
}

PairFamilyInstance PairFamilyInstance::subspaces(
    int ground_n, int t, std::vector<std::pair<RationalSubspace, RationalSubspace>> pairs) {
    PairFamilyInstance inst;
    inst.kind = PairKind::Subspaces;
    inst.ground_n = ground_n;
    inst.t = t;
    inst.space_pairs = std::move(pairs);
    inst.validate();
    return inst;
}

int PairFamilyInstance::a(std::size_t i) const {
    return kind == PairKind::Sets ? set_pairs[i].first.card() : space_pairs[i].first.dim();
}

int PairFamilyInstance::b(std::size_t i) const {
    return kind == PairKind::Sets ? set_pairs[i].second.card() : space_pairs[i].second.dim();
}

int PairFamilyInstance::inter_ab(std::size_t i, std::size_t j) const {
    if (kind == PairKind::Sets)
        return std::popcount(set_pairs[i].first.bits & set_pairs[j].second.bits);
    return subspace_ops(space_pairs[i].first, space_pairs[j].second).intersection_dim;
}

int PairFamilyInstance::inter_aa(std::size_t i, std::size_t j) const {
    if (kind == PairKind::Sets)
        return std::popcount(set_pairs[i].first.bits & set_pairs[j].first.bits);
    return subspace_ops(space_pairs[i].first, space_pairs[j].first).intersection_dim;
}

std::optional<int> PairFamilyInstance::uniform_n_sum() const {
    if (size() == 0) return std::nullopt;
    int s = a(0) + b(0);
    for (std::size_t i = 1; i < size(); ++i)
        if (a(i) + b(i) != s) return std::nullopt;
    return s;
}

std::optional<int> PairFamilyInstance::uniform_a() const {
    if (size() == 0) return std::nullopt;
    int v = a(0);
    for (std::size_t i = 1; i < size(); ++i)
        if (a(i) != v) return std::nullopt;
    return v;
}

std::optional<int> PairFamilyInstance::uniform_b() const {
    if (size() == 0) return std::nullopt;
    int v = b(0);
    for (std::size_t i = 1; i < size(); ++i)
        if (b(i) != v) return std::nullopt;
    return v;
}

PairFamilyInstance PairFamilyInstance::reordered(const std::vector<std::size_t>& perm) const {
    PairFamilyInstance out = *this;
    if (kind == PairKind::Sets) {
        out.set_pairs.clear();
        for (std::size_t p : perm) out.set_pairs.push_back(set_pairs[p]);
    } else {
        out.space_pairs.clear();
        for (std::size_t p : perm) out.space_pairs.push_back(space_pairs[p]);
    }
    return out;
}

void PairFamilyInstance::validate() const {
    for (std::size_t i = 0; i < size(); ++i) {
        if (a(i) < 1 || b(i) < 1)
            throw PreconditionError("instance: pair " + std::to_string(i + 1) +
                                    " has an empty side");
        if (kind == PairKind::Sets) {
            if (set_pairs[i].first.ground_n != ground_n ||
                set_pairs[i].second.ground_n != ground_n)
                throw PreconditionError("instance: pair " + std::to_string(i + 1) +
                                        " lives on a different ground set");
        } else {
            if (space_pairs[i].first.ambient() != ground_n ||
                space_pairs[i].second.ambient() != ground_n)
                throw PreconditionError("instance: pair " + std::to_string(i + 1) +
                                        " lives in a different ambient space");
        }
    }
}

}  // namespace setpair
