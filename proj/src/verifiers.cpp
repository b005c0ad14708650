#include "setpair/verifiers.hpp"

#include <algorithm>
#include <numeric>

#include "setpair/hypergraph.hpp"

namespace setpair {

namespace {

// Stable sort positions by key; returns perm with perm[i] = original index.
template <typename Key>
std::vector<std::size_t> sorted_positions(std::size_t m, Key key) {
    std::vector<std::size_t> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    std::stable_sort(perm.begin(), perm.end(), key);
    return perm;
}

std::vector<int> one_based(const std::vector<std::size_t>& perm) {
    std::vector<int> out;
    out.reserve(perm.size());
    for (std::size_t p : perm) out.push_back(static_cast<int>(p) + 1);
    return out;
}

void require_uniform_sizes(const PairFamilyInstance& inst, int& a, int& b) {
    auto ua = inst.uniform_a(), ub = inst.uniform_b();
    if (inst.size() == 0) {
        a = b = 0;
        return;
    }
    if (!ua)
        for (std::size_t i = 1; i < inst.size(); ++i)
            if (inst.a(i) != inst.a(0))
                throw PreconditionError("non-uniform a at pair " + std::to_string(i + 1));
    if (!ub)
        for (std::size_t i = 1; i < inst.size(); ++i)
            if (inst.b(i) != inst.b(0))
                throw PreconditionError("non-uniform b at pair " + std::to_string(i + 1));
    a = *ua;
    b = *ub;
}

}  // namespace

VerifierReport check_bollobas(const PairFamilyInstance& inst) {
    if (inst.kind != PairKind::Sets)
        throw PreconditionError("check_bollobas: expects a set-pair instance");
    int a = 0, b = 0;
    require_uniform_sizes(inst, a, b);
    const std::size_t m = inst.size();

    VerifierReport rep;
    ConditionFlag diag{"diagonal_disjoint", true, std::nullopt};
    ConditionFlag cross{"off_diagonal_meets", true, std::nullopt};
    for (std::size_t i = 0; i < m; ++i)
        if (inst.inter_ab(i, i) != 0 && diag.holds) {
            diag.holds = false;
            diag.witness = {static_cast<int>(i) + 1, static_cast<int>(i) + 1};
        }
    for (std::size_t i = 0; i < m && cross.holds; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (i != j && inst.inter_ab(i, j) == 0) {
                cross.holds = false;
                cross.witness = {static_cast<int>(i) + 1, static_cast<int>(j) + 1};
                break;
            }
    rep.hypothesis_flags = {diag, cross};
    rep.hypotheses_hold = diag.holds && cross.holds;
    rep.bound_value = binom(a + b, a);
    if (!rep.hypotheses_hold) return rep;

    rep.weighted_sum = make_ratio(static_cast<long>(m), *rep.bound_value);
    rep.conclusion_holds = BigInt(static_cast<unsigned long>(m)) <= *rep.bound_value;
    rep.equality = BigInt(static_cast<unsigned long>(m)) == *rep.bound_value;
    if (rep.equality && m > 0) {
        std::uint64_t xmask = 0;
        for (const auto& [A, B] : inst.set_pairs) xmask |= A.bits | B.bits;
        SubsetMask x(inst.ground_n, xmask);
        bool ok = x.card() == a + b;
        std::vector<std::uint64_t> as;
        for (const auto& [A, B] : inst.set_pairs) {
            if ((B.bits ^ (xmask & ~A.bits)) != 0) ok = false;
            as.push_back(A.bits);
        }
        std::sort(as.begin(), as.end());
        as.erase(std::unique(as.begin(), as.end()), as.end());
        if (ok && BigInt(static_cast<unsigned long>(as.size())) == *rep.bound_value)
            rep.extremal = ExtremalStructure{x, std::nullopt};
    }
    return rep;
}

VerifierReport check_hemibundled(const PairFamilyInstance& inst) {
    const std::size_t m = inst.size();
    const int t = inst.t;
    std::optional<int> n_sum = inst.uniform_n_sum();
    if (m > 0 && !n_sum) {
        for (std::size_t i = 1; i < m; ++i)
            if (inst.a(i) + inst.b(i) != inst.a(0) + inst.b(0))
                throw PreconditionError("check_hemibundled: a_i + b_i differs at pair " +
                                        std::to_string(i + 1));
    }
    for (std::size_t i = 0; i < m; ++i) {
        if (inst.a(i) > inst.b(i))
            throw PreconditionError("check_hemibundled: a_i > b_i at pair " +
                                    std::to_string(i + 1));
        if (inst.a(i) < t + 1)
            throw PreconditionError(
                "check_hemibundled: infeasible parameters, a_i <= t at pair " +
                std::to_string(i + 1) + " (|A_i cap A_i| > t is unsatisfiable)");
    }

    // Normalize to a_1 <= ... <= a_m; the one-sided cross condition is
    // checked against this order.
    std::vector<std::size_t> perm = sorted_positions(
        m, [&](std::size_t x, std::size_t y) { return inst.a(x) < inst.a(y); });

    VerifierReport rep;
    rep.order = one_based(perm);
    ConditionFlag aa{"a_side_t_plus_1_intersecting", true, std::nullopt};
    ConditionFlag diag{"diagonal_at_most_t", true, std::nullopt};
    ConditionFlag cross{"cross_above_t_for_i_before_j", true, std::nullopt};
    for (std::size_t i = 0; i < m && aa.holds; ++i)
        for (std::size_t j = i; j < m; ++j)
            if (inst.inter_aa(perm[i], perm[j]) <= t) {
                aa.holds = false;
                aa.witness = {static_cast<int>(perm[i]) + 1, static_cast<int>(perm[j]) + 1};
                break;
            }
    for (std::size_t i = 0; i < m; ++i)
        if (inst.inter_ab(perm[i], perm[i]) > t && diag.holds) {
            diag.holds = false;
            diag.witness = {static_cast<int>(perm[i]) + 1, static_cast<int>(perm[i]) + 1};
        }
    for (std::size_t i = 0; i < m && cross.holds; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            if (inst.inter_ab(perm[i], perm[j]) <= t) {
                cross.holds = false;
                cross.witness = {static_cast<int>(perm[i]) + 1, static_cast<int>(perm[j]) + 1};
                break;
            }
    rep.hypothesis_flags = {aa, diag, cross};
    rep.hypotheses_hold = aa.holds && diag.holds && cross.holds;
    if (m > 0) {
        int big_n = *n_sum;
        if (auto ua = inst.uniform_a())
            rep.bound_value = binom(big_n - (2 * t + 1), *ua - (t + 1));
    }
    if (!rep.hypotheses_hold) return rep;

    BigRatio sum(0);
    if (m > 0) {
        int big_n = *n_sum;
        for (std::size_t i = 0; i < m; ++i)
            sum += make_ratio(1, binom(big_n - (2 * t + 1), inst.a(i) - (t + 1)));
    }
    rep.weighted_sum = sum;
    rep.conclusion_holds = sum <= 1;
    rep.equality = sum == 1;

    if (rep.equality) {
        bool strict = true;
        for (std::size_t i = 0; i < m; ++i)
            if (inst.a(i) == inst.b(i)) strict = false;
        if (strict) {
            if (!inst.uniform_a() || !inst.uniform_b())
                throw InvariantError(
                    "check_hemibundled: equality with a_i < b_i but non-uniform sizes; "
                    "this contradicts the equality clause of the theorem");
            if (inst.kind == PairKind::Sets && t == 0 &&
                *inst.uniform_a() < *inst.uniform_b())
                rep.extremal = recognize_extremal_t0(inst);
        } else {
            rep.notes.push_back(
                "remark: a=b extremal structures not unique; no structure asserted");
        }
    }
    return rep;
}

VerifierReport check_furedi_subspaces(const PairFamilyInstance& inst) {
    if (inst.kind != PairKind::Subspaces)
        throw PreconditionError("check_furedi_subspaces: expects a subspace-pair instance");
    int a = 0, b = 0;
    require_uniform_sizes(inst, a, b);
    const std::size_t m = inst.size();
    const int t = inst.t;

    VerifierReport rep;
    ConditionFlag diag{"diagonal_at_most_t", true, std::nullopt};
    ConditionFlag cross{"off_diagonal_at_least_t_plus_1", true, std::nullopt};
    for (std::size_t i = 0; i < m; ++i)
        if (inst.inter_ab(i, i) > t && diag.holds) {
            diag.holds = false;
            diag.witness = {static_cast<int>(i) + 1, static_cast<int>(i) + 1};
        }
    for (std::size_t i = 0; i < m && cross.holds; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (i != j && inst.inter_ab(i, j) < t + 1) {
                cross.holds = false;
                cross.witness = {static_cast<int>(i) + 1, static_cast<int>(j) + 1};
                break;
            }
    rep.hypothesis_flags = {diag, cross};
    rep.hypotheses_hold = diag.holds && cross.holds;
    rep.bound_value = binom(a + b - 2 * t, a - t);
    if (!rep.hypotheses_hold) return rep;
    rep.weighted_sum = make_ratio(static_cast<long>(m), *rep.bound_value);
    rep.conclusion_holds = BigInt(static_cast<unsigned long>(m)) <= *rep.bound_value;
    rep.equality = BigInt(static_cast<unsigned long>(m)) == *rep.bound_value;
    return rep;
}

VerifierReport check_weighted_space(const PairFamilyInstance& inst) {
    if (inst.kind != PairKind::Subspaces)
        throw PreconditionError("check_weighted_space: expects a subspace-pair instance");
    const std::size_t m = inst.size();

    // Normalize: a ascending, ties by b descending.  If a valid monotone
    // order exists at all, this one is valid.
    std::vector<std::size_t> perm = sorted_positions(m, [&](std::size_t x, std::size_t y) {
        if (inst.a(x) != inst.a(y)) return inst.a(x) < inst.a(y);
        return inst.b(x) > inst.b(y);
    });
    for (std::size_t i = 0; i + 1 < m; ++i)
        if (inst.b(perm[i]) < inst.b(perm[i + 1]))
            throw PreconditionError(
                "check_weighted_space: b_i is not non-increasing at sorted position " +
                std::to_string(i + 2));

    VerifierReport rep;
    rep.order = one_based(perm);
    ConditionFlag diag{"diagonal_trivial", true, std::nullopt};
    ConditionFlag cross{"off_diagonal_nontrivial", true, std::nullopt};
    for (std::size_t i = 0; i < m; ++i)
        if (inst.inter_ab(i, i) != 0 && diag.holds) {
            diag.holds = false;
            diag.witness = {static_cast<int>(i) + 1, static_cast<int>(i) + 1};
        }
    for (std::size_t i = 0; i < m && cross.holds; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (i != j && inst.inter_ab(i, j) == 0) {
                cross.holds = false;
                cross.witness = {static_cast<int>(i) + 1, static_cast<int>(j) + 1};
                break;
            }
    rep.hypothesis_flags = {diag, cross};
    rep.hypotheses_hold = diag.holds && cross.holds;
    if (!rep.hypotheses_hold) return rep;

    BigRatio sum(0);
    for (std::size_t i = 0; i < m; ++i)
        sum += make_ratio(1, binom(inst.a(i) + inst.b(i), inst.a(i)));
    rep.weighted_sum = sum;
    rep.conclusion_holds = sum <= 1;
    rep.equality = sum == 1;
    return rep;
}

std::optional<ExtremalStructure> recognize_extremal_t0(const PairFamilyInstance& inst) {
    if (inst.kind != PairKind::Sets)
        throw PreconditionError("recognize_extremal_t0: expects a set-pair instance");
    if (inst.t != 0) throw PreconditionError("recognize_extremal_t0: requires t = 0");
    if (inst.size() == 0) return std::nullopt;
    // anything that breaks uniform a < b cannot be the structure
    auto ua = inst.uniform_a(), ub = inst.uniform_b();
    if (!ua || !ub || *ua >= *ub) return std::nullopt;
    int a = *ua, b = *ub;

    std::uint64_t xmask = 0;
    for (const auto& [A, B] : inst.set_pairs) xmask |= A.bits | B.bits;
    SubsetMask x(inst.ground_n, xmask);
    if (x.card() != a + b) return std::nullopt;
    for (const auto& [A, B] : inst.set_pairs)
        if (B.bits != (xmask & ~A.bits)) return std::nullopt;

    std::vector<std::uint64_t> as;
    std::uint64_t common = ~std::uint64_t(0);
    for (const auto& [A, B] : inst.set_pairs) {
        as.push_back(A.bits);
        common &= A.bits;
    }
    std::sort(as.begin(), as.end());
    as.erase(std::unique(as.begin(), as.end()), as.end());
    if (as.size() != inst.size() || common == 0) return std::nullopt;
    if (BigInt(static_cast<unsigned long>(as.size())) != binom(a + b - 1, a - 1))
        return std::nullopt;
    // count + distinctness + common element pin the family down exactly
    int center = std::countr_zero(common) + 1;
    return ExtremalStructure{x, center};
}

}  // namespace setpair
