#include "setpair/search.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <numeric>

#include "setpair/hypergraph.hpp"
#include "setpair/verifiers.hpp"

namespace setpair {

void SearchSpec::validate() const {
    if (a < 1 || b < a) throw PreconditionError("search spec: requires 1 <= a <= b");
    if (t < 0) throw PreconditionError("search spec: negative t");
    if (n_max < a + b) throw PreconditionError("search spec: n_max must be at least a + b");
    if (n_max > 12) throw PreconditionError("search spec: n_max beyond desk scale (max 12)");
    if (isomorphism_reduction && n_max > 8)
        throw PreconditionError("search spec: isomorphism reduction supported up to n_max = 8");
    if (profile == ConstraintProfile::Hemibundled && a < t + 1)
        throw PreconditionError("search spec: hemi-bundled profile needs a >= t + 1");
    if (profile == ConstraintProfile::Conj41 && t < 1)
        throw PreconditionError("search spec: Conj41 profile needs t >= 1 (t = 0 is Bollobas)");
    if (jobs < 1) throw PreconditionError("search spec: jobs must be positive");
}

namespace {

struct Cand {
    std::uint64_t amask;
    std::uint64_t bmask;
};

std::uint64_t apply_perm(std::uint64_t mask, const std::vector<int>& perm) {
    std::uint64_t out = 0;
    for (std::uint64_t b = mask; b != 0; b &= b - 1)
        out |= std::uint64_t(1) << perm[std::countr_zero(b)];
    return out;
}

struct UnitResult {
    int max_m = 0;
    std::vector<Family> families;
    std::uint64_t nodes = 0;
    bool truncated = false;
};

// Depth-first search over one ground-set size, extending by candidate pairs
// in a fixed global order so every family set is visited exactly once.
class NSearch {
  public:
    NSearch(const SearchSpec& spec, int n) : spec_(spec), n_(n) {
        for (std::uint64_t am : k_subsets(n, spec.a))
            for (std::uint64_t bm : k_subsets(n, spec.b))
                if (pair_ok(am, bm)) cands_.push_back({am, bm});
    }

    // Root pairs: A_1 = {1..a}, B_1 an orbit representative under the
    // stabilizer of A_1 (B cap A_1 packed low, B \ A_1 packed just above a).
    std::vector<int> roots() const {
        std::uint64_t a1 = (std::uint64_t(1) << spec_.a) - 1;
        int max_overlap = spec_.profile == ConstraintProfile::Hemibundled ? spec_.t : 0;
        std::vector<int> out;
        for (int ov = 0; ov <= max_overlap && ov <= spec_.a; ++ov) {
            if (spec_.b - ov > n_ - spec_.a) continue;
            std::uint64_t inside = (std::uint64_t(1) << ov) - 1;
            std::uint64_t outside = ((std::uint64_t(1) << (spec_.b - ov)) - 1) << spec_.a;
            std::uint64_t bm = inside | outside;
            for (std::size_t i = 0; i < cands_.size(); ++i)
                if (cands_[i].amask == a1 && cands_[i].bmask == bm)
                    out.push_back(static_cast<int>(i));
        }
        return out;
    }

    UnitResult run_root(int root, std::uint64_t budget) {
        UnitResult res;
        family_.clear();
        family_.push_back(root);
        res.max_m = 1;
        res.families.push_back(to_family());
        dfs(root + 1, res, budget);
        return res;
    }

    int candidate_count() const { return static_cast<int>(cands_.size()); }

    // Unrestricted exhaustive maximum (no symmetry fixing); the pruning
    // correctness oracle for small candidate counts.
    int brute_force_max(std::uint64_t budget) {
        UnitResult res;
        family_.clear();
        dfs(0, res, budget);
        if (res.truncated) throw PreconditionError("brute_force_max: budget exhausted");
        return res.max_m;
    }

    Family to_family() const {
        Family f;
        for (int idx : family_) f.emplace_back(cands_[idx].amask, cands_[idx].bmask);
        return f;
    }

  private:
    bool pair_ok(std::uint64_t am, std::uint64_t bm) const {
        int inter = std::popcount(am & bm);
        if (spec_.profile == ConstraintProfile::Hemibundled) return inter <= spec_.t;
        return inter == 0;
    }

    // Necessary conditions on an unordered pair of members.
    bool compatible(const Cand& p, const Cand& q) const {
        switch (spec_.profile) {
            case ConstraintProfile::Hemibundled: {
                if (std::popcount(p.amask & q.amask) <= spec_.t) return false;
                if (spec_.two_sided_cross)
                    return std::popcount(p.amask & q.bmask) > spec_.t &&
                           std::popcount(q.amask & p.bmask) > spec_.t;
                if (spec_.order_quantified)
                    return std::popcount(p.amask & q.bmask) > spec_.t ||
                           std::popcount(q.amask & p.bmask) > spec_.t;
                return true;  // directional check happens at append time
            }
            case ConstraintProfile::Bollobas:
                return (p.amask & q.bmask) != 0 && (q.amask & p.bmask) != 0;
            case ConstraintProfile::Conj41:
                return std::popcount(p.amask & q.amask) >= spec_.t &&
                       (p.amask & q.bmask) != 0 && (q.amask & p.bmask) != 0;
        }
        return false;
    }

    // Mandatory-precedence digraph on the extended family: edge u -> v when
    // u must come before v (|A_v cap B_u| <= t).  Admissible iff acyclic.
    bool order_feasible_with(int q) const {
        std::vector<int> nodes = family_;
        nodes.push_back(q);
        const std::size_t k = nodes.size();
        std::vector<std::vector<std::size_t>> succ(k);
        std::vector<int> indeg(k, 0);
        for (std::size_t u = 0; u < k; ++u)
            for (std::size_t v = 0; v < k; ++v) {
                if (u == v) continue;
                if (std::popcount(cands_[nodes[v]].amask & cands_[nodes[u]].bmask) <= spec_.t) {
                    succ[u].push_back(v);
                    ++indeg[v];
                }
            }
        std::vector<std::size_t> queue;
        for (std::size_t i = 0; i < k; ++i)
            if (indeg[i] == 0) queue.push_back(i);
        std::size_t done = 0;
        while (!queue.empty()) {
            std::size_t u = queue.back();
            queue.pop_back();
            ++done;
            for (std::size_t v : succ[u])
                if (--indeg[v] == 0) queue.push_back(v);
        }
        return done == k;
    }

    bool can_append(int q) const {
        for (int p : family_) {
            if (!compatible(cands_[p], cands_[q])) return false;
            if (spec_.profile == ConstraintProfile::Hemibundled && !spec_.order_quantified &&
                std::popcount(cands_[p].amask & cands_[q].bmask) <= spec_.t)
                return false;  // p was inserted earlier, so p precedes q
        }
        if (spec_.profile == ConstraintProfile::Hemibundled && spec_.order_quantified &&
            !family_.empty())
            return order_feasible_with(q);
        return true;
    }

    void dfs(int start, UnitResult& res, std::uint64_t budget) {
        if (++res.nodes > budget) {
            res.truncated = true;
            return;
        }
        const int total = static_cast<int>(cands_.size());
        const int have = static_cast<int>(family_.size());
        for (int idx = start; idx < total; ++idx) {
            if (have + (total - idx) < res.max_m) return;  // cannot even tie
            if (!can_append(idx)) continue;
            family_.push_back(idx);
            if (have + 1 > res.max_m) {
                res.max_m = have + 1;
                res.families.clear();
            }
            if (have + 1 == res.max_m) res.families.push_back(to_family());
            dfs(idx + 1, res, budget);
            family_.pop_back();
            if (res.truncated) return;
        }
    }

    const SearchSpec& spec_;
    int n_;
    std::vector<Cand> cands_;
    std::vector<int> family_;
};

// Deterministic topological order of a hemi-bundled family (smallest index
// among the ready nodes first); callers guarantee feasibility.
std::vector<std::size_t> topo_order(const Family& f, int t) {
    const std::size_t k = f.size();
    std::vector<std::vector<std::size_t>> succ(k);
    std::vector<int> indeg(k, 0);
    for (std::size_t u = 0; u < k; ++u)
        for (std::size_t v = 0; v < k; ++v) {
            if (u == v) continue;
            if (std::popcount(f[v].first & f[u].second) <= t) {
                succ[u].push_back(v);
                ++indeg[v];
            }
        }
    std::vector<std::size_t> order;
    std::vector<bool> used(k, false);
    for (std::size_t step = 0; step < k; ++step) {
        std::size_t pick = k;
        for (std::size_t i = 0; i < k; ++i)
            if (!used[i] && indeg[i] == 0) {
                pick = i;
                break;
            }
        if (pick == k) throw InvariantError("topo_order: family admits no valid ordering");
        used[pick] = true;
        order.push_back(pick);
        for (std::size_t v : succ[pick]) --indeg[v];
    }
    return order;
}

PairFamilyInstance family_to_instance(const Family& f, int t, ConstraintProfile profile) {
    int top = 1;
    for (const auto& [am, bm] : f) {
        if (am != 0) top = std::max(top, top_element(am));
        if (bm != 0) top = std::max(top, top_element(bm));
    }
    Family ordered = f;
    if (profile == ConstraintProfile::Hemibundled) {
        std::vector<std::size_t> order = topo_order(f, t);
        ordered.clear();
        for (std::size_t p : order) ordered.push_back(f[p]);
    }
    std::vector<std::pair<SubsetMask, SubsetMask>> pairs;
    for (const auto& [am, bm] : ordered)
        pairs.emplace_back(SubsetMask(top, am), SubsetMask(top, bm));
    return PairFamilyInstance::sets(top, t, std::move(pairs));
}

void reverify_witness(const PairFamilyInstance& inst, const SearchSpec& spec) {
    switch (spec.profile) {
        case ConstraintProfile::Hemibundled: {
            VerifierReport rep = check_hemibundled(inst);
            if (!rep.hypotheses_hold)
                throw InvariantError("search: witness fails hemi-bundled hypotheses");
            if (!rep.conclusion_holds)
                throw InvariantError("search: witness weighted sum exceeds 1");
            if (spec.two_sided_cross)
                for (std::size_t i = 0; i < inst.size(); ++i)
                    for (std::size_t j = 0; j < inst.size(); ++j)
                        if (i != j && inst.inter_ab(i, j) <= spec.t)
                            throw InvariantError("search: witness fails two-sided cross condition");
            return;
        }
        case ConstraintProfile::Bollobas: {
            VerifierReport rep = check_bollobas(inst);
            if (!rep.hypotheses_hold)
                throw InvariantError("search: witness fails Bollobas hypotheses");
            return;
        }
        case ConstraintProfile::Conj41: {
            const std::size_t m = inst.size();
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = 0; j < m; ++j) {
                    if (inst.inter_aa(i, j) < spec.t)
                        throw InvariantError("search: witness fails A-side t-intersecting");
                    if (i == j && inst.inter_ab(i, i) != 0)
                        throw InvariantError("search: witness has A_i meeting B_i");
                    if (i != j && inst.inter_ab(i, j) == 0)
                        throw InvariantError("search: witness has A_i missing B_j");
                }
            return;
        }
    }
}

BigInt profile_bound(const SearchSpec& spec, bool& is_theorem) {
    switch (spec.profile) {
        case ConstraintProfile::Bollobas:
            is_theorem = true;
            return binom(spec.a + spec.b, spec.a);
        case ConstraintProfile::Hemibundled:
            is_theorem = true;
            return binom(spec.a + spec.b - (2 * spec.t + 1), spec.a - (spec.t + 1));
        case ConstraintProfile::Conj41:
            // Conjectural; never used for pruning, only for reporting.
            is_theorem = false;
            return ak_bound(spec.a + spec.b, spec.a, spec.t);
    }
    throw PreconditionError("unknown profile");
}

}  // namespace

Family canonical_family(Family f, int n) {
    for (auto& [am, bm] : f)
        if ((am | bm) >> n)
            throw RangeError("canonical_family: mask outside [n]");
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Family best;
    bool first = true;
    do {
        Family g;
        g.reserve(f.size());
        for (const auto& [am, bm] : f) g.emplace_back(apply_perm(am, perm), apply_perm(bm, perm));
        std::sort(g.begin(), g.end());
        if (first || g < best) {
            best = std::move(g);
            first = false;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

SearchResult search_max_family(const SearchSpec& spec) {
    spec.validate();
    SearchResult result;
    result.bound = profile_bound(spec, result.bound_is_theorem);

    // Work units: one per (ground size, root pair).  The budget is split
    // evenly across units up front, so the outcome does not depend on the
    // schedule or on the jobs setting.
    struct Unit {
        int n;
        int root;
    };
    std::vector<Unit> units;
    std::map<int, std::shared_ptr<NSearch>> searchers;
    for (int n = spec.a + spec.b; n <= spec.n_max; ++n) {
        auto ns = std::make_shared<NSearch>(spec, n);
        searchers[n] = ns;
        for (int r : ns->roots()) units.push_back({n, r});
    }
    if (units.empty()) throw PreconditionError("search: no feasible root pair");
    const std::uint64_t unit_budget = std::max<std::uint64_t>(1, spec.node_budget / units.size());

    std::vector<UnitResult> unit_results(units.size());
    if (spec.jobs <= 1) {
        for (std::size_t i = 0; i < units.size(); ++i)
            unit_results[i] = searchers[units[i].n]->run_root(units[i].root, unit_budget);
    } else {
        // NSearch keeps per-run state, so give every unit its own engine.
        std::vector<std::future<UnitResult>> futs(units.size());
        std::size_t next = 0;
        while (next < units.size()) {
            std::size_t batch = std::min<std::size_t>(spec.jobs, units.size() - next);
            for (std::size_t i = 0; i < batch; ++i) {
                Unit u = units[next + i];
                futs[next + i] = std::async(std::launch::async, [&spec, u, unit_budget] {
                    NSearch engine(spec, u.n);
                    return engine.run_root(u.root, unit_budget);
                });
            }
            for (std::size_t i = 0; i < batch; ++i)
                unit_results[next + i] = futs[next + i].get();
            next += batch;
        }
    }

    std::map<int, PerNResult> per_n;
    for (int n = spec.a + spec.b; n <= spec.n_max; ++n) per_n[n] = PerNResult{n, 0, 0, false};
    std::vector<std::pair<int, Family>> raw;  // (n, family) at the global max
    for (std::size_t i = 0; i < units.size(); ++i) {
        const UnitResult& ur = unit_results[i];
        PerNResult& pn = per_n[units[i].n];
        pn.max_m = std::max(pn.max_m, ur.max_m);
        pn.nodes += ur.nodes;
        pn.truncated = pn.truncated || ur.truncated;
        result.nodes += ur.nodes;
        result.truncated = result.truncated || ur.truncated;
        if (ur.max_m > result.max_m) result.max_m = ur.max_m;
    }
    for (std::size_t i = 0; i < units.size(); ++i)
        if (unit_results[i].max_m == result.max_m)
            for (const Family& f : unit_results[i].families)
                raw.emplace_back(units[i].n, f);
    for (const auto& [n, pn] : per_n) result.per_n.push_back(pn);

    // Witness list: canonical dedup under relabeling (computed over the full
    // sweep range so families found at different n merge correctly).
    std::vector<Family> keep;
    if (spec.isomorphism_reduction) {
        std::vector<Family> seen;
        for (const auto& [n, f] : raw) {
            Family c = canonical_family(f, spec.n_max);
            if (std::find(seen.begin(), seen.end(), c) == seen.end()) seen.push_back(c);
        }
        std::sort(seen.begin(), seen.end());
        keep = std::move(seen);
    } else {
        for (const auto& [n, f] : raw) keep.push_back(f);
    }
    for (const Family& f : keep) {
        PairFamilyInstance inst = family_to_instance(f, spec.t, spec.profile);
        reverify_witness(inst, spec);
        result.witnesses.push_back(std::move(inst));
    }

    if (result.bound_is_theorem && !result.truncated &&
        BigInt(result.max_m) > result.bound)
        throw InvariantError("search: maximum exceeds a proved bound");
    result.tight = BigInt(result.max_m) == result.bound;

    if (spec.profile == ConstraintProfile::Hemibundled && spec.t == 0 && spec.a < spec.b &&
        spec.isomorphism_reduction && result.tight && !result.truncated) {
        if (spec.two_sided_cross) {
            result.unique_structure = result.witnesses.size() == 1 &&
                                      recognize_extremal_t0(result.witnesses.front()).has_value();
        } else {
            // The one-sided condition set admits many tight families; the
            // uniqueness statement is about the two-sided hypothesis set.
            SearchSpec stab = spec;
            stab.two_sided_cross = true;
            result.unique_structure = search_max_family(stab).unique_structure;
        }
    }
    return result;
}

UniquenessReport certify_uniqueness_t0(int a, int b, int n_max) {
    if (a >= b)
        throw PreconditionError("certify_uniqueness_t0: requires a < b (a = b structures "
                                "are not unique by the remark)");
    SearchSpec spec;
    spec.a = a;
    spec.b = b;
    spec.t = 0;
    spec.n_max = n_max;
    spec.profile = ConstraintProfile::Hemibundled;
    spec.isomorphism_reduction = true;
    // The uniqueness statement assumes the cross condition in both orders.
    spec.two_sided_cross = true;
    SearchResult res = search_max_family(spec);
    if (res.truncated) throw PreconditionError("certify_uniqueness_t0: search truncated");
    if (BigInt(res.max_m) != binom(a + b - 1, a - 1))
        throw InvariantError("certify_uniqueness_t0: maximum differs from C(a+b-1, a-1)");
    UniquenessReport rep;
    rep.witness_count = static_cast<int>(res.witnesses.size());
    rep.unique = rep.witness_count == 1 &&
                 recognize_extremal_t0(res.witnesses.front()).has_value();
    return rep;
}

BigInt ak_bound(int n, int k, int t) {
    if (t < 1 || k < t || n < k) throw RangeError("ak_bound: requires 1 <= t <= k <= n");
    BigInt best = 0;
    for (int r = 0; t + 2 * r <= n; ++r) {
        BigInt size = 0;
        for (int s = t + r; s <= std::min(k, t + 2 * r); ++s)
            size += binom(t + 2 * r, s) * binom(n - t - 2 * r, k - s);
        best = std::max(best, size);
    }
    return best;
}

ConjectureProbe conjecture41_probe(int a, int b, int t, int n_max) {
    if (t < 0 || a < t || b < a)
        throw PreconditionError("conjecture41_probe: requires t <= a <= b");
    SearchSpec spec;
    spec.a = a;
    spec.b = b;
    spec.t = t;
    spec.n_max = n_max;
    spec.profile = t == 0 ? ConstraintProfile::Bollobas : ConstraintProfile::Conj41;
    ConjectureProbe probe;
    probe.detail = search_max_family(spec);
    probe.max_m = probe.detail.max_m;
    probe.ak = t == 0 ? binom(a + b, a) : ak_bound(a + b, a, t);
    probe.consistent = BigInt(probe.max_m) <= probe.ak;
    return probe;
}

}  // namespace setpair
