#include "setpair/proof.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "setpair/verifiers.hpp"

namespace setpair {

bool GeneralPositionConfig::covers(const SubsetMask& s) const {
    for (int e : s.elements())
        if (!assignment.count(e)) return false;
    return true;
}

GeneralPositionConfig moment_curve_config(const std::vector<int>& ground, int d) {
    if (d < 1) throw RangeError("moment_curve_config: d must be positive");
    GeneralPositionConfig cfg;
    cfg.d = d;
    std::vector<int> sorted = ground;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    long param = 1;
    for (int x : sorted) {
        QVec v(d);
        BigRatio p(param);
        v[0] = 1;
        for (int j = 1; j < d; ++j) v[j] = v[j - 1] * p;
        cfg.assignment[x] = std::move(v);
        ++param;
    }
    return cfg;
}

GeneralPositionConfig basis_config(const std::vector<int>& ground, int d) {
    GeneralPositionConfig cfg;
    cfg.d = d;
    for (int x : ground) {
        if (x < 1 || x > d) throw RangeError("basis_config: element outside [d]");
        QVec v(d, BigRatio(0));
        v[x - 1] = 1;
        cfg.assignment[x] = std::move(v);
    }
    return cfg;
}

bool verify_general_position(const GeneralPositionConfig& cfg) {
    std::vector<const QVec*> vecs;
    for (const auto& [x, v] : cfg.assignment) vecs.push_back(&v);
    const int n = static_cast<int>(vecs.size());
    if (n < cfg.d) {
        QMat all;
        for (const QVec* v : vecs) all.push_back(*v);
        return rank_of(std::move(all)) == n;
    }
    for (std::uint64_t sub : k_subsets(n, cfg.d)) {
        QMat rows;
        for (std::uint64_t b = sub; b != 0; b &= b - 1)
            rows.push_back(*vecs[std::countr_zero(b)]);
        if (determinant(std::move(rows)) == 0) return false;
    }
    return true;
}

PairFamilyInstance lift_sets(const PairFamilyInstance& inst, const GeneralPositionConfig& cfg) {
    if (inst.kind != PairKind::Sets)
        throw PreconditionError("lift_sets: expects a set-pair instance");
    auto span_of = [&](const SubsetMask& s) {
        QMat rows;
        for (int e : s.elements()) {
            auto it = cfg.assignment.find(e);
            if (it == cfg.assignment.end())
                throw PreconditionError("lift_sets: element " + std::to_string(e) +
                                        " not covered by the configuration");
            rows.push_back(it->second);
        }
        RationalSubspace sub(cfg.d, std::move(rows));
        if (sub.dim() != s.card())
            throw PreconditionError("lift_sets: assigned vectors of a side are dependent");
        return sub;
    };
    std::vector<std::pair<RationalSubspace, RationalSubspace>> pairs;
    pairs.reserve(inst.set_pairs.size());
    for (const auto& [A, B] : inst.set_pairs) pairs.emplace_back(span_of(A), span_of(B));
    return PairFamilyInstance::subspaces(cfg.d, inst.t, std::move(pairs));
}

GpSample general_position_subspace(int ambient, const std::vector<RationalSubspace>& obstacles,
                                   int k, std::uint64_t seed) {
    const int n = ambient;
    for (const auto& u : obstacles)
        if (u.ambient() != n)
            throw PreconditionError("general_position_subspace: ambient mismatch");
    if (k < 0 || k > n) throw RangeError("general_position_subspace: k out of range");

    auto generic_ok = [&](const RationalSubspace& v, std::size_t& bad) {
        for (std::size_t i = 0; i < obstacles.size(); ++i) {
            int expect = std::max(obstacles[i].dim() + k - n, 0);
            if (subspace_ops(obstacles[i], v).intersection_dim != expect) {
                bad = i;
                return false;
            }
        }
        return true;
    };

    if (k == n) {
        QMat rows(n, QVec(n, BigRatio(0)));
        for (int i = 0; i < n; ++i) rows[i][i] = 1;
        RationalSubspace whole(n, std::move(rows));
        std::size_t bad = 0;
        if (!generic_ok(whole, bad))
            throw InvariantError("general_position_subspace: k = n formula failed");
        return {whole, 1};
    }

    std::mt19937_64 rng(seed);
    constexpr int kMaxAttempts = 64;
    std::size_t last_bad = 0;
    for (int attempt = 1; attempt <= kMaxAttempts; ++attempt) {
        const long range = 3 + attempt;
        std::uniform_int_distribution<long> dist(-range, range);
        QMat rows(k, QVec(n));
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < n; ++j) rows[i][j] = dist(rng);
        RationalSubspace v(n, std::move(rows));
        if (v.dim() != k) continue;
        std::size_t bad = 0;
        if (generic_ok(v, bad)) return {v, attempt};
        last_bad = bad;
    }
    throw ResampleError("general_position_subspace: attempt budget exhausted; obstacle " +
                        std::to_string(last_bad + 1) + " kept failing");
}

namespace {

RationalSubspace relative_to(const RationalSubspace& big, const RationalSubspace& sub) {
    // sub (in ambient coordinates, contained in big) expressed in
    // big-basis coordinates.
    QMat rows;
    for (const QVec& v : sub.basis()) rows.push_back(big.coordinates_of(v));
    return RationalSubspace(big.dim(), std::move(rows));
}

struct Projector {
    // Splits Q^{n'} = V'' + Q and maps v to its Q-part in Q-coordinates.
    QMat minv;  // inverse of the combined basis matrix
    const RationalSubspace* vpp;
    const RationalSubspace* q;

    QVec apply(const QVec& v) const {
        const int np = static_cast<int>(v.size());
        QVec x = mat_vec(minv, v);
        QVec out(np, BigRatio(0));
        for (int i = 0; i < q->dim(); ++i) {
            const QVec& row = q->basis()[i];
            for (int j = 0; j < np; ++j) out[j] += x[vpp->dim() + i] * row[j];
        }
        return q->coordinates_of(out);
    }
};

}  // namespace

ReductionOutcome reduce_instance(const PairFamilyInstance& inst, std::uint64_t seed) {
    if (inst.kind != PairKind::Subspaces)
        throw PreconditionError("reduce_instance: expects a subspace-pair instance");
    VerifierReport pre = check_hemibundled(inst);
    if (!pre.hypotheses_hold)
        throw PreconditionError("reduce_instance: instance does not satisfy the hypotheses");
    const std::size_t m = inst.size();
    if (m == 0) throw PreconditionError("reduce_instance: empty instance");
    const int n = inst.ground_n;
    const int big_n = *inst.uniform_n_sum();
    const int t = inst.t;
    if (n < big_n)
        throw PreconditionError("reduce_instance: requires ambient n >= N (embed first)");

    // Work on the a-sorted instance so the one-sided conditions line up.
    std::vector<std::size_t> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    std::stable_sort(perm.begin(), perm.end(),
                     [&](std::size_t x, std::size_t y) { return inst.a(x) < inst.a(y); });
    PairFamilyInstance sorted = inst.reordered(perm);

    ReductionRecord rec;
    rec.t = t;
    rec.n_before = n;
    rec.n_after = big_n - 2 * t;
    rec.seed = seed;
    for (std::size_t p : perm) rec.order.push_back(static_cast<int>(p) + 1);

    auto bullet = [&](const std::string& name, bool ok) {
        rec.bullets.push_back({name, ok});
        if (!ok) throw ResampleError("reduce_instance: verified bullet failed: " + name);
    };

    // Stage 1: V' of dimension n - t in general position with respect to all
    // sides, all pairwise A-intersections and all cross intersections.
    std::vector<RationalSubspace> obstacles;
    for (std::size_t i = 0; i < m; ++i) {
        obstacles.push_back(sorted.space_pairs[i].first);
        obstacles.push_back(sorted.space_pairs[i].second);
        obstacles.push_back(
            sorted.space_pairs[i].first.intersect(sorted.space_pairs[i].second));
    }
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            obstacles.push_back(
                sorted.space_pairs[i].first.intersect(sorted.space_pairs[j].first));
            obstacles.push_back(
                sorted.space_pairs[i].first.intersect(sorted.space_pairs[j].second));
        }
    GpSample vp = general_position_subspace(n, obstacles, n - t, seed);
    rec.v_prime = vp.space;
    rec.attempts += vp.attempts;

    std::vector<RationalSubspace> ap, bp;  // A_i cap V', B_i cap V' in V' coordinates
    for (std::size_t i = 0; i < m; ++i) {
        ap.push_back(relative_to(vp.space, sorted.space_pairs[i].first.intersect(vp.space)));
        bp.push_back(relative_to(vp.space, sorted.space_pairs[i].second.intersect(vp.space)));
    }
    {
        bool dims = true, aa = true, diag = true, cross = true;
        for (std::size_t i = 0; i < m; ++i) {
            dims &= ap[i].dim() == sorted.a(i) - t && bp[i].dim() == sorted.b(i) - t;
            diag &= ap[i].intersect(bp[i]).dim() == 0;
            for (std::size_t j = i; j < m; ++j)
                aa &= ap[i].intersect(ap[j]).dim() > 0;
            for (std::size_t j = i + 1; j < m; ++j)
                cross &= ap[i].intersect(bp[j]).dim() > 0;
        }
        bullet("dim(A_i cap V') = a_i - t and dim(B_i cap V') = b_i - t", dims);
        bullet("dim(A_i cap A_j cap V') > 0", aa);
        bullet("dim(A_i cap B_i cap V') = 0", diag);
        bullet("dim(A_i cap B_j cap V') > 0 for i < j", cross);
    }

    // Stage 2: V'' of dimension n' - (N - 2t) inside V' avoiding every trace
    // and every pairwise sum, so the projection onto Q is injective on each
    // A_i cap V' + B_i cap V'.
    const int n_prime = n - t;
    const int n_dprime = n_prime - (big_n - 2 * t);
    std::vector<RationalSubspace> obstacles2;
    for (std::size_t i = 0; i < m; ++i) {
        obstacles2.push_back(ap[i]);
        obstacles2.push_back(bp[i]);
        obstacles2.push_back(ap[i].sum(bp[i]));
    }
    if (n_dprime > 0) {
        GpSample vpp = general_position_subspace(n_prime, obstacles2, n_dprime,
                                                 seed ^ 0x9e3779b97f4a7c15ULL);
        rec.v_dprime = vpp.space;
        rec.attempts += vpp.attempts;
    } else {
        rec.v_dprime = RationalSubspace(n_prime);
    }
    {
        bool avoid = true;
        for (std::size_t i = 0; i < m; ++i)
            avoid &= ap[i].intersect(rec.v_dprime).dim() == 0 &&
                     bp[i].intersect(rec.v_dprime).dim() == 0;
        bullet("dim((A_i cap V') cap V'') = 0 and dim((B_i cap V') cap V'') = 0", avoid);
    }

    // Q = orthogonal complement of V'' in V' (standard bilinear form, which
    // over Q always splits V' = V'' + Q).
    rec.q = RationalSubspace(n_prime, kernel_basis(rec.v_dprime.basis(), n_prime));
    if (rec.q.dim() != big_n - 2 * t || rec.q.intersect(rec.v_dprime).dim() != 0)
        throw InvariantError("reduce_instance: orthogonal split failed");

    QMat combined(n_prime, QVec(n_prime));
    for (int i = 0; i < rec.v_dprime.dim(); ++i)
        for (int j = 0; j < n_prime; ++j) combined[j][i] = rec.v_dprime.basis()[i][j];
    for (int i = 0; i < rec.q.dim(); ++i)
        for (int j = 0; j < n_prime; ++j) combined[j][rec.v_dprime.dim() + i] = rec.q.basis()[i][j];
    Projector phi{mat_inverse(combined), &rec.v_dprime, &rec.q};

    std::vector<std::pair<RationalSubspace, RationalSubspace>> images;
    for (std::size_t i = 0; i < m; ++i) {
        QMat arows, brows;
        for (const QVec& v : ap[i].basis()) arows.push_back(phi.apply(v));
        for (const QVec& v : bp[i].basis()) brows.push_back(phi.apply(v));
        images.emplace_back(RationalSubspace(rec.n_after, std::move(arows)),
                            RationalSubspace(rec.n_after, std::move(brows)));
    }
    PairFamilyInstance base = PairFamilyInstance::subspaces(rec.n_after, 0, std::move(images));

    {
        bool dims = true, aa = true, diag = true, cross = true;
        for (std::size_t i = 0; i < m; ++i) {
            dims &= base.a(i) == sorted.a(i) - t && base.b(i) == sorted.b(i) - t;
            diag &= base.inter_ab(i, i) == 0;
            for (std::size_t j = i; j < m; ++j) aa &= base.inter_aa(i, j) > 0;
            for (std::size_t j = i + 1; j < m; ++j) cross &= base.inter_ab(i, j) > 0;
        }
        bullet("dim(A'_i) = a_i - t and dim(B'_i) = b_i - t", dims);
        bullet("dim(A'_i cap A'_j) > 0", aa);
        bullet("dim(A'_i cap B'_i) = 0", diag);
        bullet("dim(A'_i cap B'_j) > 0 for i < j", cross);
    }
    return {std::move(base), std::move(rec)};
}

ProofTrace build_z_chain(const PairFamilyInstance& inst) {
    if (inst.kind != PairKind::Subspaces)
        throw PreconditionError("build_z_chain: expects a subspace-pair instance");
    if (inst.t != 0) throw PreconditionError("build_z_chain: requires t = 0 (reduce first)");
    const std::size_t m = inst.size();
    ProofTrace trace;
    trace.weighted_sum = 0;
    trace.chain_bound = 0;
    trace.final_slack = 1;
    if (m == 0) {
        trace.tight = false;
        return trace;
    }
    auto n_sum = inst.uniform_n_sum();
    if (!n_sum) throw PreconditionError("build_z_chain: a_i + b_i must be uniform");
    const int big_n = *n_sum;
    if (inst.ground_n != big_n)
        throw PreconditionError("build_z_chain: ambient dimension must equal N (reduce first)");
    for (std::size_t i = 0; i < m; ++i)
        if (inst.a(i) > inst.b(i))
            throw PreconditionError("build_z_chain: a_i > b_i at pair " + std::to_string(i + 1));

    std::vector<std::size_t> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    std::stable_sort(perm.begin(), perm.end(),
                     [&](std::size_t x, std::size_t y) { return inst.a(x) < inst.a(y); });
    PairFamilyInstance sorted = inst.reordered(perm);
    for (std::size_t p : perm) trace.order.push_back(static_cast<int>(p) + 1);
    trace.lifted_pairs = sorted.space_pairs;

    std::vector<Multivector> wa, wb;
    for (std::size_t i = 0; i < m; ++i) {
        wa.push_back(wedge_of_subspace(sorted.space_pairs[i].first));
        wb.push_back(wedge_of_subspace(sorted.space_pairs[i].second));
    }
    for (std::size_t i = 0; i < m; ++i) {
        if (wedge(wa[i], wb[i]).is_zero())
            throw PreconditionError("build_z_chain: A~_i ^ B~_i = 0 at pair " +
                                    std::to_string(i + 1) + " (diagonal not a direct sum)");
        for (std::size_t j = i + 1; j < m; ++j)
            if (!wedge(wa[i], wb[j]).is_zero())
                throw PreconditionError("build_z_chain: A~_i ^ B~_j != 0 for i = " +
                                        std::to_string(i + 1) + ", j = " + std::to_string(j + 1) +
                                        " (cross intersection missing)");
    }

    ExteriorSubspace z(big_n, sorted.a(0));  // Z_0 = {0}
    for (std::size_t i = 0; i < m; ++i) {
        const int ai_next = sorted.a(i);
        const int c = i == 0 ? 0 : ai_next - sorted.a(i - 1);
        ExteriorSubspace y = c == 0 ? z : wedge_with_full_power(z, c);

        std::vector<Multivector> gens = y.basis();
        gens.push_back(wa[i]);
        ExteriorSubspace z_next = echelonize(big_n, ai_next, gens);

        if (z_next.dim() != y.dim() + 1)
            throw InvariantError("build_z_chain: dim(Z_" + std::to_string(i + 1) +
                                 ") != dim(Y_" + std::to_string(i) + ") + 1");

        ChainStep step;
        step.index = static_cast<int>(i) + 1;
        step.z_dim = z_next.dim();
        step.y_prev_dim = y.dim();
        step.lym_lhs = make_ratio(y.dim(), binom(big_n - 1, ai_next - 1));
        step.lym_rhs = i == 0 ? BigRatio(0)
                              : make_ratio(z.dim(), binom(big_n - 1, sorted.a(i - 1) - 1));
        step.lym_holds = step.lym_lhs >= step.lym_rhs;
        step.lym_equality = step.lym_lhs == step.lym_rhs;
        if (!step.lym_holds)
            throw InvariantError("build_z_chain: per-step local LYM failed at step " +
                                 std::to_string(i + 1));
        step.self_annihilating = is_self_annihilating(z_next);
        if (!step.self_annihilating)
            throw PreconditionError(
                "build_z_chain: Z_" + std::to_string(i + 1) +
                " is not self-annihilating; the instance violates the A-intersecting hypothesis");
        trace.chain.push_back(step);
        z = std::move(z_next);
    }

    BigRatio sum(0);
    for (std::size_t i = 0; i < m; ++i)
        sum += make_ratio(1, binom(big_n - 1, sorted.a(i) - 1));
    trace.weighted_sum = sum;
    trace.chain_bound = make_ratio(z.dim(), binom(big_n - 1, sorted.a(m - 1) - 1));
    if (!(sum <= trace.chain_bound && trace.chain_bound <= 1))
        throw InvariantError("build_z_chain: final chain inequality failed");
    trace.final_slack = BigRatio(1) - sum;
    trace.tight = trace.final_slack == 0;
    return trace;
}

ProofTrace replay_proof(const PairFamilyInstance& inst, std::uint64_t seed) {
    PairFamilyInstance lifted = inst;
    if (inst.kind == PairKind::Sets) {
        VerifierReport rep = check_hemibundled(inst);
        if (!rep.hypotheses_hold)
            throw PreconditionError("replay_proof: hemi-bundled hypotheses fail on the instance");
        auto n_sum = inst.uniform_n_sum();
        if (!n_sum) throw PreconditionError("replay_proof: a_i + b_i must be uniform");
        // Basis lift; pad the ambient so n >= N holds even when the support
        // is smaller than N (intersection sizes are unaffected).
        int d = std::max(inst.ground_n, *n_sum);
        std::vector<int> ground;
        for (int x = 1; x <= inst.ground_n; ++x) ground.push_back(x);
        lifted = lift_sets(inst, basis_config(ground, d));
    }
    auto n_sum = lifted.uniform_n_sum();
    if (!n_sum) throw PreconditionError("replay_proof: a_i + b_i must be uniform");

    if (lifted.t > 0 || lifted.ground_n > *n_sum) {
        ReductionOutcome red = reduce_instance(lifted, seed);
        ProofTrace trace = build_z_chain(red.base);
        // Compose orders: chain positions refer to the sorted base, whose
        // position k is original pair red.record.order[k].
        std::vector<int> composed;
        for (int p : trace.order) composed.push_back(red.record.order[p - 1]);
        trace.order = std::move(composed);
        trace.reduction = std::move(red.record);
        trace.seed = seed;
        return trace;
    }
    ProofTrace trace = build_z_chain(lifted);
    trace.seed = seed;
    return trace;
}

LymReport local_lym_subspace_check(const ExteriorSubspace& w, int c) {
    const int n = w.ground_n(), r = w.grade();
    if (r < 1 || 2 * r > n)
        throw PreconditionError("local_lym_subspace_check: requires 0 < 2r <= n");
    if (c < 0 || c > n - r)
        throw PreconditionError("local_lym_subspace_check: requires 0 <= c <= n - r");
    if (!is_self_annihilating(w))
        throw PreconditionError("local_lym_subspace_check: subspace is not self-annihilating");
    LymReport rep;
    rep.lhs = make_ratio(wedge_with_full_power(w, c).dim(), binom(n - 1, r + c - 1));
    rep.rhs = make_ratio(w.dim(), binom(n - 1, r - 1));
    rep.holds = rep.lhs >= rep.rhs;
    rep.equality = rep.lhs == rep.rhs;
    if (w.dim() == 1 && c > 0 && rep.equality)
        throw InvariantError("local_lym_subspace_check: one-dimensional W with c > 0 must be strict");
    return rep;
}

bool triangular_criterion(const std::vector<Multivector>& v, const std::vector<Multivector>& w) {
    if (v.size() != w.size())
        throw PreconditionError("triangular_criterion: vector lists differ in length");
    const std::size_t m = v.size();
    for (std::size_t i = 0; i < m; ++i) {
        if (wedge(v[i], w[i]).is_zero()) return false;
        for (std::size_t j = i + 1; j < m; ++j)
            if (!wedge(v[i], w[j]).is_zero()) return false;
    }
    // The criterion's conclusion, re-checked directly: the v_i are
    // independent (within each graded piece; across grades it is automatic).
    std::map<int, std::vector<Multivector>> by_grade;
    for (const Multivector& x : v) by_grade[x.grade()].push_back(x);
    std::size_t total = 0;
    for (const auto& [grade, vecs] : by_grade) {
        if (vecs.empty()) continue;
        total += echelonize(vecs.front().ground_n(), grade, vecs).dim();
    }
    if (total != m)
        throw InvariantError("triangular_criterion: criterion held but vectors are dependent");
    return true;
}

std::optional<int> forced_center_check(const PairFamilyInstance& inst,
                                       const GeneralPositionConfig& cfg) {
    if (inst.kind != PairKind::Sets)
        throw PreconditionError("forced_center_check: expects a set-pair instance");
    if (inst.t != 0) throw PreconditionError("forced_center_check: requires t = 0");
    auto ua = inst.uniform_a(), ub = inst.uniform_b();
    if (!ua || !ub) throw PreconditionError("forced_center_check: requires uniform sizes");
    const int a = *ua, b = *ub;
    if (a >= b) throw PreconditionError("forced_center_check: requires a < b");
    const std::size_t m = inst.size();
    if (BigInt(static_cast<unsigned long>(m)) != binom(a + b - 1, a - 1))
        throw PreconditionError("forced_center_check: m != C(a+b-1, a-1), not an extremal candidate");
    if (cfg.d != a + b)
        throw PreconditionError("forced_center_check: configuration must target dimension a + b");

    // Stability hypotheses: both orders of the cross condition.
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            if (inst.inter_aa(i, j) == 0)
                throw PreconditionError("forced_center_check: A-side not intersecting");
            if (i == j && inst.inter_ab(i, i) != 0)
                throw PreconditionError("forced_center_check: A_i meets B_i");
            if (i != j && inst.inter_ab(i, j) == 0)
                throw PreconditionError("forced_center_check: A_i misses B_j for i != j");
        }

    std::uint64_t xmask = 0;
    for (const auto& [A, B] : inst.set_pairs) xmask |= A.bits | B.bits;
    SubsetMask x(inst.ground_n, xmask);
    if (!cfg.covers(x))
        throw PreconditionError("forced_center_check: configuration does not cover the ground set");
    {
        GeneralPositionConfig used;
        used.d = cfg.d;
        for (int e : x.elements()) used.assignment[e] = cfg.assignment.at(e);
        if (!verify_general_position(used))
            throw PreconditionError("forced_center_check: assigned vectors not in general position");
    }

    // Change coordinates so B_1 maps to e_1..e_b and A_1 to e_{b+1}..e_{a+b};
    // an invertible map preserves general position.
    std::vector<int> b1 = inst.set_pairs[0].second.elements();
    std::vector<int> a1 = inst.set_pairs[0].first.elements();
    std::vector<int> frame = b1;
    frame.insert(frame.end(), a1.begin(), a1.end());
    QMat cols;
    for (int e : frame) cols.push_back(cfg.assignment.at(e));
    QMat mrows(cfg.d, QVec(cfg.d));
    for (int i = 0; i < cfg.d; ++i)
        for (int j = 0; j < cfg.d; ++j) mrows[i][j] = cols[j][i];
    QMat minv = mat_inverse(mrows);
    std::map<int, int> sigma;  // ground element -> coordinate index, on A_1 u B_1
    for (int i = 0; i < cfg.d; ++i) sigma[frame[i]] = i + 1;

    std::map<int, QVec> u;
    for (int e : x.elements()) u[e] = mat_vec(minv, cfg.assignment.at(e));

    auto lift_side = [&](const SubsetMask& s) {
        QMat rows;
        for (int e : s.elements()) rows.push_back(u.at(e));
        return RationalSubspace(cfg.d, std::move(rows));
    };

    std::vector<Multivector> wa, wb;
    for (const auto& [A, B] : inst.set_pairs) {
        wa.push_back(wedge_of_subspace(lift_side(A)));
        wb.push_back(wedge_of_subspace(lift_side(B)));
    }
    if (!triangular_criterion(wa, wb))
        throw InvariantError("forced_center_check: triangular criterion failed on a valid instance");

    ExteriorSubspace w = echelonize(cfg.d, a, wa);
    if (w.dim() != static_cast<int>(m))
        throw InvariantError("forced_center_check: dim(W) != m");
    Hypergraph h = initial_hypergraph(w);
    std::optional<int> star = is_full_star(h);
    if (!star)
        throw InvariantError(
            "forced_center_check: stability failure, initial hypergraph is not a full 1-star");

    int preimage = 0;
    for (const auto& [e, k] : sigma)
        if (k == *star) preimage = e;
    if (preimage == 0 || !inst.set_pairs[0].first.contains(preimage))
        throw InvariantError("forced_center_check: star center is not carried by A_1");

    // The forced element lies in every A_i.
    for (const auto& [A, B] : inst.set_pairs)
        if (!A.contains(preimage))
            throw InvariantError("forced_center_check: forced element missing from some A_i");

    // Deleting it leaves a tight Bollobas family on a+b-1 points.
    if (a >= 2) {
        std::vector<std::pair<SubsetMask, SubsetMask>> rest;
        for (const auto& [A, B] : inst.set_pairs)
            rest.emplace_back(
                SubsetMask(inst.ground_n, A.bits & ~(std::uint64_t(1) << (preimage - 1))), B);
        VerifierReport rep = check_bollobas(PairFamilyInstance::sets(inst.ground_n, 0, rest));
        if (!rep.hypotheses_hold || !rep.equality || !rep.extremal)
            throw InvariantError(
                "forced_center_check: deletion family is not a tight Bollobas family");
    }
    return preimage;
}

}  // namespace setpair
