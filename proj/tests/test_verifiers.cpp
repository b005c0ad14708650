#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "setpair/hypergraph.hpp"
#include "setpair/proof.hpp"
#include "setpair/verifiers.hpp"

using namespace setpair;

namespace {

PairFamilyInstance sets_inst(int n, int t,
                             std::vector<std::pair<std::vector<int>, std::vector<int>>> pairs) {
    std::vector<std::pair<SubsetMask, SubsetMask>> out;
    for (auto& [a, b] : pairs)
        out.emplace_back(SubsetMask::from_elements(n, a), SubsetMask::from_elements(n, b));
    return PairFamilyInstance::sets(n, t, std::move(out));
}

// The tight classical family: all a-subsets of X with complements.
PairFamilyInstance bollobas_layer(int n, int a_sz, std::uint64_t xmask) {
    std::vector<std::pair<SubsetMask, SubsetMask>> out;
    for (std::uint64_t am : k_subsets_of(xmask, a_sz))
        out.emplace_back(SubsetMask(n, am), SubsetMask(n, xmask & ~am));
    return PairFamilyInstance::sets(n, 0, std::move(out));
}

// The star family: all a-sets of X containing `center`, with complements.
PairFamilyInstance star_family(int n, int a_sz, std::uint64_t xmask, int center) {
    std::uint64_t c = std::uint64_t(1) << (center - 1);
    std::vector<std::pair<SubsetMask, SubsetMask>> out;
    for (std::uint64_t rest : k_subsets_of(xmask & ~c, a_sz - 1))
        out.emplace_back(SubsetMask(n, rest | c), SubsetMask(n, xmask & ~(rest | c)));
    return PairFamilyInstance::sets(n, 0, std::move(out));
}

}  // namespace

TEST_CASE("Bollobas verifier: tight layer family") {
    PairFamilyInstance inst = bollobas_layer(4, 2, 0b1111);
    VerifierReport rep = check_bollobas(inst);
    CHECK(rep.hypotheses_hold);
    CHECK(*rep.bound_value == 6);
    CHECK(rep.conclusion_holds);
    CHECK(rep.equality);
    REQUIRE(rep.extremal.has_value());
    CHECK(rep.extremal->x == SubsetMask::from_elements(4, {1, 2, 3, 4}));
    CHECK_FALSE(rep.extremal->center.has_value());
}

TEST_CASE("Bollobas verifier: small and violating instances") {
    VerifierReport one = check_bollobas(sets_inst(2, 0, {{{1}, {2}}}));
    CHECK(one.hypotheses_hold);
    CHECK_FALSE(one.equality);
    CHECK(*one.bound_value == 2);

    // diagonal violation carries its witness
    VerifierReport bad = check_bollobas(sets_inst(4, 0, {{{1, 2}, {2, 3}}}));
    CHECK_FALSE(bad.hypotheses_hold);
    CHECK(bad.hypothesis_flags[0].name == "diagonal_disjoint");
    CHECK(bad.hypothesis_flags[0].witness == std::pair<int, int>{1, 1});

    // cross violation (1, 2): A_1 misses B_2
    VerifierReport cross =
        check_bollobas(sets_inst(6, 0, {{{1, 2}, {3, 4}}, {{3, 4}, {5, 6}}}));
    CHECK_FALSE(cross.hypotheses_hold);
    CHECK(cross.hypothesis_flags[1].witness == std::pair<int, int>{1, 2});

    CHECK_THROWS_AS(check_bollobas(sets_inst(5, 0, {{{1, 2}, {3, 4}}, {{1}, {2, 3}}})),
                    PreconditionError);
}

TEST_CASE("hemi-bundled verifier: the tight star instance") {
    PairFamilyInstance inst = star_family(5, 2, 0b11111, 1);
    VerifierReport rep = check_hemibundled(inst);
    CHECK(rep.hypotheses_hold);
    CHECK(*rep.weighted_sum == 1);
    CHECK(rep.conclusion_holds);
    CHECK(rep.equality);
    REQUIRE(rep.extremal.has_value());
    CHECK(rep.extremal->center == 1);
    CHECK(*rep.bound_value == 4);
}

TEST_CASE("hemi-bundled verifier: edge cases") {
    PairFamilyInstance empty = PairFamilyInstance::sets(4, 0, {});
    VerifierReport rep = check_hemibundled(empty);
    CHECK(rep.hypotheses_hold);
    CHECK(*rep.weighted_sum == 0);
    CHECK(rep.conclusion_holds);
    CHECK_FALSE(rep.equality);

    // t = 2, a = t+1 forces C(N-5, 0) = 1: single pair is already tight
    PairFamilyInstance one =
        sets_inst(10, 2, {{{1, 2, 3}, {1, 2, 4, 5, 6, 7, 8}}});
    VerifierReport rep1 = check_hemibundled(one);
    CHECK(rep1.hypotheses_hold);
    CHECK(*rep1.weighted_sum == 1);
    CHECK(rep1.equality);
    CHECK(rep1.notes.empty());

    // diagonal violation: |A_1 cap B_1| > t, witness (1, 1)
    VerifierReport bad = check_hemibundled(sets_inst(5, 0, {{{1, 2}, {2, 4, 5}}}));
    CHECK_FALSE(bad.hypotheses_hold);
    CHECK(bad.hypothesis_flags[1].witness == std::pair<int, int>{1, 1});

    // a_i <= t makes the A-side hypothesis unsatisfiable
    CHECK_THROWS_AS(check_hemibundled(sets_inst(6, 2, {{{1, 2}, {3, 4, 5, 6}}})),
                    PreconditionError);
    // a_i > b_i rejected
    CHECK_THROWS_AS(check_hemibundled(sets_inst(6, 0, {{{1, 2, 3}, {4, 5}}})),
                    PreconditionError);
    // non-uniform a_i + b_i rejected
    CHECK_THROWS_AS(check_hemibundled(
                        sets_inst(6, 0, {{{1, 2}, {3, 4, 5}}, {{1, 2}, {3, 4}}})),
                    PreconditionError);
}

TEST_CASE("hemi-bundled verifier: sorts by a and reports the permutation") {
    // mixed sizes, given in descending a order: verifier must re-sort
    PairFamilyInstance inst = sets_inst(
        7, 0, {{{1, 2, 3}, {4, 5, 6, 7}}, {{1, 4}, {2, 3, 5, 6, 7}}});
    VerifierReport rep = check_hemibundled(inst);
    CHECK(rep.order == std::vector<int>{2, 1});
    CHECK(rep.hypotheses_hold);  // after sorting: A={1,4} then A={1,2,3}; {1,4} meets B_2={4,..}
    CHECK(*rep.weighted_sum == make_ratio(1, 6) + make_ratio(1, 15));
}

TEST_CASE("hemi-bundled verifier: a = b equality carries the non-uniqueness note") {
    PairFamilyInstance tri = sets_inst(
        4, 0, {{{1, 2}, {3, 4}}, {{1, 3}, {2, 4}}, {{2, 3}, {1, 4}}});
    VerifierReport rep = check_hemibundled(tri);
    CHECK(rep.hypotheses_hold);
    CHECK(rep.equality);
    REQUIRE(!rep.notes.empty());
    CHECK(rep.notes[0].find("not unique") != std::string::npos);
}

TEST_CASE("Furedi subspace verifier") {
    // t = 0 coordinate lift of a valid Bollobas set instance
    PairFamilyInstance sets = bollobas_layer(4, 2, 0b1111);
    std::vector<int> ground = {1, 2, 3, 4};
    PairFamilyInstance lifted = lift_sets(sets, basis_config(ground, 4));
    VerifierReport rep = check_furedi_subspaces(lifted);
    CHECK(rep.hypotheses_hold);
    CHECK(*rep.bound_value == 6);
    CHECK(rep.equality);

    // single pair
    PairFamilyInstance single = lift_sets(sets_inst(4, 0, {{{1, 2}, {3, 4}}}),
                                          basis_config(ground, 4));
    VerifierReport rep1 = check_furedi_subspaces(single);
    CHECK(rep1.hypotheses_hold);
    CHECK(rep1.conclusion_holds);

    // a violating instance names the witness (1, 2)
    PairFamilyInstance bad = lift_sets(
        sets_inst(6, 0, {{{1, 2}, {3, 4}}, {{3, 4}, {5, 6}}}),
        basis_config(std::vector<int>{1, 2, 3, 4, 5, 6}, 6));
    VerifierReport rep2 = check_furedi_subspaces(bad);
    CHECK_FALSE(rep2.hypotheses_hold);
    CHECK(rep2.hypothesis_flags[1].witness == std::pair<int, int>{1, 2});

    CHECK_THROWS_AS(check_furedi_subspaces(sets), PreconditionError);  // wrong kind
}

TEST_CASE("weighted-space verifier") {
    std::vector<int> ground = {1, 2, 3, 4};
    GeneralPositionConfig cfg = basis_config(ground, 4);

    PairFamilyInstance single = lift_sets(sets_inst(4, 0, {{{1}, {2, 3, 4}}}), cfg);
    VerifierReport rep = check_weighted_space(single);
    CHECK(rep.hypotheses_hold);
    CHECK(*rep.weighted_sum == make_ratio(1, 4));

    // the Eq-(1) extremal family lifted: weighted sum is exactly 1
    PairFamilyInstance layer = lift_sets(bollobas_layer(4, 2, 0b1111), cfg);
    VerifierReport rep1 = check_weighted_space(layer);
    CHECK(rep1.hypotheses_hold);
    CHECK(*rep1.weighted_sum == 1);
    CHECK(rep1.equality);

    // mixed dimensions a = (1,2), b = (3,2): sum = 1/4 + 1/6 = 5/12
    QMat a1 = {{1, 0, 0, 0}};
    QMat b1 = {{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
    QMat a2 = {{0, 1, 0, 0}, {0, 0, 1, 0}};
    QMat b2 = {{1, 0, 0, 0}, {0, 0, 0, 1}};
    PairFamilyInstance mixed = PairFamilyInstance::subspaces(
        4, 0,
        {{RationalSubspace(4, a1), RationalSubspace(4, b1)},
         {RationalSubspace(4, a2), RationalSubspace(4, b2)}});
    VerifierReport rep2 = check_weighted_space(mixed);
    CHECK(rep2.hypotheses_hold);
    CHECK(*rep2.weighted_sum == make_ratio(5, 12));
    CHECK(rep2.conclusion_holds);

    // non-monotonizable sequence (a ascending forces b ascending here)
    QMat a3 = {{1, 0, 0, 0}};
    QMat b3 = {{0, 1, 0, 0}};
    PairFamilyInstance badmono = PairFamilyInstance::subspaces(
        4, 0,
        {{RationalSubspace(4, a3), RationalSubspace(4, b3)},
         {RationalSubspace(4, a2), RationalSubspace(4, b1)}});
    CHECK_THROWS_AS(check_weighted_space(badmono), PreconditionError);
}

TEST_CASE("extremal structure recognizer") {
    PairFamilyInstance star = star_family(5, 2, 0b11111, 1);
    auto got = recognize_extremal_t0(star);
    REQUIRE(got.has_value());
    CHECK(got->x == SubsetMask::from_elements(5, {1, 2, 3, 4, 5}));
    CHECK(got->center == 1);

    // shrink one B by an element: no longer the extremal structure
    PairFamilyInstance broken = star;
    broken.set_pairs[0].second =
        SubsetMask(5, broken.set_pairs[0].second.bits & ~(std::uint64_t(1) << 4));
    CHECK_FALSE(recognize_extremal_t0(broken).has_value());

    // degenerate a = 1 star
    auto tiny = recognize_extremal_t0(sets_inst(3, 0, {{{1}, {2, 3}}}));
    REQUIRE(tiny.has_value());
    CHECK(tiny->x == SubsetMask::from_elements(3, {1, 2, 3}));
    CHECK(tiny->center == 1);

    // a = b can never be the structure (the remark's regime)
    CHECK_FALSE(recognize_extremal_t0(bollobas_layer(4, 2, 0b1111)).has_value());
}

TEST_CASE("recognizer fires exactly on verifier equality (both directions)") {
    // Enumerate every family over [n], n <= 6, with a = 2, b = 3 satisfying
    // the stability hypotheses (A-side intersecting, A_i cap B_j empty iff
    // i = j, both orders).  Equality in the weighted verifier must coincide
    // with the recognizer returning a structure.
    for (int n = 5; n <= 6; ++n) {
        std::vector<std::pair<std::uint64_t, std::uint64_t>> cands;
        for (std::uint64_t am : k_subsets(n, 2))
            for (std::uint64_t bm : k_subsets(n, 3))
                if ((am & bm) == 0) cands.emplace_back(am, bm);
        auto compatible = [&](const std::pair<std::uint64_t, std::uint64_t>& p,
                              const std::pair<std::uint64_t, std::uint64_t>& q) {
            return (p.first & q.first) != 0 && (p.first & q.second) != 0 &&
                   (q.first & p.second) != 0;
        };
        int recognized = 0, checked = 0;
        std::vector<std::size_t> fam;
        auto visit = [&](const std::vector<std::size_t>& members) {
            std::vector<std::pair<SubsetMask, SubsetMask>> pairs;
            for (std::size_t i : members)
                pairs.emplace_back(SubsetMask(n, cands[i].first),
                                   SubsetMask(n, cands[i].second));
            PairFamilyInstance inst = PairFamilyInstance::sets(n, 0, pairs);
            VerifierReport rep = check_hemibundled(inst);
            REQUIRE(rep.hypotheses_hold);
            bool structure = recognize_extremal_t0(inst).has_value();
            CHECK(structure == rep.equality);
            ++checked;
            if (structure) ++recognized;
        };
        auto dfs = [&](auto&& self, std::size_t start) -> void {
            if (!fam.empty()) visit(fam);
            for (std::size_t i = start; i < cands.size(); ++i) {
                bool ok = true;
                for (std::size_t p : fam)
                    if (!compatible(cands[p], cands[i])) {
                        ok = false;
                        break;
                    }
                if (!ok) continue;
                fam.push_back(i);
                self(self, i + 1);
                fam.pop_back();
            }
        };
        dfs(dfs, 0);
        if (n == 5) {
            CHECK(checked == 75);    // intersecting 2-uniform families on [5]
            CHECK(recognized == 5);  // the five relabelings of the star
        } else {
            CHECK(checked > 75);
            CHECK(recognized == 5 * 6);  // choose X in [6], then the center
        }
    }
}

TEST_CASE("Bollobas equality at a = b admits the structure exactly at the full layer") {
    // exhaustive over n = 4, a = b = 2: every nonempty subfamily of the six
    // complement pairs satisfies the hypotheses; only the full layer attains
    // the bound, and exactly there the structure is recognized
    std::vector<std::pair<std::uint64_t, std::uint64_t>> cands;
    for (std::uint64_t am : k_subsets(4, 2)) cands.emplace_back(am, 0b1111 & ~am);
    REQUIRE(cands.size() == 6);
    for (std::uint32_t bits = 1; bits < 64; ++bits) {
        std::vector<std::pair<SubsetMask, SubsetMask>> pairs;
        for (int i = 0; i < 6; ++i)
            if ((bits >> i) & 1)
                pairs.emplace_back(SubsetMask(4, cands[i].first),
                                   SubsetMask(4, cands[i].second));
        VerifierReport rep = check_bollobas(PairFamilyInstance::sets(4, 0, pairs));
        CHECK(rep.hypotheses_hold);
        CHECK(rep.conclusion_holds);
        CHECK(rep.equality == (pairs.size() == 6));
        CHECK(rep.extremal.has_value() == (pairs.size() == 6));
    }
}

TEST_CASE("coordinate lift consistency for the hemi-bundled verifier") {
    std::mt19937_64 rng(71);
    int checked = 0;
    for (int trial = 0; trial < 60; ++trial) {
        int n = 5 + static_cast<int>(rng() % 2);
        int a = 2, b = 3, t = static_cast<int>(rng() % 2);
        std::vector<std::uint64_t> as = k_subsets(n, a), bs = k_subsets(n, b);
        std::uniform_int_distribution<std::size_t> pa(0, as.size() - 1), pb(0, bs.size() - 1);
        std::vector<std::pair<SubsetMask, SubsetMask>> pairs;
        int m = 1 + static_cast<int>(rng() % 3);
        for (int i = 0; i < m; ++i)
            pairs.emplace_back(SubsetMask(n, as[pa(rng)]), SubsetMask(n, bs[pb(rng)]));
        PairFamilyInstance inst = PairFamilyInstance::sets(n, t, pairs);
        std::vector<int> ground;
        for (int x = 1; x <= n; ++x) ground.push_back(x);
        PairFamilyInstance lifted = lift_sets(inst, basis_config(ground, n));

        VerifierReport rs, rl;
        bool threw_sets = false, threw_lift = false;
        try {
            rs = check_hemibundled(inst);
        } catch (const PreconditionError&) {
            threw_sets = true;
        }
        try {
            rl = check_hemibundled(lifted);
        } catch (const PreconditionError&) {
            threw_lift = true;
        }
        CHECK(threw_sets == threw_lift);
        if (threw_sets) continue;
        ++checked;
        CHECK(rs.hypotheses_hold == rl.hypotheses_hold);
        REQUIRE(rs.hypothesis_flags.size() == rl.hypothesis_flags.size());
        for (std::size_t i = 0; i < rs.hypothesis_flags.size(); ++i) {
            CHECK(rs.hypothesis_flags[i].holds == rl.hypothesis_flags[i].holds);
            CHECK(rs.hypothesis_flags[i].witness == rl.hypothesis_flags[i].witness);
        }
        if (rs.weighted_sum && rl.weighted_sum) CHECK(*rs.weighted_sum == *rl.weighted_sum);
    }
    CHECK(checked > 10);
}
