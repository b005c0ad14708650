#include "setpair/json_io.hpp"

namespace setpair {

const Json& require_field(const Json& j, const char* name) {
    if (!j.is_object()) throw ParseError(std::string("expected an object holding '") + name + "'");
    auto it = j.find(name);
    if (it == j.end()) throw ParseError(std::string("missing field '") + name + "'");
    return *it;
}

int require_int(const Json& j, const char* name) {
    const Json& f = require_field(j, name);
    if (!f.is_number_integer()) throw ParseError(std::string("field '") + name + "' must be an integer");
    return f.get<int>();
}

std::uint64_t require_uint(const Json& j, const char* name) {
    const Json& f = require_field(j, name);
    if (!f.is_number_unsigned() && !(f.is_number_integer() && f.get<long long>() >= 0))
        throw ParseError(std::string("field '") + name + "' must be a non-negative integer");
    return f.get<std::uint64_t>();
}

std::string require_string(const Json& j, const char* name) {
    const Json& f = require_field(j, name);
    if (!f.is_string()) throw ParseError(std::string("field '") + name + "' must be a string");
    return f.get<std::string>();
}

bool optional_bool(const Json& j, const char* name, bool fallback) {
    auto it = j.find(name);
    if (it == j.end()) return fallback;
    if (!it->is_boolean()) throw ParseError(std::string("field '") + name + "' must be a boolean");
    return it->get<bool>();
}

Json ratio_json(const BigRatio& r) {
    return Json{{"num", r.get_num().get_str()}, {"den", r.get_den().get_str()}};
}

BigRatio ratio_from_json(const Json& j, const char* what) {
    if (j.is_string()) return parse_ratio(j.get<std::string>());
    if (j.is_number_integer()) return BigRatio(j.get<long>());
    if (j.is_object())
        return make_ratio(BigInt(require_string(j, "num")), BigInt(require_string(j, "den")));
    throw ParseError(std::string("field '") + what + "' must be a rational");
}

Json subset_json(const SubsetMask& s) { return Json(s.elements()); }

static SubsetMask subset_from_json(const Json& j, int n, const char* what) {
    if (!j.is_array()) throw ParseError(std::string("field '") + what + "' must be an array");
    std::vector<int> elems;
    for (const Json& e : j) {
        if (!e.is_number_integer())
            throw ParseError(std::string("field '") + what + "' must hold integers");
        elems.push_back(e.get<int>());
    }
    try {
        return SubsetMask::from_elements(n, elems);
    } catch (const RangeError& ex) {
        throw ParseError(std::string("field '") + what + "': " + ex.what());
    }
}

Json hypergraph_json(const Hypergraph& h) {
    Json edges = Json::array();
    for (std::uint64_t e : h.edges()) edges.push_back(subset_json(SubsetMask(h.ground_n(), e)));
    return Json{{"n", h.ground_n()}, {"r", h.rank()}, {"edges", edges}};
}

Hypergraph hypergraph_from_json(const Json& j) {
    int n = require_int(j, "n");
    int r = require_int(j, "r");
    const Json& edges = require_field(j, "edges");
    if (!edges.is_array()) throw ParseError("field 'edges' must be an array");
    std::vector<std::uint64_t> masks;
    for (const Json& e : edges) masks.push_back(subset_from_json(e, n, "edges").bits);
    try {
        return Hypergraph(n, r, std::move(masks));
    } catch (const RangeError& ex) {
        throw ParseError(std::string("field 'edges': ") + ex.what());
    }
}

Json multivector_json(const Multivector& w) {
    Json terms = Json::array();
    for (const auto& [mask, c] : w.terms()) {
        Json t;
        t["set"] = subset_json(SubsetMask(w.ground_n(), mask));
        t["num"] = c.get_num().get_str();
        t["den"] = c.get_den().get_str();
        terms.push_back(std::move(t));
    }
    return Json{{"n", w.ground_n()}, {"r", w.grade()}, {"terms", terms}};
}

Multivector multivector_from_json(const Json& j) {
    int n = require_int(j, "n");
    int r = require_int(j, "r");
    const Json& terms = require_field(j, "terms");
    if (!terms.is_array()) throw ParseError("field 'terms' must be an array");
    if (n < 0 || n > 63 || r < 0 || r > n)
        throw ParseError("fields 'n'/'r' out of range for a multivector");
    Multivector w(n, r);
    for (const Json& t : terms) {
        SubsetMask s = subset_from_json(require_field(t, "set"), n, "terms.set");
        if (s.card() != r) throw ParseError("field 'terms.set' must have cardinality r");
        BigRatio c = make_ratio(BigInt(require_string(t, "num")), BigInt(require_string(t, "den")));
        w.add_term(s.bits, c);
    }
    return w;
}

Json subspace_rows_json(const RationalSubspace& s) {
    Json rows = Json::array();
    for (const QVec& v : s.basis()) {
        Json row = Json::array();
        for (const BigRatio& x : v) row.push_back(x.get_str());
        rows.push_back(std::move(row));
    }
    return rows;
}

RationalSubspace subspace_from_json(const Json& rows, int ambient) {
    if (!rows.is_array()) throw ParseError("subspace rows must be an array of arrays");
    QMat mat;
    for (const Json& row : rows) {
        if (!row.is_array()) throw ParseError("subspace rows must be arrays of rationals");
        QVec v;
        for (const Json& x : row) {
            if (x.is_string())
                v.push_back(parse_ratio(x.get<std::string>()));
            else if (x.is_number_integer())
                v.push_back(BigRatio(x.get<long>()));
            else
                throw ParseError("subspace entries must be rational strings or integers");
        }
        if (static_cast<int>(v.size()) != ambient)
            throw ParseError("subspace row length differs from ambient dimension 'n'");
        mat.push_back(std::move(v));
    }
    return RationalSubspace(ambient, std::move(mat));
}

Json instance_json(const PairFamilyInstance& inst) {
    Json pairs = Json::array();
    if (inst.kind == PairKind::Sets) {
        for (const auto& [A, B] : inst.set_pairs)
            pairs.push_back(Json{{"A", subset_json(A)}, {"B", subset_json(B)}});
    } else {
        for (const auto& [A, B] : inst.space_pairs)
            pairs.push_back(Json{{"A", subspace_rows_json(A)}, {"B", subspace_rows_json(B)}});
    }
    return Json{{"kind", inst.kind == PairKind::Sets ? "sets" : "subspaces"},
                {"n", inst.ground_n},
                {"t", inst.t},
                {"pairs", pairs}};
}

PairFamilyInstance instance_from_json(const Json& j) {
    std::string kind = require_string(j, "kind");
    int n = require_int(j, "n");
    int t = require_int(j, "t");
    const Json& pairs = require_field(j, "pairs");
    if (!pairs.is_array()) throw ParseError("field 'pairs' must be an array");
    if (n < 1 || n > 63) throw ParseError("field 'n' out of range");
    if (t < 0) throw ParseError("field 't' must be non-negative");
    try {
        if (kind == "sets") {
            std::vector<std::pair<SubsetMask, SubsetMask>> out;
            for (const Json& p : pairs)
                out.emplace_back(subset_from_json(require_field(p, "A"), n, "pairs.A"),
                                 subset_from_json(require_field(p, "B"), n, "pairs.B"));
            return PairFamilyInstance::sets(n, t, std::move(out));
        }
        if (kind == "subspaces") {
            std::vector<std::pair<RationalSubspace, RationalSubspace>> out;
            for (const Json& p : pairs)
                out.emplace_back(subspace_from_json(require_field(p, "A"), n),
                                 subspace_from_json(require_field(p, "B"), n));
            return PairFamilyInstance::subspaces(n, t, std::move(out));
        }
    } catch (const PreconditionError& ex) {
        throw ParseError(std::string("field 'pairs': ") + ex.what());
    }
    throw ParseError("field 'kind' must be \"sets\" or \"subspaces\"");
}

Json verifier_report_json(const VerifierReport& rep) {
    Json flags = Json::array();
    for (const ConditionFlag& f : rep.hypothesis_flags) {
        Json jf;
        jf["name"] = f.name;
        jf["holds"] = f.holds;
        jf["witness"] = f.witness ? Json{f.witness->first, f.witness->second} : Json(nullptr);
        flags.push_back(std::move(jf));
    }
    Json out;
    out["hypotheses"] = flags;
    out["hypotheses_hold"] = rep.hypotheses_hold;
    out["weighted_sum"] = rep.weighted_sum ? ratio_json(*rep.weighted_sum) : Json(nullptr);
    out["bound"] = rep.bound_value ? Json(rep.bound_value->get_str()) : Json(nullptr);
    out["conclusion_holds"] = rep.conclusion_holds;
    out["equality"] = rep.equality;
    if (rep.extremal) {
        Json ex;
        ex["X"] = subset_json(rep.extremal->x);
        ex["center"] = rep.extremal->center ? Json(*rep.extremal->center) : Json(nullptr);
        out["extremal"] = std::move(ex);
    } else {
        out["extremal"] = nullptr;
    }
    out["order"] = rep.order;
    out["notes"] = rep.notes;
    return out;
}

Json lym_report_json(const LymReport& rep) {
    return Json{{"lhs", ratio_json(rep.lhs)},
                {"rhs", ratio_json(rep.rhs)},
                {"holds", rep.holds},
                {"equality", rep.equality}};
}

static Json reduction_json(const ReductionRecord& rec) {
    Json bullets = Json::array();
    for (const BulletCheck& b : rec.bullets)
        bullets.push_back(Json{{"name", b.name}, {"holds", b.holds}});
    Json out;
    out["t"] = rec.t;
    out["n_before"] = rec.n_before;
    out["n_after"] = rec.n_after;
    out["v_prime"] = subspace_rows_json(rec.v_prime);
    out["v_double_prime"] = subspace_rows_json(rec.v_dprime);
    out["q"] = subspace_rows_json(rec.q);
    out["order"] = rec.order;
    out["bullets"] = bullets;
    out["seed"] = rec.seed;
    out["attempts"] = rec.attempts;
    return out;
}

Json proof_trace_json(const ProofTrace& trace) {
    Json chain = Json::array();
    for (const ChainStep& s : trace.chain) {
        Json js;
        js["i"] = s.index;
        js["z_dim"] = s.z_dim;
        js["y_prev_dim"] = s.y_prev_dim;
        js["lym"] = Json{{"lhs", ratio_json(s.lym_lhs)},
                         {"rhs", ratio_json(s.lym_rhs)},
                         {"holds", s.lym_holds},
                         {"equality", s.lym_equality}};
        js["self_annihilating"] = s.self_annihilating;
        chain.push_back(std::move(js));
    }
    Json pairs = Json::array();
    for (const auto& [A, B] : trace.lifted_pairs)
        pairs.push_back(Json{{"A", subspace_rows_json(A)}, {"B", subspace_rows_json(B)}});
    Json out;
    out["order"] = trace.order;
    out["reduction"] = trace.reduction ? reduction_json(*trace.reduction) : Json(nullptr);
    out["lifted_pairs"] = pairs;
    out["chain"] = chain;
    out["weighted_sum"] = ratio_json(trace.weighted_sum);
    out["chain_bound"] = ratio_json(trace.chain_bound);
    out["final_slack"] = ratio_json(trace.final_slack);
    out["tight"] = trace.tight;
    out["seed"] = trace.seed;
    return out;
}

SearchSpec search_spec_from_json(const Json& j) {
    SearchSpec spec;
    spec.a = require_int(j, "a");
    spec.b = require_int(j, "b");
    spec.t = require_int(j, "t");
    spec.n_max = require_int(j, "n_max");
    std::string profile = require_string(j, "profile");
    if (profile == "hemibundled")
        spec.profile = ConstraintProfile::Hemibundled;
    else if (profile == "bollobas")
        spec.profile = ConstraintProfile::Bollobas;
    else if (profile == "conj41")
        spec.profile = ConstraintProfile::Conj41;
    else
        throw ParseError("field 'profile' must be \"hemibundled\", \"bollobas\" or \"conj41\"");
    spec.isomorphism_reduction = optional_bool(j, "isomorphism_reduction", true);
    spec.order_quantified = optional_bool(j, "order_quantified", true);
    return spec;
}

Json search_spec_json(const SearchSpec& spec) {
    const char* profile = spec.profile == ConstraintProfile::Hemibundled ? "hemibundled"
                          : spec.profile == ConstraintProfile::Bollobas  ? "bollobas"
                                                                         : "conj41";
    return Json{{"a", spec.a},
                {"b", spec.b},
                {"t", spec.t},
                {"n_max", spec.n_max},
                {"profile", profile},
                {"isomorphism_reduction", spec.isomorphism_reduction},
                {"order_quantified", spec.order_quantified}};
}

Json search_result_json(const SearchSpec& spec, const SearchResult& res) {
    Json per_n = Json::array();
    for (const PerNResult& p : res.per_n)
        per_n.push_back(Json{
            {"n", p.n}, {"max_m", p.max_m}, {"nodes", p.nodes}, {"truncated", p.truncated}});
    Json witnesses = Json::array();
    for (const PairFamilyInstance& w : res.witnesses) witnesses.push_back(instance_json(w));
    Json out;
    out["spec"] = search_spec_json(spec);
    out["per_n"] = per_n;
    out["max_m"] = res.max_m;
    out["bound"] = res.bound.get_str();
    out["bound_is_theorem"] = res.bound_is_theorem;
    out["tight"] = res.tight;
    out["witnesses"] = witnesses;
    out["unique_structure"] = res.unique_structure ? Json(*res.unique_structure) : Json(nullptr);
    out["truncated"] = res.truncated;
    out["nodes"] = res.nodes;
    return out;
}

}  // namespace setpair
