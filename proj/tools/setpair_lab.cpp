// Command-line front end: verification, proof replay, extremal search and
// algebra demos with JSON input and output.
//
// Exit codes
//   verify:  0 hypotheses and conclusion hold, 1 conclusion fails under valid
//            hypotheses (a theorem counterexample; should never happen),
//            2 hypotheses or preconditions fail, 64 malformed input
//   replay:  0 all chain invariants verified, 1 invariant/reduction failure,
//            2 invalid instance, 64 malformed input
//   search:  0 done, 3 node budget exhausted, 64 malformed input
//   conjecture: 0 consistent, 1 counterexample found, 3 truncated, 64 malformed
//   lym/wedge: 0 done, 2 precondition violated, 64 malformed input

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "setpair/json_io.hpp"

using namespace setpair;

namespace {

struct RunConfig {
    std::string input_path;
    std::string inline_json;
    std::string output_path;
    std::uint64_t seed = 0;
    int jobs = 1;
    std::uint64_t node_budget = 100000000;
    int verbosity = 0;
};

std::string read_input(const RunConfig& cfg) {
    if (!cfg.input_path.empty()) {
        std::ifstream in(cfg.input_path);
        if (!in) throw ParseError("cannot open input file: " + cfg.input_path);
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }
    if (!cfg.inline_json.empty()) return cfg.inline_json;
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
}

Json parse_document(const RunConfig& cfg) {
    std::string text = read_input(cfg);
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("input is not valid JSON");
    return j;
}

void emit(const RunConfig& cfg, const Json& doc) {
    std::string text = doc.dump(2) + "\n";
    if (cfg.output_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(cfg.output_path);
    if (!out) throw Error("cannot open output file: " + cfg.output_path);
    out << text;
}

void attach_io_flags(CLI::App* cmd, RunConfig& cfg) {
    cmd->add_option("json", cfg.inline_json, "inline JSON input");
    cmd->add_option("--input", cfg.input_path, "path to JSON input (stdin if omitted)");
    cmd->add_option("--output", cfg.output_path, "output path (stdout if omitted)");
}

int run_verify(const RunConfig& cfg, const std::string& theorem) {
    Json doc = parse_document(cfg);
    PairFamilyInstance inst = instance_from_json(doc);
    VerifierReport rep;
    try {
        if (theorem == "bollobas")
            rep = check_bollobas(inst);
        else if (theorem == "hemibundled")
            rep = check_hemibundled(inst);
        else if (theorem == "furedi")
            rep = check_furedi_subspaces(inst);
        else if (theorem == "weighted-space")
            rep = check_weighted_space(inst);
        else
            throw ParseError("unknown theorem selector: " + theorem);
    } catch (const PreconditionError& ex) {
        Json out;
        out["error"] = std::string("precondition: ") + ex.what();
        emit(cfg, out);
        return 2;
    }
    emit(cfg, verifier_report_json(rep));
    if (!rep.hypotheses_hold) return 2;
    return rep.conclusion_holds ? 0 : 1;
}

int run_replay(const RunConfig& cfg) {
    Json doc = parse_document(cfg);
    PairFamilyInstance inst = instance_from_json(doc);
    ProofTrace trace;
    try {
        trace = replay_proof(inst, cfg.seed);
    } catch (const PreconditionError& ex) {
        Json out;
        out["error"] = std::string("invalid instance: ") + ex.what();
        emit(cfg, out);
        return 2;
    } catch (const Error& ex) {
        Json out;
        out["error"] = ex.what();
        emit(cfg, out);
        return 1;
    }
    emit(cfg, proof_trace_json(trace));
    return 0;
}

int run_search(const RunConfig& cfg) {
    Json doc = parse_document(cfg);
    SearchSpec spec = search_spec_from_json(doc);
    spec.node_budget = cfg.node_budget;
    spec.jobs = cfg.jobs;
    SearchResult res = search_max_family(spec);
    emit(cfg, search_result_json(spec, res));
    return res.truncated ? 3 : 0;
}

int run_conjecture(const RunConfig& cfg) {
    Json doc = parse_document(cfg);
    int a = require_int(doc, "a");
    int b = require_int(doc, "b");
    int t = require_int(doc, "t");
    int n_max = require_int(doc, "n_max");
    ConjectureProbe probe = conjecture41_probe(a, b, t, n_max);
    SearchSpec used;  // echo the routed spec
    used.a = a;
    used.b = b;
    used.t = t;
    used.n_max = n_max;
    used.profile = t == 0 ? ConstraintProfile::Bollobas : ConstraintProfile::Conj41;
    Json out;
    out["a"] = a;
    out["b"] = b;
    out["t"] = t;
    out["n_max"] = n_max;
    out["max_m"] = probe.max_m;
    out["ak"] = probe.ak.get_str();
    out["consistent"] = probe.consistent;
    out["search"] = search_result_json(used, probe.detail);
    emit(cfg, out);
    if (probe.detail.truncated) return 3;
    if (!probe.consistent) {
        std::cerr << "CONJECTURE VIOLATION: max_m = " << probe.max_m << " exceeds AK bound "
                  << probe.ak.get_str() << "; witnesses are in the report\n";
        return 1;
    }
    return 0;
}

int run_lym(const RunConfig& cfg, int b) {
    Json doc = parse_document(cfg);
    Hypergraph h = hypergraph_from_json(doc);
    LymReport rep;
    try {
        rep = local_lym_intersecting_check(h, b);
    } catch (const PreconditionError& ex) {
        Json out;
        out["error"] = std::string("precondition: ") + ex.what();
        emit(cfg, out);
        return 2;
    }
    emit(cfg, lym_report_json(rep));
    return 0;
}

int run_wedge(const RunConfig& cfg) {
    Json doc = parse_document(cfg);
    Multivector u = multivector_from_json(require_field(doc, "u"));
    Multivector v = multivector_from_json(require_field(doc, "v"));
    try {
        emit(cfg, multivector_json(wedge(u, v)));
    } catch (const GradeError& ex) {
        Json out;
        out["error"] = std::string("precondition: ") + ex.what();
        emit(cfg, out);
        return 2;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact set-pair / exterior-algebra laboratory"};
    app.require_subcommand(1);

    RunConfig cfg;
    if (const char* env = std::getenv("SETPAIR_LAB_BUDGET")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) cfg.node_budget = v;
    }
    app.add_option("--seed", cfg.seed, "seed for all randomized constructions (default 0)");
    app.add_option("--jobs", cfg.jobs, "worker cap for the search (default 1)");
    app.add_option("--node-budget", cfg.node_budget,
                   "search node budget (default 1e8 or SETPAIR_LAB_BUDGET)");
    app.add_flag("-v,--verbose", cfg.verbosity, "increase verbosity");

    // allow the global flags (--seed, --node-budget, ...) after a subcommand
    app.fallthrough();

    std::string theorem = "hemibundled";
    CLI::App* verify = app.add_subcommand("verify", "check theorem hypotheses and conclusion");
    verify->add_option("--theorem", theorem,
                       "bollobas | hemibundled | furedi | weighted-space");
    attach_io_flags(verify, cfg);

    CLI::App* replay = app.add_subcommand("replay", "replay the chain proof on an instance");
    attach_io_flags(replay, cfg);

    CLI::App* search = app.add_subcommand("search", "exhaustive extremal family search");
    attach_io_flags(search, cfg);

    CLI::App* conjecture = app.add_subcommand("conjecture", "probe the t-intersecting conjecture");
    attach_io_flags(conjecture, cfg);

    int lym_b = 0;
    CLI::App* lym = app.add_subcommand("lym", "local LYM check for an intersecting hypergraph");
    lym->add_option("--b", lym_b, "upper shadow height b");
    attach_io_flags(lym, cfg);

    CLI::App* wedge_cmd = app.add_subcommand("wedge", "wedge product of two multivectors");
    attach_io_flags(wedge_cmd, cfg);

    CLI11_PARSE(app, argc, argv);

    try {
        if (verify->parsed()) return run_verify(cfg, theorem);
        if (replay->parsed()) return run_replay(cfg);
        if (search->parsed()) return run_search(cfg);
        if (conjecture->parsed()) return run_conjecture(cfg);
        if (lym->parsed()) return run_lym(cfg, lym_b);
        if (wedge_cmd->parsed()) return run_wedge(cfg);
    } catch (const ParseError& ex) {
        std::cerr << "parse error: " << ex.what() << "\n";
        return 64;
    } catch (const Error& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    }
    return 0;
}
