#pragma once

#include <json.hpp>

#include "setpair/exterior.hpp"
#include "setpair/hypergraph.hpp"
#include "setpair/instance.hpp"
#include "setpair/proof.hpp"
#include "setpair/search.hpp"
#include "setpair/verifiers.hpp"

namespace setpair {

// Insertion-ordered documents keep output byte-stable for golden tests.
using Json = nlohmann::ordered_json;

// ---- parsing helpers (ParseError names the offending field) ---------------

const Json& require_field(const Json& j, const char* name);
int require_int(const Json& j, const char* name);
std::uint64_t require_uint(const Json& j, const char* name);
std::string require_string(const Json& j, const char* name);
bool optional_bool(const Json& j, const char* name, bool fallback);

// ---- to/from JSON ----------------------------------------------------------

Json ratio_json(const BigRatio& r);
BigRatio ratio_from_json(const Json& j, const char* what);

Json subset_json(const SubsetMask& s);

Json hypergraph_json(const Hypergraph& h);
Hypergraph hypergraph_from_json(const Json& j);

Json multivector_json(const Multivector& w);
Multivector multivector_from_json(const Json& j);

Json subspace_rows_json(const RationalSubspace& s);
RationalSubspace subspace_from_json(const Json& rows, int ambient);

Json instance_json(const PairFamilyInstance& inst);
PairFamilyInstance instance_from_json(const Json& j);

Json verifier_report_json(const VerifierReport& rep);
Json lym_report_json(const LymReport& rep);
Json proof_trace_json(const ProofTrace& trace);

SearchSpec search_spec_from_json(const Json& j);
Json search_spec_json(const SearchSpec& spec);
Json search_result_json(const SearchSpec& spec, const SearchResult& res);

}  // namespace setpair
