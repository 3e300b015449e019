#pragma once

#include <json.hpp>

#include "cltlab/subgroups.hpp"
#include "cltlab/verifier.hpp"

namespace cltlab {

using Json = nlohmann::ordered_json;

// All timing fields serialize as null so reports are byte-reproducible;
// wall-clock numbers go to the human-readable output instead.

Json to_json(const CltReport& rep);
Json to_json(const MSetReport& rep);
Json to_json(const TheoremVerdict& v);
Json to_json(const PairReport& rep);
Json to_json(const AutFormulasReport& rep);
Json to_json(const CorollaryReport& rep);
Json to_json(const std::vector<ScanRow>& rows);

/// Top-level report envelope: {tool_version, command, inputs, results,
/// disagreements, timing_ms}.
Json make_report(const std::string& command, Json inputs, Json results,
                 Json disagreements);

/// Disagreement strings extracted from a report (prediction vs observation,
/// failed forward checks, corollary mismatches).
std::vector<std::string> collect_disagreements(const PairReport& rep);
std::vector<std::string> collect_disagreements(const std::vector<ScanRow>& rows);
std::vector<std::string> collect_disagreements(const AutFormulasReport& rep);
std::vector<std::string> collect_disagreements(const CorollaryReport& rep);

extern const char* kToolVersion;

}  // namespace cltlab
