#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "aim1d/fd_oracle.hpp"
#include "aim1d/spectrum.hpp"
#include "aim1d/units.hpp"

namespace aim1d {

using ordered_json = nlohmann::ordered_json;

// Every emitted file carries the manifest that produced it: the command
// line, the fully resolved configuration, the library version and a
// timestamp. Identical command lines give byte-identical output apart from
// the timestamp field.
struct RunManifest {
    std::string command;
    std::string timestamp; // ISO-8601 UTC; empty = fill with now()
    ordered_json config;
    std::vector<std::string> outputs;
};

std::string now_iso8601_utc();

ordered_json manifest_json(const RunManifest& m);
ordered_json potential_json(const PotentialSpec& spec);
ordered_json extrema_json(const PotentialExtrema& ex);
ordered_json solver_config_json(const SolverConfig& cfg);
ordered_json units_json(const UnitContext& ctx);
ordered_json candidate_json(const EigenvalueCandidate& c);

ordered_json report_json(const SpectrumReport& rep, const RunManifest& m);
ordered_json sweep_json(const std::vector<SweepRow>& rows, const RunManifest& m);
ordered_json split_json(const std::vector<SplitPoint>& points, const RunManifest& m);
ordered_json oracle_json(const OracleComparison& cmp, const RunManifest& m);

// Flat tables for plotting; sep is ',' or '\t'. Column layouts are stable
// per schema version and documented in the README.
std::string report_table(const SpectrumReport& rep, char sep);
std::string sweep_table(const std::vector<SweepRow>& rows, char sep);
std::string split_table(const std::vector<SplitPoint>& points, char sep);
std::string oracle_table(const OracleComparison& cmp, char sep);

// shortest round-trip decimal form of a double
std::string num_str(double v);

} // namespace aim1d
