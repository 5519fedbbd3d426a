#pragma once

#include "potgraphic/extremal.hpp"
#include "potgraphic/oracle.hpp"

#include "json.hpp"

#include <string>

// JSON and CSV renderings of the report types. nlohmann::json stores object
// keys in sorted order, so every rendering has a normalized key order.
namespace potgraphic::report {

using nlohmann::json;

json sequence_list(const std::vector<DegreeSequence> & sequences);
json edge_list(const SimpleGraph & g);

/// Keys: pattern, n, threshold, extremal_sequences, counts, exclude_zero_terms
/// and elapsed_ms when `timing` is set.
json to_json(const ThresholdReport & report, bool timing);
json to_json(const LowerBoundReport & report);
json to_json(const ConditionAudit & audit);
json to_json(const ProofPathResult & result);
json to_json(const ProofPathAudit & audit);
json to_json(const oracle::Audit & audit);

/// One header line and one data line. Nested objects become dotted column
/// names; arrays are joined with ';'. Fields containing a comma are quoted.
std::string to_csv(const json & flat_record);

} // namespace potgraphic::report
