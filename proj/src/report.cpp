#include "potgraphic/report.hpp"

#include <sstream>

namespace potgraphic::report {

json sequence_list(const std::vector<DegreeSequence> & sequences)
{
    json out = json::array();
    for (const auto & s : sequences)
        out.push_back(s.to_string());
    return out;
}

json edge_list(const SimpleGraph & g)
{
    json out = json::array();
    for (auto [u, v] : g.edges())
        out.push_back({u + 1, v + 1});
    return out;
}

json to_json(const ThresholdReport & report, bool timing)
{
    json out{
        {"pattern", report.pattern},
        {"n", report.n},
        {"threshold", report.threshold},
        {"extremal_sequences", sequence_list(report.extremal_sequences)},
        {"exclude_zero_terms", report.exclude_zero_terms},
        {"counts",
         {{"graphic", report.counts.graphic},
          {"decided", report.counts.decided},
          {"potential", report.counts.potential},
          {"search_nodes", report.search_nodes}}},
    };
    if (timing)
        out["elapsed_ms"] = report.elapsed_ms;
    return out;
}

json to_json(const LowerBoundReport & report)
{
    return {
        {"pattern", report.spec.to_string()},
        {"r", report.spec.r},
        {"k", report.spec.k},
        {"t", report.spec.t},
        {"n", report.n},
        {"expected_sequence", report.expected_sequence.to_string()},
        {"construction_sequence", report.construction_sequence.to_string()},
        {"construction_sigma", report.construction_sigma},
        {"lower_bound", report.bound},
        {"sequence_matches", report.sequence_matches},
        {"pattern_absent", report.pattern_absent},
        {"sigma_matches", report.sigma_matches},
        {"passed", report.passed()},
    };
}

json to_json(const ConditionAudit & audit)
{
    return {
        {"condition", std::string(to_string(audit.id))},
        {"r", audit.r},
        {"n", audit.n},
        {"graphic", audit.graphic},
        {"hypothesis_held", audit.hypothesis_held},
        {"counterexamples", sequence_list(audit.counterexamples)},
        {"passed", audit.counterexamples.empty()},
    };
}

json to_json(const ProofPathResult & result)
{
    return {
        {"sequence", result.sequence.to_string()},
        {"r", result.r},
        {"special", result.special},
        {"d_r-2_at_least_r", result.top_condition},
        {"d_r_at_least_r-1", result.middle_condition},
        {"d_r+1_at_least_r-2", result.lower_condition},
        {"staircase_branch", result.staircase_branch},
        {"tail_branch", result.tail_branch},
        {"branch", result.branch()},
        {"violations", result.violations},
        {"passed", result.passed()},
    };
}

json to_json(const ProofPathAudit & audit)
{
    json failures = json::array();
    for (const auto & f : audit.failures)
        failures.push_back(to_json(f));
    return {
        {"r", audit.r},
        {"n", audit.n},
        {"seed", audit.seed},
        {"samples", audit.samples},
        {"passed_samples", audit.passed},
        {"branches", {{"special", audit.special}, {"staircase", audit.staircase}, {"tail", audit.tail}}},
        {"failures", failures},
        {"special_sequence", to_json(audit.special_case)},
        {"passed", audit.failures.empty() && audit.special_case.passed()},
    };
}

json to_json(const oracle::Audit & audit)
{
    return {
        {"n", audit.n},
        {"sequences", audit.sequences},
        {"realizable", audit.realizable},
        {"enumerated", audit.enumerated},
        {"graphic_mismatches", audit.graphic_mismatches},
        {"layoff_violations", audit.layoff_violations},
        {"enumeration_mismatches", audit.enumeration_mismatches},
        {"details", audit.details},
        {"passed", audit.passed()},
    };
}

namespace {

void flatten(const json & value, const std::string & prefix, std::vector<std::pair<std::string, std::string>> & cells)
{
    if (value.is_object()) {
        for (const auto & [key, item] : value.items())
            flatten(item, prefix.empty() ? key : prefix + "." + key, cells);
        return;
    }
    std::string text;
    if (value.is_array()) {
        for (std::size_t i = 0; i < value.size(); ++i) {
            if (i)
                text += ';';
            text += value[i].is_string() ? value[i].get<std::string>() : value[i].dump();
        }
    }
    else if (value.is_string()) {
        text = value.get<std::string>();
    }
    else {
        text = value.dump();
    }
    cells.emplace_back(prefix, text);
}

std::string quote(const std::string & field)
{
    if (field.find_first_of(",\"\n") == std::string::npos)
        return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

} // namespace

std::string to_csv(const json & flat_record)
{
    std::vector<std::pair<std::string, std::string>> cells;
    flatten(flat_record, "", cells);
    std::ostringstream out;
    for (std::size_t i = 0; i < cells.size(); ++i)
        out << (i ? "," : "") << quote(cells[i].first);
    out << '\n';
    for (std::size_t i = 0; i < cells.size(); ++i)
        out << (i ? "," : "") << quote(cells[i].second);
    out << '\n';
    return out.str();
}

} // namespace potgraphic::report
