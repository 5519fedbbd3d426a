#include "potgraphic/cli.hpp"

#include "potgraphic/error.hpp"
#include "potgraphic/extremal.hpp"
#include "potgraphic/oracle.hpp"
#include "potgraphic/potential.hpp"
#include "potgraphic/report.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

namespace potgraphic::cli {

namespace {

using report::json;

struct RunConfig {
    std::string format = "text";
    int threads = 1;
    std::uint64_t seed = 1;
    std::uint64_t work_bound = 10'000'000;
    bool strict = false;
    bool exclude_zero_terms = false;
    bool timing = false;
};

struct PatternArgs {
    int r = 0, k = 0, t = 0;
    CLI::Option * r_opt = nullptr;
    CLI::Option * k_opt = nullptr;
    CLI::Option * t_opt = nullptr;
    std::string file;
    CLI::Option * file_opt = nullptr;
    bool c4 = false;
    bool two_k2 = false;
};

struct Pattern {
    SimpleGraph graph;
    std::string label;
    std::optional<PatternSpec> spec;
};

class UsageFailure : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

void add_pattern_options(CLI::App * sub, PatternArgs & p)
{
    p.r_opt = sub->add_option("--r", p.r, "pattern K_{r+1}-(kP2 u tK2): r");
    p.k_opt = sub->add_option("--k", p.k, "number of removed P2 paths");
    p.t_opt = sub->add_option("--t", p.t, "number of removed K2 edges");
    p.file_opt = sub->add_option("--pattern", p.file, "pattern graph file");
    sub->add_flag("--pattern-c4", p.c4, "pattern C4");
    sub->add_flag("--pattern-2k2", p.two_k2, "pattern 2K2");
}

bool pattern_given(const PatternArgs & p)
{
    return p.r_opt->count() || p.file_opt->count() || p.c4 || p.two_k2;
}

Pattern resolve_pattern(const PatternArgs & p)
{
    const int chosen = (p.r_opt->count() ? 1 : 0) + (p.file_opt->count() ? 1 : 0) + (p.c4 ? 1 : 0) + (p.two_k2 ? 1 : 0);
    if (chosen != 1)
        throw UsageFailure("give exactly one pattern: --r/--k/--t, --pattern FILE, --pattern-c4 or --pattern-2k2");
    if (p.c4)
        return {cycle_graph(4), "C4", std::nullopt};
    if (p.two_k2)
        return {matching(2), "2K2", std::nullopt};
    if (p.file_opt->count()) {
        std::ifstream in(p.file);
        if (!in)
            throw Error(Errc::ParseError, "cannot open pattern file '" + p.file + "'");
        return {read_graph(in), "file:" + p.file, std::nullopt};
    }
    PatternSpec spec{p.r, p.k, p.t};
    return {build_removed_pattern(spec), spec.to_string(), spec};
}

std::string join_margins(const std::vector<std::int64_t> & margins)
{
    std::string out;
    for (std::size_t i = 0; i < margins.size(); ++i)
        out += (i ? "," : "") + std::to_string(margins[i]);
    return out;
}

std::string format_embedding(const Embedding & phi)
{
    std::string out;
    for (std::size_t u = 0; u < phi.size(); ++u)
        out += (u ? " " : "") + std::to_string(u + 1) + "->" + std::to_string(phi[u] + 1);
    return out;
}

class Emitter {
public:
    Emitter(const RunConfig & config, std::ostream & out) : config_(config), out_(out) {}

    void operator()(const json & record, const std::string & text) const
    {
        if (config_.format == "json")
            out_ << record.dump(2) << '\n';
        else if (config_.format == "csv")
            out_ << report::to_csv(record);
        else
            out_ << text;
    }

private:
    const RunConfig & config_;
    std::ostream & out_;
};

std::string pass_fail(bool ok)
{
    return ok ? "PASS" : "FAIL";
}

} // namespace

int run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err)
{
    CLI::App app{"Degree-sequence graphicality, potentially H-graphic decisions and extremal thresholds",
                 "potgraphic"};
    app.require_subcommand(1);
    app.fallthrough();

    RunConfig config;
    app.add_option("--format", config.format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--threads", config.threads, "worker threads")->check(CLI::PositiveNumber);
    app.add_option("--seed", config.seed, "random seed");
    app.add_option("--work-bound", config.work_bound, "search node budget for exhaustive runs")
        ->check(CLI::PositiveNumber);
    app.add_flag("--strict", config.strict, "enforce the threshold theorem's parameter range");
    app.add_flag("--exclude-zero", config.exclude_zero_terms, "skip sequences with zero entries");
    app.add_flag("--timing", config.timing, "include elapsed time in reports");

    // seq
    auto * seq = app.add_subcommand("seq", "degree sequence tools");
    seq->require_subcommand(1);
    std::string seq_text;
    std::size_t layoff_k = 1;
    auto * seq_check = seq->add_subcommand("check", "Erdos-Gallai test with margins");
    seq_check->add_option("sequence", seq_text, "comma-separated degrees")->required();
    auto * seq_realize = seq->add_subcommand("realize", "Havel-Hakimi realization");
    seq_realize->add_option("sequence", seq_text, "comma-separated degrees")->required();
    auto * seq_layoff = seq->add_subcommand("layoff", "residual sequence after laying off d_k");
    seq_layoff->add_option("sequence", seq_text, "comma-separated degrees")->required();
    seq_layoff->add_option("--k", layoff_k, "1-based position")->required();

    // potential
    auto * potential = app.add_subcommand("potential", "potentially H-graphic decisions");
    potential->require_subcommand(1);
    PatternArgs decide_pattern;
    bool witness = false;
    auto * decide = potential->add_subcommand("decide", "is some realization H-containing?");
    decide->add_option("--seq", seq_text, "comma-separated degrees")->required();
    add_pattern_options(decide, decide_pattern);
    decide->add_flag("--witness", witness, "print the realization and embedding");
    int clique_r = 0;
    auto * clique = potential->add_subcommand("clique", "do the r+1 largest degrees admit a clique?");
    clique->add_option("--seq", seq_text, "comma-separated degrees")->required();
    clique->add_option("--r", clique_r, "clique on r+1 vertices")->required();
    clique->add_flag("--witness", witness, "print the realization");

    // sigma
    auto * sigma = app.add_subcommand("sigma", "extremal thresholds");
    sigma->require_subcommand(1);
    int fr = 0, fk = 0, ft = 0, fn = 0;
    auto * formula = sigma->add_subcommand("formula", "closed-form threshold (r-1)(2n-r)-2(n-r)");
    formula->add_option("--r", fr)->required();
    formula->add_option("--k", fk)->required();
    formula->add_option("--t", ft)->required();
    formula->add_option("--n", fn)->required();
    PatternArgs brute_pattern;
    int brute_n = 0;
    auto * brute = sigma->add_subcommand("brute", "exact threshold by enumeration");
    add_pattern_options(brute, brute_pattern);
    brute->add_option("--n", brute_n)->required()->check(CLI::PositiveNumber);

    // verify
    auto * verify = app.add_subcommand("verify", "verification suites");
    verify->require_subcommand(1);
    int vr = 0, vk = 0, vt = 0, vn = 0;
    auto * lemma31 = verify->add_subcommand("lemma31", "extremal construction check");
    lemma31->add_option("--r", vr)->required();
    lemma31->add_option("--k", vk)->required();
    lemma31->add_option("--t", vt)->required();
    lemma31->add_option("--n", vn)->required();
    std::string condition_name;
    auto * condition = verify->add_subcommand("condition", "hypothesis => conclusion sweep");
    condition->add_option("--id", condition_name, "thm2.1..thm2.4, lemma2.2, lemma2.3")->required();
    condition->add_option("--r", vr)->required();
    condition->add_option("--n", vn)->required();
    std::size_t samples = 1000;
    auto * proofpath = verify->add_subcommand("proofpath", "sampled audit of the threshold proof's degree conditions");
    proofpath->add_option("--r", vr)->required();
    proofpath->add_option("--n", vn)->required();
    proofpath->add_option("--samples", samples);
    PatternArgs oracle_pattern;
    auto * oracle_cmd = verify->add_subcommand("oracle", "exhaustive cross-checks at small n");
    oracle_cmd->add_option("--n", vn)->required()->check(CLI::Range(1, oracle::max_order));
    add_pattern_options(oracle_cmd, oracle_pattern);

    for (auto * sub : {seq, potential, sigma, verify})
        sub->fallthrough();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    }
    catch (const CLI::CallForHelp &) {
        out << app.help();
        return Ok;
    }
    catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return Ok;
    }
    catch (const CLI::ParseError & e) {
        err << "error: " << e.what() << '\n';
        return UsageError;
    }

    const Emitter emit(config, out);
    try {
        if (seq_check->parsed()) {
            auto s = parse_sequence(seq_text);
            const bool graphic = is_graphic(s);
            const auto margins = erdos_gallai_margins(s);
            emit({{"sequence", s.to_string()}, {"sigma", s.sigma()}, {"graphic", graphic}, {"margins", margins}},
                 "graphic: " + std::string(graphic ? "true" : "false") + "\nmargins: " + join_margins(margins) +
                     "\n");
            return Ok;
        }
        if (seq_realize->parsed()) {
            auto s = parse_sequence(seq_text);
            auto g = havel_hakimi_realize(s);
            json record{{"sequence", s.to_string()}, {"graphic", g.has_value()}};
            if (g) {
                record["n"] = g->order();
                record["edges"] = report::edge_list(*g);
            }
            emit(record, g ? format_graph(*g) : std::string("NOT GRAPHIC\n"));
            return Ok;
        }
        if (seq_layoff->parsed()) {
            auto s = parse_sequence(seq_text);
            auto residual = layoff(s, layoff_k);
            emit({{"sequence", s.to_string()}, {"k", layoff_k}, {"residual", residual.to_string()}},
                 residual.to_string() + "\n");
            return Ok;
        }
        if (decide->parsed()) {
            auto s = parse_sequence(seq_text);
            auto pattern = resolve_pattern(decide_pattern);
            PotentialOptions options;
            options.node_limit = config.work_bound;
            auto decision = is_potentially_subgraph(s, pattern.graph, options);
            json record{{"sequence", s.to_string()},
                        {"pattern", pattern.label},
                        {"potential", decision.verdict},
                        {"graphic", !decision.not_graphic}};
            std::string text = "potential: " + std::string(decision.verdict ? "true" : "false") + "\n";
            if (decision.not_graphic)
                text += "note: sequence is not graphic\n";
            if (witness && decision.verdict) {
                record["witness"] = report::edge_list(*decision.witness);
                json phi = json::array();
                for (int v : *decision.embedding)
                    phi.push_back(v + 1);
                record["embedding"] = phi;
                text += "witness:\n" + format_graph(*decision.witness) + "embedding: " +
                        format_embedding(*decision.embedding) + "\n";
            }
            emit(record, text);
            return Ok;
        }
        if (clique->parsed()) {
            auto s = parse_sequence(seq_text);
            PotentialOptions options;
            options.node_limit = config.work_bound;
            auto decision = is_potentially_clique_on_top(s, clique_r, options);
            json record{{"sequence", s.to_string()}, {"r", clique_r}, {"potential", decision.verdict},
                        {"graphic", !decision.not_graphic}};
            std::string text = "clique on top: " + std::string(decision.verdict ? "true" : "false") + "\n";
            if (decision.not_graphic)
                text += "note: sequence is not graphic\n";
            if (witness && decision.verdict) {
                record["witness"] = report::edge_list(*decision.witness);
                text += "witness:\n" + format_graph(*decision.witness);
            }
            emit(record, text);
            return Ok;
        }
        if (formula->parsed()) {
            const auto mode = config.strict ? FormulaMode::Strict : FormulaMode::Relaxed;
            const auto value = sigma_formula(fr, fk, ft, fn, mode);
            const auto violated = theorem_range_violations(fr, fk, ft, fn);
            if (!violated.empty()) {
                err << "note: outside the theorem range:";
                for (const auto & v : violated)
                    err << ' ' << v;
                err << '\n';
            }
            emit({{"r", fr}, {"k", fk}, {"t", ft}, {"n", fn}, {"sigma", value},
                  {"in_theorem_range", violated.empty()}, {"violations", violated}},
                 std::to_string(value) + "\n");
            return Ok;
        }
        if (brute->parsed()) {
            auto pattern = resolve_pattern(brute_pattern);
            BruteForceOptions options;
            options.exclude_zero_terms = config.exclude_zero_terms;
            options.work_bound = config.work_bound;
            options.threads = config.threads;
            auto result = brute_force_sigma(pattern.graph, brute_n, options, pattern.label);
            std::ostringstream text;
            text << "pattern: " << result.pattern << '\n'
                 << "n: " << result.n << '\n'
                 << "threshold: " << result.threshold << '\n';
            for (const auto & s : result.extremal_sequences)
                text << "extremal: " << s.to_string() << '\n';
            text << "graphic: " << result.counts.graphic << '\n'
                 << "decided: " << result.counts.decided << '\n'
                 << "potential: " << result.counts.potential << '\n'
                 << "search_nodes: " << result.search_nodes << '\n';
            if (config.timing)
                text << "elapsed_ms: " << result.elapsed_ms << '\n';
            emit(report::to_json(result, config.timing), text.str());
            return Ok;
        }
        if (lemma31->parsed()) {
            auto result = verify_lower_bound({vr, vk, vt}, vn);
            std::ostringstream text;
            text << "lemma31 " << result.spec.to_string() << " n=" << vn << '\n'
                 << "  degree sequence " << result.construction_sequence.to_string() << ": "
                 << pass_fail(result.sequence_matches) << '\n'
                 << "  pattern absent: " << pass_fail(result.pattern_absent) << '\n'
                 << "  sigma " << result.construction_sigma << " = " << result.bound << " - 2: "
                 << pass_fail(result.sigma_matches) << '\n'
                 << pass_fail(result.passed()) << '\n';
            emit(report::to_json(result), text.str());
            return result.passed() ? Ok : CounterexampleFound;
        }
        if (condition->parsed()) {
            auto audit = audit_condition(parse_condition_id(condition_name), vr, vn, config.threads);
            std::ostringstream text;
            text << "condition " << to_string(audit.id) << " r=" << audit.r << " n=" << audit.n << ": graphic "
                 << audit.graphic << ", hypothesis held " << audit.hypothesis_held << ", counterexamples "
                 << audit.counterexamples.size() << '\n';
            for (const auto & s : audit.counterexamples)
                text << "counterexample: " << s.to_string() << '\n';
            text << pass_fail(audit.counterexamples.empty()) << '\n';
            emit(report::to_json(audit), text.str());
            return audit.counterexamples.empty() ? Ok : CounterexampleFound;
        }
        if (proofpath->parsed()) {
            auto audit = audit_proof_path(vr, vn, samples, config.seed, config.threads);
            const bool ok = audit.failures.empty() && audit.special_case.passed();
            std::ostringstream text;
            text << "proofpath r=" << audit.r << " n=" << audit.n << " seed=" << audit.seed << ": " << audit.passed
                 << "/" << audit.samples << " samples pass\n"
                 << "  branches: special " << audit.special << ", staircase " << audit.staircase << ", tail "
                 << audit.tail << '\n'
                 << "  special sequence " << audit.special_case.sequence.to_string() << ": branch "
                 << audit.special_case.branch() << ", " << pass_fail(audit.special_case.passed()) << '\n';
            for (const auto & f : audit.failures) {
                text << "counterexample: " << f.sequence.to_string() << '\n';
                for (const auto & v : f.violations)
                    text << "  " << v << '\n';
            }
            text << pass_fail(ok) << '\n';
            emit(report::to_json(audit), text.str());
            return ok ? Ok : CounterexampleFound;
        }
        if (oracle_cmd->parsed()) {
            auto audit = oracle::audit_sequences(vn);
            json record = report::to_json(audit);
            bool ok = audit.passed();
            std::ostringstream text;
            text << "oracle n=" << vn << ": " << audit.sequences << " sequences, " << audit.realizable
                 << " realizable, " << audit.enumerated << " enumerated\n"
                 << "  is_graphic mismatches " << audit.graphic_mismatches << ", layoff violations "
                 << audit.layoff_violations << ", enumeration mismatches " << audit.enumeration_mismatches << '\n';
            for (const auto & d : audit.details)
                text << "  " << d << '\n';
            if (pattern_given(oracle_pattern)) {
                auto pattern = resolve_pattern(oracle_pattern);
                std::uint64_t mismatches = 0;
                json bad = json::array();
                if (pattern.graph.order() <= vn) {
                    for (const auto & [s, expected] : oracle::potential_by_enumeration(vn, pattern.graph)) {
                        if (is_potentially_subgraph(s, pattern.graph).verdict != expected) {
                            ++mismatches;
                            bad.push_back(s.to_string());
                            text << "  potential mismatch: " << s.to_string() << '\n';
                        }
                    }
                }
                record["pattern"] = pattern.label;
                record["potential_mismatches"] = mismatches;
                record["potential_mismatch_sequences"] = bad;
                text << "  potential (" << pattern.label << ") mismatches " << mismatches << '\n';
                ok = ok && mismatches == 0;
                record["passed"] = ok;
            }
            text << pass_fail(ok) << '\n';
            emit(record, text.str());
            return ok ? Ok : CounterexampleFound;
        }
    }
    catch (const UsageFailure & e) {
        err << "error: " << e.what() << '\n';
        return UsageError;
    }
    catch (const Error & e) {
        err << "error: " << e.what() << '\n';
        return UsageError;
    }
    err << "error: no command\n";
    return UsageError;
}

} // namespace potgraphic::cli
