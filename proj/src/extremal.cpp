#include "potgraphic/extremal.hpp"

#include "potgraphic/error.hpp"
#include "potgraphic/parallel.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>
#include <random>

namespace potgraphic {

std::vector<std::string> theorem_range_violations(int r, int k, int t, int n)
{
    std::vector<std::string> out;
    if (r < 4)
        out.push_back("r >= 4");
    if (k < 1)
        out.push_back("k >= 1");
    if (t < 0)
        out.push_back("t >= 0");
    if (k + t < 2)
        out.push_back("k+t >= 2");
    if (3 * k + 2 * t > r + 1)
        out.push_back("r+1 >= 3k+2t");
    if (n < 4 * r + 10)
        out.push_back("n >= 4r+10");
    return out;
}

std::int64_t sigma_formula(int r, int k, int t, int n, FormulaMode mode)
{
    if (mode == FormulaMode::Strict) {
        auto violated = theorem_range_violations(r, k, t, n);
        if (!violated.empty()) {
            std::string what = "outside the theorem range:";
            for (const auto & v : violated)
                what += " " + v;
            throw Error(Errc::ConstraintViolation, what);
        }
    }
    else if (r < 3 || n < r + 1) {
        throw Error(Errc::ConstraintViolation, "the formula needs r >= 3 and n >= r+1");
    }
    const std::int64_t R = r, N = n;
    return (R - 1) * (2 * N - R) - 2 * (N - R);
}

std::int64_t lower_bound_sum(int r, int n)
{
    if (r < 3 || n < r + 1)
        throw Error(Errc::ConstraintViolation, "the lower bound needs r >= 3 and n >= r+1");
    const std::int64_t R = r, N = n;
    return (R - 2) * (N - 1) + (R - 2) * (N - R + 2) + 2;
}

ThresholdReport brute_force_sigma(const SimpleGraph & pattern, int n, const BruteForceOptions & options,
                                  std::string pattern_label)
{
    const auto started = std::chrono::steady_clock::now();
    if (pattern.order() > n)
        throw Error(Errc::PreconditionUnmet, "pattern has more vertices than n");

    ThresholdReport report;
    report.pattern = std::move(pattern_label);
    report.n = n;
    report.exclude_zero_terms = options.exclude_zero_terms;

    SearchBudget total{options.work_bound, 0};
    std::vector<DegreeSequence> sequences;
    EnumerationOptions enumeration;
    enumeration.exclude_zero_terms = options.exclude_zero_terms;
    for_each_graphic_sequence(n, enumeration, [&](const DegreeSequence & s) {
        total.charge();
        sequences.push_back(s);
        return true;
    });
    report.counts.graphic = sequences.size();

    // enumeration order is lexicographically decreasing; keep it within a level
    std::stable_sort(sequences.begin(), sequences.end(),
                     [](const auto & a, const auto & b) { return a.sigma() > b.sigma(); });

    PotentialOptions potential = options.potential;
    if (!potential.node_limit)
        potential.node_limit = options.work_bound;

    std::size_t level_begin = 0;
    while (level_begin < sequences.size()) {
        std::size_t level_end = level_begin;
        while (level_end < sequences.size() && sequences[level_end].sigma() == sequences[level_begin].sigma())
            ++level_end;

        const std::size_t width = level_end - level_begin;
        std::vector<char> verdicts(width, 0);
        std::vector<std::uint64_t> nodes(width, 0);
        parallel_for(width, options.threads, [&](std::size_t i) {
            auto decision = is_potentially_subgraph(sequences[level_begin + i], pattern, potential);
            verdicts[i] = decision.verdict ? 1 : 0;
            nodes[i] = decision.nodes;
        });
        total.charge(std::accumulate(nodes.begin(), nodes.end(), std::uint64_t{0}));

        report.counts.decided += width;
        for (std::size_t i = 0; i < width; ++i) {
            if (verdicts[i])
                ++report.counts.potential;
            else
                report.extremal_sequences.push_back(sequences[level_begin + i]);
        }
        if (!report.extremal_sequences.empty()) {
            report.threshold = sequences[level_begin].sigma() + 2;
            break;
        }
        level_begin = level_end;
    }

    std::sort(report.extremal_sequences.begin(), report.extremal_sequences.end());
    report.search_nodes = total.used;
    report.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
    return report;
}

LowerBoundReport verify_lower_bound(const PatternSpec & spec, int n)
{
    spec.validate();
    if (spec.r < 3 || n < spec.r + 1)
        throw Error(Errc::ConstraintViolation, "lower bound verification needs r >= 3 and n >= r+1");

    LowerBoundReport report;
    report.spec = spec;
    report.n = n;
    report.expected_sequence = repeated({{n - 1, spec.r - 2}, {spec.r - 2, n - spec.r + 2}});

    const auto construction = extremal_construction(spec.r, n);
    report.construction_sequence = degree_sequence(construction);
    report.construction_sigma = report.construction_sequence.sigma();
    report.bound = lower_bound_sum(spec.r, n);

    report.sequence_matches = report.construction_sequence == report.expected_sequence;
    report.pattern_absent = !contains_subgraph(construction, build_removed_pattern(spec)).has_value();
    report.sigma_matches = report.construction_sigma == report.bound - 2;
    return report;
}

bool unique_realization_check(const DegreeSequence & seq, int max_n, std::uint64_t node_limit)
{
    if (static_cast<int>(seq.size()) > max_n)
        throw Error(Errc::WorkBoundExceeded, "uniqueness check limited to " + std::to_string(max_n) + " vertices");
    if (!is_graphic(seq))
        return false;

    SearchBudget budget{node_limit, 0};
    std::optional<SimpleGraph> first;
    bool unique = true;
    for_each_completion(
        seq, {},
        [&](const SimpleGraph & g) {
            if (!first) {
                first = g;
                return true;
            }
            if (!are_isomorphic(*first, g)) {
                unique = false;
                return false;
            }
            return true;
        },
        &budget);
    return unique;
}

DegreeSequence special_sequence(int r, int n)
{
    return repeated({{n - 1, r - 3}, {r - 1, n - r + 3}});
}

std::string ProofPathResult::branch() const
{
    if (special)
        return "special";
    if (staircase_branch && tail_branch)
        return "staircase+tail";
    if (staircase_branch)
        return "staircase";
    if (tail_branch)
        return "tail";
    return "none";
}

ProofPathResult proof_path_check(const DegreeSequence & seq, int r)
{
    const int n = static_cast<int>(seq.size());
    if (r < 3)
        throw Error(Errc::PreconditionUnmet, "proof path conditions need r >= 3");
    if (n < 4 * r + 10)
        throw Error(Errc::PreconditionUnmet, "proof path conditions need n >= 4r+10");
    if (!is_graphic(seq))
        throw Error(Errc::PreconditionUnmet, seq.to_string() + " is not graphic");
    const auto floor = sigma_formula(r, 1, 1, n, FormulaMode::Relaxed);
    if (seq.sigma() < floor)
        throw Error(Errc::PreconditionUnmet, "sum " + std::to_string(seq.sigma()) + " is below " +
                                                 std::to_string(floor));

    auto d = [&](int i) { return seq.d(static_cast<std::size_t>(i)); };
    ProofPathResult out;
    out.sequence = seq;
    out.r = r;
    out.special = seq == special_sequence(r, n);
    out.top_condition = d(r - 2) >= r;
    out.middle_condition = d(r) >= r - 1;
    out.lower_condition = d(r + 1) >= r - 2;
    out.staircase_branch = true;
    for (int i = 1; i <= r - 2; ++i)
        if (d(i) < 2 * r - i)
            out.staircase_branch = false;
    out.tail_branch = d(2 * r + 2) >= r - 1;

    if (!out.condition_i())
        out.violations.push_back("d_{r-2} >= r fails and the sequence is not the special sequence");
    if (!out.middle_condition)
        out.violations.push_back("d_r >= r-1 fails");
    if (!out.lower_condition)
        out.violations.push_back("d_{r+1} >= r-2 fails");
    if (!out.condition_iv())
        out.violations.push_back("neither d_i >= 2r-i for all i <= r-2 nor d_{2r+2} >= r-1");
    return out;
}

std::vector<DegreeSequence> sample_graphic_sequences(int n, std::int64_t min_sigma, std::size_t count,
                                                     std::uint64_t seed)
{
    if (n < 1)
        throw Error(Errc::PreconditionUnmet, "n must be positive");
    const std::int64_t pairs = static_cast<std::int64_t>(n) * (n - 1) / 2;
    if (min_sigma > 2 * pairs)
        throw Error(Errc::InfeasibleSigma, "no graph on " + std::to_string(n) + " vertices has degree sum " +
                                               std::to_string(min_sigma));

    std::vector<Edge> all;
    all.reserve(static_cast<std::size_t>(pairs));
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            all.emplace_back(u, v);

    const std::int64_t lowest = std::max<std::int64_t>(0, (min_sigma + 1) / 2);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::int64_t> edge_count(lowest, pairs);

    std::vector<DegreeSequence> out;
    out.reserve(count);
    for (std::size_t s = 0; s < count; ++s) {
        const auto m = static_cast<std::size_t>(edge_count(rng));
        // partial Fisher-Yates: the first m slots become a uniform m-subset
        for (std::size_t i = 0; i < m; ++i) {
            std::uniform_int_distribution<std::size_t> pick(i, all.size() - 1);
            std::swap(all[i], all[pick(rng)]);
        }
        std::vector<int> degrees(static_cast<std::size_t>(n), 0);
        for (std::size_t i = 0; i < m; ++i) {
            ++degrees[static_cast<std::size_t>(all[i].first)];
            ++degrees[static_cast<std::size_t>(all[i].second)];
        }
        out.emplace_back(std::move(degrees));
    }
    return out;
}

ConditionAudit audit_condition(ConditionId id, int r, int n, int threads, const PotentialOptions & options)
{
    if (n < side_condition_floor(id, r))
        throw Error(Errc::SideConditionUnmet, std::string(to_string(id)) + " needs n >= " +
                                                  std::to_string(side_condition_floor(id, r)));
    auto sequences = enumerate_graphic_sequences(n);

    ConditionAudit audit;
    audit.id = id;
    audit.r = r;
    audit.n = n;
    audit.graphic = sequences.size();

    std::vector<char> held(sequences.size(), 0), broken(sequences.size(), 0);
    parallel_for(sequences.size(), threads, [&](std::size_t i) {
        if (!hypothesis_check(id, sequences[i], r))
            return;
        held[i] = 1;
        if (!conclusion_check(id, sequences[i], r, options))
            broken[i] = 1;
    });
    for (std::size_t i = 0; i < sequences.size(); ++i) {
        audit.hypothesis_held += static_cast<std::uint64_t>(held[i]);
        if (broken[i])
            audit.counterexamples.push_back(sequences[i]);
    }
    return audit;
}

ProofPathAudit audit_proof_path(int r, int n, std::size_t samples, std::uint64_t seed, int threads)
{
    ProofPathAudit audit;
    audit.r = r;
    audit.n = n;
    audit.seed = seed;
    audit.samples = samples;

    const auto floor = sigma_formula(r, 1, 1, n, FormulaMode::Relaxed);
    auto sequences = sample_graphic_sequences(n, floor, samples, seed);
    std::vector<ProofPathResult> results(sequences.size());
    parallel_for(sequences.size(), threads, [&](std::size_t i) { results[i] = proof_path_check(sequences[i], r); });

    for (auto & result : results) {
        if (result.passed())
            ++audit.passed;
        else
            audit.failures.push_back(result);
        audit.special += result.special ? 1 : 0;
        audit.staircase += result.staircase_branch ? 1 : 0;
        audit.tail += result.tail_branch ? 1 : 0;
    }
    audit.special_case = proof_path_check(special_sequence(r, n), r);
    return audit;
}

} // namespace potgraphic
