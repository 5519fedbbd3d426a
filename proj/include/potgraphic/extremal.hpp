#pragma once

#include "potgraphic/graph.hpp"
#include "potgraphic/potential.hpp"
#include "potgraphic/sequence.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace potgraphic {

enum class FormulaMode {
    /// n >= 4r+10, r >= 4, r+1 >= 3k+2t, k+t >= 2, k >= 1, t >= 0.
    Strict,
    /// Any r >= 3, n >= r+1.
    Relaxed,
};

/// Constraints of the threshold theorem that (r, k, t, n) violates, in a
/// fixed order; empty when the theorem applies.
std::vector<std::string> theorem_range_violations(int r, int k, int t, int n);

/// (r-1)(2n-r) - 2(n-r). Throws ConstraintViolation when the mode's range
/// is not met.
std::int64_t sigma_formula(int r, int k, int t, int n, FormulaMode mode = FormulaMode::Strict);

/// (r-2)(n-1) + (r-2)(n-r+2) + 2, the degree sum of the extremal
/// construction plus two. Requires r >= 3, n >= r+1.
std::int64_t lower_bound_sum(int r, int n);

struct ThresholdCounts {
    std::uint64_t graphic = 0;   // graphic sequences in scope
    std::uint64_t decided = 0;   // sequences run through the exact engine
    std::uint64_t potential = 0; // of those, potentially pattern-graphic
};

struct ThresholdReport {
    std::string pattern;
    int n = 0;
    bool exclude_zero_terms = false;
    /// Smallest even l with every graphic sequence of sum >= l potentially
    /// pattern-graphic.
    std::int64_t threshold = 0;
    /// Non-potential sequences of sum threshold-2, sorted lexicographically.
    std::vector<DegreeSequence> extremal_sequences;
    ThresholdCounts counts;
    std::uint64_t search_nodes = 0;
    double elapsed_ms = 0;
};

struct BruteForceOptions {
    bool exclude_zero_terms = false;
    /// Upper bound on sequences visited plus search nodes; 0 disables.
    std::uint64_t work_bound = 10'000'000;
    int threads = 1;
    PotentialOptions potential;
};

/// Exact threshold by enumeration. Sequences are decided one sum level at a
/// time from the top; the first level holding a non-potential sequence fixes
/// the threshold. Throws WorkBoundExceeded.
ThresholdReport brute_force_sigma(const SimpleGraph & pattern, int n, const BruteForceOptions & options = {},
                                  std::string pattern_label = "custom");

struct LowerBoundReport {
    PatternSpec spec;
    int n = 0;
    DegreeSequence expected_sequence;
    DegreeSequence construction_sequence;
    std::int64_t construction_sigma = 0;
    std::int64_t bound = 0;
    bool sequence_matches = false;
    bool pattern_absent = false;
    bool sigma_matches = false;

    bool passed() const noexcept { return sequence_matches && pattern_absent && sigma_matches; }
};

/// Checks the extremal construction K_{r-2} + complement(K_{n-r+2}): its
/// degree sequence is ((n-1)^{r-2}, (r-2)^{n-r+2}), it does not contain the
/// pattern, and its sum is lower_bound_sum(r, n) - 2.
LowerBoundReport verify_lower_bound(const PatternSpec & spec, int n);

/// True iff the sequence is graphic and all of its realizations are
/// isomorphic. Throws WorkBoundExceeded above max_n vertices or when the
/// realization search exceeds node_limit.
bool unique_realization_check(const DegreeSequence & seq, int max_n = 10, std::uint64_t node_limit = 50'000'000);

/// ((n-1)^{r-3}, (r-1)^{n-r+3}).
DegreeSequence special_sequence(int r, int n);

struct ProofPathResult {
    DegreeSequence sequence;
    int r = 0;
    bool special = false;     // equals ((n-1)^{r-3}, (r-1)^{n-r+3})
    bool top_condition = false;    // d_{r-2} >= r
    bool middle_condition = false; // d_r >= r-1
    bool lower_condition = false;  // d_{r+1} >= r-2
    bool staircase_branch = false; // d_i >= 2r-i for i <= r-2
    bool tail_branch = false;      // d_{2r+2} >= r-1
    std::vector<std::string> violations;

    bool condition_i() const noexcept { return top_condition || special; }
    bool condition_iv() const noexcept { return staircase_branch || tail_branch; }
    bool passed() const noexcept { return violations.empty(); }
    /// "special", "staircase", "tail" or "staircase+tail".
    std::string branch() const;
};

/// Evaluates the degree conditions the threshold proof derives for a
/// graphic sequence with n >= 4r+10 and sum at least the formula value.
/// Violations are reported, never thrown. Throws PreconditionUnmet when the
/// inputs are outside that range.
ProofPathResult proof_path_check(const DegreeSequence & seq, int r);

/// Degree sequences of uniformly random m-edge labeled graphs, m uniform in
/// [ceil(min_sigma/2), n(n-1)/2]. Deterministic per seed. Throws
/// InfeasibleSigma when min_sigma > n(n-1).
std::vector<DegreeSequence> sample_graphic_sequences(int n, std::int64_t min_sigma, std::size_t count,
                                                     std::uint64_t seed);

struct ConditionAudit {
    ConditionId id = ConditionId::Thm21;
    int r = 0;
    int n = 0;
    std::uint64_t graphic = 0;
    std::uint64_t hypothesis_held = 0;
    std::vector<DegreeSequence> counterexamples;
    std::uint64_t search_nodes = 0;
};

/// Sweeps every graphic sequence of length n: hypothesis => conclusion.
ConditionAudit audit_condition(ConditionId id, int r, int n, int threads = 1, const PotentialOptions & options = {});

struct ProofPathAudit {
    int r = 0;
    int n = 0;
    std::uint64_t seed = 0;
    std::size_t samples = 0;
    std::size_t passed = 0;
    std::size_t special = 0;
    std::size_t staircase = 0;
    std::size_t tail = 0;
    std::vector<ProofPathResult> failures;
    ProofPathResult special_case;
};

/// Runs proof_path_check on `samples` seeded random sequences plus the
/// special sequence.
ProofPathAudit audit_proof_path(int r, int n, std::size_t samples, std::uint64_t seed, int threads = 1);

} // namespace potgraphic
