#pragma once

#include "potgraphic/graph.hpp"
#include "potgraphic/sequence.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace potgraphic {

/// Node counter shared by the exact searches. A zero limit means unbounded;
/// exceeding a nonzero limit throws Error{WorkBoundExceeded}.
struct SearchBudget {
    std::uint64_t limit = 0;
    std::uint64_t used = 0;

    void charge(std::uint64_t nodes = 1);
};

/// Finds a graph whose vertex i has degree seq[i] and which contains every
/// forced edge (0-based labels aligned with the sorted positions). Exact:
/// returns nullopt only when no such graph exists. Throws DemandExceeded
/// when the forced edges alone overshoot a demand, PreconditionUnmet above
/// 64 vertices.
std::optional<SimpleGraph> complete_with_forced_edges(const DegreeSequence & seq, std::span<const Edge> forced,
                                                      SearchBudget * budget = nullptr);

/// Visits every distinct labeled completion (vertex i has degree seq[i],
/// forced edges present). The visitor returns false to stop.
void for_each_completion(const DegreeSequence & seq, std::span<const Edge> forced,
                         const std::function<bool(const SimpleGraph &)> & visit, SearchBudget * budget = nullptr);

enum class TiePolicy {
    /// Place the pattern on positions 1..|H|. Positions of equal degree are
    /// interchangeable, so this covers every top-degree position set.
    Canonical,
    /// Try every position set whose degree multiset equals the top-|H|
    /// multiset.
    AllTiedSets,
};

struct PotentialOptions {
    TiePolicy ties = TiePolicy::Canonical;
    /// Check the Havel-Hakimi realization for the pattern before searching.
    bool realization_probe = true;
    std::uint64_t node_limit = 0;
};

struct PotentialDecision {
    bool verdict = false;
    bool not_graphic = false;
    std::optional<SimpleGraph> witness;
    std::optional<Embedding> embedding;
    std::uint64_t nodes = 0;
};

/// Exact "some realization of seq contains pattern" test. Non-graphic input
/// gives verdict false with not_graphic set. Throws PreconditionUnmet when
/// the pattern has more vertices than the sequence.
PotentialDecision is_potentially_subgraph(const DegreeSequence & seq, const SimpleGraph & pattern,
                                          const PotentialOptions & options = {});

/// Exact test for a realization whose r+1 largest-degree vertices induce a
/// clique.
PotentialDecision is_potentially_clique_on_top(const DegreeSequence & seq, int r,
                                               const PotentialOptions & options = {});

struct PlacedRealization {
    SimpleGraph graph;
    Embedding embedding;
};

/// Realization with the pattern on the positions of d_1..d_|H|. When the
/// pattern is a clique minus one edge the missing edge is put on the last
/// two of those positions. Throws NotPotential when seq is not potentially
/// pattern-graphic; nullopt means the top placement failed although some
/// other placement succeeds.
std::optional<PlacedRealization> realization_with_pattern_on_top(const DegreeSequence & seq,
                                                                 const SimpleGraph & pattern,
                                                                 const PotentialOptions & options = {});

/// Imported sufficient conditions, each a degree hypothesis with a
/// "potentially ..." conclusion.
enum class ConditionId {
    Thm21,   // d_{r+1} >= r, d_i >= 2r-i (i < r)           => clique on top
    Thm22,   // d_{r+1} >= r, d_{2r+2} >= r-1                => clique on top
    Thm23,   // d_{r+1} >= r-1, d_i >= 2r-i (i < r)          => K_{r+1}-e
    Thm24,   // d_{r-1} >= r, d_{2r+2} >= r-1                => K_{r+1}-e
    Lemma22, // d_r >= r-1, d_{r+1} >= r-2, d_i >= 2r-i (i <= r-2) => K_{r+1}-P_2
    Lemma23, // d_{r-2} >= r, d_{2r+2} >= r-1                => K_{r+1}-P_2
};

std::string_view to_string(ConditionId id) noexcept;
/// Accepts "thm2.1" .. "thm2.4", "lemma2.2", "lemma2.3". Throws ParseError.
ConditionId parse_condition_id(std::string_view text);

/// Smallest n the statement is made for (r+1 or 2r+2).
int side_condition_floor(ConditionId id, int r) noexcept;

/// Throws SideConditionUnmet when n is below the floor, PreconditionUnmet
/// for non-graphic input, ConstraintViolation for r out of range.
bool hypothesis_check(ConditionId id, const DegreeSequence & seq, int r);

/// Evaluates the statement's conclusion with the exact engine.
bool conclusion_check(ConditionId id, const DegreeSequence & seq, int r, const PotentialOptions & options = {});

/// The pattern a conclusion refers to (clique statements use K_{r+1}).
SimpleGraph conclusion_pattern(ConditionId id, int r);

} // namespace potgraphic
