#pragma once

#include "potgraphic/graph.hpp"
#include "potgraphic/sequence.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <vector>

// Exhaustive references that never touch the Erdos-Gallai test or the
// completion search. Feasible up to 7 vertices (2^21 labeled graphs).
namespace potgraphic::oracle {

constexpr int max_order = 7;

/// Calls visit(g) for every labeled simple graph on n vertices.
void for_each_labeled_graph(int n, const std::function<void(const SimpleGraph &)> & visit);

/// Degree sequences of all labeled graphs on n vertices.
std::set<DegreeSequence> realizable_sequences(int n);

/// Every non-increasing sequence of length n with entries in [0, n-1].
std::vector<DegreeSequence> all_bounded_sequences(int n);

/// For every realizable sequence: does some labeled realization contain
/// the pattern?
std::map<DegreeSequence, bool> potential_by_enumeration(int n, const SimpleGraph & pattern);

struct Audit {
    int n = 0;
    std::uint64_t sequences = 0;
    std::uint64_t realizable = 0;
    std::uint64_t enumerated = 0;
    std::uint64_t graphic_mismatches = 0;
    std::uint64_t layoff_violations = 0;
    std::uint64_t enumeration_mismatches = 0;
    std::vector<std::string> details;

    bool passed() const noexcept
    {
        return graphic_mismatches == 0 && layoff_violations == 0 && enumeration_mismatches == 0;
    }
};

/// is_graphic vs enumeration, layoff equivalence at every k, and
/// enumerate_graphic_sequences vs enumeration, all at length n.
Audit audit_sequences(int n);

} // namespace potgraphic::oracle
