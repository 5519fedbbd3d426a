#pragma once

#include "potgraphic/sequence.hpp"
#include "potgraphic/vertex_set.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace potgraphic {

/// Undirected edge between two 0-based vertex indices.
using Edge = std::pair<int, int>;

/// Labeled simple undirected graph on vertices 0..order()-1, stored as one
/// adjacency bitset per vertex. External formats use 1-based labels.
class SimpleGraph {
public:
    SimpleGraph() = default;
    explicit SimpleGraph(int order);

    int order() const noexcept { return static_cast<int>(rows_.size()); }
    int size() const noexcept { return edge_count_; }

    /// Throws InvalidGraph on loops or out-of-range endpoints; adding an
    /// existing edge is a no-op.
    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    bool adjacent(int u, int v) const noexcept { return rows_[u].test(v); }
    int degree(int v) const noexcept { return rows_[v].count(); }
    const VertexSet & neighbours(int v) const noexcept { return rows_[v]; }

    /// Edges (u, v) with u < v in lexicographic order.
    std::vector<Edge> edges() const;

    /// Degrees indexed by vertex label (unsorted).
    std::vector<int> degrees() const;

    bool operator==(const SimpleGraph &) const = default;

private:
    void check_vertex(int v) const;

    std::vector<VertexSet> rows_;
    int edge_count_ = 0;
};

SimpleGraph empty_graph(int order);
SimpleGraph complete(int order);
/// P_k in the path-on-k+1-vertices convention.
SimpleGraph path_graph(int k);
/// C_k on k >= 3 vertices.
SimpleGraph cycle_graph(int k);
/// p vertex-disjoint copies of K_2.
SimpleGraph matching(int p);

SimpleGraph complement(const SimpleGraph & g);
/// h's labels are shifted above g's.
SimpleGraph disjoint_union(const SimpleGraph & g, const SimpleGraph & h);
/// Disjoint union plus every edge between the two vertex sets.
SimpleGraph join(const SimpleGraph & g, const SimpleGraph & h);

/// Sorted non-increasing degrees.
DegreeSequence degree_sequence(const SimpleGraph & g);

/// Embedding phi with phi[u] the host vertex of pattern vertex u.
using Embedding = std::vector<int>;

/// Ordinary (not induced) subgraph search: an injective map of V(pattern)
/// into V(host) carrying every pattern edge onto a host edge. Deterministic.
std::optional<Embedding> contains_subgraph(const SimpleGraph & host, const SimpleGraph & pattern);

/// Checks that `phi` is an injective edge-preserving map.
bool is_embedding(const SimpleGraph & host, const SimpleGraph & pattern, const Embedding & phi);

bool are_isomorphic(const SimpleGraph & g, const SimpleGraph & h);

/// K_{r+1} - (kP_2 u tK_2).
struct PatternSpec {
    int r = 2;
    int k = 0;
    int t = 0;

    /// Vertices consumed by the removed forest.
    int removed_vertices() const noexcept { return 3 * k + 2 * t; }

    /// Throws ConstraintViolation unless r >= 2, k, t >= 0 and r+1 >= 3k+2t.
    void validate() const;

    /// k >= 1, k+t >= 2, r+1 >= 3k+2t and r >= 4 (the range of the main
    /// threshold theorem, without the n floor).
    bool in_theorem_range() const noexcept;

    std::string to_string() const;

    bool operator==(const PatternSpec &) const = default;
};

/// K_{r+1} with the k paths and t edges removed on the highest-index
/// vertices, so pattern degrees are non-increasing in the label. For
/// (r, 0, 1) the missing edge is {r-1, r}.
SimpleGraph build_removed_pattern(const PatternSpec & spec);

/// K_{r-2} + complement(K_{n-r+2}). Requires r >= 3 and n >= r+1.
SimpleGraph extremal_construction(int r, int n);

/// Graph file: "n m", then m lines "u v" (1-based, u < v); '#' starts a
/// comment. Throws ParseError / InvalidGraph.
SimpleGraph read_graph(std::istream & in);
SimpleGraph parse_graph(const std::string & text);
void write_graph(std::ostream & out, const SimpleGraph & g);
std::string format_graph(const SimpleGraph & g);

} // namespace potgraphic
