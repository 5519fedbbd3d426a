#include "potgraphic/graph.hpp"

#include "potgraphic/error.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

namespace potgraphic {

SimpleGraph::SimpleGraph(int order)
{
    if (order < 0)
        throw Error(Errc::InvalidGraph, "negative vertex count");
    rows_.assign(static_cast<std::size_t>(order), VertexSet(order));
}

void SimpleGraph::check_vertex(int v) const
{
    if (v < 0 || v >= order())
        throw Error(Errc::InvalidGraph, "vertex " + std::to_string(v) + " outside 0.." + std::to_string(order() - 1));
}

void SimpleGraph::add_edge(int u, int v)
{
    check_vertex(u);
    check_vertex(v);
    if (u == v)
        throw Error(Errc::InvalidGraph, "self-loop at vertex " + std::to_string(u));
    if (rows_[u].test(v))
        return;
    rows_[u].set(v);
    rows_[v].set(u);
    ++edge_count_;
}

void SimpleGraph::remove_edge(int u, int v)
{
    check_vertex(u);
    check_vertex(v);
    if (!rows_[u].test(v))
        return;
    rows_[u].reset(v);
    rows_[v].reset(u);
    --edge_count_;
}

std::vector<Edge> SimpleGraph::edges() const
{
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(edge_count_));
    for (int u = 0; u < order(); ++u)
        rows_[u].for_each([&](int v) {
            if (u < v)
                out.emplace_back(u, v);
        });
    return out;
}

std::vector<int> SimpleGraph::degrees() const
{
    std::vector<int> out;
    out.reserve(rows_.size());
    for (const auto & row : rows_)
        out.push_back(row.count());
    return out;
}

SimpleGraph empty_graph(int order)
{
    return SimpleGraph(order);
}

SimpleGraph complete(int order)
{
    SimpleGraph g(order);
    for (int u = 0; u < order; ++u)
        for (int v = u + 1; v < order; ++v)
            g.add_edge(u, v);
    return g;
}

SimpleGraph path_graph(int k)
{
    if (k < 0)
        throw Error(Errc::InvalidGraph, "path length must be nonnegative");
    SimpleGraph g(k + 1);
    for (int v = 0; v < k; ++v)
        g.add_edge(v, v + 1);
    return g;
}

SimpleGraph cycle_graph(int k)
{
    if (k < 3)
        throw Error(Errc::InvalidGraph, "a cycle needs at least 3 vertices");
    SimpleGraph g(k);
    for (int v = 0; v < k; ++v)
        g.add_edge(v, (v + 1) % k);
    return g;
}

SimpleGraph matching(int p)
{
    SimpleGraph g(2 * p);
    for (int i = 0; i < p; ++i)
        g.add_edge(2 * i, 2 * i + 1);
    return g;
}

SimpleGraph complement(const SimpleGraph & g)
{
    SimpleGraph out(g.order());
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (!g.adjacent(u, v))
                out.add_edge(u, v);
    return out;
}

SimpleGraph disjoint_union(const SimpleGraph & g, const SimpleGraph & h)
{
    SimpleGraph out(g.order() + h.order());
    for (auto [u, v] : g.edges())
        out.add_edge(u, v);
    for (auto [u, v] : h.edges())
        out.add_edge(u + g.order(), v + g.order());
    return out;
}

SimpleGraph join(const SimpleGraph & g, const SimpleGraph & h)
{
    auto out = disjoint_union(g, h);
    for (int u = 0; u < g.order(); ++u)
        for (int v = 0; v < h.order(); ++v)
            out.add_edge(u, g.order() + v);
    return out;
}

DegreeSequence degree_sequence(const SimpleGraph & g)
{
    return DegreeSequence(g.degrees());
}

namespace {

class EmbeddingSearch {
public:
    EmbeddingSearch(const SimpleGraph & host, const SimpleGraph & pattern) :
        host_(host), pattern_(pattern), phi_(static_cast<std::size_t>(pattern.order()), -1),
        used_(host.order())
    {
        order_.resize(static_cast<std::size_t>(pattern.order()));
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(),
                         [&](int a, int b) { return pattern.degree(a) > pattern.degree(b); });
    }

    bool run() { return extend(0); }

    Embedding result() const { return phi_; }

private:
    bool extend(std::size_t depth)
    {
        if (depth == order_.size())
            return true;
        const int u = order_[depth];
        const int need = pattern_.degree(u);

        VertexSet candidates(host_.order());
        candidates.set_all();
        candidates.subtract(used_);
        pattern_.neighbours(u).for_each([&](int w) {
            if (phi_[static_cast<std::size_t>(w)] >= 0)
                candidates &= host_.neighbours(phi_[static_cast<std::size_t>(w)]);
        });

        bool found = false;
        candidates.for_each([&](int v) {
            if (found || host_.degree(v) < need)
                return;
            phi_[static_cast<std::size_t>(u)] = v;
            used_.set(v);
            if (extend(depth + 1))
                found = true;
            else {
                used_.reset(v);
                phi_[static_cast<std::size_t>(u)] = -1;
            }
        });
        return found;
    }

    const SimpleGraph & host_;
    const SimpleGraph & pattern_;
    std::vector<int> order_;
    Embedding phi_;
    VertexSet used_;
};

} // namespace

std::optional<Embedding> contains_subgraph(const SimpleGraph & host, const SimpleGraph & pattern)
{
    if (pattern.order() > host.order() || pattern.size() > host.size())
        return std::nullopt;
    EmbeddingSearch search(host, pattern);
    if (!search.run())
        return std::nullopt;
    return search.result();
}

bool is_embedding(const SimpleGraph & host, const SimpleGraph & pattern, const Embedding & phi)
{
    if (static_cast<int>(phi.size()) != pattern.order())
        return false;
    std::vector<bool> seen(static_cast<std::size_t>(host.order()), false);
    for (int v : phi) {
        if (v < 0 || v >= host.order() || seen[static_cast<std::size_t>(v)])
            return false;
        seen[static_cast<std::size_t>(v)] = true;
    }
    for (auto [a, b] : pattern.edges())
        if (!host.adjacent(phi[static_cast<std::size_t>(a)], phi[static_cast<std::size_t>(b)]))
            return false;
    return true;
}

bool are_isomorphic(const SimpleGraph & g, const SimpleGraph & h)
{
    // an edge-preserving bijection between graphs of equal size is an isomorphism
    if (g.order() != h.order() || g.size() != h.size())
        return false;
    if (degree_sequence(g) != degree_sequence(h))
        return false;
    return contains_subgraph(g, h).has_value();
}

void PatternSpec::validate() const
{
    if (r < 2)
        throw Error(Errc::ConstraintViolation, "r must be at least 2, got " + std::to_string(r));
    if (k < 0 || t < 0)
        throw Error(Errc::ConstraintViolation, "k and t must be nonnegative");
    if (removed_vertices() > r + 1)
        throw Error(Errc::ConstraintViolation, "3k+2t = " + std::to_string(removed_vertices()) +
                                                   " exceeds r+1 = " + std::to_string(r + 1));
}

bool PatternSpec::in_theorem_range() const noexcept
{
    return r >= 4 && k >= 1 && t >= 0 && k + t >= 2 && removed_vertices() <= r + 1;
}

std::string PatternSpec::to_string() const
{
    return "K" + std::to_string(r + 1) + "-(" + std::to_string(k) + "P2+" + std::to_string(t) + "K2)";
}

SimpleGraph build_removed_pattern(const PatternSpec & spec)
{
    spec.validate();
    auto g = complete(spec.r + 1);
    // layout on the top vertices: t edge pairs, then k path end pairs, then k path centres
    const int base = spec.r + 1 - spec.removed_vertices();
    for (int j = 0; j < spec.t; ++j)
        g.remove_edge(base + 2 * j, base + 2 * j + 1);
    const int ends = base + 2 * spec.t;
    const int centres = ends + 2 * spec.k;
    for (int j = 0; j < spec.k; ++j) {
        g.remove_edge(ends + 2 * j, centres + j);
        g.remove_edge(ends + 2 * j + 1, centres + j);
    }
    return g;
}

SimpleGraph extremal_construction(int r, int n)
{
    if (r < 3)
        throw Error(Errc::ConstraintViolation, "extremal construction needs r >= 3");
    if (n < r + 1)
        throw Error(Errc::ConstraintViolation, "extremal construction needs n >= r+1");
    return join(complete(r - 2), empty_graph(n - r + 2));
}

SimpleGraph read_graph(std::istream & in)
{
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        lines.push_back(line);
    }
    if (lines.empty())
        throw Error(Errc::ParseError, "graph file has no header line");

    auto read_pair = [](const std::string & text, long long & a, long long & b) {
        std::istringstream ss(text);
        std::string rest;
        if (!(ss >> a >> b) || (ss >> rest))
            throw Error(Errc::ParseError, "expected two integers in '" + text + "'");
    };

    long long n = 0, m = 0;
    read_pair(lines[0], n, m);
    if (n < 0 || m < 0)
        throw Error(Errc::ParseError, "negative graph header");
    if (static_cast<long long>(lines.size()) - 1 != m)
        throw Error(Errc::ParseError, "header announces " + std::to_string(m) + " edges, found " +
                                          std::to_string(lines.size() - 1));

    SimpleGraph g(static_cast<int>(n));
    for (std::size_t i = 1; i < lines.size(); ++i) {
        long long u = 0, v = 0;
        read_pair(lines[i], u, v);
        if (u < 1 || v < 1 || u > n || v > n)
            throw Error(Errc::InvalidGraph, "edge '" + lines[i] + "' outside 1.." + std::to_string(n));
        if (u == v)
            throw Error(Errc::InvalidGraph, "self-loop '" + lines[i] + "'");
        if (g.adjacent(static_cast<int>(u - 1), static_cast<int>(v - 1)))
            throw Error(Errc::InvalidGraph, "duplicate edge '" + lines[i] + "'");
        g.add_edge(static_cast<int>(u - 1), static_cast<int>(v - 1));
    }
    return g;
}

SimpleGraph parse_graph(const std::string & text)
{
    std::istringstream in(text);
    return read_graph(in);
}

void write_graph(std::ostream & out, const SimpleGraph & g)
{
    out << g.order() << ' ' << g.size() << '\n';
    for (auto [u, v] : g.edges())
        out << u + 1 << ' ' << v + 1 << '\n';
}

std::string format_graph(const SimpleGraph & g)
{
    std::ostringstream out;
    write_graph(out, g);
    return out.str();
}

} // namespace potgraphic
