#include "potgraphic/oracle.hpp"

#include "potgraphic/error.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace potgraphic::oracle {

namespace {

void require_small(int n)
{
    if (n < 1 || n > max_order)
        throw Error(Errc::WorkBoundExceeded, "exhaustive oracle supports 1.." + std::to_string(max_order) + " vertices");
}

std::vector<Edge> vertex_pairs(int n)
{
    std::vector<Edge> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            pairs.emplace_back(u, v);
    return pairs;
}

} // namespace

void for_each_labeled_graph(int n, const std::function<void(const SimpleGraph &)> & visit)
{
    require_small(n);
    const auto pairs = vertex_pairs(n);
    const std::uint64_t total = std::uint64_t{1} << pairs.size();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        SimpleGraph g(n);
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if (mask >> i & 1)
                g.add_edge(pairs[i].first, pairs[i].second);
        visit(g);
    }
}

std::set<DegreeSequence> realizable_sequences(int n)
{
    require_small(n);
    const auto pairs = vertex_pairs(n);
    const std::uint64_t total = std::uint64_t{1} << pairs.size();
    std::set<DegreeSequence> out;
    std::vector<int> degrees(static_cast<std::size_t>(n));
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        std::fill(degrees.begin(), degrees.end(), 0);
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if (mask >> i & 1) {
                ++degrees[static_cast<std::size_t>(pairs[i].first)];
                ++degrees[static_cast<std::size_t>(pairs[i].second)];
            }
        out.insert(DegreeSequence(degrees));
    }
    return out;
}

std::vector<DegreeSequence> all_bounded_sequences(int n)
{
    std::vector<DegreeSequence> out;
    std::vector<int> current;
    std::function<void(int)> extend = [&](int cap) {
        if (static_cast<int>(current.size()) == n) {
            out.emplace_back(current);
            return;
        }
        for (int v = cap; v >= 0; --v) {
            current.push_back(v);
            extend(v);
            current.pop_back();
        }
    };
    extend(n - 1);
    return out;
}

std::map<DegreeSequence, bool> potential_by_enumeration(int n, const SimpleGraph & pattern)
{
    std::map<DegreeSequence, bool> out;
    for_each_labeled_graph(n, [&](const SimpleGraph & g) {
        auto [it, inserted] = out.try_emplace(degree_sequence(g), false);
        if (!it->second && contains_subgraph(g, pattern))
            it->second = true;
    });
    return out;
}

Audit audit_sequences(int n)
{
    require_small(n);
    Audit audit;
    audit.n = n;
    const auto realizable = realizable_sequences(n);
    audit.realizable = realizable.size();

    for (const auto & seq : all_bounded_sequences(n)) {
        ++audit.sequences;
        const bool graphic = is_graphic(seq);
        if (graphic != realizable.contains(seq)) {
            ++audit.graphic_mismatches;
            audit.details.push_back("is_graphic disagrees with enumeration on " + seq.to_string());
        }
        for (std::size_t k = 1; k <= seq.size(); ++k) {
            bool residual_graphic = false;
            try {
                residual_graphic = is_graphic(layoff(seq, k));
            }
            catch (const Error & e) {
                if (e.code() != Errc::ResultNegative && e.code() != Errc::EntryExceedsNMinus1)
                    throw;
            }
            if (residual_graphic != graphic) {
                ++audit.layoff_violations;
                audit.details.push_back("layoff at k=" + std::to_string(k) + " changes graphicality of " +
                                        seq.to_string());
            }
        }
    }

    const auto listed = enumerate_graphic_sequences(n);
    audit.enumerated = listed.size();
    std::set<DegreeSequence> listed_set(listed.begin(), listed.end());
    if (listed_set.size() != listed.size() || listed_set != realizable) {
        ++audit.enumeration_mismatches;
        audit.details.push_back("enumerate_graphic_sequences differs from enumeration at n=" + std::to_string(n));
    }
    return audit;
}

} // namespace potgraphic::oracle
