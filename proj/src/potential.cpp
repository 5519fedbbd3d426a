#include "potgraphic/potential.hpp"

#include "potgraphic/error.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>
#include <set>
#include <vector>

namespace potgraphic {

void SearchBudget::charge(std::uint64_t nodes)
{
    used += nodes;
    if (limit && used > limit)
        throw Error(Errc::WorkBoundExceeded, "search exceeded " + std::to_string(limit) + " nodes");
}

namespace {

using Mask = std::uint64_t;
constexpr int max_completion_order = 64;

constexpr Mask bit(int v) noexcept { return Mask{1} << v; }

// Erdos-Gallai on an arbitrary multiset of residual demands.
bool residual_graphic(std::vector<int> & demands)
{
    std::sort(demands.begin(), demands.end(), std::greater<>());
    while (!demands.empty() && demands.back() == 0)
        demands.pop_back();
    const auto n = static_cast<std::int64_t>(demands.size());
    std::int64_t total = std::accumulate(demands.begin(), demands.end(), std::int64_t{0});
    if (total % 2)
        return false;
    std::int64_t prefix = 0;
    for (std::int64_t t = 1; t <= n; ++t) {
        prefix += demands[static_cast<std::size_t>(t - 1)];
        std::int64_t tail = 0;
        for (std::int64_t j = t; j < n; ++j)
            tail += std::min<std::int64_t>(t, demands[static_cast<std::size_t>(j)]);
        if (prefix > t * (t - 1) + tail)
            return false;
    }
    return true;
}

// Degree-constrained completion over the still-open vertex pairs. Each step
// closes the most constrained vertex by choosing its remaining neighbours
// among open pairs to vertices that still have demand.
class CompletionSearch {
public:
    enum class Mode { FirstSolution, AllSolutions };

    CompletionSearch(const DegreeSequence & seq, std::span<const Edge> forced, SearchBudget * budget, Mode mode,
                     std::function<bool(const SimpleGraph &)> visit) :
        n_(static_cast<int>(seq.size())), budget_(budget), mode_(mode), visit_(std::move(visit))
    {
        if (n_ > max_completion_order)
            throw Error(Errc::PreconditionUnmet,
                        "completion search supports at most " + std::to_string(max_completion_order) + " vertices");
        residual_.assign(seq.begin(), seq.end());
        open_.assign(static_cast<std::size_t>(n_), 0);
        adj_.assign(static_cast<std::size_t>(n_), 0);
        for (int u = 0; u < n_; ++u)
            for (int v = 0; v < n_; ++v)
                if (u != v)
                    open_[static_cast<std::size_t>(u)] |= bit(v);

        for (auto [u, v] : forced) {
            if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v)
                throw Error(Errc::InvalidGraph, "forced edge outside the vertex range or a loop");
            if (adj_[static_cast<std::size_t>(u)] & bit(v))
                continue;
            adj_[static_cast<std::size_t>(u)] |= bit(v);
            adj_[static_cast<std::size_t>(v)] |= bit(u);
            open_[static_cast<std::size_t>(u)] &= ~bit(v);
            open_[static_cast<std::size_t>(v)] &= ~bit(u);
            if (--residual_[static_cast<std::size_t>(u)] < 0 || --residual_[static_cast<std::size_t>(v)] < 0)
                throw Error(Errc::DemandExceeded, "forced edges exceed the degree demand of vertex " +
                                                      std::to_string(residual_[static_cast<std::size_t>(u)] < 0 ? u : v));
        }
        for (int v = 0; v < n_; ++v)
            if (residual_[static_cast<std::size_t>(v)] > 0)
                active_ |= bit(v);
    }

    // True when the search stopped early (a solution in FirstSolution mode,
    // or the visitor asking to stop).
    bool run() { return search(); }

private:
    struct Snapshot {
        std::vector<int> residual;
        std::vector<Mask> open;
        std::vector<Mask> adj;
        Mask active;
    };

    Snapshot save() const { return {residual_, open_, adj_, active_}; }
    void restore(Snapshot && s)
    {
        residual_ = std::move(s.residual);
        open_ = std::move(s.open);
        adj_ = std::move(s.adj);
        active_ = s.active;
    }

    std::size_t idx(int v) const noexcept { return static_cast<std::size_t>(v); }

    bool emit()
    {
        SimpleGraph g(n_);
        for (int u = 0; u < n_; ++u)
            for (Mask m = adj_[idx(u)] & (~Mask{0} << u << 1); m; m &= m - 1)
                g.add_edge(u, std::countr_zero(m));
        if (mode_ == Mode::FirstSolution) {
            solution_ = std::move(g);
            return true;
        }
        return !visit_(g);
    }

    bool search()
    {
        if (budget_)
            budget_->charge();
        if (!active_)
            return emit();

        // most constrained vertex: least slack between available partners and demand
        int chosen = -1;
        int best_slack = max_completion_order + 1;
        std::vector<int> demands;
        demands.reserve(idx(n_));
        for (Mask m = active_; m; m &= m - 1) {
            int v = std::countr_zero(m);
            int avail = std::popcount(open_[idx(v)] & active_);
            int slack = avail - residual_[idx(v)];
            if (slack < 0)
                return false;
            if (slack < best_slack) {
                best_slack = slack;
                chosen = v;
            }
            demands.push_back(residual_[idx(v)]);
        }
        if (!residual_graphic(demands))
            return false;

        const int v = chosen;
        const int need = residual_[idx(v)];
        std::vector<int> candidates;
        for (Mask m = open_[idx(v)] & active_; m; m &= m - 1)
            candidates.push_back(std::countr_zero(m));
        // larger residual first, the Havel-Hakimi preference
        std::stable_sort(candidates.begin(), candidates.end(),
                         [&](int a, int b) { return residual_[idx(a)] > residual_[idx(b)]; });

        if (mode_ == Mode::AllSolutions) {
            std::vector<int> pick;
            return choose_all(v, need, candidates, 0, pick);
        }

        // candidates with equal residual and equal open rows are interchangeable
        std::vector<std::vector<int>> classes;
        for (int c : candidates) {
            bool placed = false;
            for (auto & cls : classes) {
                int rep = cls.front();
                Mask others = ~(bit(v) | bit(c) | bit(rep));
                if (residual_[idx(rep)] == residual_[idx(c)] &&
                    (open_[idx(rep)] & others) == (open_[idx(c)] & others)) {
                    cls.push_back(c);
                    placed = true;
                    break;
                }
            }
            if (!placed)
                classes.push_back({c});
        }
        std::vector<int> pick;
        return choose_classes(v, need, classes, 0, pick);
    }

    bool close_and_recurse(int v, const std::vector<int> & pick)
    {
        auto snap = save();
        for (int u : pick) {
            adj_[idx(u)] |= bit(v);
            adj_[idx(v)] |= bit(u);
            if (--residual_[idx(u)] == 0)
                active_ &= ~bit(u);
        }
        for (Mask m = open_[idx(v)]; m; m &= m - 1)
            open_[idx(std::countr_zero(m))] &= ~bit(v);
        open_[idx(v)] = 0;
        residual_[idx(v)] = 0;
        active_ &= ~bit(v);
        bool stop = search();
        if (stop && mode_ == Mode::FirstSolution)
            return true;
        restore(std::move(snap));
        return stop;
    }

    bool choose_all(int v, int need, const std::vector<int> & candidates, std::size_t from, std::vector<int> & pick)
    {
        if (need == 0)
            return close_and_recurse(v, pick);
        if (candidates.size() - from < static_cast<std::size_t>(need))
            return false;
        for (std::size_t i = from; i + static_cast<std::size_t>(need) <= candidates.size(); ++i) {
            pick.push_back(candidates[i]);
            bool stop = choose_all(v, need - 1, candidates, i + 1, pick);
            pick.pop_back();
            if (stop)
                return true;
        }
        return false;
    }

    bool choose_classes(int v, int need, const std::vector<std::vector<int>> & classes, std::size_t cls,
                        std::vector<int> & pick)
    {
        if (need == 0)
            return close_and_recurse(v, pick);
        if (cls == classes.size())
            return false;
        std::size_t left = 0;
        for (std::size_t j = cls; j < classes.size(); ++j)
            left += classes[j].size();
        if (left < static_cast<std::size_t>(need))
            return false;

        const auto & members = classes[cls];
        int most = std::min<int>(need, static_cast<int>(members.size()));
        for (int take = most; take >= 0; --take) {
            for (int i = 0; i < take; ++i)
                pick.push_back(members[static_cast<std::size_t>(i)]);
            bool stop = choose_classes(v, need - take, classes, cls + 1, pick);
            pick.resize(pick.size() - static_cast<std::size_t>(take));
            if (stop)
                return true;
        }
        return false;
    }

public:
    std::optional<SimpleGraph> solution_;

private:
    int n_;
    SearchBudget * budget_;
    Mode mode_;
    std::function<bool(const SimpleGraph &)> visit_;
    std::vector<int> residual_;
    std::vector<Mask> open_;
    std::vector<Mask> adj_;
    Mask active_ = 0;
};

// All position sets of size h whose degree multiset equals that of positions
// 0..h-1. Positions above the boundary degree are always included.
std::vector<std::vector<int>> top_position_sets(const DegreeSequence & seq, int h, TiePolicy ties)
{
    std::vector<int> canonical(static_cast<std::size_t>(h));
    std::iota(canonical.begin(), canonical.end(), 0);
    if (ties == TiePolicy::Canonical || h == 0)
        return {canonical};

    const int boundary = seq[static_cast<std::size_t>(h - 1)];
    std::vector<int> fixed, tied;
    for (int i = 0; i < static_cast<int>(seq.size()); ++i) {
        if (seq[static_cast<std::size_t>(i)] > boundary)
            fixed.push_back(i);
        else if (seq[static_cast<std::size_t>(i)] == boundary)
            tied.push_back(i);
    }
    const int want = h - static_cast<int>(fixed.size());

    std::vector<std::vector<int>> out;
    std::vector<bool> select(tied.size(), false);
    std::fill(select.begin(), select.begin() + want, true);
    do {
        auto set = fixed;
        for (std::size_t i = 0; i < tied.size(); ++i)
            if (select[i])
                set.push_back(tied[i]);
        out.push_back(std::move(set));
    } while (std::prev_permutation(select.begin(), select.end()));
    return out;
}

// Maps pattern vertices onto a fixed position set and asks the completion
// search for each edge set the mapping forces.
class PlacementSearch {
public:
    PlacementSearch(const DegreeSequence & seq, const SimpleGraph & pattern, SearchBudget & budget) :
        seq_(seq), pattern_(pattern), budget_(budget)
    {
        order_.resize(static_cast<std::size_t>(pattern.order()));
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(),
                         [&](int a, int b) { return pattern.degree(a) > pattern.degree(b); });
        phi_.assign(static_cast<std::size_t>(pattern.order()), -1);
    }

    /// Restricts the placement so that pattern vertices a and b land on
    /// positions {p, q}.
    void pin_pair(int a, int b, int p, int q)
    {
        pin_ = {a, b, p, q};
    }

    bool run(const std::vector<int> & positions)
    {
        positions_ = positions;
        used_.assign(positions.size(), false);
        return assign(0);
    }

    SimpleGraph witness;
    Embedding embedding;

private:
    bool pin_allows(int u, int pos) const
    {
        if (!pin_)
            return true;
        auto [a, b, p, q] = *pin_;
        if (u == a || u == b)
            return pos == p || pos == q;
        return pos != p && pos != q;
    }

    bool assign(std::size_t depth)
    {
        if (depth == order_.size())
            return complete();
        const int u = order_[depth];
        for (std::size_t i = 0; i < positions_.size(); ++i) {
            if (used_[i])
                continue;
            const int pos = positions_[i];
            if (seq_[static_cast<std::size_t>(pos)] < pattern_.degree(u) || !pin_allows(u, pos))
                continue;
            budget_.charge();
            used_[i] = true;
            phi_[static_cast<std::size_t>(u)] = pos;
            if (assign(depth + 1))
                return true;
            phi_[static_cast<std::size_t>(u)] = -1;
            used_[i] = false;
        }
        return false;
    }

    bool complete()
    {
        std::vector<Edge> forced;
        for (auto [a, b] : pattern_.edges()) {
            int x = phi_[static_cast<std::size_t>(a)], y = phi_[static_cast<std::size_t>(b)];
            forced.emplace_back(std::min(x, y), std::max(x, y));
        }
        std::sort(forced.begin(), forced.end());
        if (!tried_.insert(forced).second)
            return false;
        std::optional<SimpleGraph> g;
        try {
            g = complete_with_forced_edges(seq_, forced, &budget_);
        }
        catch (const Error & e) {
            if (e.code() != Errc::DemandExceeded)
                throw;
        }
        if (!g)
            return false;
        witness = std::move(*g);
        embedding = phi_;
        return true;
    }

    const DegreeSequence & seq_;
    const SimpleGraph & pattern_;
    SearchBudget & budget_;
    std::vector<int> order_;
    std::vector<int> positions_;
    std::vector<bool> used_;
    Embedding phi_;
    std::set<std::vector<Edge>> tried_;
    std::optional<std::array<int, 4>> pin_;
};

void require_fits(const DegreeSequence & seq, int pattern_order)
{
    if (pattern_order > static_cast<int>(seq.size()))
        throw Error(Errc::PreconditionUnmet, "pattern has " + std::to_string(pattern_order) +
                                                 " vertices but the sequence only " + std::to_string(seq.size()));
}

// A clique minus exactly one edge; returns the missing pair.
std::optional<Edge> single_missing_edge(const SimpleGraph & pattern)
{
    const int h = pattern.order();
    if (h < 2 || pattern.size() != h * (h - 1) / 2 - 1)
        return std::nullopt;
    for (int u = 0; u < h; ++u)
        for (int v = u + 1; v < h; ++v)
            if (!pattern.adjacent(u, v))
                return Edge{u, v};
    return std::nullopt;
}

} // namespace

std::optional<SimpleGraph> complete_with_forced_edges(const DegreeSequence & seq, std::span<const Edge> forced,
                                                      SearchBudget * budget)
{
    CompletionSearch search(seq, forced, budget, CompletionSearch::Mode::FirstSolution, {});
    search.run();
    return std::move(search.solution_);
}

void for_each_completion(const DegreeSequence & seq, std::span<const Edge> forced,
                         const std::function<bool(const SimpleGraph &)> & visit, SearchBudget * budget)
{
    CompletionSearch search(seq, forced, budget, CompletionSearch::Mode::AllSolutions, visit);
    search.run();
}

PotentialDecision is_potentially_subgraph(const DegreeSequence & seq, const SimpleGraph & pattern,
                                          const PotentialOptions & options)
{
    require_fits(seq, pattern.order());
    PotentialDecision out;
    if (!is_graphic(seq)) {
        out.not_graphic = true;
        return out;
    }

    SearchBudget budget{options.node_limit, 0};
    if (options.realization_probe) {
        auto g = havel_hakimi_realize(seq);
        budget.charge();
        if (auto phi = contains_subgraph(*g, pattern)) {
            out.verdict = true;
            out.witness = std::move(g);
            out.embedding = std::move(phi);
            out.nodes = budget.used;
            return out;
        }
    }

    for (const auto & positions : top_position_sets(seq, pattern.order(), options.ties)) {
        PlacementSearch search(seq, pattern, budget);
        if (search.run(positions)) {
            out.verdict = true;
            out.witness = std::move(search.witness);
            out.embedding = std::move(search.embedding);
            break;
        }
    }
    out.nodes = budget.used;
    return out;
}

PotentialDecision is_potentially_clique_on_top(const DegreeSequence & seq, int r, const PotentialOptions & options)
{
    if (r < 1)
        throw Error(Errc::ConstraintViolation, "r must be positive");
    require_fits(seq, r + 1);
    PotentialDecision out;
    if (!is_graphic(seq)) {
        out.not_graphic = true;
        return out;
    }

    SearchBudget budget{options.node_limit, 0};
    for (const auto & positions : top_position_sets(seq, r + 1, options.ties)) {
        std::vector<Edge> forced;
        for (std::size_t i = 0; i < positions.size(); ++i)
            for (std::size_t j = i + 1; j < positions.size(); ++j)
                forced.emplace_back(positions[i], positions[j]);
        std::optional<SimpleGraph> g;
        try {
            g = complete_with_forced_edges(seq, forced, &budget);
        }
        catch (const Error & e) {
            if (e.code() != Errc::DemandExceeded)
                throw;
        }
        if (g) {
            out.verdict = true;
            out.witness = std::move(g);
            out.embedding = positions;
            break;
        }
    }
    out.nodes = budget.used;
    return out;
}

std::optional<PlacedRealization> realization_with_pattern_on_top(const DegreeSequence & seq,
                                                                 const SimpleGraph & pattern,
                                                                 const PotentialOptions & options)
{
    if (!is_potentially_subgraph(seq, pattern, options).verdict)
        throw Error(Errc::NotPotential, seq.to_string() + " is not potentially pattern-graphic");

    SearchBudget budget{options.node_limit, 0};
    PlacementSearch search(seq, pattern, budget);
    const int h = pattern.order();
    if (auto missing = single_missing_edge(pattern))
        search.pin_pair(missing->first, missing->second, h - 2, h - 1);

    std::vector<int> positions(static_cast<std::size_t>(h));
    std::iota(positions.begin(), positions.end(), 0);
    if (!search.run(positions))
        return std::nullopt;
    return PlacedRealization{std::move(search.witness), std::move(search.embedding)};
}

std::string_view to_string(ConditionId id) noexcept
{
    switch (id) {
    case ConditionId::Thm21: return "thm2.1";
    case ConditionId::Thm22: return "thm2.2";
    case ConditionId::Thm23: return "thm2.3";
    case ConditionId::Thm24: return "thm2.4";
    case ConditionId::Lemma22: return "lemma2.2";
    case ConditionId::Lemma23: return "lemma2.3";
    }
    return "?";
}

ConditionId parse_condition_id(std::string_view text)
{
    for (auto id : {ConditionId::Thm21, ConditionId::Thm22, ConditionId::Thm23, ConditionId::Thm24,
                    ConditionId::Lemma22, ConditionId::Lemma23})
        if (text == to_string(id))
            return id;
    throw Error(Errc::ParseError, "unknown condition id '" + std::string(text) + "'");
}

int side_condition_floor(ConditionId id, int r) noexcept
{
    switch (id) {
    case ConditionId::Thm22:
    case ConditionId::Thm24:
    case ConditionId::Lemma23: return 2 * r + 2;
    default: return r + 1;
    }
}

bool hypothesis_check(ConditionId id, const DegreeSequence & seq, int r)
{
    if (r < 2 || (id == ConditionId::Lemma23 && r < 3))
        throw Error(Errc::ConstraintViolation, "r = " + std::to_string(r) + " is too small for " +
                                                   std::string(to_string(id)));
    const int n = static_cast<int>(seq.size());
    if (n < side_condition_floor(id, r))
        throw Error(Errc::SideConditionUnmet, std::string(to_string(id)) + " needs n >= " +
                                                  std::to_string(side_condition_floor(id, r)) + ", got " +
                                                  std::to_string(n));
    if (!is_graphic(seq))
        throw Error(Errc::PreconditionUnmet, seq.to_string() + " is not graphic");

    auto d = [&](int i) { return seq.d(static_cast<std::size_t>(i)); };
    auto staircase = [&](int last) {
        for (int i = 1; i <= last; ++i)
            if (d(i) < 2 * r - i)
                return false;
        return true;
    };

    switch (id) {
    case ConditionId::Thm21: return d(r + 1) >= r && staircase(r - 1);
    case ConditionId::Thm22: return d(r + 1) >= r && d(2 * r + 2) >= r - 1;
    case ConditionId::Thm23: return d(r + 1) >= r - 1 && staircase(r - 1);
    case ConditionId::Thm24: return d(r - 1) >= r && d(2 * r + 2) >= r - 1;
    case ConditionId::Lemma22: return d(r) >= r - 1 && d(r + 1) >= r - 2 && staircase(r - 2);
    case ConditionId::Lemma23: return d(r - 2) >= r && d(2 * r + 2) >= r - 1;
    }
    return false;
}

SimpleGraph conclusion_pattern(ConditionId id, int r)
{
    switch (id) {
    case ConditionId::Thm21:
    case ConditionId::Thm22: return complete(r + 1);
    case ConditionId::Thm23:
    case ConditionId::Thm24: return build_removed_pattern({r, 0, 1});
    case ConditionId::Lemma22:
    case ConditionId::Lemma23: return build_removed_pattern({r, 1, 0});
    }
    return {};
}

bool conclusion_check(ConditionId id, const DegreeSequence & seq, int r, const PotentialOptions & options)
{
    const int n = static_cast<int>(seq.size());
    if (n < side_condition_floor(id, r))
        throw Error(Errc::SideConditionUnmet, std::string(to_string(id)) + " needs n >= " +
                                                  std::to_string(side_condition_floor(id, r)));
    switch (id) {
    case ConditionId::Thm21:
    case ConditionId::Thm22: return is_potentially_clique_on_top(seq, r, options).verdict;
    default: return is_potentially_subgraph(seq, conclusion_pattern(id, r), options).verdict;
    }
}

} // namespace potgraphic
