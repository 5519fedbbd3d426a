#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace potgraphic {

class SimpleGraph;

/// A non-increasing sequence of vertex degrees (d1 >= d2 >= ... >= dn) with
/// every entry in [0, n-1]. Construction normalizes: unsorted input is
/// sorted, out-of-range entries are rejected.
class DegreeSequence {
public:
    DegreeSequence() = default;

    /// Throws Error{NegativeEntry} or Error{EntryExceedsNMinus1}.
    explicit DegreeSequence(std::vector<int> raw);

    std::size_t size() const noexcept { return entries_.size(); }
    bool empty() const noexcept { return entries_.empty(); }

    /// 0-based access.
    int operator[](std::size_t i) const noexcept { return entries_[i]; }

    /// 1-based access matching the usual d_i notation. Throws IndexOutOfRange.
    int d(std::size_t i) const;

    std::span<const int> entries() const noexcept { return entries_; }
    auto begin() const noexcept { return entries_.begin(); }
    auto end() const noexcept { return entries_.end(); }

    /// Sum of the entries.
    std::int64_t sigma() const noexcept { return sigma_; }

    bool has_zero_entry() const noexcept { return !entries_.empty() && entries_.back() == 0; }

    std::string to_string() const;

    auto operator<=>(const DegreeSequence & o) const { return entries_ <=> o.entries_; }
    bool operator==(const DegreeSequence & o) const { return entries_ == o.entries_; }

private:
    std::vector<int> entries_;
    std::int64_t sigma_ = 0;
};

DegreeSequence normalize(std::vector<int> raw);

/// Parses "3,3,2,2" (whitespace ignored) and normalizes. Throws ParseError
/// on malformed text.
DegreeSequence parse_sequence(std::string_view text);

/// x^y shorthand: the sequence made of `count` copies of each listed value,
/// e.g. repeated({{25, 1}, {3, 25}}).
DegreeSequence repeated(std::initializer_list<std::pair<int, int>> value_counts);

/// Erdos-Gallai slack for t = 1..n-1:
///   t(t-1) + sum_{j>t} min(t, d_j) - sum_{i<=t} d_i
std::vector<std::int64_t> erdos_gallai_margins(const DegreeSequence & seq);

/// Even sum and every Erdos-Gallai margin nonnegative.
bool is_graphic(const DegreeSequence & seq);

/// Residual sequence obtained by laying off d_k (k is 1-based), using the
/// positional Kleitman-Wang rule:
///   d_k >= k: decrement positions 1..k-1 and k+1..d_k+1
///   d_k <  k: decrement positions 1..d_k
/// then drop position k and re-sort. Throws IndexOutOfRange or
/// ResultNegative.
DegreeSequence layoff(const DegreeSequence & seq, std::size_t k);

/// Realization by repeated layoff at k=1. Vertex i (0-based) of the returned
/// graph has degree seq[i]. Empty optional when the sequence is not graphic.
std::optional<SimpleGraph> havel_hakimi_realize(const DegreeSequence & seq);

struct EnumerationOptions {
    std::optional<std::int64_t> min_sigma;
    bool exclude_zero_terms = false;
    /// Restrict to sequences with d1 equal to this value (sharding).
    std::optional<int> first_entry;
};

/// Visits every graphic sequence of length n in lexicographically decreasing
/// order, each exactly once. The visitor returns false to stop early.
void for_each_graphic_sequence(int n, const EnumerationOptions & options,
                               const std::function<bool(const DegreeSequence &)> & visit);

std::vector<DegreeSequence> enumerate_graphic_sequences(int n, const EnumerationOptions & options = {});

} // namespace potgraphic
