#include "potgraphic/sequence.hpp"

#include "potgraphic/error.hpp"
#include "potgraphic/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <functional>
#include <numeric>

namespace potgraphic {

DegreeSequence::DegreeSequence(std::vector<int> raw) : entries_(std::move(raw))
{
    const auto n = static_cast<int>(entries_.size());
    for (int d : entries_) {
        if (d < 0)
            throw Error(Errc::NegativeEntry, "degree " + std::to_string(d) + " is negative");
        if (d > n - 1)
            throw Error(Errc::EntryExceedsNMinus1,
                        "degree " + std::to_string(d) + " exceeds n-1 = " + std::to_string(n - 1));
    }
    std::sort(entries_.begin(), entries_.end(), std::greater<>());
    sigma_ = std::accumulate(entries_.begin(), entries_.end(), std::int64_t{0});
}

int DegreeSequence::d(std::size_t i) const
{
    if (i < 1 || i > entries_.size())
        throw Error(Errc::IndexOutOfRange,
                    "index " + std::to_string(i) + " outside 1.." + std::to_string(entries_.size()));
    return entries_[i - 1];
}

std::string DegreeSequence::to_string() const
{
    std::string out;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(entries_[i]);
    }
    return out;
}

DegreeSequence normalize(std::vector<int> raw)
{
    return DegreeSequence(std::move(raw));
}

DegreeSequence parse_sequence(std::string_view text)
{
    std::string compact;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c)))
            compact += c;
    if (compact.empty())
        throw Error(Errc::ParseError, "empty sequence");

    std::vector<int> raw;
    std::size_t pos = 0;
    while (true) {
        auto comma = compact.find(',', pos);
        auto token = std::string_view(compact).substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        int value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size())
            throw Error(Errc::ParseError, "bad sequence entry '" + std::string(token) + "'");
        raw.push_back(value);
        if (comma == std::string::npos)
            break;
        pos = comma + 1;
    }
    return normalize(std::move(raw));
}

DegreeSequence repeated(std::initializer_list<std::pair<int, int>> value_counts)
{
    std::vector<int> raw;
    for (auto [value, count] : value_counts)
        raw.insert(raw.end(), static_cast<std::size_t>(count), value);
    return normalize(std::move(raw));
}

std::vector<std::int64_t> erdos_gallai_margins(const DegreeSequence & seq)
{
    const auto n = static_cast<std::int64_t>(seq.size());
    std::vector<std::int64_t> margins;
    if (n < 2)
        return margins;
    margins.reserve(static_cast<std::size_t>(n - 1));

    std::int64_t prefix = 0;
    for (std::int64_t t = 1; t <= n - 1; ++t) {
        prefix += seq[static_cast<std::size_t>(t - 1)];
        std::int64_t tail = 0;
        for (std::int64_t j = t; j < n; ++j)
            tail += std::min<std::int64_t>(t, seq[static_cast<std::size_t>(j)]);
        margins.push_back(t * (t - 1) + tail - prefix);
    }
    return margins;
}

bool is_graphic(const DegreeSequence & seq)
{
    if (seq.sigma() % 2 != 0)
        return false;
    auto margins = erdos_gallai_margins(seq);
    return std::all_of(margins.begin(), margins.end(), [](auto m) { return m >= 0; });
}

DegreeSequence layoff(const DegreeSequence & seq, std::size_t k)
{
    const auto n = seq.size();
    if (k < 1 || k > n)
        throw Error(Errc::IndexOutOfRange, "layoff index " + std::to_string(k) + " outside 1.." + std::to_string(n));

    std::vector<int> work(seq.begin(), seq.end());
    const auto dk = static_cast<std::size_t>(work[k - 1]);
    auto decrement = [&](std::size_t first, std::size_t last) {
        for (std::size_t i = first; i <= last; ++i) {
            if (--work[i - 1] < 0)
                throw Error(Errc::ResultNegative,
                            "laying off d_" + std::to_string(k) + " from " + seq.to_string() + " drives d_" +
                                std::to_string(i) + " below zero");
        }
    };

    if (dk >= k) {
        decrement(1, k - 1);
        decrement(k + 1, dk + 1);
    }
    else {
        decrement(1, dk);
    }
    work.erase(work.begin() + static_cast<std::ptrdiff_t>(k - 1));
    return normalize(std::move(work));
}

std::optional<SimpleGraph> havel_hakimi_realize(const DegreeSequence & seq)
{
    if (!is_graphic(seq))
        return std::nullopt;

    const int n = static_cast<int>(seq.size());
    SimpleGraph g(n);
    // (residual degree, vertex); ties broken by lower label first
    std::vector<std::pair<int, int>> pending;
    for (int v = 0; v < n; ++v)
        pending.emplace_back(seq[static_cast<std::size_t>(v)], v);

    auto order = [](const auto & a, const auto & b) {
        return a.first != b.first ? a.first > b.first : a.second < b.second;
    };
    while (!pending.empty()) {
        std::sort(pending.begin(), pending.end(), order);
        auto [demand, v] = pending.front();
        pending.erase(pending.begin());
        if (demand > static_cast<int>(pending.size()))
            return std::nullopt;
        for (int i = 0; i < demand; ++i) {
            if (--pending[static_cast<std::size_t>(i)].first < 0)
                return std::nullopt;
            g.add_edge(v, pending[static_cast<std::size_t>(i)].second);
        }
    }
    return g;
}

namespace {

struct Enumerator {
    int n;
    const EnumerationOptions & options;
    const std::function<bool(const DegreeSequence &)> & visit;
    std::vector<int> prefix;
    std::int64_t sum = 0;

    // Returns false once the visitor asks to stop.
    bool extend(int cap)
    {
        const auto t = static_cast<std::int64_t>(prefix.size());
        if (t == n) {
            if (sum % 2 != 0)
                return true;
            if (options.min_sigma && sum < *options.min_sigma)
                return true;
            DegreeSequence seq(prefix);
            if (!is_graphic(seq))
                return true;
            return visit(seq);
        }

        const int lowest = options.exclude_zero_terms ? 1 : 0;
        int highest = cap;
        if (t == 0 && options.first_entry)
            highest = std::min(highest, *options.first_entry);
        for (int value = highest; value >= lowest; --value) {
            if (t == 0 && options.first_entry && value != *options.first_entry)
                break;
            const std::int64_t remaining = n - t - 1;
            const std::int64_t new_sum = sum + value;
            // later entries are all <= value
            if (options.min_sigma && new_sum + remaining * value < *options.min_sigma)
                break;
            const std::int64_t len = t + 1;
            if (new_sum > len * (len - 1) + remaining * std::min<std::int64_t>(len, value))
                continue;

            prefix.push_back(value);
            sum = new_sum;
            const bool go_on = extend(value);
            sum -= value;
            prefix.pop_back();
            if (!go_on)
                return false;
        }
        return true;
    }
};

} // namespace

void for_each_graphic_sequence(int n, const EnumerationOptions & options,
                               const std::function<bool(const DegreeSequence &)> & visit)
{
    if (n < 1)
        throw Error(Errc::PreconditionUnmet, "sequence length must be at least 1");
    Enumerator e{n, options, visit, {}, 0};
    e.prefix.reserve(static_cast<std::size_t>(n));
    e.extend(n - 1);
}

std::vector<DegreeSequence> enumerate_graphic_sequences(int n, const EnumerationOptions & options)
{
    std::vector<DegreeSequence> out;
    for_each_graphic_sequence(n, options, [&](const DegreeSequence & s) {
        out.push_back(s);
        return true;
    });
    return out;
}

} // namespace potgraphic
