#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace potgraphic {

// Dynamic bitset over vertex indices 0..size()-1.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int size) : size_(size), words_((size + 63) / 64, 0) {}

    int size() const noexcept { return size_; }

    void set(int v) noexcept { words_[v >> 6] |= bit(v); }
    void reset(int v) noexcept { words_[v >> 6] &= ~bit(v); }
    bool test(int v) const noexcept { return (words_[v >> 6] & bit(v)) != 0; }

    void set_all() noexcept
    {
        for (auto & w : words_)
            w = ~std::uint64_t{0};
        trim();
    }

    int count() const noexcept
    {
        int c = 0;
        for (auto w : words_)
            c += std::popcount(w);
        return c;
    }

    bool any() const noexcept
    {
        for (auto w : words_)
            if (w)
                return true;
        return false;
    }

    // Lowest member, or -1 when empty.
    int first() const noexcept
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i])
                return static_cast<int>(i * 64) + std::countr_zero(words_[i]);
        return -1;
    }

    template <typename Fn>
    void for_each(Fn && fn) const
    {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            auto w = words_[i];
            while (w) {
                int b = std::countr_zero(w);
                fn(static_cast<int>(i * 64) + b);
                w &= w - 1;
            }
        }
    }

    VertexSet & operator&=(const VertexSet & o) noexcept
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= o.words_[i];
        return *this;
    }

    VertexSet & operator|=(const VertexSet & o) noexcept
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] |= o.words_[i];
        return *this;
    }

    // this &= ~o
    VertexSet & subtract(const VertexSet & o) noexcept
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= ~o.words_[i];
        return *this;
    }

    bool operator==(const VertexSet &) const = default;

private:
    static constexpr std::uint64_t bit(int v) noexcept { return std::uint64_t{1} << (v & 63); }

    void trim() noexcept
    {
        if (size_ % 64 && !words_.empty())
            words_.back() &= (std::uint64_t{1} << (size_ % 64)) - 1;
    }

    int size_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace potgraphic
