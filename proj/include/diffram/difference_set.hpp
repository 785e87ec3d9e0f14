#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <vector>

namespace diffram {

// Largest difference (or integer) a DifferenceSet can hold. Graphs are capped
// at kMaxVertices = kMaxDifference + 1 vertices.
inline constexpr int kMaxDifference = 127;
inline constexpr int kMaxVertices = kMaxDifference + 1;

/// Fixed-width bit vector over {1, ..., kMaxDifference}.
///
/// Bit 0 is never set. Membership is O(1), iteration visits members in
/// increasing order, and shifted_up() gives {d + s : d in D} in two word
/// operations, which is what the clique tests are built on.
class DifferenceSet {
public:
    DifferenceSet() = default;

    // Throws std::out_of_range for members outside [1, kMaxDifference].
    DifferenceSet(std::initializer_list<int> members);
    explicit DifferenceSet(const std::vector<int> & members);

    // {1, ..., top}; top may be 0.
    static auto range(int top) -> DifferenceSet;

    [[nodiscard]] auto contains(int d) const -> bool
    {
        if (d < 0 || d > kMaxDifference)
            return false;
        return (words_[d >> 6] >> (d & 63)) & 1U;
    }

    void insert(int d);
    void erase(int d);

    [[nodiscard]] auto empty() const -> bool { return (words_[0] | words_[1]) == 0; }
    [[nodiscard]] auto size() const -> int
    {
        return std::popcount(words_[0]) + std::popcount(words_[1]);
    }

    // Largest member, or 0 when empty.
    [[nodiscard]] auto max() const -> int
    {
        if (words_[1] != 0)
            return 127 - std::countl_zero(words_[1]);
        if (words_[0] != 0)
            return 63 - std::countl_zero(words_[0]);
        return 0;
    }

    // Smallest member >= from, or 0 if none.
    [[nodiscard]] auto next_from(int from) const -> int
    {
        if (from < 1)
            from = 1;
        if (from > kMaxDifference)
            return 0;
        int word = from >> 6;
        std::uint64_t bits = words_[word] & (~std::uint64_t{0} << (from & 63));
        while (true) {
            if (bits != 0)
                return word * 64 + std::countr_zero(bits);
            if (++word == 2)
                return 0;
            bits = words_[word];
        }
    }

    // {d + shift : d in *this}, members pushed past kMaxDifference are dropped.
    [[nodiscard]] auto shifted_up(int shift) const -> DifferenceSet
    {
        DifferenceSet out;
        if (shift <= 0) {
            out.words_ = words_;
        }
        else if (shift > kMaxDifference) {
            // everything shifts out
        }
        else if (shift >= 64) {
            out.words_[1] = words_[0] << (shift - 64);
        }
        else {
            out.words_[0] = words_[0] << shift;
            out.words_[1] = (words_[1] << shift) | (words_[0] >> (64 - shift));
        }
        return out;
    }

    // Members strictly greater than d.
    [[nodiscard]] auto above(int d) const -> DifferenceSet
    {
        DifferenceSet out;
        if (d < 0)
            return *this;
        if (d >= kMaxDifference)
            return out;
        const int start = d + 1;
        if (start >= 64) {
            out.words_[1] = words_[1] & (~std::uint64_t{0} << (start - 64));
        }
        else {
            out.words_[0] = words_[0] & (~std::uint64_t{0} << start);
            out.words_[1] = words_[1];
        }
        return out;
    }

    // Members less than or equal to d.
    [[nodiscard]] auto up_to(int d) const -> DifferenceSet
    {
        return *this - above(d);
    }

    [[nodiscard]] auto members() const -> std::vector<int>;

    friend auto operator&(const DifferenceSet & a, const DifferenceSet & b) -> DifferenceSet
    {
        DifferenceSet out;
        out.words_[0] = a.words_[0] & b.words_[0];
        out.words_[1] = a.words_[1] & b.words_[1];
        return out;
    }

    friend auto operator|(const DifferenceSet & a, const DifferenceSet & b) -> DifferenceSet
    {
        DifferenceSet out;
        out.words_[0] = a.words_[0] | b.words_[0];
        out.words_[1] = a.words_[1] | b.words_[1];
        return out;
    }

    // Members of a not in b.
    friend auto operator-(const DifferenceSet & a, const DifferenceSet & b) -> DifferenceSet
    {
        DifferenceSet out;
        out.words_[0] = a.words_[0] & ~b.words_[0];
        out.words_[1] = a.words_[1] & ~b.words_[1];
        return out;
    }

    friend auto operator==(const DifferenceSet &, const DifferenceSet &) -> bool = default;

    class iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = int;
        using difference_type = std::ptrdiff_t;
        using pointer = const int *;
        using reference = int;

        iterator() = default;
        iterator(const DifferenceSet * set, int current) : set_(set), current_(current) {}

        auto operator*() const -> int { return current_; }
        auto operator++() -> iterator &
        {
            current_ = set_->next_from(current_ + 1);
            return *this;
        }
        auto operator++(int) -> iterator
        {
            auto copy = *this;
            ++*this;
            return copy;
        }
        friend auto operator==(const iterator & a, const iterator & b) -> bool
        {
            return a.current_ == b.current_;
        }

    private:
        const DifferenceSet * set_ = nullptr;
        int current_ = 0;
    };

    [[nodiscard]] auto begin() const -> iterator { return {this, next_from(1)}; }
    [[nodiscard]] auto end() const -> iterator { return {this, 0}; }

private:
    std::array<std::uint64_t, 2> words_{};
};

} // namespace diffram
