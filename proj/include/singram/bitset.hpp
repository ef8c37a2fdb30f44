#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>

namespace singram {

/// Fixed-capacity bitset with fast iteration over set bits.
template <std::size_t Bits>
class BitSet
{
public:
    static constexpr std::size_t words = (Bits + 63) / 64;

    constexpr BitSet() = default;

    constexpr auto test(int i) const -> bool
    {
        return (w_[static_cast<std::size_t>(i) >> 6] >> (i & 63)) & 1U;
    }

    constexpr auto set(int i) -> void
    {
        w_[static_cast<std::size_t>(i) >> 6] |= std::uint64_t{1} << (i & 63);
    }

    constexpr auto reset(int i) -> void
    {
        w_[static_cast<std::size_t>(i) >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }

    constexpr auto assign(int i, bool value) -> void
    {
        if (value)
            set(i);
        else
            reset(i);
    }

    constexpr auto count() const -> int
    {
        int c = 0;
        for (auto w : w_)
            c += std::popcount(w);
        return c;
    }

    constexpr auto none() const -> bool
    {
        for (auto w : w_)
            if (w)
                return false;
        return true;
    }

    constexpr auto any() const -> bool { return ! none(); }

    /// Index of the lowest set bit, or -1.
    constexpr auto first() const -> int
    {
        for (std::size_t k = 0; k < words; ++k)
            if (w_[k])
                return static_cast<int>(k * 64) + std::countr_zero(w_[k]);
        return -1;
    }

    /// Lowest set bit strictly greater than i, or -1.
    constexpr auto next(int i) const -> int
    {
        ++i;
        if (i >= static_cast<int>(Bits))
            return -1;
        auto k = static_cast<std::size_t>(i) >> 6;
        auto w = w_[k] & (~std::uint64_t{0} << (i & 63));
        while (true) {
            if (w)
                return static_cast<int>(k * 64) + std::countr_zero(w);
            if (++k == words)
                return -1;
            w = w_[k];
        }
    }

    /// Sets bits [0, n).
    static constexpr auto prefix(int n) -> BitSet
    {
        BitSet b;
        for (std::size_t k = 0; k < words && n > 0; ++k, n -= 64)
            b.w_[k] = n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
        return b;
    }

    constexpr auto operator&=(const BitSet & o) -> BitSet &
    {
        for (std::size_t k = 0; k < words; ++k)
            w_[k] &= o.w_[k];
        return *this;
    }

    constexpr auto operator|=(const BitSet & o) -> BitSet &
    {
        for (std::size_t k = 0; k < words; ++k)
            w_[k] |= o.w_[k];
        return *this;
    }

    /// this := this & ~o
    constexpr auto remove(const BitSet & o) -> BitSet &
    {
        for (std::size_t k = 0; k < words; ++k)
            w_[k] &= ~o.w_[k];
        return *this;
    }

    friend constexpr auto operator&(BitSet a, const BitSet & b) -> BitSet { return a &= b; }
    friend constexpr auto operator|(BitSet a, const BitSet & b) -> BitSet { return a |= b; }
    friend constexpr auto operator==(const BitSet &, const BitSet &) -> bool = default;

    constexpr auto word(std::size_t k) const -> std::uint64_t { return w_[k]; }

    template <typename F>
    constexpr auto for_each(F && f) const -> void
    {
        for (std::size_t k = 0; k < words; ++k) {
            auto w = w_[k];
            while (w) {
                f(static_cast<int>(k * 64) + std::countr_zero(w));
                w &= w - 1;
            }
        }
    }

private:
    std::array<std::uint64_t, words> w_{};
};

} // namespace singram
