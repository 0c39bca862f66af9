#pragma once

#include <bit>
#include <cstdint>
#include <string>

#include "rainbowdom/errors.hpp"

namespace rainbowdom {

// Colors are 1-based (1..k) with k <= 8, so a subset of colors fits in one byte.
inline constexpr int kMaxColors = 8;

inline void require_color_count(int k)
{
    if (k < 1 || k > kMaxColors)
        throw DomainError("color count must be between 1 and " + std::to_string(kMaxColors) +
                          ", got " + std::to_string(k));
}

class ColorSet {
public:
    constexpr ColorSet() = default;

    static constexpr ColorSet of_bits(std::uint8_t bits) { return ColorSet(bits); }

    // The full palette {1..k}.
    static ColorSet all(int k)
    {
        require_color_count(k);
        return ColorSet(static_cast<std::uint8_t>((1u << k) - 1u));
    }

    static ColorSet single(int color)
    {
        if (color < 1 || color > kMaxColors)
            throw DomainError("color out of range: " + std::to_string(color));
        return ColorSet(static_cast<std::uint8_t>(1u << (color - 1)));
    }

    constexpr std::uint8_t bits() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr bool contains(int color) const
    {
        return color >= 1 && color <= kMaxColors && (bits_ >> (color - 1)) & 1u;
    }

    constexpr ColorSet united(ColorSet other) const { return ColorSet(bits_ | other.bits_); }
    constexpr ColorSet minus(ColorSet other) const
    {
        return ColorSet(static_cast<std::uint8_t>(bits_ & ~other.bits_));
    }
    ColorSet & operator|=(ColorSet other)
    {
        bits_ |= other.bits_;
        return *this;
    }

    constexpr bool operator==(const ColorSet &) const = default;

    // "1,3" for {1,3}; "-" for the empty set.
    std::string to_string() const
    {
        if (bits_ == 0)
            return "-";
        std::string out;
        for (int c = 1; c <= kMaxColors; ++c) {
            if (contains(c)) {
                if (!out.empty())
                    out += ',';
                out += std::to_string(c);
            }
        }
        return out;
    }

private:
    explicit constexpr ColorSet(std::uint8_t bits) : bits_(bits) {}

    std::uint8_t bits_ = 0;
};

} // namespace rainbowdom
