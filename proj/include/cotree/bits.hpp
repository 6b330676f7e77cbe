#pragma once

#include <bit>
#include <cstdint>

namespace cotree {

// Subsets of a poset with at most 64 points.
using PointSet = std::uint64_t;

inline constexpr std::size_t kMaxPoints = 64;

inline constexpr PointSet bit(std::size_t i) { return PointSet{1} << i; }

inline constexpr PointSet low_bits(std::size_t n) {
    return n >= 64 ? ~PointSet{0} : (PointSet{1} << n) - 1;
}

inline constexpr bool has(PointSet s, std::size_t i) { return (s >> i) & 1U; }

inline constexpr int popcount(PointSet s) { return std::popcount(s); }

// for (auto i : members(s))
class members {
public:
    explicit constexpr members(PointSet s) : s_(s) {}
    struct iterator {
        PointSet rest;
        constexpr std::size_t operator*() const { return static_cast<std::size_t>(std::countr_zero(rest)); }
        constexpr iterator& operator++() {
            rest &= rest - 1;
            return *this;
        }
        constexpr bool operator!=(const iterator& o) const { return rest != o.rest; }
    };
    constexpr iterator begin() const { return {s_}; }
    constexpr iterator end() const { return {0}; }

private:
    PointSet s_;
};

}  // namespace cotree
