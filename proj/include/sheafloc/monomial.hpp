#pragma once

#include <compare>
#include <cstddef>
#include <functional>

namespace sheafloc {

/// z^s u^r v^t in chart U. s is unrestricted, r and t are non-negative;
/// on surfaces t is always 0.
struct Monomial {
    int s = 0;
    int r = 0;
    int t = 0;

    /// Normal-direction degree: the order of vanishing along the zero section.
    constexpr int degree() const { return r + t; }

    friend constexpr Monomial operator*(const Monomial& a, const Monomial& b)
    {
        return {a.s + b.s, a.r + b.r, a.t + b.t};
    }

    friend constexpr bool operator==(const Monomial&, const Monomial&) = default;

    // Canonical order: lexicographic on (r, t, s).
    friend constexpr std::strong_ordering operator<=>(const Monomial& a, const Monomial& b)
    {
        if (auto c = a.r <=> b.r; c != 0) return c;
        if (auto c = a.t <=> b.t; c != 0) return c;
        return a.s <=> b.s;
    }
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept
    {
        std::size_t h = std::hash<int>{}(m.s);
        h = h * 1000003u ^ std::hash<int>{}(m.r);
        h = h * 1000003u ^ std::hash<int>{}(m.t);
        return h;
    }
};

}  // namespace sheafloc
