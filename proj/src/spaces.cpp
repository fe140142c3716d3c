#include "sheafloc/spaces.hpp"

#include <algorithm>
#include <charconv>

#include "sheafloc/errors.hpp"

namespace sheafloc {

SpaceDescriptor SpaceDescriptor::surface(int k)
{
    if (k < 1) throw UsageError("Z_k needs k >= 1");
    return SpaceDescriptor(Kind::Surface, k);
}

SpaceDescriptor SpaceDescriptor::flop_threefold()
{
    return SpaceDescriptor(Kind::FlopThreefold, 1);
}

SpaceDescriptor SpaceDescriptor::parse(std::string_view text)
{
    if (text == "w1") return flop_threefold();
    if (text.substr(0, 3) == "zk:") {
        int k = 0;
        auto digits = text.substr(3);
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
        if (ec == std::errc() && ptr == digits.data() + digits.size() && !digits.empty())
            return surface(k);
    }
    throw UsageError("unknown space '" + std::string(text) + "' (expected zk:<k> or w1)");
}

std::string SpaceDescriptor::name() const
{
    return is_surface() ? "zk:" + std::to_string(k_) : "w1";
}

ConormalType ConormalType::w(int i)
{
    switch (i) {
    case 1: return {1, 1};
    case 2: return {2, 0};
    case 3: return {3, -1};
    default: throw UsageError("conormal type only defined for W1, W2, W3");
    }
}

ConormalType ConormalType::parse(std::string_view text)
{
    if (text == "w1") return w(1);
    if (text == "w2") return w(2);
    if (text == "w3") return w(3);
    throw UsageError("unknown conormal type '" + std::string(text) + "' (expected w1, w2, w3)");
}

std::string ConormalType::name() const
{
    return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

Monomial transition_map(const SpaceDescriptor& space, const Monomial& m)
{
    return {space.v_bound(0, m.r, m.t) - m.s, m.r, m.t};
}

namespace {

template <class Fn>
void for_each_normal(const SpaceDescriptor& space, int degree, Fn&& fn)
{
    if (space.is_surface()) {
        fn(degree, 0);
        return;
    }
    for (int r = degree; r >= 0; --r) fn(r, degree - r);
}

}  // namespace

std::vector<Monomial> h0_monomials(const SpaceDescriptor& space, int p, int m)
{
    if (m < 0) throw UsageError("neighbourhood order must be >= 0");
    std::vector<Monomial> out;
    for (int d = 0; d <= m; ++d) {
        for_each_normal(space, d, [&](int r, int t) {
            for (int s = 0; s <= space.v_bound(p, r, t); ++s) out.push_back({s, r, t});
        });
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Monomial> h1_monomials(const SpaceDescriptor& space, int p, std::optional<int> m)
{
    std::vector<Monomial> out;
    // s ranges over v_bound + 1 .. -1, empty once k d + p >= -1.
    for (int d = 0;; ++d) {
        if (m && d > *m) break;
        if (space.k() * d + p >= -1) break;
        for_each_normal(space, d, [&](int r, int t) {
            for (int s = space.v_bound(p, r, t) + 1; s <= -1; ++s) out.push_back({s, r, t});
        });
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace sheafloc
