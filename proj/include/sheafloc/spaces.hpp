#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sheafloc/laurent.hpp"
#include "sheafloc/monomial.hpp"

namespace sheafloc {

/// One of the two-chart total spaces over P^1.
///
/// Surface(k) is Tot(O(-k)) with chart change (z, u) -> (1/z, z^k u).
/// FlopThreefold is Tot(O(-1) + O(-1)) with (z, u, v) -> (1/z, z u, z v).
/// A section a of O(p) on chart U reads z^{-p} a in the coordinates of V.
class SpaceDescriptor {
public:
    enum class Kind { Surface, FlopThreefold };

    static SpaceDescriptor surface(int k);
    static SpaceDescriptor flop_threefold();

    /// "zk:<k>" or "w1".
    static SpaceDescriptor parse(std::string_view text);

    Kind kind() const { return kind_; }
    bool is_surface() const { return kind_ == Kind::Surface; }
    /// Weight of u in the chart change: k on Z_k, 1 on W1 (for both u and v).
    int k() const { return k_; }
    Arity arity() const { return is_surface() ? Arity::Surface : Arity::Threefold; }

    /// Largest z-exponent of a V-holomorphic monomial of O(p) with normal
    /// exponents (r, t): k r + p on surfaces, r + t + p on the threefold.
    int v_bound(int p, int r, int t) const { return k_ * (r + t) + p; }

    std::string name() const;

    friend bool operator==(const SpaceDescriptor&, const SpaceDescriptor&) = default;

private:
    SpaceDescriptor(Kind kind, int k) : kind_(kind), k_(k) {}

    Kind kind_;
    int k_;
};

/// Conormal twists (a, b): N*_{l/W_i} = O(a) + O(b) for W_i = Tot(O(-i) + O(i-2)).
struct ConormalType {
    int a;
    int b;

    static ConormalType w(int i);
    /// "w1", "w2" or "w3".
    static ConormalType parse(std::string_view text);

    bool ample() const { return a > 0 && b > 0; }
    std::string name() const;
};

/// Extendability of a monomial viewed as a section of O(p) over U cap V.
struct TwistedMonomialTest {
    SpaceDescriptor space;
    int p;

    bool extends_to_U(const Monomial& m) const { return m.s >= 0; }
    bool extends_to_V(const Monomial& m) const { return m.s <= space.v_bound(p, m.r, m.t); }
};

/// Image of an exponent vector under the chart change (an involution).
Monomial transition_map(const SpaceDescriptor& space, const Monomial& m);

/// Monomial basis of H^0(l^(m), O(p)), in canonical order.
std::vector<Monomial> h0_monomials(const SpaceDescriptor& space, int p, int m);

/// Monomial basis of H^1(l^(m), O(p)); std::nullopt means the whole space.
/// The list is finite in both cases and empty for p >= -1.
std::vector<Monomial> h1_monomials(const SpaceDescriptor& space, int p,
                                   std::optional<int> m = std::nullopt);

/// Number of (r, t) exponent pairs of normal degree exactly d.
inline int normal_pairs(const SpaceDescriptor& space, int d)
{
    return space.is_surface() ? 1 : d + 1;
}

}  // namespace sheafloc
