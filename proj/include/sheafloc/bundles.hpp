#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sheafloc/laurent.hpp"
#include "sheafloc/spaces.hpp"
#include "sheafloc/transition.hpp"

namespace sheafloc {

struct SplittingType {
    int j = 0;

    SplittingType() = default;
    explicit SplittingType(int j);

    friend bool operator==(const SplittingType&, const SplittingType&) = default;
};

/// Rank-2 bundle E given as an extension 0 -> O(-j) -> E -> O(j) -> 0.
///
/// cls is the class in chart-U coordinates, an element of H^1(O(-2j)) written
/// in the h1_monomials basis. The transition matrix is diag(z^j, z^{-j}) times
/// [[1, cls], [0, 1]]; its upper-right entry z^j cls is the class in the
/// frame where the diagonal reads (z^j, z^{-j}).
class ExtensionBundle {
public:
    ExtensionBundle(SpaceDescriptor space, SplittingType j, LaurentSection cls);

    const SpaceDescriptor& space() const { return space_; }
    int j() const { return j_.j; }
    const LaurentSection& cls() const { return cls_; }
    bool is_split() const { return cls_.is_zero(); }

    TransitionMatrix transition() const;

    friend bool operator==(const ExtensionBundle&, const ExtensionBundle&) = default;

private:
    SpaceDescriptor space_;
    SplittingType j_;
    LaurentSection cls_;
};

/// A bundle whose class is scaled so its first coefficient (canonical monomial
/// order) is 1. Proportional classes give equal canonical classes.
struct CanonicalClass {
    ExtensionBundle bundle;

    explicit CanonicalClass(const ExtensionBundle& e);

    /// "space|j|class", used as the cache key.
    std::string key() const;

    friend bool operator==(const CanonicalClass&, const CanonicalClass&) = default;
};

ExtensionBundle make_split(const SpaceDescriptor& space, int j);

/// Throws UsageError if p has a monomial outside ext_basis(space, j); normal
/// degree 0 terms get the message "changes restriction to l".
ExtensionBundle make_from_class(const SpaceDescriptor& space, int j, const LaurentSection& p);

/// Projects p onto the H^1(O(-2j)) monomial basis by dropping monomials that
/// extend to either chart. Normal-degree-0 terms are kept (and then rejected
/// by make_from_class).
LaurentSection reduce_class(const SpaceDescriptor& space, int j, const LaurentSection& p);

/// h1_monomials(space, -2j) with normal degree >= 1, in canonical order.
std::vector<Monomial> ext_basis(const SpaceDescriptor& space, int j);

constexpr long kDefaultCoeffBound = 1000000;

/// Uniform non-zero integer coefficients in [-bound, bound] on every ext_basis
/// monomial, drawn from mt19937_64(seed).
ExtensionBundle random_class(const SpaceDescriptor& space, int j, std::uint64_t seed,
                             long coeffBound = kDefaultCoeffBound);

/// Same bundle with the class multiplied by a non-zero scalar.
ExtensionBundle scaled(const ExtensionBundle& e, const Scalar& factor);

/// Basis order of End E: E12, E11, E22, E21 (E_ab sends e_b to e_a, with e1
/// spanning O(-j)). Twists -2j, 0, 0, 2j; gluing M -> A M A^{-1}.
TransitionMatrix end_transition(const ExtensionBundle& e);

/// Restriction to D_c = {v = c u}, a copy of Z_1. std::nullopt means c = infinity,
/// i.e. D = {u = 0} with v as the fibre coordinate.
ExtensionBundle restrict_to_pencil_divisor(const ExtensionBundle& e, std::optional<Scalar> c);

/// Parses "split", "random:<seed>" or a class polynomial.
ExtensionBundle bundle_from_spec(const SpaceDescriptor& space, int j, const std::string& spec,
                                 long coeffBound = kDefaultCoeffBound);

}  // namespace sheafloc
