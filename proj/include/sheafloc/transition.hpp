#pragma once

#include <vector>

#include "sheafloc/laurent.hpp"
#include "sheafloc/spaces.hpp"

namespace sheafloc {

/// Transition data of a bundle that is an iterated extension of line bundles.
///
/// Component i is O(p_i). The gluing A is written in chart-U coordinates: it is
/// unipotent (A_ii = 1) and each off-diagonal entry A_ab only has monomials of
/// normal degree >= 1. A frame section with U-coordinates a reads
/// diag(z^{-p_i}) A a over V, so the full transition is T = diag(z^{-p_i}) A.
class TransitionMatrix {
public:
    /// Throws UsageError if A is not unipotent, has degree-0 off-diagonal terms,
    /// has the wrong arity, or its support graph has a cycle.
    TransitionMatrix(SpaceDescriptor space, std::vector<int> twists,
                     std::vector<std::vector<LaurentSection>> gluing);

    static TransitionMatrix diagonal(SpaceDescriptor space, std::vector<int> twists);

    const SpaceDescriptor& space() const { return space_; }
    int size() const { return static_cast<int>(twists_.size()); }
    const std::vector<int>& twists() const { return twists_; }

    const LaurentSection& gluing(int a, int b) const { return gluing_[a][b]; }
    const LaurentSection& gluing_inverse(int a, int b) const { return inverse_[a][b]; }

    /// Components listed so that A_ab != 0 (a != b) implies a comes before b.
    const std::vector<int>& order() const { return order_; }

    /// Entry of the full transition T = diag(z^{-p}) A.
    LaurentSection entry(int a, int b) const;
    /// det T; always the unit z^{-sum p}.
    LaurentSection determinant() const;

    int max_abs_twist() const;
    /// Largest |s| over the off-diagonal entries of A and A^{-1}.
    int max_abs_z_degree() const;
    bool is_split() const;

    /// Same gluing, twists shifted by delta.
    TransitionMatrix twisted(int delta) const;
    /// Same gluing, twists replaced.
    TransitionMatrix with_twists(std::vector<int> twists) const;

private:
    SpaceDescriptor space_;
    std::vector<int> twists_;
    std::vector<std::vector<LaurentSection>> gluing_;
    std::vector<std::vector<LaurentSection>> inverse_;
    std::vector<int> order_;
};

}  // namespace sheafloc
