#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sheafloc/scalar.hpp"
#include "sheafloc/spaces.hpp"

namespace sheafloc {

/// Integer polynomial, coefficient of z^i at index i.
using IntPoly = std::vector<long>;

IntPoly poly_mul(const IntPoly& a, const IntPoly& b);
/// Renders with z as the variable, highest power first.
std::string to_string(const IntPoly& p);

/// numerator / denominator, stored exactly as written (signs included).
struct RationalGenFun {
    IntPoly numerator;
    IntPoly denominator;
};

/// a_0 .. a_N of the power series of f. Throws UsageError when the
/// denominator vanishes at 0 and ConsistencyError if a coefficient is not an
/// integer.
std::vector<long> taylor_coeffs(const RationalGenFun& f, int N);

enum class GenFunKind { Split, Generic };

GenFunKind parse_genfun_kind(const std::string& text);
const char* to_string(GenFunKind kind);

/// Generating function of h1(End E) in j for split or generic bundles.
RationalGenFun genfun(const SpaceDescriptor& space, GenFunKind kind);

struct BoundsResult {
    long lower = 0;
    long upper = 0;
    std::string lowerAttainedBy = "generic";
    std::string upperAttainedBy = "split";
};

/// j - 1 <= chi <= q^2 k + (2q + 1) r - 1 (r > 0) or q^2 k (r = 0), j = q k + r.
BoundsResult chi_bounds_surface(int j, int k);
/// j - 1 <= chi = h <= (j^2 + j)(j - 1) / 6.
BoundsResult chi_bounds_w1(int j);
/// (j^3 + 3 j^2 - j) / 3 <= h1(End) <= (4 j^3 - j) / 3.
BoundsResult h1end_bounds_w1(int j);

struct ModuliDimension {
    std::optional<long> dim;  // nullopt: degenerate (j <= 1, only split sheaves)
    long chi = 0;
};

ModuliDimension moduli_dim(int j);

/// Closed-form Hilbert polynomial of E^(m) in n, coefficient of n^i at index i:
/// (m+1)(k m + 2 + 2n) on Z_k, (m+2)(m+1)(2m + 3n + 3)/3 on W1.
std::vector<Scalar> hilbert_closed_form(const SpaceDescriptor& space, int m);

}  // namespace sheafloc
