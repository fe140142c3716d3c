#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "sheafloc/bundles.hpp"
#include "sheafloc/cech.hpp"

namespace sheafloc {

/// Truncation data behind a report: orders, windows and pole bound that
/// produced the values.
struct InvariantCertificate {
    int m = 0;                // order at which h was reported
    DegreeWindow zWindow;     // window of h (confirmed by its double)
    int mEnd = 0;             // order at which h1(End) was reported
    DegreeWindow zWindowEnd;  // window of h1(End)
    int poleBound = 0;        // 0 on the threefold
    int deltaOrder = 0;       // order at which Delta settled
};

struct InvariantReport {
    std::string space;
    int j = 0;
    std::string cls;  // canonical text of the class, "0" for split
    long w = 0;
    long h = 0;
    long chi = 0;
    long h1End = 0;
    long delta0 = 0;
    long delta1 = 0;
    InvariantCertificate certificate;
};

/// {space, j, class, w, h, chi, h1End, delta: [d0, d1], certificate{...}}.
nlohmann::ordered_json to_json(const InvariantReport& r);
/// Inverse of to_json; throws UsageError on a missing or mistyped field.
InvariantReport report_from_json(const nlohmann::json& j);

struct WidthResult {
    long w = 0;
    int poleBound = 0;  // 0 when the lemma applies (threefold)
};

long height(const ExtensionBundle& e, const TruncationPolicy& policy = {});
StableH1 height_detail(const ExtensionBundle& e, const TruncationPolicy& policy = {});
/// Pole order stabilized from ceil(j/k) + 1; 0 on the threefold.
WidthResult width(const ExtensionBundle& e, const TruncationPolicy& policy = {});
long chi(const ExtensionBundle& e, const TruncationPolicy& policy = {});
long h1_end(const ExtensionBundle& e, const TruncationPolicy& policy = {});
StableH1 h1_end_detail(const ExtensionBundle& e, const TruncationPolicy& policy = {});

/// h^i(l^(m), E^(m)), i in {0, 1}.
long psi(const ExtensionBundle& e, int i, int m, const TruncationPolicy& policy = {});

struct DeltaResult {
    long value = 0;
    int m = 0;
};

/// psi_m^i(E_split) - psi_m^i(E) at increasing m from 2j until three
/// consecutive orders give the same difference.
DeltaResult delta(const ExtensionBundle& e, int i, const TruncationPolicy& policy = {});

InvariantReport report(const ExtensionBundle& e, const TruncationPolicy& policy = {});

/// phi(E^(m), n) as a polynomial in n with rational coefficients
/// (coefficient of n^i at index i).
struct HilbertPolynomial {
    int m = 0;
    std::vector<Scalar> coeffs;
    std::vector<std::pair<int, long>> samples;  // (n, psi0 - psi1)

    Scalar operator()(const Scalar& n) const;
    friend bool operator==(const HilbertPolynomial& a, const HilbertPolynomial& b)
    {
        return a.m == b.m && a.coeffs == b.coeffs;
    }
};

/// Interpolates through all but the last sample and checks the last one;
/// throws ConsistencyError on mismatch, UsageError with fewer than 3 points.
/// With endomorphisms set, uses End E instead of E.
HilbertPolynomial hilbert(const ExtensionBundle& e, int m, const std::vector<int>& ns,
                          bool endomorphisms = false, const TruncationPolicy& policy = {});

std::string to_string(const HilbertPolynomial& p);

struct DeformationCount {
    long gamma1 = 0;
    std::optional<long> gammaFull;  // nullopt is the infinity marker
    long projDim = 0;               // gamma1 - 1
};

/// h1(P^1, O(n)) = max(0, -n - 1).
inline long h1_p1(long n) { return n <= -2 ? -n - 1 : 0; }

DeformationCount gamma1(int j, const ConormalType& conormal);
/// gamma1 together with the full graded sum; the sum is finite exactly when
/// every summand eventually vanishes.
DeformationCount gamma_full(int j, const ConormalType& conormal);

struct PencilPoint {
    std::optional<Scalar> c;  // nullopt is infinity
    long w = 0;
    long h = 0;
};

std::vector<PencilPoint> pencil_profile(const ExtensionBundle& e,
                                        const std::vector<std::optional<Scalar>>& cs,
                                        const TruncationPolicy& policy = {});

/// h1(E(-j)): the quotient of H^1(O(-2j)) by the multiples of the class.
/// Diagnostic only; see the README's notes on the generic reference values.
long h1_sub_twist(const ExtensionBundle& e, const TruncationPolicy& policy = {});

}  // namespace sheafloc
