#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sheafloc/laurent.hpp"
#include "sheafloc/transition.hpp"

namespace sheafloc {

/// How ranks are computed. Exact uses rationals throughout; Modular reduces
/// everything mod a 61-bit prime (rank mod p <= rank over Q, equality
/// failing only when p divides a minor). Auto picks Exact for small problems.
enum class RankMethod { Auto, Exact, Modular };

const char* to_string(RankMethod method);

/// Knobs shared by every stabilized computation. The defaults reproduce the
/// documented windows; windowDoublings and extraPole exist for robustness runs.
struct TruncationPolicy {
    int windowDoublings = 0;  // apply DegreeWindow::doubled() this many times up front
    int extraOrder = 0;       // added to the starting neighbourhood order
    int extraPole = 0;        // added to the starting pole bound
    int maxRounds = 6;
    RankMethod method = RankMethod::Auto;
};

struct CechProblem {
    TransitionMatrix T;
    int m;
    DegreeWindow window;
    RankMethod method = RankMethod::Auto;

    /// Throws UsageError if m < 0 or the window does not cover order m.
    CechProblem(TransitionMatrix T, int m, DegreeWindow window, RankMethod method = RankMethod::Auto);
};

/// zMin = -(2 maxTwist + k m + maxdeg_z), zMax the negative of zMin; uMax = m
/// (and vMax = m on the threefold).
DegreeWindow default_window(const TransitionMatrix& T, int m);

CechProblem make_problem(const TransitionMatrix& T, int m, const TruncationPolicy& policy = {});

/// Counts for a single window.
struct WindowCohomology {
    long h0 = 0;
    long h1 = 0;
    long sections = 0;       // monomial cells of Vext with s >= 0 (|H|)
    long nonExtendable = 0;  // cells extendable to neither chart (|N|)
    long rank = 0;           // rank of the reduced coboundary
    RankMethod method = RankMethod::Exact;

    friend bool operator==(const WindowCohomology&, const WindowCohomology&) = default;
};

WindowCohomology cohomology_in_window(const CechProblem& problem);

struct CohomologyCertificate {
    int m = 0;
    DegreeWindow window;       // window of the reported value
    DegreeWindow confirmedBy;  // doubled window that agreed
    int rounds = 0;
};

struct CohomologyResult {
    long h0 = 0;
    long h1 = 0;
    CohomologyCertificate certificate;
};

/// h0 and h1 of the bundle on l^(m), certified by window doubling. Throws
/// TruncationOverflow after maxRounds disagreeing enlargements.
CohomologyResult cohomology(const CechProblem& problem, int maxRounds = 6);

/// Smallest order beyond which h1 can no longer change: one more than the
/// largest normal degree carrying a non-extendable cell.
int h1_support_order(const TransitionMatrix& T);

struct StableH1 {
    long h1 = 0;
    int m = 0;            // order at which the value was reported
    CohomologyResult at;  // full result at order m
};

/// h1 at increasing order until two consecutive orders agree. The default
/// start is h1_support_order(T) + 1.
StableH1 stabilized_h1(const TransitionMatrix& T, const TruncationPolicy& policy = {},
                       std::optional<int> startOrder = std::nullopt);

/// Sections of a surface bundle over Z minus the zero section with u-poles of
/// order at most poleBound, modulo the global sections Gamma(Z, E).
struct PoleSections {
    int poleBound = 0;
    int order = 0;  // neighbourhood order used for E(-k P)
    long extra = 0;
    /// Principal parts of a basis, one LaurentSection per component, in
    /// shifted coordinates: u^r here stands for u^(r - poleShift).
    std::vector<std::vector<LaurentSection>> basis;
    int poleShift = 0;
    DegreeWindow window;
    DegreeWindow confirmedBy;
};

/// Computes the extra sections. With wantBasis the ranks are exact and the
/// basis is filled. Surfaces only.
PoleSections h0_sections_with_u_poles(const TransitionMatrix& T, int poleBound,
                                      bool wantBasis = false, const TruncationPolicy& policy = {});

/// Reduced coboundary: rows are the chart sections with s >= 0, columns the
/// non-extendable cells, entries the images in H^1 coordinates.
struct ReducedCoboundary {
    std::vector<std::string> rowLabels;
    std::vector<std::string> columnLabels;
    std::vector<std::vector<std::pair<int, Scalar>>> rows;
};

ReducedCoboundary reduced_coboundary(const CechProblem& problem);

/// Plain-text dump: a header line "rows cols nnz", the labels, then one
/// "row col value" triple per line.
void dump_matrix(const ReducedCoboundary& matrix, std::ostream& out);

}  // namespace sheafloc
