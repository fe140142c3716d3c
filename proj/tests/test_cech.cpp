#include <doctest.h>

#include <sstream>

#include "oracle.hpp"
#include "sheafloc/bundles.hpp"
#include "sheafloc/cech.hpp"
#include "sheafloc/errors.hpp"

using namespace sheafloc;

namespace {

const SpaceDescriptor Z1 = SpaceDescriptor::surface(1);
const SpaceDescriptor W1 = SpaceDescriptor::flop_threefold();

std::vector<SpaceDescriptor> all_spaces()
{
    return {Z1, SpaceDescriptor::surface(2), SpaceDescriptor::surface(3), W1};
}

CohomologyResult line(const SpaceDescriptor& sp, int p, int m)
{
    return cohomology(make_problem(TransitionMatrix::diagonal(sp, {p}), m));
}

long oracle_h1(const ExtensionBundle& e, int m, bool end)
{
    const Arity a = e.space().arity();
    const oracle::Matrix t = oracle::bundle_transition(e.space(), e.j(), e.cls());
    const oracle::Matrix tinv = end ? oracle::end_inverse(t, a) : oracle::inverse2(t, a);
    const TransitionMatrix T = end ? end_transition(e) : e.transition();
    const DegreeWindow w = default_window(T, m).doubled();
    return oracle::h1(e.space(), tinv, m, w.zMin, w.zMax);
}

}  // namespace

TEST_CASE("transition matrices validate their gluing")
{
    const Arity a = Arity::Surface;
    const LaurentSection one = LaurentSection::monomial(a, 0, 0);
    const LaurentSection zero(a);
    CHECK_THROWS_AS(TransitionMatrix(Z1, {0, 0}, {{one, one}, {zero, one}}), UsageError);
    CHECK_THROWS_AS(TransitionMatrix(Z1, {0, 0}, {{one * 2, zero}, {zero, one}}), UsageError);
    const LaurentSection x = LaurentSection::monomial(a, -1, 1);
    CHECK_THROWS_AS(TransitionMatrix(Z1, {0, 0}, {{one, x}, {x, one}}), UsageError);
    CHECK_THROWS_AS(TransitionMatrix(Z1, {0}, {{LaurentSection::monomial(Arity::Threefold, 0, 0)}}),
                    UsageError);

    const TransitionMatrix T(Z1, {-2, 2}, {{one, x}, {zero, one}});
    CHECK(T.determinant() == LaurentSection::monomial(a, 0, 0));
    CHECK(T.entry(0, 1) == LaurentSection::monomial(a, 1, 1));
    CHECK(T.gluing_inverse(0, 1) == -x);
    CHECK_FALSE(T.is_split());
    CHECK(T.twisted(3).twists() == std::vector<int>{1, 5});
}

TEST_CASE("end transition is the literal conjugation")
{
    // Compare A M A^-1 assembled by the library with T M T^-1 from the oracle:
    // they differ only by the diagonal twist factors.
    const ExtensionBundle e = make_from_class(W1, 2, parse_section("u*z^-1 + 2*v*z^-2", Arity::Threefold));
    const TransitionMatrix T = end_transition(e);
    const oracle::Matrix lit = oracle::end_transition(oracle::bundle_transition(W1, 2, e.cls()), Arity::Threefold);
    // library basis (E12, E11, E22, E21) -> oracle basis index (E11=0, E12=1, E21=2, E22=3)
    const int idx[4] = {1, 0, 3, 2};
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) CHECK(T.entry(a, b) == lit[idx[a]][idx[b]]);
}

TEST_CASE("problem validation")
{
    const TransitionMatrix T = TransitionMatrix::diagonal(Z1, {1});
    CHECK_THROWS_AS(CechProblem(T, -1, DegreeWindow(-3, 3, 0)), UsageError);
    CHECK_THROWS_AS(CechProblem(T, 2, DegreeWindow(-3, 3, 1)), UsageError);
    CHECK_THROWS_AS(CechProblem(TransitionMatrix::diagonal(W1, {1}), 2, DegreeWindow(-3, 3, 2, 1)),
                    UsageError);
    CHECK_THROWS_AS(cohomology(make_problem(T, 1), 0), TruncationOverflow);
}

TEST_CASE("line bundles on the projective line")
{
    for (int n = 0; n <= 8; ++n) {
        const CohomologyResult r = line(Z1, n, 0);
        CHECK(r.h0 == n + 1);
        CHECK(r.h1 == 0);
    }
}

TEST_CASE("line bundle cohomology equals monomial counting")
{
    for (const SpaceDescriptor& sp : all_spaces())
        for (int p = -8; p <= 8; ++p)
            for (int m = 0; m <= 4; ++m) {
                const CohomologyResult r = line(sp, p, m);
                CHECK(r.h0 == static_cast<long>(h0_monomials(sp, p, m).size()));
                CHECK(r.h1 == static_cast<long>(h1_monomials(sp, p, m).size()));
            }
}

TEST_CASE("split rank-2 results are sums of line bundle results")
{
    for (const SpaceDescriptor& sp : all_spaces())
        for (int j = 0; j <= 6; ++j)
            for (int m = 0; m <= 4; ++m) {
                const CohomologyResult r = cohomology(make_problem(make_split(sp, j).transition(), m));
                const CohomologyResult a = line(sp, -j, m);
                const CohomologyResult b = line(sp, j, m);
                CHECK(r.h0 == a.h0 + b.h0);
                CHECK(r.h1 == a.h1 + b.h1);
            }
}

TEST_CASE("split heights")
{
    for (int k = 1; k <= 4; ++k)
        for (int j = 0; j <= 6; ++j) {
            long closed = 0;
            for (int r = 0; k * r <= j - 2; ++r) closed += j - 1 - k * r;
            CHECK(stabilized_h1(make_split(SpaceDescriptor::surface(k), j).transition()).h1 == closed);
        }
    CHECK(stabilized_h1(make_split(SpaceDescriptor::surface(3), 3).transition()).h1 == 2);
    CHECK(stabilized_h1(make_split(Z1, 3).transition()).h1 == 3);
    CHECK(stabilized_h1(make_split(W1, 3).transition()).h1 == 4);
    CHECK(stabilized_h1(make_split(W1, 0).transition()).h1 == 0);
}

TEST_CASE("engine agrees with the dense oracle")
{
    SUBCASE("named class")
    {
        const ExtensionBundle e = make_from_class(Z1, 2, parse_section("u*z^-1", Arity::Surface));
        CHECK(oracle_h1(e, 3, false) == 1);
        CHECK(stabilized_h1(e.transition(), {}, 4).h1 == 1);
    }
    SUBCASE("random classes, bundle and endomorphisms")
    {
        for (const SpaceDescriptor& sp : {Z1, SpaceDescriptor::surface(2), SpaceDescriptor::surface(3)})
            for (int j = 1; j <= 3; ++j)
                for (std::uint64_t seed = 0; seed < 2; ++seed) {
                    const ExtensionBundle e = random_class(sp, j, seed, 5);
                    const int m = 2 * j - 1;
                    CHECK(oracle_h1(e, m, false) == cohomology(make_problem(e.transition(), m)).h1);
                    CHECK(oracle_h1(e, m, true) == cohomology(make_problem(end_transition(e), m)).h1);
                }
        for (std::uint64_t seed = 0; seed < 2; ++seed) {
            const ExtensionBundle e = random_class(W1, 2, seed, 5);
            CHECK(oracle_h1(e, 3, false) == cohomology(make_problem(e.transition(), 3)).h1);
            CHECK(oracle_h1(e, 3, true) == cohomology(make_problem(end_transition(e), 3)).h1);
        }
    }
}

TEST_CASE("exact and modular ranks agree")
{
    for (const SpaceDescriptor& sp : all_spaces())
        for (int j = 2; j <= 4; ++j)
            for (std::uint64_t seed = 0; seed < 3; ++seed) {
                const ExtensionBundle e = random_class(sp, j, seed);
                for (const TransitionMatrix& T : {e.transition(), end_transition(e)}) {
                    const int m = 2 * j;
                    const DegreeWindow w = default_window(T, m);
                    const WindowCohomology x = cohomology_in_window(CechProblem(T, m, w, RankMethod::Exact));
                    const WindowCohomology y = cohomology_in_window(CechProblem(T, m, w, RankMethod::Modular));
                    CHECK(x.h0 == y.h0);
                    CHECK(x.h1 == y.h1);
                    CHECK(x.method == RankMethod::Exact);
                    CHECK(y.method == RankMethod::Modular);
                }
            }
}

TEST_CASE("window doubling never changes a certified result")
{
    TruncationPolicy twice;
    twice.windowDoublings = 2;
    for (const SpaceDescriptor& sp : all_spaces())
        for (int j = 1; j <= 4; ++j)
            for (std::uint64_t seed = 0; seed < 3; ++seed) {
                const ExtensionBundle e = random_class(sp, j, seed);
                for (const TransitionMatrix& T : {e.transition(), end_transition(e)}) {
                    const CohomologyResult a = cohomology(make_problem(T, 2 * j));
                    const CohomologyResult b = cohomology(make_problem(T, 2 * j, twice));
                    CHECK(a.h0 == b.h0);
                    CHECK(a.h1 == b.h1);
                    CHECK(a.certificate.confirmedBy == a.certificate.window.doubled());
                }
            }
}

TEST_CASE("h1 is invariant under scaling the class")
{
    for (const SpaceDescriptor& sp : all_spaces())
        for (int j = 2; j <= 3; ++j) {
            const ExtensionBundle e = random_class(sp, j, 11);
            for (const Scalar& f : {make_scalar(7, 3), make_scalar(-1), make_scalar(1, 1000)}) {
                const ExtensionBundle g = scaled(e, f);
                CHECK(stabilized_h1(e.transition()).h1 == stabilized_h1(g.transition()).h1);
                CHECK(stabilized_h1(end_transition(e)).h1 == stabilized_h1(end_transition(g)).h1);
            }
        }
}

TEST_CASE("h1 is constant beyond the support order")
{
    for (const SpaceDescriptor& sp : all_spaces()) {
        const ExtensionBundle e = random_class(sp, 3, 4);
        const TransitionMatrix T = end_transition(e);
        const int start = h1_support_order(T);
        const long v = cohomology(make_problem(T, start)).h1;
        for (int m = start + 1; m <= start + 3; ++m) CHECK(cohomology(make_problem(T, m)).h1 == v);
    }
}

TEST_CASE("sections with u-poles")
{
    const TransitionMatrix o3 = TransitionMatrix::diagonal(Z1, {3});
    CHECK(h0_sections_with_u_poles(o3, 3).extra == 6);
    CHECK(h0_sections_with_u_poles(o3, 5).extra == 6);
    CHECK(h0_sections_with_u_poles(TransitionMatrix::diagonal(Z1, {-3}), 4).extra == 0);
    CHECK(h0_sections_with_u_poles(o3, 0).extra == 0);
    const PoleSections b = h0_sections_with_u_poles(o3, 3, true);
    CHECK(b.basis.size() == 6);
    CHECK(b.poleShift == 3);
    for (const auto& section : b.basis)
        for (const auto& [m, c] : section[0].terms()) CHECK(m.r < b.poleShift);
    CHECK_THROWS_AS(h0_sections_with_u_poles(TransitionMatrix::diagonal(W1, {3}), 2), UsageError);
    CHECK_THROWS_AS(h0_sections_with_u_poles(o3, -1), UsageError);
}

TEST_CASE("pole sections of a split sum add up")
{
    for (int k = 1; k <= 3; ++k)
        for (int j = 0; j <= 5; ++j) {
            const SpaceDescriptor sp = SpaceDescriptor::surface(k);
            const int P = j / k + 2;
            const long both = h0_sections_with_u_poles(make_split(sp, j).transition(), P).extra;
            const long a = h0_sections_with_u_poles(TransitionMatrix::diagonal(sp, {-j}), P).extra;
            const long b = h0_sections_with_u_poles(TransitionMatrix::diagonal(sp, {j}), P).extra;
            CHECK(both == a + b);
        }
}

TEST_CASE("reduced coboundary dump")
{
    const ExtensionBundle e = make_from_class(Z1, 2, parse_section("u*z^-1", Arity::Surface));
    const CechProblem pb = make_problem(e.transition(), 2);
    const ReducedCoboundary M = reduced_coboundary(pb);
    const WindowCohomology wc = cohomology_in_window(pb);
    CHECK(static_cast<long>(M.columnLabels.size()) == wc.nonExtendable);
    CHECK(static_cast<long>(M.rowLabels.size()) == wc.sections);
    std::ostringstream out;
    dump_matrix(M, out);
    std::istringstream in(out.str());
    long rows = 0, cols = 0, nnz = 0;
    in >> rows >> cols >> nnz;
    CHECK(rows == static_cast<long>(M.rows.size()));
    CHECK(cols == static_cast<long>(M.columnLabels.size()));
    long counted = 0;
    for (const auto& r : M.rows) counted += static_cast<long>(r.size());
    CHECK(nnz == counted);
    CHECK(out.str().find("# rows:") != std::string::npos);
    CHECK(out.str().find("e0:") != std::string::npos);
}
