#include <doctest.h>

#include <algorithm>

#include "sheafloc/errors.hpp"
#include "sheafloc/spaces.hpp"

using namespace sheafloc;

namespace {

const SpaceDescriptor Z1 = SpaceDescriptor::surface(1);
const SpaceDescriptor W1 = SpaceDescriptor::flop_threefold();

}  // namespace

TEST_CASE("parse and names")
{
    CHECK(SpaceDescriptor::parse("zk:3") == SpaceDescriptor::surface(3));
    CHECK(SpaceDescriptor::parse("w1") == W1);
    CHECK(SpaceDescriptor::surface(2).name() == "zk:2");
    CHECK_THROWS_AS(SpaceDescriptor::parse("zk:0"), UsageError);
    CHECK_THROWS_AS(SpaceDescriptor::parse("zk:"), UsageError);
    CHECK_THROWS_AS(SpaceDescriptor::parse("w2"), UsageError);
    CHECK_THROWS_AS(SpaceDescriptor::surface(0), UsageError);
}

TEST_CASE("conormal types sum to two")
{
    for (int i = 1; i <= 3; ++i) {
        const ConormalType c = ConormalType::w(i);
        CHECK(c.a + c.b == 2);
        CHECK(c.a == i);
    }
    CHECK(ConormalType::w(1).ample());
    CHECK_FALSE(ConormalType::w(2).ample());
    CHECK_FALSE(ConormalType::parse("w3").ample());
    CHECK_THROWS_AS(ConormalType::parse("w4"), UsageError);
}

TEST_CASE("transition_map examples")
{
    CHECK(transition_map(Z1, {-1, 1, 0}) == Monomial{2, 1, 0});
    CHECK(transition_map(SpaceDescriptor::surface(2), {3, 0, 0}) == Monomial{-3, 0, 0});
    CHECK(transition_map(W1, {-1, 1, 0}) == Monomial{2, 1, 0});
}

TEST_CASE("transition_map is an involution")
{
    for (const SpaceDescriptor& sp : {Z1, SpaceDescriptor::surface(3), W1})
        for (int s = -5; s <= 5; ++s)
            for (int r = 0; r <= 3; ++r)
                for (int t = 0; t <= (sp.is_surface() ? 0 : 3); ++t) {
                    const Monomial m{s, r, t};
                    CHECK(transition_map(sp, transition_map(sp, m)) == m);
                }
}

TEST_CASE("h0 counts match the closed forms")
{
    for (int k = 1; k <= 4; ++k)
        for (int p = 0; p <= 6; ++p)
            for (int m = 0; m <= 5; ++m)
                CHECK(2 * static_cast<long>(h0_monomials(SpaceDescriptor::surface(k), p, m).size()) ==
                      (m + 1) * (k * m + 2 + 2 * p));
    for (int p = 0; p <= 6; ++p)
        for (int m = 0; m <= 5; ++m)
            CHECK(6 * static_cast<long>(h0_monomials(W1, p, m).size()) ==
                  (m + 2) * (m + 1) * (2 * m + 3 * p + 3));
    const auto low = h0_monomials(Z1, -1, 1);
    REQUIRE(low.size() == 1);
    CHECK(low[0] == Monomial{0, 1, 0});
}

TEST_CASE("h1 examples")
{
    const auto a = h1_monomials(Z1, -3);
    CHECK(a.size() == 3);
    CHECK(std::count(a.begin(), a.end(), Monomial{-1, 1, 0}) == 1);
    const auto b = h1_monomials(W1, -2);
    REQUIRE(b.size() == 1);
    CHECK(b[0] == Monomial{-1, 0, 0});
    for (const SpaceDescriptor& sp : {Z1, SpaceDescriptor::surface(2), W1})
        for (int p = -1; p <= 4; ++p) CHECK(h1_monomials(sp, p).empty());
}

TEST_CASE("h1 basis agrees with the extendability predicates")
{
    for (const SpaceDescriptor& sp : {Z1, SpaceDescriptor::surface(2), SpaceDescriptor::surface(3), W1})
        for (int p = -9; p <= 2; ++p) {
            const TwistedMonomialTest test{sp, p};
            std::vector<Monomial> brute;
            for (int r = 0; r <= 12; ++r)
                for (int t = 0; t <= (sp.is_surface() ? 0 : 12); ++t)
                    for (int s = -15; s <= 15; ++s) {
                        const Monomial m{s, r, t};
                        if (!test.extends_to_U(m) && !test.extends_to_V(m)) brute.push_back(m);
                    }
            std::sort(brute.begin(), brute.end());
            CHECK(h1_monomials(sp, p) == brute);
            std::vector<Monomial> upTo2;
            for (const Monomial& m : brute)
                if (m.degree() <= 2) upTo2.push_back(m);
            CHECK(h1_monomials(sp, p, 2) == upTo2);
        }
}

TEST_CASE("graded h1 count on the threefold")
{
    for (int j = 1; j <= 6; ++j) {
        const auto basis = h1_monomials(W1, -2 * j);
        long closed = 0;
        for (int m = 0; m <= 2 * j - 2; ++m) closed += (m + 1) * (2 * j - 1 - m);
        CHECK(static_cast<long>(basis.size()) == closed);
        if (j == 3) CHECK(closed == 35);
    }
}
