#include <doctest.h>

#include "sheafloc/bundles.hpp"
#include "sheafloc/errors.hpp"
#include "sheafloc/invariants.hpp"

using namespace sheafloc;

namespace {

const SpaceDescriptor Z1 = SpaceDescriptor::surface(1);
const SpaceDescriptor W1 = SpaceDescriptor::flop_threefold();

LaurentSection S(const char* t) { return parse_section(t, Arity::Surface); }
LaurentSection T3(const char* t) { return parse_section(t, Arity::Threefold); }

}  // namespace

TEST_CASE("split bundles")
{
    const TransitionMatrix t = make_split(Z1, 3).transition();
    CHECK(t.twists() == std::vector<int>{-3, 3});
    CHECK(t.entry(0, 0) == LaurentSection::monomial(Arity::Surface, 3, 0));
    CHECK(t.entry(1, 1) == LaurentSection::monomial(Arity::Surface, -3, 0));
    CHECK(t.is_split());
    CHECK(make_split(W1, 0).transition().twists() == std::vector<int>{0, 0});
    CHECK(make_split(SpaceDescriptor::surface(2), 1).transition().entry(0, 0) ==
          LaurentSection::monomial(Arity::Surface, 1, 0));
    CHECK_THROWS_AS(make_split(Z1, -1), UsageError);
}

TEST_CASE("make_from_class support checks")
{
    CHECK_NOTHROW(make_from_class(Z1, 2, S("u*z^-1")));
    CHECK_NOTHROW(make_from_class(W1, 2, T3("u*z^-1 + v*z^-2")));
    CHECK_THROWS_AS(make_from_class(Z1, 1, S("u*z^-1")), UsageError);
    CHECK_THROWS_WITH_AS(make_from_class(Z1, 2, S("z^-1")), doctest::Contains("restriction to l"),
                         UsageError);
    CHECK_THROWS_AS(make_from_class(Z1, 2, S("u*z")), UsageError);
    CHECK_THROWS_AS(make_from_class(Z1, 2, T3("u*z^-1")), UsageError);
}

TEST_CASE("reduce_class drops extendable terms")
{
    const LaurentSection p = S("u*z^-1 + u*z + u^5*z^-1 + z^-1");
    CHECK(reduce_class(Z1, 2, p) == S("u*z^-1 + z^-1"));
}

TEST_CASE("ext basis")
{
    CHECK(ext_basis(Z1, 2) == std::vector<Monomial>{{-2, 1, 0}, {-1, 1, 0}, {-1, 2, 0}});
    for (const SpaceDescriptor& sp : {Z1, SpaceDescriptor::surface(3), W1}) CHECK(ext_basis(sp, 0).empty());
    for (int j = 1; j <= 6; ++j) {
        long degreeOne = 0;
        for (const Monomial& m : ext_basis(W1, j)) degreeOne += m.degree() == 1;
        CHECK(degreeOne == 2 * (2 * j - 2));
    }
    for (const SpaceDescriptor& sp : {Z1, SpaceDescriptor::surface(2), W1})
        for (int j = 0; j <= 6; ++j) {
            long expected = 0;
            for (const Monomial& m : h1_monomials(sp, -2 * j)) expected += m.degree() >= 1;
            CHECK(static_cast<long>(ext_basis(sp, j).size()) == expected);
        }
}

TEST_CASE("random classes are reproducible and in range")
{
    for (const SpaceDescriptor& sp : {Z1, W1})
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            const ExtensionBundle a = random_class(sp, 3, seed);
            CHECK(a == random_class(sp, 3, seed));
            CHECK(a.cls().size() == ext_basis(sp, 3).size());
            for (const auto& [m, c] : a.cls().terms()) {
                CHECK(is_integer(c));
                CHECK(abs(c) <= kDefaultCoeffBound);
                CHECK(c != 0);
            }
        }
    CHECK_FALSE(random_class(Z1, 3, 0) == random_class(Z1, 3, 1));
    const ExtensionBundle unit = random_class(Z1, 4, 3, 1);
    for (const auto& [m, c] : unit.cls().terms()) CHECK(abs(c) == 1);
    CHECK_THROWS_AS(random_class(Z1, 3, 0, 0), UsageError);
}

TEST_CASE("canonical classes identify proportional classes")
{
    const ExtensionBundle e = random_class(W1, 2, 5);
    const CanonicalClass a(e);
    const CanonicalClass b(scaled(e, make_scalar(-7, 3)));
    CHECK(a == b);
    CHECK(a.key() == b.key());
    CHECK(a.bundle.cls().terms().begin()->second == 1);
    CHECK_FALSE(CanonicalClass(random_class(W1, 2, 6)) == a);
    CHECK(CanonicalClass(make_split(Z1, 2)).key() == "zk:1|2|0");
    CHECK_THROWS_AS(scaled(e, 0), UsageError);
}

TEST_CASE("bundle_from_spec")
{
    CHECK(bundle_from_spec(Z1, 3, "split").is_split());
    CHECK(bundle_from_spec(Z1, 3, "random:4") == random_class(Z1, 3, 4));
    CHECK(bundle_from_spec(Z1, 2, "u*z^-2").cls() == S("u*z^-2"));
    CHECK_THROWS_AS(bundle_from_spec(Z1, 3, "random:"), UsageError);
    CHECK_THROWS_AS(bundle_from_spec(Z1, 3, "random:-1"), UsageError);
    CHECK_THROWS_AS(bundle_from_spec(Z1, 3, "u*z^"), UsageError);
}

TEST_CASE("pencil restriction")
{
    const ExtensionBundle e = make_from_class(W1, 2, T3("u*z^-1"));
    CHECK(restrict_to_pencil_divisor(e, Scalar(0)).cls() == S("u*z^-1"));
    CHECK(restrict_to_pencil_divisor(e, std::nullopt).cls().is_zero());
    const ExtensionBundle f = make_from_class(W1, 2, T3("v*z^-1"));
    CHECK(restrict_to_pencil_divisor(f, Scalar(3)).cls() == S("3*u*z^-1"));
    CHECK(restrict_to_pencil_divisor(f, std::nullopt).cls() == S("u*z^-1"));
    for (int j = 0; j <= 4; ++j) {
        const ExtensionBundle r = restrict_to_pencil_divisor(make_split(W1, j), Scalar(2));
        CHECK(r == make_split(Z1, j));
    }
    CHECK_THROWS_AS(restrict_to_pencil_divisor(make_split(Z1, 1), Scalar(0)), UsageError);
}

TEST_CASE("end transition of split and trivial bundles")
{
    CHECK(stabilized_h1(end_transition(make_split(W1, 3))).h1 == 35);
    CHECK(stabilized_h1(end_transition(make_split(W1, 0))).h1 == 0);
    const TransitionMatrix T = end_transition(make_split(Z1, 2));
    CHECK(T.twists() == std::vector<int>{-4, 0, 0, 4});
    CHECK(T.is_split());
}

TEST_CASE("invariants are unchanged by scaling the class by 7/3")
{
    for (const SpaceDescriptor& sp : {Z1, SpaceDescriptor::surface(2), SpaceDescriptor::surface(3), W1})
        for (std::uint64_t seed = 0; seed < 3; ++seed) {
            const ExtensionBundle e = random_class(sp, 3, seed);
            const ExtensionBundle g = scaled(e, make_scalar(7, 3));
            CHECK(width(e).w == width(g).w);
            CHECK(height(e) == height(g));
            CHECK(h1_end(e) == h1_end(g));
        }
}
