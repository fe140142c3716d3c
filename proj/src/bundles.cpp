#include "sheafloc/bundles.hpp"

#include <limits>
#include <random>

#include "sheafloc/errors.hpp"

namespace sheafloc {

SplittingType::SplittingType(int j) : j(j)
{
    if (j < 0) throw UsageError("splitting type must be >= 0");
}

ExtensionBundle::ExtensionBundle(SpaceDescriptor space, SplittingType j, LaurentSection cls)
    : space_(space), j_(j), cls_(std::move(cls))
{
    if (cls_.arity() != space_.arity()) throw UsageError("class arity does not match the space");
}

TransitionMatrix ExtensionBundle::transition() const
{
    const Arity ar = space_.arity();
    const LaurentSection one = LaurentSection::monomial(ar, 0, 0, 0);
    return TransitionMatrix(space_, {-j(), j()}, {{one, cls_}, {LaurentSection(ar), one}});
}

CanonicalClass::CanonicalClass(const ExtensionBundle& e) : bundle(e)
{
    if (!e.is_split()) bundle = scaled(e, 1 / e.cls().terms().begin()->second);
}

std::string CanonicalClass::key() const
{
    return bundle.space().name() + "|" + std::to_string(bundle.j()) + "|" + to_string(bundle.cls());
}

ExtensionBundle make_split(const SpaceDescriptor& space, int j)
{
    return ExtensionBundle(space, SplittingType(j), LaurentSection(space.arity()));
}

std::vector<Monomial> ext_basis(const SpaceDescriptor& space, int j)
{
    if (j < 0) throw UsageError("splitting type must be >= 0");
    std::vector<Monomial> out;
    for (const Monomial& m : h1_monomials(space, -2 * j))
        if (m.degree() >= 1) out.push_back(m);
    return out;
}

LaurentSection reduce_class(const SpaceDescriptor& space, int j, const LaurentSection& p)
{
    if (p.arity() != space.arity()) throw UsageError("class arity does not match the space");
    const TwistedMonomialTest test{space, -2 * j};
    LaurentSection out(space.arity());
    for (const auto& [m, c] : p.terms())
        if (!test.extends_to_U(m) && !test.extends_to_V(m)) out.add_term(m, c);
    return out;
}

ExtensionBundle make_from_class(const SpaceDescriptor& space, int j, const LaurentSection& p)
{
    SplittingType type(j);
    if (p.arity() != space.arity()) throw UsageError("class arity does not match the space");
    const TwistedMonomialTest test{space, -2 * j};
    for (const auto& [m, c] : p.terms()) {
        const std::string term = to_string(LaurentSection(space.arity(), m, c));
        if (test.extends_to_U(m) || test.extends_to_V(m))
            throw UsageError("term " + term + " is not in the Ext basis for j=" + std::to_string(j) +
                             " (it extends to a chart)");
        if (m.degree() == 0)
            throw UsageError("term " + term + " has normal degree 0: changes restriction to l");
    }
    return ExtensionBundle(space, type, p);
}

namespace {

// Uniform on {-bound..-1, 1..bound} by rejection, independent of the
// standard library's distribution implementation.
long draw_nonzero(std::mt19937_64& gen, long bound)
{
    const std::uint64_t range = 2 * static_cast<std::uint64_t>(bound);
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % range;
    std::uint64_t x;
    do {
        x = gen();
    } while (x >= limit);
    const long v = static_cast<long>(x % range);
    return v < bound ? v - bound : v - bound + 1;
}

}  // namespace

ExtensionBundle random_class(const SpaceDescriptor& space, int j, std::uint64_t seed, long coeffBound)
{
    if (coeffBound < 1) throw UsageError("coefficient bound must be >= 1");
    std::mt19937_64 gen(seed);
    LaurentSection cls(space.arity());
    for (const Monomial& m : ext_basis(space, j)) cls.add_term(m, Scalar(draw_nonzero(gen, coeffBound)));
    return ExtensionBundle(space, SplittingType(j), cls);
}

ExtensionBundle scaled(const ExtensionBundle& e, const Scalar& factor)
{
    if (factor == 0) throw UsageError("scaling a class by zero changes the bundle");
    return ExtensionBundle(e.space(), SplittingType(e.j()), e.cls() * factor);
}

TransitionMatrix end_transition(const ExtensionBundle& e)
{
    const Arity ar = e.space().arity();
    const LaurentSection zero(ar);
    const LaurentSection one = LaurentSection::monomial(ar, 0, 0, 0);
    using M2 = std::vector<std::vector<LaurentSection>>;
    const M2 A = {{one, e.cls()}, {zero, one}};
    const M2 Ainv = {{one, -e.cls()}, {zero, one}};
    auto mul = [&](const M2& x, const M2& y) {
        M2 out(2, std::vector<LaurentSection>(2, zero));
        for (int i = 0; i < 2; ++i)
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l) out[i][l] += multiply(x[i][k], y[k][l]);
        return out;
    };

    const int basis[4][2] = {{0, 1}, {0, 0}, {1, 1}, {1, 0}};
    const int p[2] = {-e.j(), e.j()};
    std::vector<int> twists;
    M2 gluing(4, std::vector<LaurentSection>(4, zero));
    for (int b = 0; b < 4; ++b) {
        twists.push_back(p[basis[b][0]] - p[basis[b][1]]);
        M2 unit(2, std::vector<LaurentSection>(2, zero));
        unit[basis[b][0]][basis[b][1]] = one;
        const M2 image = mul(mul(A, unit), Ainv);
        for (int a = 0; a < 4; ++a) gluing[a][b] = image[basis[a][0]][basis[a][1]];
    }
    return TransitionMatrix(e.space(), twists, gluing);
}

ExtensionBundle restrict_to_pencil_divisor(const ExtensionBundle& e, std::optional<Scalar> c)
{
    if (e.space().is_surface()) throw UsageError("pencil restriction needs a bundle on w1");
    const LaurentSection cls = c ? substitute_v_with_cu(e.cls(), *c)
                                 : substitute_v_with_cu(swap_u_v(e.cls()), Scalar(0));
    return ExtensionBundle(SpaceDescriptor::surface(1), SplittingType(e.j()), cls);
}

ExtensionBundle bundle_from_spec(const SpaceDescriptor& space, int j, const std::string& spec,
                                 long coeffBound)
{
    if (spec == "split") return make_split(space, j);
    if (spec.rfind("random:", 0) == 0) {
        const std::string digits = spec.substr(7);
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
            throw UsageError("bad seed in '" + spec + "' (expected random:<non-negative integer>)");
        return random_class(space, j, std::stoull(digits), coeffBound);
    }
    return make_from_class(space, j, parse_section(spec, space.arity()));
}

}  // namespace sheafloc
