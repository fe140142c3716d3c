#include "sheafloc/formulas.hpp"

#include <sstream>

#include "sheafloc/errors.hpp"

namespace sheafloc {

IntPoly poly_mul(const IntPoly& a, const IntPoly& b)
{
    if (a.empty() || b.empty()) return {};
    IntPoly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

std::string to_string(const IntPoly& p)
{
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = p.size(); i-- > 0;) {
        const long c = p[i];
        if (c == 0) continue;
        if (!first) out << (c < 0 ? " - " : " + ");
        else if (c < 0) out << "-";
        const long a = c < 0 ? -c : c;
        if (a != 1 || i == 0) out << a;
        if (i > 0) out << (a != 1 ? "*z" : "z");
        if (i > 1) out << "^" << i;
        first = false;
    }
    return first ? "0" : out.str();
}

std::vector<long> taylor_coeffs(const RationalGenFun& f, int N)
{
    if (N < 0) throw UsageError("number of coefficients must be >= 0");
    if (f.denominator.empty() || f.denominator[0] == 0)
        throw UsageError("denominator vanishes at z = 0: no power series");
    const Scalar d0 = f.denominator[0];
    std::vector<Scalar> a;
    std::vector<long> out;
    for (int n = 0; n <= N; ++n) {
        Scalar acc = n < static_cast<int>(f.numerator.size()) ? Scalar(f.numerator[n]) : Scalar(0);
        for (int i = 1; i <= n && i < static_cast<int>(f.denominator.size()); ++i)
            acc -= f.denominator[i] * a[n - i];
        acc /= d0;
        if (acc.get_den() != 1 || !acc.get_num().fits_slong_p())
            throw ConsistencyError("coefficient " + std::to_string(n) + " is not a machine integer");
        a.push_back(acc);
        out.push_back(acc.get_num().get_si());
    }
    return out;
}

GenFunKind parse_genfun_kind(const std::string& text)
{
    if (text == "split") return GenFunKind::Split;
    if (text == "generic") return GenFunKind::Generic;
    throw UsageError("kind must be 'split' or 'generic', got '" + text + "'");
}

const char* to_string(GenFunKind kind)
{
    return kind == GenFunKind::Split ? "split" : "generic";
}

namespace {

IntPoly monomial(int e, long c = 1)
{
    IntPoly p(e + 1, 0);
    p[e] = c;
    return p;
}

IntPoly add(IntPoly a, const IntPoly& b)
{
    if (b.size() > a.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
    return a;
}

const IntPoly kZMinus1 = {-1, 1};

}  // namespace

RationalGenFun genfun(const SpaceDescriptor& space, GenFunKind kind)
{
    if (!space.is_surface()) {
        const IntPoly den = poly_mul(poly_mul(kZMinus1, kZMinus1), poly_mul(kZMinus1, kZMinus1));
        if (kind == GenFunKind::Split) return {{0, 1, 6, 1}, den};
        return {{0, 1, 2, -1}, den};
    }
    const int k = space.k();
    const IntPoly den = poly_mul(poly_mul(kZMinus1, kZMinus1), add(monomial(k), {-1}));
    if (kind == GenFunKind::Generic) {
        // z^{k+2} - z^3 - z^2 - z
        return {add(monomial(k + 2), {0, -1, -1, -1}), den};
    }
    const int n = k / 2;
    IntPoly inner = k % 2 == 0 ? add(add(monomial(n + 1), monomial(n)), {1, 1})
                               : add(monomial(n + 1, 2), {1, 1});
    return {poly_mul({0, -1}, inner), den};
}

BoundsResult chi_bounds_surface(int j, int k)
{
    if (j < 1) throw UsageError("splitting type must be >= 1");
    if (k < 1) throw UsageError("k must be >= 1");
    const long q = j / k;
    const long r = j % k;
    BoundsResult out;
    out.lower = j - 1;
    out.upper = r == 0 ? q * q * k : q * q * k + (2 * q + 1) * r - 1;
    return out;
}

BoundsResult chi_bounds_w1(int j)
{
    if (j < 1) throw UsageError("splitting type must be >= 1");
    const long J = j;
    BoundsResult out;
    out.lower = J - 1;
    out.upper = (J * J + J) * (J - 1) / 6;
    return out;
}

BoundsResult h1end_bounds_w1(int j)
{
    if (j < 1) throw UsageError("splitting type must be >= 1");
    const long J = j;
    BoundsResult out;
    out.lower = (J * J * J + 3 * J * J - J) / 3;
    out.upper = (4 * J * J * J - J) / 3;
    return out;
}

ModuliDimension moduli_dim(int j)
{
    if (j < 0) throw UsageError("splitting type must be >= 0");
    if (j <= 1) return {std::nullopt, 0};
    return {4L * j - 5, j - 1L};
}

std::vector<Scalar> hilbert_closed_form(const SpaceDescriptor& space, int m)
{
    if (m < 0) throw UsageError("neighbourhood order must be >= 0");
    const Scalar M = m;
    if (space.is_surface()) return {(M + 1) * (space.k() * M + 2), 2 * (M + 1)};
    return {(M + 2) * (M + 1) * (2 * M + 3) / 3, (M + 2) * (M + 1)};
}

}  // namespace sheafloc
