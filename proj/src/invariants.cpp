#include "sheafloc/invariants.hpp"

#include <sstream>

#include "sheafloc/errors.hpp"

namespace sheafloc {

namespace {

nlohmann::ordered_json window_json(const DegreeWindow& w)
{
    return {w.zMin, w.zMax};
}

int ceil_div(int a, int b) { return (a + b - 1) / b; }

struct DeltaPair {
    long d0 = 0;
    long d1 = 0;
    int m = 0;
};

// Both differences on one m schedule; settles when three consecutive orders agree.
DeltaPair delta_pair(const ExtensionBundle& e, const TruncationPolicy& policy)
{
    const TransitionMatrix T = e.transition();
    const TransitionMatrix S = make_split(e.space(), e.j()).transition();
    auto at = [&](int m) {
        const CohomologyResult a = cohomology(make_problem(S, m, policy), policy.maxRounds);
        const CohomologyResult b = cohomology(make_problem(T, m, policy), policy.maxRounds);
        return std::pair<long, long>{a.h0 - b.h0, a.h1 - b.h1};
    };
    int m = std::max(0, 2 * e.j() + policy.extraOrder);
    std::pair<long, long> first = at(m);
    int same = 1;
    for (int round = 0; round < policy.maxRounds + 2; ++round) {
        const std::pair<long, long> next = at(m + same);
        if (next == first) {
            if (++same == 3) return {first.first, first.second, m};
        } else {
            first = next;
            m += same;
            same = 1;
        }
    }
    throw TruncationOverflow("delta did not settle in the neighbourhood order", first.first,
                             first.second, first.first, first.second);
}

}  // namespace

nlohmann::ordered_json to_json(const InvariantReport& r)
{
    nlohmann::ordered_json out;
    out["space"] = r.space;
    out["j"] = r.j;
    out["class"] = r.cls;
    out["w"] = r.w;
    out["h"] = r.h;
    out["chi"] = r.chi;
    out["h1End"] = r.h1End;
    out["delta"] = {r.delta0, r.delta1};
    out["certificate"] = {{"m", r.certificate.m},
                          {"zWindow", window_json(r.certificate.zWindow)},
                          {"poleBound", r.certificate.poleBound},
                          {"mEnd", r.certificate.mEnd},
                          {"zWindowEnd", window_json(r.certificate.zWindowEnd)},
                          {"deltaOrder", r.certificate.deltaOrder}};
    return out;
}

InvariantReport report_from_json(const nlohmann::json& j)
{
    try {
        InvariantReport r;
        r.space = j.at("space").get<std::string>();
        r.j = j.at("j").get<int>();
        r.cls = j.at("class").get<std::string>();
        r.w = j.at("w").get<long>();
        r.h = j.at("h").get<long>();
        r.chi = j.at("chi").get<long>();
        r.h1End = j.at("h1End").get<long>();
        r.delta0 = j.at("delta").at(0).get<long>();
        r.delta1 = j.at("delta").at(1).get<long>();
        const auto& c = j.at("certificate");
        auto window = [](const nlohmann::json& w) {
            return DegreeWindow(w.at(0).get<int>(), w.at(1).get<int>(), 0, 0);
        };
        r.certificate.m = c.at("m").get<int>();
        r.certificate.zWindow = window(c.at("zWindow"));
        r.certificate.poleBound = c.at("poleBound").get<int>();
        r.certificate.mEnd = c.at("mEnd").get<int>();
        r.certificate.zWindowEnd = window(c.at("zWindowEnd"));
        r.certificate.deltaOrder = c.at("deltaOrder").get<int>();
        return r;
    } catch (const nlohmann::json::exception& ex) {
        throw UsageError(std::string("malformed invariant report: ") + ex.what());
    }
}

StableH1 height_detail(const ExtensionBundle& e, const TruncationPolicy& policy)
{
    return stabilized_h1(e.transition(), policy, 2 * e.j());
}

long height(const ExtensionBundle& e, const TruncationPolicy& policy)
{
    return height_detail(e, policy).h1;
}

WidthResult width(const ExtensionBundle& e, const TruncationPolicy& policy)
{
    if (!e.space().is_surface()) return {0, 0};
    const TransitionMatrix T = e.transition();
    int P = ceil_div(e.j(), e.space().k()) + 1 + policy.extraPole;
    long prev = h0_sections_with_u_poles(T, P, false, policy).extra;
    for (int round = 0; round < policy.maxRounds; ++round) {
        const long next = h0_sections_with_u_poles(T, P + 1, false, policy).extra;
        if (next == prev) return {prev, P};
        prev = next;
        ++P;
    }
    throw TruncationOverflow("width did not stabilize in the pole order", 0, prev, 0, prev);
}

long chi(const ExtensionBundle& e, const TruncationPolicy& policy)
{
    return width(e, policy).w + height(e, policy);
}

StableH1 h1_end_detail(const ExtensionBundle& e, const TruncationPolicy& policy)
{
    return stabilized_h1(end_transition(e), policy, 2 * e.j());
}

long h1_end(const ExtensionBundle& e, const TruncationPolicy& policy)
{
    return h1_end_detail(e, policy).h1;
}

long psi(const ExtensionBundle& e, int i, int m, const TruncationPolicy& policy)
{
    if (i != 0 && i != 1) throw UsageError("psi index must be 0 or 1");
    if (m < 0) throw UsageError("neighbourhood order must be >= 0");
    const CohomologyResult r = cohomology(make_problem(e.transition(), m, policy), policy.maxRounds);
    return i == 0 ? r.h0 : r.h1;
}

DeltaResult delta(const ExtensionBundle& e, int i, const TruncationPolicy& policy)
{
    if (i != 0 && i != 1) throw UsageError("delta index must be 0 or 1");
    const DeltaPair d = delta_pair(e, policy);
    return {i == 0 ? d.d0 : d.d1, d.m};
}

InvariantReport report(const ExtensionBundle& e, const TruncationPolicy& policy)
{
    InvariantReport r;
    r.space = e.space().name();
    r.j = e.j();
    r.cls = to_string(e.cls());
    const WidthResult w = width(e, policy);
    const StableH1 h = height_detail(e, policy);
    const StableH1 end = h1_end_detail(e, policy);
    const DeltaPair d = delta_pair(e, policy);
    r.w = w.w;
    r.h = h.h1;
    r.chi = r.w + r.h;
    r.h1End = end.h1;
    r.delta0 = d.d0;
    r.delta1 = d.d1;
    r.certificate.m = h.m;
    r.certificate.zWindow = h.at.certificate.window;
    r.certificate.poleBound = w.poleBound;
    r.certificate.mEnd = end.m;
    r.certificate.zWindowEnd = end.at.certificate.window;
    r.certificate.deltaOrder = d.m;
    return r;
}

Scalar HilbertPolynomial::operator()(const Scalar& n) const
{
    Scalar acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * n + *it;
    return acc;
}

namespace {

// Newton divided differences, expanded into the monomial basis.
std::vector<Scalar> interpolate(const std::vector<std::pair<int, long>>& pts)
{
    const std::size_t n = pts.size();
    std::vector<Scalar> dd(n);
    for (std::size_t i = 0; i < n; ++i) dd[i] = pts[i].second;
    for (std::size_t level = 1; level < n; ++level)
        for (std::size_t i = n - 1; i >= level; --i)
            dd[i] = (dd[i] - dd[i - 1]) / Scalar(pts[i].first - pts[i - level].first);

    std::vector<Scalar> coeffs(1, dd[n - 1]);
    for (std::size_t i = n - 1; i-- > 0;) {
        // coeffs <- coeffs * (x - x_i) + dd[i]
        std::vector<Scalar> next(coeffs.size() + 1);
        for (std::size_t c = 0; c < coeffs.size(); ++c) {
            next[c + 1] += coeffs[c];
            next[c] -= coeffs[c] * pts[i].first;
        }
        next[0] += dd[i];
        coeffs = std::move(next);
    }
    while (coeffs.size() > 1 && coeffs.back() == 0) coeffs.pop_back();
    return coeffs;
}

}  // namespace

HilbertPolynomial hilbert(const ExtensionBundle& e, int m, const std::vector<int>& ns,
                          bool endomorphisms, const TruncationPolicy& policy)
{
    if (ns.size() < 3) throw UsageError("hilbert needs at least 3 twist values");
    if (m < 0) throw UsageError("neighbourhood order must be >= 0");
    for (std::size_t a = 0; a < ns.size(); ++a)
        for (std::size_t b = a + 1; b < ns.size(); ++b)
            if (ns[a] == ns[b]) throw UsageError("hilbert twist values must be distinct");

    const TransitionMatrix T = endomorphisms ? end_transition(e) : e.transition();
    HilbertPolynomial out;
    out.m = m;
    for (int n : ns) {
        const CohomologyResult r = cohomology(make_problem(T.twisted(n), m, policy), policy.maxRounds);
        out.samples.push_back({n, r.h0 - r.h1});
    }
    std::vector<std::pair<int, long>> fit(out.samples.begin(), out.samples.end() - 1);
    out.coeffs = interpolate(fit);
    const auto& [nLast, vLast] = out.samples.back();
    if (out(Scalar(nLast)) != vLast) {
        std::ostringstream msg;
        msg << "Hilbert interpolation through " << fit.size() << " points predicts "
            << out(Scalar(nLast)) << " at n=" << nLast << " but the complex gives " << vLast;
        throw ConsistencyError(msg.str());
    }
    return out;
}

std::string to_string(const HilbertPolynomial& p)
{
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = p.coeffs.size(); i-- > 0;) {
        const Scalar& c = p.coeffs[i];
        if (c == 0 && !(first && i == 0)) continue;
        if (!first) out << (c < 0 ? " - " : " + ");
        else if (c < 0) out << "-";
        const Scalar a = abs(c);
        if (i == 0 || a != 1) out << a;
        if (i >= 1) out << (i == 0 || a != 1 ? "*n" : "n");
        if (i >= 2) out << "^" << i;
        first = false;
    }
    return out.str();
}

DeformationCount gamma1(int j, const ConormalType& conormal)
{
    if (j < 0) throw UsageError("splitting type must be >= 0");
    DeformationCount out;
    for (long d : {-2L * j, 0L, 0L, 2L * j})
        for (long e : {conormal.a, conormal.b}) out.gamma1 += h1_p1(d + e);
    out.projDim = out.gamma1 - 1;
    return out;
}

DeformationCount gamma_full(int j, const ConormalType& conormal)
{
    DeformationCount out = gamma1(j, conormal);
    const long a = conormal.a;
    const long b = conormal.b;
    // Sym^m(O(a) + O(b)) = sum over i of O(i a + (m - i) b). A summand that never
    // grows (zero weight) or shrinks (negative weight) makes the sum infinite
    // unless its h1 is already zero; only zero weight with j = 0 qualifies.
    const long lo = std::min(a, b);
    if (lo < 0 || (lo == 0 && j > 0)) return out;
    long total = 0;
    // Every term vanishes once the smallest weight m * lo exceeds 2j - 2; with
    // lo = 0 and j = 0 the terms are all zero.
    const long mMax = lo > 0 ? (2L * j) / lo + 1 : 0;
    for (long m = 0; m <= mMax; ++m)
        for (long i = 0; i <= m; ++i)
            for (long d : {-2L * j, 0L, 0L, 2L * j}) total += h1_p1(d + i * a + (m - i) * b);
    out.gammaFull = total;
    return out;
}

std::vector<PencilPoint> pencil_profile(const ExtensionBundle& e,
                                        const std::vector<std::optional<Scalar>>& cs,
                                        const TruncationPolicy& policy)
{
    std::vector<PencilPoint> out;
    for (const auto& c : cs) {
        const ExtensionBundle f = restrict_to_pencil_divisor(e, c);
        out.push_back({c, width(f, policy).w, height(f, policy)});
    }
    return out;
}

long h1_sub_twist(const ExtensionBundle& e, const TruncationPolicy& policy)
{
    return stabilized_h1(e.transition().twisted(-e.j()), policy, 2 * e.j()).h1;
}

}  // namespace sheafloc
