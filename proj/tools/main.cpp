// sheafloc: command-line front end.
//
// Exit codes: 0 success, 1 usage, 2 truncation or consistency failure,
// 3 a checked claim did not hold.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "sheafloc/atlas.hpp"
#include "sheafloc/errors.hpp"
#include "sheafloc/formulas.hpp"
#include "sheafloc/invariants.hpp"

using namespace sheafloc;
using Json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitNumeric = 2;
constexpr int kExitClaim = 3;

const char* kGrammarHint =
    "class grammar: terms coeff*z^a*u^b*v^c joined by + and -, e.g. 'u*z^-1 - 3/2*u^2*z^-2'; "
    "or 'split', or 'random:<seed>'";

struct Common {
    std::string format = "json";
    std::string cache;
    int doublings = 0;
    int extraOrder = 0;
    int extraPole = 0;
    std::string method = "auto";

    TruncationPolicy policy() const
    {
        TruncationPolicy p;
        p.windowDoublings = doublings;
        p.extraOrder = extraOrder;
        p.extraPole = extraPole;
        if (method == "exact") p.method = RankMethod::Exact;
        else if (method == "modular") p.method = RankMethod::Modular;
        return p;
    }

    std::unique_ptr<ResultCache> open_cache() const
    {
        const char* env = std::getenv("SHEAF_CACHE");
        const std::string path = env && *env ? std::string(env) : cache;
        if (path.empty()) return nullptr;
        return std::make_unique<ResultCache>(path);
    }
};

void add_common(CLI::App* sub, Common& c, bool withPolicy = true)
{
    sub->add_option("--format", c.format, "json, csv or pretty")
        ->check(CLI::IsMember({"json", "csv", "pretty"}));
    if (!withPolicy) return;
    sub->add_option("--cache", c.cache, "JSON-lines result cache (SHEAF_CACHE overrides)");
    sub->add_option("--doublings", c.doublings, "extra doublings of every z-window")
        ->check(CLI::Range(0, 6));
    sub->add_option("--extra-order", c.extraOrder, "added to every starting neighbourhood order")
        ->check(CLI::Range(0, 64));
    sub->add_option("--extra-pole", c.extraPole, "added to the starting pole bound")
        ->check(CLI::Range(0, 64));
    sub->add_option("--method", c.method, "rank arithmetic: auto, exact or modular")
        ->check(CLI::IsMember({"auto", "exact", "modular"}));
}

Json with_schema(const Json& body)
{
    Json out;
    out["schema"] = 1;
    for (auto it = body.begin(); it != body.end(); ++it) out[it.key()] = it.value();
    return out;
}

void emit_json(const Json& body, const std::string& format)
{
    std::cout << with_schema(body).dump(format == "pretty" ? 2 : -1) << '\n';
}

std::string csv_list(const std::vector<std::string>& cells)
{
    std::string out;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i) out += ',';
        const std::string& c = cells[i];
        if (c.find_first_of(",\"") == std::string::npos) out += c;
        else {
            out += '"';
            for (char ch : c) out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
            out += '"';
        }
    }
    return out;
}

std::vector<std::string> split_list(const std::string& text)
{
    std::vector<std::string> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

std::vector<int> parse_ints(const std::string& text)
{
    std::vector<int> out;
    for (const std::string& s : split_list(text)) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(s, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != s.size() || s.empty()) throw UsageError("not an integer: '" + s + "'");
        out.push_back(v);
    }
    return out;
}

std::optional<Scalar> parse_pencil_point(const std::string& s)
{
    if (s == "inf" || s == "infinity") return std::nullopt;
    Scalar c;
    if (s.empty() || c.set_str(s, 10) != 0) throw UsageError("not a rational number or 'inf': '" + s + "'");
    c.canonicalize();
    return c;
}

// ---------------------------------------------------------------- invariants

struct InvariantsArgs {
    Common common;
    std::string space;
    int j = 0;
    std::string cls = "split";
    long bound = kDefaultCoeffBound;
    std::string dump;
    int dumpOrder = -1;
};

int run_invariants(const InvariantsArgs& a)
{
    const SpaceDescriptor space = SpaceDescriptor::parse(a.space);
    ExtensionBundle e = make_split(space, 0);
    try {
        e = bundle_from_spec(space, a.j, a.cls, a.bound);
    } catch (const UsageError& ex) {
        throw UsageError(std::string(ex.what()) + "\n" + kGrammarHint);
    }
    auto cache = a.common.open_cache();
    const InvariantReport r = cached_report(e, a.common.policy(), cache.get(), "invariants");

    if (!a.dump.empty()) {
        const int m = a.dumpOrder >= 0 ? a.dumpOrder : r.certificate.m;
        std::ofstream out(a.dump);
        if (!out) throw UsageError("cannot write " + a.dump);
        dump_matrix(reduced_coboundary(make_problem(e.transition(), m, a.common.policy())), out);
    }

    if (a.common.format == "csv") {
        std::cout << "space,j,class,w,h,chi,h1end,delta0,delta1,m\n";
        std::cout << csv_list({r.space, std::to_string(r.j), r.cls, std::to_string(r.w),
                               std::to_string(r.h), std::to_string(r.chi), std::to_string(r.h1End),
                               std::to_string(r.delta0), std::to_string(r.delta1),
                               std::to_string(r.certificate.m)})
                  << '\n';
        return kExitOk;
    }
    emit_json(to_json(r), a.common.format);
    return kExitOk;
}

// -------------------------------------------------------------------- table1

struct Table1Args {
    Common common;
    int samples = 20;
    std::uint64_t seed = 0;
};

int run_table1(const Table1Args& a)
{
    auto cache = a.common.open_cache();
    const std::vector<Table1Row> rows = table1_rows(a.samples, a.seed, 3, a.common.policy(), cache.get());
    const std::vector<Table1Row> want = table1_expected();
    bool mismatch = false;
    for (const Table1Row& r : rows) mismatch = mismatch || r.status == "mismatch";

    if (a.common.format == "csv") {
        std::cout << "space,kind,w,h,h1end\n";
        for (const Table1Row& r : rows)
            std::cout << csv_list({r.space, r.kind, std::to_string(r.w), std::to_string(r.h),
                                   std::to_string(r.h1End)})
                      << '\n';
    } else if (a.common.format == "pretty") {
        std::cout << "j = 3, generic = min over " << a.samples << " samples (seeds " << a.seed
                  << ".." << a.seed + a.samples - 1 << ")\n";
        std::cout << "space  kind       w   h  h1(End)  status\n";
        for (const Table1Row& r : rows) {
            char line[128];
            std::snprintf(line, sizeof line, "%-6s %-8s %3ld %3ld %8ld  %s\n", r.space.c_str(),
                          r.kind.c_str(), r.w, r.h, r.h1End, r.status.c_str());
            std::cout << line;
        }
    } else {
        Json body;
        body["j"] = 3;
        body["samples"] = a.samples;
        body["seeds"] = seed_schedule(a.seed, a.samples);
        Json list = Json::array();
        for (const Table1Row& r : rows)
            list.push_back({{"space", r.space}, {"kind", r.kind}, {"w", r.w}, {"h", r.h},
                            {"h1end", r.h1End}, {"status", r.status}});
        body["rows"] = list;
        emit_json(body, "json");
    }
    if (!mismatch) return kExitOk;
    std::cerr << "table1: computed rows differ from the reference values\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].status != "mismatch") continue;
        std::cerr << "  " << rows[i].space << " " << rows[i].kind << ": expected (w,h,h1end) = ("
                  << want[i].w << "," << want[i].h << "," << want[i].h1End << "), got ("
                  << rows[i].w << "," << rows[i].h << "," << rows[i].h1End << ")\n";
    }
    return kExitClaim;
}

// --------------------------------------------------------------------- sweep

struct SweepArgs {
    Common common;
    std::string space;
    int jmin = 1;
    int jmax = 4;
    int samples = 10;
    std::uint64_t seed = 0;
};

std::optional<BoundsResult> chi_bounds(const SpaceDescriptor& space, int j)
{
    if (j < 1) return std::nullopt;
    return space.is_surface() ? chi_bounds_surface(j, space.k()) : chi_bounds_w1(j);
}

int run_sweep(const SweepArgs& a)
{
    if (a.jmin < 0 || a.jmax < a.jmin) throw UsageError("need 0 <= jmin <= jmax");
    const SpaceDescriptor space = SpaceDescriptor::parse(a.space);
    auto cache = a.common.open_cache();
    const TruncationPolicy policy = a.common.policy();
    bool violated = false;

    Json rows = Json::array();
    std::vector<std::vector<std::string>> csv;
    for (int j = a.jmin; j <= a.jmax; ++j) {
        const InvariantReport split = cached_report(make_split(space, j), policy, cache.get(), "sweep");
        const std::vector<InvariantReport> samples =
            sample_reports(space, j, a.samples, a.seed, policy, cache.get());
        const std::optional<BoundsResult> b = chi_bounds(space, j);
        bool ok = true;
        if (b) {
            for (const InvariantReport& r : samples) ok = ok && r.chi >= b->lower && r.chi <= b->upper;
            ok = ok && split.chi == b->upper;
        }
        violated = violated || !ok;
        Json row;
        row["j"] = j;
        row["split"] = to_json(split);
        if (!samples.empty()) {
            const InvariantReport m = componentwise_min(samples);
            row["genericMin"] = {{"w", m.w}, {"h", m.h}, {"chi", m.chi}, {"h1End", m.h1End}};
            csv.push_back({std::to_string(j), std::to_string(split.chi), std::to_string(m.chi),
                           std::to_string(split.h1End), std::to_string(m.h1End),
                           b ? std::to_string(b->lower) : "", b ? std::to_string(b->upper) : "",
                           ok ? "ok" : "violated"});
        }
        if (b) row["chiBounds"] = {b->lower, b->upper};
        row["boundsHold"] = ok;
        rows.push_back(row);
    }
    if (a.common.format == "csv") {
        std::cout << "j,chi_split,chi_min,h1end_split,h1end_min,chi_lower,chi_upper,bounds\n";
        for (const auto& r : csv) std::cout << csv_list(r) << '\n';
    } else {
        emit_json({{"space", space.name()},
                   {"samples", a.samples},
                   {"seeds", seed_schedule(a.seed, a.samples)},
                   {"rows", rows}},
                  a.common.format);
    }
    return violated ? kExitClaim : kExitOk;
}

// -------------------------------------------------------------------- genfun

struct GenfunArgs {
    Common common;
    std::string space;
    std::string kind = "split";
    int jmax = 10;
};

int run_genfun(const GenfunArgs& a)
{
    const SpaceDescriptor space = SpaceDescriptor::parse(a.space);
    const GenFunKind kind = parse_genfun_kind(a.kind);
    const RationalGenFun f = genfun(space, kind);
    const std::vector<long> coeffs = taylor_coeffs(f, a.jmax);
    if (a.common.format == "csv") {
        std::cout << "j,a_j\n";
        for (int j = 0; j <= a.jmax; ++j) std::cout << j << ',' << coeffs[j] << '\n';
        return kExitOk;
    }
    Json table = Json::array();
    for (int j = 0; j <= a.jmax; ++j) table.push_back({j, coeffs[j]});
    emit_json({{"space", space.name()},
               {"kind", to_string(kind)},
               {"numerator", to_string(f.numerator)},
               {"denominator", to_string(f.denominator)},
               {"coefficients", table}},
              a.common.format);
    return kExitOk;
}

// ------------------------------------------------------------------- hilbert

struct HilbertArgs {
    Common common;
    std::string space;
    int m = 0;
    int j = 1;
    std::string cls = "random:0";
    std::string ns = "-1,0,1,2";
    bool end = false;
};

Json poly_json(const std::vector<Scalar>& coeffs)
{
    Json out = Json::array();
    for (const Scalar& c : coeffs) out.push_back(c.get_str());
    return out;
}

int run_hilbert(const HilbertArgs& a)
{
    const SpaceDescriptor space = SpaceDescriptor::parse(a.space);
    const ExtensionBundle e = bundle_from_spec(space, a.j, a.cls);
    const HilbertPolynomial p = hilbert(e, a.m, parse_ints(a.ns), a.end, a.common.policy());
    std::vector<Scalar> closed = hilbert_closed_form(space, a.m);
    if (a.end)
        for (Scalar& c : closed) c *= 2;
    const bool match = p.coeffs == closed;
    HilbertPolynomial expected{a.m, closed, {}};

    if (a.common.format == "csv") {
        std::cout << "n,chi\n";
        for (const auto& [n, v] : p.samples) std::cout << n << ',' << v << '\n';
    } else {
        Json samples = Json::array();
        for (const auto& [n, v] : p.samples) samples.push_back({n, v});
        emit_json({{"space", space.name()},
                   {"j", a.j},
                   {"class", to_string(e.cls())},
                   {"m", a.m},
                   {"bundle", a.end ? "End E" : "E"},
                   {"polynomial", to_string(p)},
                   {"coefficients", poly_json(p.coeffs)},
                   {"closedForm", to_string(expected)},
                   {"matchesClosedForm", match},
                   {"samples", samples}},
                  a.common.format);
    }
    return match ? kExitOk : kExitClaim;
}

// -------------------------------------------------------------------- moduli

struct ModuliArgs {
    Common common;
    int j = 2;
    std::string conormal = "w1";
};

int run_moduli(const ModuliArgs& a)
{
    const ConormalType n = ConormalType::parse(a.conormal);
    const DeformationCount d = gamma_full(a.j, n);
    const ModuliDimension md = moduli_dim(a.j);
    Json body;
    body["j"] = a.j;
    body["conormal"] = n.name();
    body["gamma1"] = d.gamma1;
    if (md.dim) body["projDim"] = *md.dim;
    else body["projDim"] = "degenerate";
    body["chi"] = md.chi;
    if (d.gammaFull) body["gammaFull"] = *d.gammaFull;
    else body["gammaFull"] = "infinite";
    if (a.common.format == "csv") {
        std::cout << "j,conormal,gamma1,projDim,chi,gammaFull\n";
        std::cout << csv_list({std::to_string(a.j), n.name(), std::to_string(d.gamma1),
                               md.dim ? std::to_string(*md.dim) : "degenerate", std::to_string(md.chi),
                               d.gammaFull ? std::to_string(*d.gammaFull) : "infinite"})
                  << '\n';
        return kExitOk;
    }
    emit_json(body, a.common.format);
    return kExitOk;
}

// ----------------------------------------------------------------------- gap

struct GapArgs {
    Common common;
    int k = 2;
    int jmax = 4;
    int samples = 50;
    std::uint64_t seed = 0;
};

int run_gap(const GapArgs& a)
{
    auto cache = a.common.open_cache();
    const ChargeSpectrum c = instanton_gap(a.k, a.jmax, a.samples, a.seed, a.common.policy(), cache.get());
    if (a.common.format == "csv") {
        std::cout << "k,j,chi\n";
        for (const auto& [j, values] : c.achieved)
            for (long v : values) std::cout << a.k << ',' << j << ',' << v << '\n';
    } else {
        Json body = to_json(c);
        body["seeds"] = seed_schedule(a.seed, a.samples);
        emit_json(body, a.common.format);
    }
    return c.verdict == Verdict::Pass ? kExitOk : kExitClaim;
}

// -------------------------------------------------------------------- pencil

struct PencilArgs {
    Common common;
    int j = 1;
    std::string cls = "split";
    std::string cs = "0,1,inf";
};

int run_pencil(const PencilArgs& a)
{
    const ExtensionBundle e = bundle_from_spec(SpaceDescriptor::flop_threefold(), a.j, a.cls);
    std::vector<std::optional<Scalar>> cs;
    for (const std::string& s : split_list(a.cs)) cs.push_back(parse_pencil_point(s));
    if (cs.empty()) throw UsageError("--c needs at least one value");
    const std::vector<PencilPoint> profile = pencil_profile(e, cs, a.common.policy());
    if (a.common.format == "csv") {
        std::cout << "c,w,h\n";
        for (const PencilPoint& p : profile)
            std::cout << (p.c ? p.c->get_str() : "inf") << ',' << p.w << ',' << p.h << '\n';
        return kExitOk;
    }
    Json list = Json::array();
    for (const PencilPoint& p : profile)
        list.push_back({{"c", p.c ? p.c->get_str() : "inf"}, {"w", p.w}, {"h", p.h}});
    emit_json({{"space", "w1"}, {"j", a.j}, {"class", to_string(e.cls())}, {"profile", list}},
              a.common.format);
    return kExitOk;
}

// ---------------------------------------------------------------------- scan

struct ScanArgs {
    Common common;
    std::string mode = "values";
    int k = 1;
    int j = 2;
    int n = 0;
    int samples = 20;
    std::uint64_t seed = 0;
};

int run_scan(const ScanArgs& a)
{
    auto cache = a.common.open_cache();
    const TruncationPolicy policy = a.common.policy();
    const Json seeds = seed_schedule(a.seed, a.samples);
    if (a.mode == "values") {
        const ScanResult s = intermediate_value_scan(a.k, a.j, a.samples, a.seed, policy, cache.get());
        if (a.common.format == "csv") {
            std::cout << "chi,observed\n";
            for (long v = s.bounds.lower; v <= s.bounds.upper; ++v)
                std::cout << v << ',' << (s.achieved.count(v) ? "yes" : "not observed") << '\n';
            return kExitOk;
        }
        Json body = to_json(s);
        body["seeds"] = seeds;
        emit_json(body, a.common.format);
        return kExitOk;
    }
    if (a.mode == "pairs") {
        const std::vector<PairCount> pairs = stratification_pairs(a.k, a.j, a.samples, a.seed, policy, cache.get());
        if (a.common.format == "csv") {
            std::cout << "w,h,count,split\n";
            for (const PairCount& p : pairs)
                std::cout << p.w << ',' << p.h << ',' << p.count << ',' << (p.split ? "yes" : "no") << '\n';
            return kExitOk;
        }
        Json list = Json::array();
        for (const PairCount& p : pairs)
            list.push_back({{"w", p.w}, {"h", p.h}, {"count", p.count}, {"split", p.split}});
        emit_json({{"k", a.k}, {"j", a.j}, {"samples", a.samples}, {"seeds", seeds}, {"pairs", list}},
                  a.common.format);
        return kExitOk;
    }
    const WitnessRecord w = witness_nonempty(a.n, a.k, a.samples, a.seed, policy, cache.get());
    if (a.common.format == "csv") {
        std::cout << "claim,space,j,seed,chi,verdict\n";
        std::cout << csv_list({w.claim, w.space, std::to_string(w.j),
                               w.seed ? std::to_string(*w.seed) : "", std::to_string(w.report.chi),
                               to_string(w.verdict)})
                  << '\n';
    } else {
        emit_json(to_json(w), a.common.format);
    }
    return w.verdict == Verdict::Pass ? kExitOk : kExitClaim;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Local invariants of rank-2 bundles on Z_k and W1"};
    app.require_subcommand(1);

    InvariantsArgs inv;
    auto* cInv = app.add_subcommand("invariants", "width, height, chi, h1(End), Delta of one bundle");
    add_common(cInv, inv.common);
    cInv->add_option("--space", inv.space, "zk:<k> or w1")->required();
    cInv->add_option("--j", inv.j, "splitting type")->required()->check(CLI::NonNegativeNumber);
    cInv->add_option("--class", inv.cls, "split, random:<seed> or a class polynomial");
    cInv->add_option("--coeff-bound", inv.bound, "coefficient bound for random classes")
        ->check(CLI::PositiveNumber);
    cInv->add_option("--dump-coboundary", inv.dump, "write the reduced coboundary matrix to a file");
    cInv->add_option("--dump-order", inv.dumpOrder, "neighbourhood order for the dump");

    Table1Args t1;
    auto* cT1 = app.add_subcommand("table1", "the eight (w, h, h1(End)) rows for j = 3");
    add_common(cT1, t1.common);
    t1.common.format = "csv";
    cT1->add_option("--samples", t1.samples, "random classes per generic row")->check(CLI::PositiveNumber);
    cT1->add_option("--seed", t1.seed, "first seed of the schedule");

    SweepArgs sw;
    auto* cSw = app.add_subcommand("sweep", "split and sampled invariants over a range of j, with bounds");
    add_common(cSw, sw.common);
    cSw->add_option("--space", sw.space, "zk:<k> or w1")->required();
    cSw->add_option("--jmin", sw.jmin, "smallest j")->check(CLI::NonNegativeNumber);
    cSw->add_option("--jmax", sw.jmax, "largest j")->check(CLI::NonNegativeNumber);
    cSw->add_option("--samples", sw.samples, "random classes per j")->check(CLI::NonNegativeNumber);
    cSw->add_option("--seed", sw.seed, "first seed of the schedule");

    GenfunArgs gf;
    auto* cGf = app.add_subcommand("genfun", "coefficients of the h1(End) generating function");
    add_common(cGf, gf.common, false);
    cGf->add_option("--space", gf.space, "zk:<k> or w1")->required();
    cGf->add_option("--kind", gf.kind, "split or generic");
    cGf->add_option("--jmax", gf.jmax, "largest j")->check(CLI::Range(0, 200));

    HilbertArgs hb;
    auto* cHb = app.add_subcommand("hilbert", "Hilbert polynomial of E or End E on a neighbourhood");
    add_common(cHb, hb.common);
    cHb->add_option("--space", hb.space, "zk:<k> or w1")->required();
    cHb->add_option("--m", hb.m, "neighbourhood order")->check(CLI::Range(0, 12));
    cHb->add_option("--j", hb.j, "splitting type")->check(CLI::NonNegativeNumber);
    cHb->add_option("--class", hb.cls, "split, random:<seed> or a class polynomial");
    cHb->add_option("--n", hb.ns, "comma-separated twists (at least 3)");
    cHb->add_flag("--end", hb.end, "use End E");

    ModuliArgs md;
    auto* cMd = app.add_subcommand("moduli", "first-order deformations and moduli dimension");
    add_common(cMd, md.common, false);
    cMd->add_option("--j", md.j, "splitting type")->required()->check(CLI::NonNegativeNumber);
    cMd->add_option("--conormal", md.conormal, "w1, w2 or w3");

    GapArgs gp;
    auto* cGp = app.add_subcommand("gap", "minimal local charge on Z_k");
    add_common(cGp, gp.common);
    cGp->add_option("--k", gp.k, "self-intersection -k of the curve")->required();
    cGp->add_option("--jmax", gp.jmax, "largest j")->check(CLI::NonNegativeNumber);
    cGp->add_option("--samples", gp.samples, "random classes per j")->check(CLI::NonNegativeNumber);
    cGp->add_option("--seed", gp.seed, "first seed of the schedule");

    PencilArgs pc;
    auto* cPc = app.add_subcommand("pencil", "(w, h) along the pencil of surfaces v = c u in W1");
    add_common(cPc, pc.common);
    cPc->add_option("--j", pc.j, "splitting type")->required()->check(CLI::NonNegativeNumber);
    cPc->add_option("--class", pc.cls, "split, random:<seed> or a class polynomial");
    cPc->add_option("--c", pc.cs, "comma-separated rationals or inf");

    ScanArgs sc;
    auto* cSc = app.add_subcommand("scan", "achieved charges, (w, h) strata or a witness on Z_k");
    add_common(cSc, sc.common);
    cSc->add_option("--mode", sc.mode, "values, pairs or witness")
        ->check(CLI::IsMember({"values", "pairs", "witness"}));
    cSc->add_option("--k", sc.k, "self-intersection -k of the curve")->check(CLI::PositiveNumber);
    cSc->add_option("--j", sc.j, "splitting type")->check(CLI::NonNegativeNumber);
    cSc->add_option("--n", sc.n, "target charge (witness mode)")->check(CLI::NonNegativeNumber);
    cSc->add_option("--samples", sc.samples, "random classes per j")->check(CLI::NonNegativeNumber);
    cSc->add_option("--seed", sc.seed, "first seed of the schedule");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*cInv) return run_invariants(inv);
        if (*cT1) return run_table1(t1);
        if (*cSw) return run_sweep(sw);
        if (*cGf) return run_genfun(gf);
        if (*cHb) return run_hilbert(hb);
        if (*cMd) return run_moduli(md);
        if (*cGp) return run_gap(gp);
        if (*cPc) return run_pencil(pc);
        if (*cSc) return run_scan(sc);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const TruncationOverflow& e) {
        std::cerr << "truncation overflow: " << e.what() << " (last two (h0, h1): (" << e.previous_h0
                  << ", " << e.previous_h1 << ") and (" << e.last_h0 << ", " << e.last_h1 << "))\n";
        return kExitNumeric;
    } catch (const ConsistencyError& e) {
        std::cerr << "consistency check failed: " << e.what() << '\n';
        return kExitNumeric;
    }
    return kExitUsage;
}
