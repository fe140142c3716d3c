#include "sheafloc/cech.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <ostream>

#include "sheafloc/errors.hpp"
#include "sheafloc/field.hpp"
#include "sheafloc/linalg.hpp"

namespace sheafloc {

const char* to_string(RankMethod method)
{
    switch (method) {
    case RankMethod::Auto: return "auto";
    case RankMethod::Exact: return "exact";
    case RankMethod::Modular: return "modular";
    }
    return "?";
}

CechProblem::CechProblem(TransitionMatrix T, int m, DegreeWindow window, RankMethod method)
    : T(std::move(T)), m(m), window(window), method(method)
{
    if (m < 0) throw UsageError("neighbourhood order must be >= 0");
    if (window.uMax < m) throw UsageError("window uMax below the neighbourhood order");
    if (!this->T.space().is_surface() && window.vMax < m)
        throw UsageError("window vMax below the neighbourhood order");
}

DegreeWindow default_window(const TransitionMatrix& T, int m)
{
    const int reach = 2 * T.max_abs_twist() + T.space().k() * m + T.max_abs_z_degree();
    return DegreeWindow(-reach, reach, m, T.space().is_surface() ? 0 : m);
}

CechProblem make_problem(const TransitionMatrix& T, int m, const TruncationPolicy& policy)
{
    DegreeWindow w = default_window(T, m);
    for (int i = 0; i < policy.windowDoublings; ++i) w = w.doubled();
    return CechProblem(T, m, w, policy.method);
}

namespace {

// Problems with at most this many non-extendable cells use exact rationals
// under RankMethod::Auto.
constexpr long kExactCellLimit = 24;

int max_nonext_degree(const TransitionMatrix& T)
{
    int best = -1;
    for (int p : T.twists())
        if (-p - 2 >= 0) best = std::max(best, (-p - 2) / T.space().k());
    return best;
}

template <class Fn>
void for_each_pair(const SpaceDescriptor& space, int d, const DegreeWindow& w, Fn&& fn)
{
    if (space.is_surface()) {
        if (d <= w.uMax) fn(d, 0);
        return;
    }
    for (int t = 0; t <= d; ++t) {
        const int r = d - t;
        if (r <= w.uMax && t <= w.vMax) fn(r, t);
    }
}

long count_nonextendable(const TransitionMatrix& T, int m, const DegreeWindow& w)
{
    long count = 0;
    const int cap = std::min(m, max_nonext_degree(T));
    for (int comp = 0; comp < T.size(); ++comp)
        for (int d = 0; d <= cap; ++d)
            for_each_pair(T.space(), d, w, [&](int r, int t) {
                const int lo = std::max(T.space().v_bound(T.twists()[comp], r, t) + 1, w.zMin);
                if (lo <= -1) count += -lo;
            });
    return count;
}

RankMethod resolve(RankMethod method, long cells)
{
    if (method != RankMethod::Auto) return method;
    return cells <= kExactCellLimit ? RankMethod::Exact : RankMethod::Modular;
}

template <class T>
using UMap = std::map<std::pair<int, Monomial>, T>;

/// Reduction of overlap cochains to coordinates on the non-extendable cells.
///
/// Cochains live in chart-U coordinates. Terms with s >= 0 extend to U and are
/// dropped (or collected into a UMap). For each component b, taken from the last
/// in the gluing order to the first, a V-extendable cell x e_b with s < 0 is
/// removed by subtracting A^{-1}(x e_b), which only touches earlier components.
/// Terms of normal degree above the cap are dropped: reduction never lowers
/// degree, so they cannot reach a non-extendable cell below the cap.
template <class T>
class Reducer {
public:
    struct Term {
        Monomial x;
        T c;
    };
    struct Column {
        int a;
        std::vector<Term> terms;
    };

    Reducer(const TransitionMatrix& tm, const DegreeWindow& w, int cap)
        : tm_(tm), space_(tm.space()), n_(tm.size()), w_(w), cap_(std::max(cap, 0))
    {
        surface_ = space_.is_surface();
        npairs_ = surface_ ? cap_ + 1 : (cap_ + 1) * (cap_ + 2) / 2;
        zn_ = w.zMin < 0 ? -w.zMin : 0;
        for (int d = 0; d <= cap_; ++d) {
            if (surface_) {
                pairR_.push_back(d);
                pairT_.push_back(0);
            } else {
                for (int t = 0; t <= d; ++t) {
                    pairR_.push_back(d - t);
                    pairT_.push_back(t);
                }
            }
        }
        const std::size_t total = static_cast<std::size_t>(n_) * npairs_ * zn_;
        buf_.assign(total, T{});
        stamp_.assign(total, 0);
        nIndex_.assign(total, -1);
        touched_.resize(n_);

        if (cap >= 0) {
            for (int comp = 0; comp < n_; ++comp)
                for (int d = 0; d <= cap_; ++d)
                    for_each_pair(space_, d, w_, [&](int r, int t) {
                        const int lo = std::max(space_.v_bound(tm_.twists()[comp], r, t) + 1, w_.zMin);
                        for (int s = lo; s <= -1; ++s) {
                            nIndex_[index(comp, s, r, t)] = static_cast<int>(cells_.size());
                            cells_.push_back({comp, Monomial{s, r, t}});
                        }
                    });
        }

        inv_.resize(n_);
        for (int b = 0; b < n_; ++b)
            for (int a = 0; a < n_; ++a) {
                if (a == b) continue;
                const LaurentSection& e = tm_.gluing_inverse(a, b);
                if (e.is_zero()) continue;
                Column col{a, {}};
                for (const auto& [x, c] : e.terms()) col.terms.push_back({x, FieldTraits<T>::from_scalar(c)});
                inv_[b].push_back(std::move(col));
            }
    }

    int cap() const { return cap_; }
    int columns() const { return static_cast<int>(cells_.size()); }
    const std::vector<std::pair<int, Monomial>>& cells() const { return cells_; }
    const std::vector<Column>& inverse_column(int b) const { return inv_[b]; }

    void add(int comp, int s, int r, int t, const T& v, UMap<T>* u)
    {
        if (r + t > cap_ || r > w_.uMax || t > w_.vMax) return;
        if (s >= 0) {
            if (u) {
                T& slot = (*u)[{comp, Monomial{s, r, t}}];
                slot += v;
            }
            return;
        }
        if (s < w_.zMin) return;
        const std::size_t idx = index(comp, s, r, t);
        if (stamp_[idx] != gen_) {
            stamp_[idx] = gen_;
            buf_[idx] = T{};
            touched_[comp].push_back(idx);
        }
        buf_[idx] += v;
    }

    /// Seeds A^{-1}(x e_i) minus its diagonal term, scaled by c.
    void add_tails(int i, const Monomial& x, const T& c, UMap<T>* u)
    {
        for (const Column& col : inv_[i])
            for (const Term& term : col.terms)
                add(col.a, x.s + term.x.s, x.r + term.x.r, x.t + term.x.t, c * term.c, u);
    }

    SparseRow<T> reduce(UMap<T>* u)
    {
        const auto& order = tm_.order();
        for (int level = n_ - 1; level >= 0; --level) {
            const int b = order[level];
            auto& list = touched_[b];
            for (std::size_t q = 0; q < list.size(); ++q) {
                const std::size_t idx = list[q];
                if (nIndex_[idx] >= 0) continue;
                const T v = buf_[idx];
                if (FieldTraits<T>::is_zero(v)) continue;
                buf_[idx] = T{};
                const int s = static_cast<int>(idx % zn_) + w_.zMin;
                const int pair = static_cast<int>((idx / zn_) % npairs_);
                const int r = pairR_[pair];
                const int t = pairT_[pair];
                for (const Column& col : inv_[b])
                    for (const Term& term : col.terms)
                        add(col.a, s + term.x.s, r + term.x.r, t + term.x.t, -(v * term.c), u);
            }
        }
        SparseRow<T> out;
        for (int comp = 0; comp < n_; ++comp) {
            for (std::size_t idx : touched_[comp]) {
                if (nIndex_[idx] >= 0 && !FieldTraits<T>::is_zero(buf_[idx]))
                    out.emplace_back(nIndex_[idx], buf_[idx]);
                buf_[idx] = T{};
            }
            touched_[comp].clear();
        }
        ++gen_;
        std::sort(out.begin(), out.end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });
        return out;
    }

private:
    std::size_t index(int comp, int s, int r, int t) const
    {
        const int d = r + t;
        const int pair = surface_ ? r : d * (d + 1) / 2 + t;
        return (static_cast<std::size_t>(comp) * npairs_ + pair) * zn_ + (s - w_.zMin);
    }

    const TransitionMatrix& tm_;
    SpaceDescriptor space_;
    int n_;
    DegreeWindow w_;
    int cap_;
    bool surface_ = true;
    int npairs_ = 0;
    int zn_ = 0;
    std::vector<int> pairR_, pairT_;
    std::vector<T> buf_;
    std::vector<std::uint32_t> stamp_;
    std::vector<int> nIndex_;
    std::vector<std::vector<std::size_t>> touched_;
    std::vector<std::pair<int, Monomial>> cells_;
    std::vector<std::vector<Column>> inv_;
    std::uint32_t gen_ = 1;
};

/// One row per chart section x e_i with 0 <= s <= min(v_bound, zMax) and
/// normal degree <= m: the reduced image of A^{-1}(x e_i).
template <class T>
struct GeneratorRows {
    std::vector<int> comp;
    std::vector<Monomial> mono;
    std::vector<SparseRow<T>> rows;
};

template <class T>
GeneratorRows<T> generator_rows(Reducer<T>& R, const TransitionMatrix& tm, int m, const DegreeWindow& w)
{
    GeneratorRows<T> out;
    const T one = FieldTraits<T>::one();
    for (int i = 0; i < tm.size(); ++i)
        for (int d = 0; d <= m; ++d)
            for_each_pair(tm.space(), d, w, [&](int r, int t) {
                const int hi = std::min(tm.space().v_bound(tm.twists()[i], r, t), w.zMax);
                for (int s = 0; s <= hi; ++s) {
                    out.comp.push_back(i);
                    out.mono.push_back({s, r, t});
                    if (d + 1 > R.cap() || R.inverse_column(i).empty() || R.columns() == 0) {
                        out.rows.emplace_back();
                        continue;
                    }
                    R.add_tails(i, Monomial{s, r, t}, one, nullptr);
                    out.rows.push_back(R.reduce(nullptr));
                }
            });
    return out;
}

template <class T>
WindowCohomology window_cohomology(const CechProblem& pb, RankMethod method)
{
    const int cap = std::min(pb.m, max_nonext_degree(pb.T));
    Reducer<T> R(pb.T, pb.window, cap);
    GeneratorRows<T> g = generator_rows(R, pb.T, pb.m, pb.window);
    WindowCohomology out;
    out.sections = static_cast<long>(g.rows.size());
    out.nonExtendable = R.columns();
    out.rank = rank_of(g.rows, R.columns());
    out.h0 = out.sections - out.rank;
    out.h1 = out.nonExtendable - out.rank;
    out.method = method;
    return out;
}

/// Runs fn<Field>() for the chosen method; modular falls back to a second
/// prime if the first divides a denominator.
template <class Fn>
auto dispatch(RankMethod method, Fn&& fn)
{
    if (method == RankMethod::Exact) return fn.template operator()<Scalar>();
    try {
        return fn.template operator()<Fp61>();
    } catch (const ConsistencyError&) {
        return fn.template operator()<Fp62>();
    }
}

}  // namespace

WindowCohomology cohomology_in_window(const CechProblem& pb)
{
    const RankMethod method = resolve(pb.method, count_nonextendable(pb.T, pb.m, pb.window));
    return dispatch(method, [&]<class T>() { return window_cohomology<T>(pb, method); });
}

CohomologyResult cohomology(const CechProblem& pb, int maxRounds)
{
    DegreeWindow w = pb.window;
    WindowCohomology last = cohomology_in_window(pb);
    for (int round = 1; round <= maxRounds; ++round) {
        const DegreeWindow next = w.doubled();
        const WindowCohomology again = cohomology_in_window(CechProblem(pb.T, pb.m, next, pb.method));
        if (again.h0 == last.h0 && again.h1 == last.h1) {
            CohomologyResult out;
            out.h0 = last.h0;
            out.h1 = last.h1;
            out.certificate = {pb.m, w, next, round};
            return out;
        }
        if (round == maxRounds)
            throw TruncationOverflow("cohomology did not stabilize under window doubling", last.h0,
                                     last.h1, again.h0, again.h1);
        last = again;
        w = next;
    }
    throw TruncationOverflow("cohomology: no enlargement rounds allowed", last.h0, last.h1, last.h0,
                             last.h1);
}

int h1_support_order(const TransitionMatrix& T)
{
    return max_nonext_degree(T) + 1;
}

StableH1 stabilized_h1(const TransitionMatrix& T, const TruncationPolicy& policy,
                       std::optional<int> startOrder)
{
    int m = (startOrder ? *startOrder : h1_support_order(T) + 1) + policy.extraOrder;
    m = std::max(m, 0);
    CohomologyResult prev = cohomology(make_problem(T, m, policy), policy.maxRounds);
    for (int round = 0; round < policy.maxRounds; ++round) {
        CohomologyResult next = cohomology(make_problem(T, m + 1, policy), policy.maxRounds);
        if (next.h1 == prev.h1) return {prev.h1, m, prev};
        prev = next;
        ++m;
    }
    throw TruncationOverflow("h1 did not stabilize in the neighbourhood order", prev.h0, prev.h1,
                             prev.h0, prev.h1);
}

namespace {

template <class T>
long pole_count(const TransitionMatrix& tw, int M, int P, const DegreeWindow& w)
{
    const int cap = std::min(M, max_nonext_degree(tw));
    Reducer<T> R(tw, w, cap);
    GeneratorRows<T> g = generator_rows(R, tw, M, w);
    Echelon<T> e(R.columns());
    long below = 0;
    for (std::size_t h = 0; h < g.rows.size(); ++h) {
        if (g.mono[h].degree() < P) ++below;
        else e.insert(g.rows[h]);
    }
    const long rankAbove = e.rank();
    for (std::size_t h = 0; h < g.rows.size(); ++h)
        if (g.mono[h].degree() < P) e.insert(g.rows[h]);
    return below - (e.rank() - rankAbove);
}

std::vector<std::vector<LaurentSection>> pole_basis(const TransitionMatrix& tw, int M, int P,
                                                    const DegreeWindow& w)
{
    const int cap = std::min(M, std::max(max_nonext_degree(tw), P - 1));
    Reducer<Scalar> R(tw, w, cap);
    GeneratorRows<Scalar> g = generator_rows(R, tw, M, w);
    Echelon<Scalar> e(R.columns());
    std::vector<std::size_t> below;
    for (std::size_t h = 0; h < g.rows.size(); ++h) {
        if (g.mono[h].degree() < P) below.push_back(h);
        else e.insert(g.rows[h]);
    }
    std::vector<SparseRow<Scalar>> residual;
    for (std::size_t h : below) residual.push_back(e.reduce(g.rows[h]));
    std::vector<SparseRow<Scalar>> kernel = left_kernel(residual, R.columns());

    std::vector<std::vector<LaurentSection>> basis;
    for (const auto& lambda : kernel) {
        UMap<Scalar> u;
        for (const auto& [idx, coef] : lambda) {
            const std::size_t h = below[idx];
            R.add(g.comp[h], g.mono[h].s, g.mono[h].r, g.mono[h].t, coef, &u);
            R.add_tails(g.comp[h], g.mono[h], coef, &u);
        }
        R.reduce(&u);
        std::vector<LaurentSection> parts(tw.size(), LaurentSection(Arity::Surface));
        for (const auto& [key, c] : u)
            if (key.second.degree() < P) parts[key.first].add_term(key.second, c);
        basis.push_back(std::move(parts));
    }
    return basis;
}

}  // namespace

PoleSections h0_sections_with_u_poles(const TransitionMatrix& T, int poleBound, bool wantBasis,
                                      const TruncationPolicy& policy)
{
    if (!T.space().is_surface()) throw UsageError("pole sections are only modelled on surfaces");
    if (poleBound < 0) throw UsageError("pole bound must be >= 0");
    const int k = T.space().k();
    const int P = poleBound;
    std::vector<int> twists = T.twists();
    for (int& p : twists) p -= k * P;
    const TransitionMatrix tw = T.with_twists(twists);
    const int M = P + T.max_abs_twist() + 1 + policy.extraOrder;

    DegreeWindow w = default_window(tw, M);
    for (int i = 0; i < policy.windowDoublings; ++i) w = w.doubled();

    const RankMethod method =
        wantBasis ? RankMethod::Exact : resolve(policy.method, count_nonextendable(tw, M, w));
    auto count = [&](const DegreeWindow& win) {
        return dispatch(method, [&]<class F>() { return pole_count<F>(tw, M, P, win); });
    };

    PoleSections out;
    out.poleBound = P;
    out.order = M;
    out.poleShift = P;
    long last = count(w);
    for (int round = 1;; ++round) {
        const DegreeWindow next = w.doubled();
        const long again = count(next);
        if (again == last) {
            out.extra = last;
            out.window = w;
            out.confirmedBy = next;
            break;
        }
        if (round >= policy.maxRounds)
            throw TruncationOverflow("pole sections did not stabilize under window doubling", 0, last,
                                     0, again);
        last = again;
        w = next;
    }
    if (wantBasis) {
        out.basis = pole_basis(tw, M, P, out.window);
        if (static_cast<long>(out.basis.size()) != out.extra)
            throw ConsistencyError("pole-section basis size disagrees with the rank count");
    }
    return out;
}

namespace {

std::string cell_label(int comp, const Monomial& x)
{
    std::string s = "e" + std::to_string(comp) + ":z^" + std::to_string(x.s) + "*u^" + std::to_string(x.r);
    if (x.t) s += "*v^" + std::to_string(x.t);
    return s;
}

}  // namespace

ReducedCoboundary reduced_coboundary(const CechProblem& pb)
{
    const int cap = std::min(pb.m, max_nonext_degree(pb.T));
    Reducer<Scalar> R(pb.T, pb.window, cap);
    GeneratorRows<Scalar> g = generator_rows(R, pb.T, pb.m, pb.window);
    ReducedCoboundary out;
    for (const auto& [comp, x] : R.cells()) out.columnLabels.push_back(cell_label(comp, x));
    for (std::size_t h = 0; h < g.rows.size(); ++h) {
        out.rowLabels.push_back(cell_label(g.comp[h], g.mono[h]));
        out.rows.push_back(g.rows[h]);
    }
    return out;
}

void dump_matrix(const ReducedCoboundary& matrix, std::ostream& out)
{
    std::size_t nnz = 0;
    for (const auto& r : matrix.rows) nnz += r.size();
    out << matrix.rowLabels.size() << ' ' << matrix.columnLabels.size() << ' ' << nnz << '\n';
    out << "# rows:";
    for (const auto& l : matrix.rowLabels) out << ' ' << l;
    out << "\n# cols:";
    for (const auto& l : matrix.columnLabels) out << ' ' << l;
    out << '\n';
    for (std::size_t i = 0; i < matrix.rows.size(); ++i)
        for (const auto& [c, v] : matrix.rows[i]) out << i << ' ' << c << ' ' << v.get_str() << '\n';
}

}  // namespace sheafloc
