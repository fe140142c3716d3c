#pragma once

// Brute-force reference for small cases: the whole windowed Cech complex as a
// dense rational matrix. Shares nothing with the library engine except the
// LaurentSection arithmetic.

#include <algorithm>
#include <map>
#include <vector>

#include "sheafloc/laurent.hpp"
#include "sheafloc/spaces.hpp"

namespace oracle {

using sheafloc::Arity;
using sheafloc::LaurentSection;
using sheafloc::Monomial;
using sheafloc::Scalar;
using sheafloc::SpaceDescriptor;

using Matrix = std::vector<std::vector<LaurentSection>>;

inline LaurentSection one(Arity a) { return LaurentSection::monomial(a, 0, 0, 0); }

inline Matrix mul(const Matrix& x, const Matrix& y, Arity a)
{
    const std::size_t n = x.size();
    Matrix out(n, std::vector<LaurentSection>(n, LaurentSection(a)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t j = 0; j < n; ++j) out[i][j] += sheafloc::multiply(x[i][k], y[k][j]);
    return out;
}

/// V-frame transition of E: b = T a with T = [[z^j, z^j c], [0, z^-j]].
inline Matrix bundle_transition(const SpaceDescriptor& sp, int j, const LaurentSection& c)
{
    const Arity a = sp.arity();
    return {{LaurentSection::monomial(a, j, 0, 0), c.shifted({j, 0, 0})},
            {LaurentSection(a), LaurentSection::monomial(a, -j, 0, 0)}};
}

/// Inverse of the 2x2 transition via the adjugate; det is z^0.
inline Matrix inverse2(const Matrix& t, Arity a)
{
    LaurentSection det = sheafloc::multiply(t[0][0], t[1][1]) - sheafloc::multiply(t[0][1], t[1][0]);
    // det is a unit monomial c z^e
    const auto& [m, c] = *det.terms().begin();
    LaurentSection inv(a, Monomial{-m.s, 0, 0}, 1 / c);
    return {{sheafloc::multiply(t[1][1], inv), sheafloc::multiply(-t[0][1], inv)},
            {sheafloc::multiply(-t[1][0], inv), sheafloc::multiply(t[0][0], inv)}};
}

/// End transition M -> T M T^{-1} in the basis E11, E12, E21, E22.
inline Matrix end_transition(const Matrix& t, Arity a)
{
    const Matrix ti = inverse2(t, a);
    Matrix out(4, std::vector<LaurentSection>(4, LaurentSection(a)));
    for (int b = 0; b < 4; ++b) {
        Matrix unit(2, std::vector<LaurentSection>(2, LaurentSection(a)));
        unit[b / 2][b % 2] = one(a);
        Matrix img = mul(mul(t, unit, a), ti, a);
        for (int x = 0; x < 4; ++x) out[x][b] = img[x / 2][x % 2];
    }
    return out;
}

/// Inverse of the End transition: M -> T^{-1} M T.
inline Matrix end_inverse(const Matrix& t, Arity a)
{
    return end_transition(inverse2(t, a), a);
}

/// Exact rank of a dense rational matrix (rows are vectors).
inline long dense_rank(std::vector<std::vector<Scalar>> rows)
{
    long rank = 0;
    if (rows.empty()) return 0;
    const std::size_t cols = rows[0].size();
    std::size_t r0 = 0;
    for (std::size_t c = 0; c < cols && r0 < rows.size(); ++c) {
        std::size_t piv = r0;
        while (piv < rows.size() && rows[piv][c] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[piv], rows[r0]);
        for (std::size_t r = r0 + 1; r < rows.size(); ++r) {
            if (rows[r][c] == 0) continue;
            const Scalar f = rows[r][c] / rows[r0][c];
            for (std::size_t cc = c; cc < cols; ++cc) rows[r][cc] -= f * rows[r0][cc];
        }
        ++r0;
        ++rank;
    }
    return rank;
}

/// h^1 on l^(m) from the windowed complex: C^1 = all monomials per component
/// with zMin <= s <= zMax, normal degree <= m. Coboundaries are the U-holomorphic
/// cells and T^{-1}(y e_i) for V-holomorphic y (s <= k deg) in the window.
inline long h1(const SpaceDescriptor& sp, const Matrix& tinv, int m, int zMin, int zMax)
{
    const int n = static_cast<int>(tinv.size());
    std::map<std::pair<int, Monomial>, int> cell;
    std::vector<std::pair<int, Monomial>> cells;
    for (int i = 0; i < n; ++i)
        for (int d = 0; d <= m; ++d)
            for (int t = 0; t <= (sp.is_surface() ? 0 : d); ++t)
                for (int s = zMin; s <= zMax; ++s) {
                    Monomial x{s, d - t, t};
                    cell[{i, x}] = static_cast<int>(cells.size());
                    cells.push_back({i, x});
                }
    std::vector<std::vector<Scalar>> rows;
    for (const auto& [i, x] : cells)
        if (x.s >= 0) {
            std::vector<Scalar> row(cells.size());
            row[cell[{i, x}]] = 1;
            rows.push_back(std::move(row));
        }
    // V-side generators range past the window so that shifted images still
    // cover its edges; images are cut to the window.
    int reach = 0;
    for (const auto& col : tinv)
        for (const auto& e : col) reach = std::max(reach, e.max_abs_z_degree());
    for (int i = 0; i < n; ++i)
        for (int d = 0; d <= m; ++d)
            for (int t = 0; t <= (sp.is_surface() ? 0 : d); ++t)
                for (int s = zMin - reach; s <= std::min(zMax + reach, sp.v_bound(0, d - t, t)); ++s) {
                    const Monomial x{s, d - t, t};
                    std::vector<Scalar> row(cells.size());
                    bool any = false;
                    for (int a = 0; a < n; ++a)
                        for (const auto& [y, c] : tinv[a][i].terms()) {
                            auto it = cell.find({a, x * y});
                            if (it == cell.end()) continue;
                            row[it->second] += c;
                            any = true;
                        }
                    if (any) rows.push_back(std::move(row));
                }
    return static_cast<long>(cells.size()) - dense_rank(std::move(rows));
}

}  // namespace oracle
