#include "sheafloc/transition.hpp"

#include <algorithm>
#include <cstdlib>

#include "sheafloc/errors.hpp"

namespace sheafloc {

namespace {

using Matrix = std::vector<std::vector<LaurentSection>>;

Matrix identity(Arity arity, int n)
{
    Matrix out(n, std::vector<LaurentSection>(n, LaurentSection(arity)));
    for (int i = 0; i < n; ++i) out[i][i] = LaurentSection::monomial(arity, 0, 0, 0);
    return out;
}

Matrix product(const Matrix& a, const Matrix& b, Arity arity)
{
    const int n = static_cast<int>(a.size());
    Matrix out(n, std::vector<LaurentSection>(n, LaurentSection(arity)));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            if (a[i][k].is_zero()) continue;
            for (int j = 0; j < n; ++j) {
                if (b[k][j].is_zero()) continue;
                out[i][j] += multiply(a[i][k], b[k][j]);
            }
        }
    return out;
}

LaurentSection det(const Matrix& m, Arity arity)
{
    const int n = static_cast<int>(m.size());
    if (n == 0) return LaurentSection::monomial(arity, 0, 0, 0);
    if (n == 1) return m[0][0];
    LaurentSection out(arity);
    for (int col = 0; col < n; ++col) {
        if (m[0][col].is_zero()) continue;
        Matrix minor;
        for (int i = 1; i < n; ++i) {
            std::vector<LaurentSection> row;
            for (int j = 0; j < n; ++j)
                if (j != col) row.push_back(m[i][j]);
            minor.push_back(std::move(row));
        }
        LaurentSection term = multiply(m[0][col], det(minor, arity));
        if (col % 2) out -= term;
        else out += term;
    }
    return out;
}

}  // namespace

TransitionMatrix::TransitionMatrix(SpaceDescriptor space, std::vector<int> twists, Matrix gluing)
    : space_(space), twists_(std::move(twists)), gluing_(std::move(gluing))
{
    const int n = size();
    if (n == 0) throw UsageError("transition matrix of size 0");
    if (static_cast<int>(gluing_.size()) != n) throw UsageError("gluing matrix has wrong size");
    const Arity arity = space_.arity();
    for (int a = 0; a < n; ++a) {
        if (static_cast<int>(gluing_[a].size()) != n) throw UsageError("gluing matrix is not square");
        for (int b = 0; b < n; ++b) {
            const LaurentSection& e = gluing_[a][b];
            if (e.arity() != arity) throw UsageError("gluing entry has the wrong arity");
            if (a == b) {
                if (!(e == LaurentSection::monomial(arity, 0, 0, 0)))
                    throw UsageError("gluing matrix must have unit diagonal");
            } else if (!e.is_zero() && e.min_degree() < 1) {
                throw UsageError("off-diagonal gluing term of normal degree 0");
            }
        }
    }

    // Kahn's algorithm, smallest index first for a reproducible order.
    std::vector<int> indeg(n, 0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (a != b && !gluing_[a][b].is_zero()) ++indeg[b];
    std::vector<bool> done(n, false);
    while (static_cast<int>(order_.size()) < n) {
        int next = -1;
        for (int i = 0; i < n; ++i)
            if (!done[i] && indeg[i] == 0) {
                next = i;
                break;
            }
        if (next < 0) throw UsageError("gluing matrix is not triangular in any component order");
        done[next] = true;
        order_.push_back(next);
        for (int b = 0; b < n; ++b)
            if (b != next && !gluing_[next][b].is_zero()) --indeg[b];
    }

    // A = I + N with N nilpotent: A^{-1} = sum_k (-N)^k.
    Matrix minusN = identity(arity, n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) minusN[a][b] = a == b ? LaurentSection(arity) : -gluing_[a][b];
    inverse_ = identity(arity, n);
    Matrix power = identity(arity, n);
    for (int k = 1; k < n; ++k) {
        power = product(power, minusN, arity);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) inverse_[a][b] += power[a][b];
    }
}

TransitionMatrix TransitionMatrix::diagonal(SpaceDescriptor space, std::vector<int> twists)
{
    const int n = static_cast<int>(twists.size());
    return TransitionMatrix(space, std::move(twists), identity(space.arity(), n));
}

LaurentSection TransitionMatrix::entry(int a, int b) const
{
    return gluing_[a][b].shifted(Monomial{-twists_[a], 0, 0});
}

LaurentSection TransitionMatrix::determinant() const
{
    Matrix full(size(), std::vector<LaurentSection>(size(), LaurentSection(space_.arity())));
    for (int a = 0; a < size(); ++a)
        for (int b = 0; b < size(); ++b) full[a][b] = entry(a, b);
    return det(full, space_.arity());
}

int TransitionMatrix::max_abs_twist() const
{
    int best = 0;
    for (int p : twists_) best = std::max(best, std::abs(p));
    return best;
}

int TransitionMatrix::max_abs_z_degree() const
{
    int best = 0;
    for (int a = 0; a < size(); ++a)
        for (int b = 0; b < size(); ++b) {
            if (a == b) continue;
            best = std::max({best, gluing_[a][b].max_abs_z_degree(), inverse_[a][b].max_abs_z_degree()});
        }
    return best;
}

bool TransitionMatrix::is_split() const
{
    for (int a = 0; a < size(); ++a)
        for (int b = 0; b < size(); ++b)
            if (a != b && !gluing_[a][b].is_zero()) return false;
    return true;
}

TransitionMatrix TransitionMatrix::twisted(int delta) const
{
    std::vector<int> t = twists_;
    for (int& p : t) p += delta;
    return with_twists(std::move(t));
}

TransitionMatrix TransitionMatrix::with_twists(std::vector<int> twists) const
{
    if (static_cast<int>(twists.size()) != size()) throw UsageError("twist vector has wrong size");
    return TransitionMatrix(space_, std::move(twists), gluing_);
}

}  // namespace sheafloc
