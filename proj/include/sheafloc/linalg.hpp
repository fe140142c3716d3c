#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "sheafloc/field.hpp"

namespace sheafloc {

/// Sparse row: (column, value) pairs sorted by column, no zero values.
template <class T>
using SparseRow = std::vector<std::pair<int, T>>;

/// Incremental row echelon form over a field. Pivot rows are normalized to a
/// leading 1 and kept sparse; reduction uses a dense scratch accumulator.
template <class T>
class Echelon {
public:
    explicit Echelon(int columns) : columns_(columns), pivotOf_(columns, -1), acc_(columns) {}

    int columns() const { return columns_; }
    int rank() const { return static_cast<int>(rows_.size()); }
    bool full() const { return rank() == columns_; }
    const std::vector<SparseRow<T>>& rows() const { return rows_; }

    /// Residual of row modulo the current row space.
    SparseRow<T> reduce(const SparseRow<T>& row)
    {
        if (row.empty()) return {};
        int lo = row.front().first;
        for (const auto& [c, v] : row) acc_[c] = v;
        SparseRow<T> out;
        for (int c = lo; c < columns_; ++c) {
            if (FieldTraits<T>::is_zero(acc_[c])) continue;
            const int p = pivotOf_[c];
            if (p < 0) {
                out.emplace_back(c, acc_[c]);
                acc_[c] = T{};
                continue;
            }
            const T f = acc_[c];
            for (const auto& [cc, vv] : rows_[p]) acc_[cc] -= f * vv;
            acc_[c] = T{};
        }
        return out;
    }

    /// Adds the row; returns true if it raised the rank.
    bool insert(const SparseRow<T>& row)
    {
        if (full()) return false;
        SparseRow<T> r = reduce(row);
        if (r.empty()) return false;
        const T inv = FieldTraits<T>::one() / r.front().second;
        for (auto& [c, v] : r) v *= inv;
        pivotOf_[r.front().first] = static_cast<int>(rows_.size());
        rows_.push_back(std::move(r));
        return true;
    }

private:
    int columns_;
    std::vector<int> pivotOf_;
    std::vector<SparseRow<T>> rows_;
    std::vector<T> acc_;
};

template <class T>
int rank_of(const std::vector<SparseRow<T>>& rows, int columns)
{
    Echelon<T> e(columns);
    for (const auto& r : rows) {
        if (e.full()) break;
        e.insert(r);
    }
    return e.rank();
}

/// Basis of {lambda : sum_i lambda_i rows[i] = 0}, each vector sparse over
/// row indices.
template <class T>
std::vector<SparseRow<T>> left_kernel(const std::vector<SparseRow<T>>& rows, int columns)
{
    const int n = static_cast<int>(rows.size());
    Echelon<T> e(columns + n);
    for (int i = 0; i < n; ++i) {
        SparseRow<T> aug = rows[i];
        aug.emplace_back(columns + i, FieldTraits<T>::one());
        e.insert(aug);
    }
    std::vector<SparseRow<T>> out;
    for (const auto& r : e.rows()) {
        if (r.front().first < columns) continue;
        SparseRow<T> lambda;
        for (const auto& [c, v] : r) lambda.emplace_back(c - columns, v);
        out.push_back(std::move(lambda));
    }
    return out;
}

}  // namespace sheafloc
