#pragma once

/// Exact sparse linear algebra over the library's fields.  Row-echelon
/// reduction with deterministic pivoting (columns swept in ascending order,
/// first row with a nonzero entry wins), reduced echelon form with normalized
/// pivots, kernel bases and exact solving.  Over prime fields with wide
/// matrices a Markowitz-style pivot order keeps fill down for rank-only
/// computations.

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "cacti/scalar.hpp"

namespace cacti {

using SparseVecS = std::vector<std::pair<int, Scalar>>; // sorted by index, no zeros

inline void sv_add_term(SparseVecS& v, int idx, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = std::lower_bound(v.begin(), v.end(), idx,
                               [](const auto& p, int i) { return p.first < i; });
    if (it != v.end() && it->first == idx) {
        it->second += c;
        if (it->second.is_zero()) v.erase(it);
    } else {
        v.insert(it, {idx, c});
    }
}

inline const Scalar* sv_get(const SparseVecS& v, int idx) {
    auto it = std::lower_bound(v.begin(), v.end(), idx,
                               [](const auto& p, int i) { return p.first < i; });
    if (it != v.end() && it->first == idx) return &it->second;
    return nullptr;
}

/// v += c * w
inline void sv_axpy(SparseVecS& v, const Scalar& c, const SparseVecS& w) {
    if (c.is_zero()) return;
    SparseVecS out;
    out.reserve(v.size() + w.size());
    std::size_t i = 0, j = 0;
    while (i < v.size() || j < w.size()) {
        if (j == w.size() || (i < v.size() && v[i].first < w[j].first)) {
            out.push_back(v[i++]);
        } else if (i == v.size() || w[j].first < v[i].first) {
            Scalar s = c * w[j].second;
            if (!s.is_zero()) out.push_back({w[j].first, s});
            ++j;
        } else {
            Scalar s = v[i].second + c * w[j].second;
            if (!s.is_zero()) out.push_back({v[i].first, s});
            ++i;
            ++j;
        }
    }
    v = std::move(out);
}

inline void sv_scale(SparseVecS& v, const Scalar& c) {
    for (auto& [i, s] : v) s *= c;
}

struct SparseMatrix {
    int rows = 0, cols = 0;
    Field field = Field::rationals();
    std::vector<SparseVecS> row_data; // per-row sparse vectors

    SparseMatrix() = default;
    SparseMatrix(int r, int c, const Field& f) : rows(r), cols(c), field(f), row_data(r) {}

    void add(int r, int c, const Scalar& s) { sv_add_term(row_data[r], c, s); }

    long nnz() const {
        long n = 0;
        for (const auto& r : row_data) n += static_cast<long>(r.size());
        return n;
    }

    SparseMatrix transpose() const {
        SparseMatrix t(cols, rows, field);
        for (int r = 0; r < rows; ++r)
            for (const auto& [c, s] : row_data[r]) t.row_data[c].push_back({r, s});
        for (auto& row : t.row_data)
            std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        return t;
    }
};

/// Reduced row echelon form: pivots normalized to 1, pivot columns cleared
/// above and below, rows ordered by pivot column.
struct Echelon {
    int cols = 0;
    Field field = Field::rationals();
    std::vector<SparseVecS> rows;  // echelon rows, leading column ascending
    std::vector<int> pivot_cols;   // pivot_cols[k] = leading column of rows[k]

    int rank() const { return static_cast<int>(rows.size()); }

    /// reduce a vector modulo the row space
    SparseVecS reduce(SparseVecS v) const {
        for (std::size_t k = 0; k < rows.size(); ++k) {
            const Scalar* c = sv_get(v, pivot_cols[k]);
            if (c) sv_axpy(v, -*c, rows[k]);
        }
        return v;
    }
};

inline Echelon rref(const SparseMatrix& M) {
    Echelon e;
    e.cols = M.cols;
    e.field = M.field;
    std::vector<SparseVecS> work = M.row_data;
    std::vector<bool> used(work.size(), false);
    for (int col = 0; col < M.cols; ++col) {
        int pivot = -1;
        for (std::size_t r = 0; r < work.size(); ++r) {
            if (used[r] || work[r].empty()) continue;
            if (work[r].front().first == col) { pivot = static_cast<int>(r); break; }
        }
        if (pivot < 0) continue;
        used[pivot] = true;
        SparseVecS row = work[pivot];
        Scalar inv = row.front().second.inv();
        sv_scale(row, inv);
        for (std::size_t r = 0; r < work.size(); ++r) {
            if (static_cast<int>(r) == pivot || work[r].empty()) continue;
            const Scalar* c = sv_get(work[r], col);
            if (c) sv_axpy(work[r], -*c, row);
        }
        for (auto& prev : e.rows) {
            const Scalar* c = sv_get(prev, col);
            if (c) sv_axpy(prev, -*c, row);
        }
        e.rows.push_back(std::move(row));
        e.pivot_cols.push_back(col);
    }
    return e;
}

namespace detail {

/// rank-only elimination with Markowitz pivoting, for wide prime-field blocks
inline int rank_markowitz(const SparseMatrix& M) {
    std::vector<SparseVecS> work = M.row_data;
    std::vector<bool> row_done(work.size(), false), col_done(M.cols, false);
    int rank = 0;
    while (true) {
        std::vector<long> col_count(M.cols, 0);
        for (std::size_t r = 0; r < work.size(); ++r) {
            if (row_done[r]) continue;
            for (const auto& [c, s] : work[r]) ++col_count[c];
        }
        long best = -1;
        int br = -1, bc = -1;
        for (std::size_t r = 0; r < work.size(); ++r) {
            if (row_done[r] || work[r].empty()) continue;
            for (const auto& [c, s] : work[r]) {
                if (col_done[c]) continue;
                long score = (static_cast<long>(work[r].size()) - 1) * (col_count[c] - 1);
                if (best < 0 || score < best || (score == best && (c < bc || (c == bc && static_cast<int>(r) < br)))) {
                    best = score;
                    br = static_cast<int>(r);
                    bc = c;
                }
            }
        }
        if (br < 0) break;
        ++rank;
        row_done[br] = true;
        col_done[bc] = true;
        SparseVecS row = work[br];
        Scalar inv = sv_get(row, bc)->inv();
        sv_scale(row, inv);
        for (std::size_t r = 0; r < work.size(); ++r) {
            if (row_done[r] || work[r].empty()) continue;
            const Scalar* c = sv_get(work[r], bc);
            if (c) sv_axpy(work[r], -*c, row);
        }
    }
    return rank;
}

} // namespace detail

inline int rank(const SparseMatrix& M) {
    if (M.field.kind == FieldKind::Prime && M.cols > 2000) return detail::rank_markowitz(M);
    return rref(M).rank();
}

/// canonical kernel basis from the reduced echelon form (free columns
/// ascending, free coordinate set to 1)
inline std::vector<SparseVecS> kernel_basis(const SparseMatrix& M) {
    Echelon e = rref(M);
    std::vector<bool> is_pivot(M.cols, false);
    for (int c : e.pivot_cols) is_pivot[c] = true;
    std::vector<SparseVecS> out;
    for (int fc = 0; fc < M.cols; ++fc) {
        if (is_pivot[fc]) continue;
        SparseVecS v;
        for (std::size_t k = 0; k < e.rows.size(); ++k) {
            const Scalar* c = sv_get(e.rows[k], fc);
            if (c) v.push_back({e.pivot_cols[k], -*c});
        }
        v.push_back({fc, Scalar::one(M.field)});
        std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        out.push_back(std::move(v));
    }
    return out;
}

inline SparseMatrix multiply(const SparseMatrix& A, const SparseMatrix& B) {
    SparseMatrix C(A.rows, B.cols, A.field);
    for (int r = 0; r < A.rows; ++r)
        for (const auto& [k, s] : A.row_data[r]) sv_axpy(C.row_data[r], s, B.row_data[k]);
    return C;
}

/// exact solve M x = b; free variables are set to zero
inline std::optional<SparseVecS> solve(const SparseMatrix& M, const SparseVecS& b) {
    SparseMatrix aug(M.rows, M.cols + 1, M.field);
    aug.row_data = M.row_data;
    for (const auto& [r, s] : b) sv_add_term(aug.row_data[r], M.cols, s);
    Echelon e = rref(aug);
    SparseVecS x;
    for (std::size_t k = 0; k < e.rows.size(); ++k) {
        if (e.pivot_cols[k] == M.cols) return std::nullopt; // inconsistent
        const Scalar* c = sv_get(e.rows[k], M.cols);
        if (c) x.push_back({e.pivot_cols[k], *c});
    }
    return x;
}

} // namespace cacti
