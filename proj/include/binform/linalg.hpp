#pragma once

// Exact dense linear algebra over F_p / Q, enough for the graded kernels,
// membership systems and transfer solves. Deterministic: no pivoting
// heuristics beyond first-nonzero.

#include "binform/scalar.hpp"

#include <optional>
#include <vector>

namespace binform {

using Row = std::vector<Scalar>;
using Mat = std::vector<Row>;

inline Mat zero_matrix(size_t rows, size_t cols, long long p) {
    return Mat(rows, Row(cols, Scalar::zero(p)));
}

inline Mat identity_matrix(size_t n, long long p) {
    Mat m = zero_matrix(n, n, p);
    for (size_t i = 0; i < n; ++i) m[i][i] = Scalar::one(p);
    return m;
}

inline Mat transpose(const Mat& a) {
    if (a.empty()) return {};
    Mat t(a[0].size(), Row(a.size(), Scalar::zero(0)));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
    return t;
}

inline Row mat_apply(const Mat& a, const Row& x) {
    Row y;
    y.reserve(a.size());
    for (const auto& row : a) {
        Scalar s = row.empty() ? Scalar() : Scalar::zero(row[0].characteristic());
        for (size_t j = 0; j < row.size(); ++j)
            if (!x[j].is_zero() && !row[j].is_zero()) s += row[j] * x[j];
        y.push_back(s);
    }
    return y;
}

inline Mat mat_mul(const Mat& a, const Mat& b) {
    size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    long long p = n && !a[0].empty() ? a[0][0].characteristic() : 0;
    Mat c = zero_matrix(n, m, p);
    for (size_t i = 0; i < n; ++i)
        for (size_t l = 0; l < k; ++l) {
            if (a[i][l].is_zero()) continue;
            for (size_t j = 0; j < m; ++j)
                if (!b[l][j].is_zero()) c[i][j] += a[i][l] * b[l][j];
        }
    return c;
}

// In-place reduced row echelon form; returns the pivot column of each
// pivot row (row-echelon rows are moved to the top, zero rows below).
inline std::vector<size_t> rref(Mat& m) {
    std::vector<size_t> pivots;
    if (m.empty()) return pivots;
    size_t rows = m.size(), cols = m[0].size(), r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t sel = r;
        while (sel < rows && m[sel][c].is_zero()) ++sel;
        if (sel == rows) continue;
        std::swap(m[sel], m[r]);
        Scalar inv = m[r][c].inverse();
        for (size_t j = c; j < cols; ++j) m[r][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            Scalar f = m[i][c];
            for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

inline size_t rank(Mat m) { return rref(m).size(); }

// Nullspace basis of a (rows x cols) matrix; each basis vector has length
// cols. RREF-canonical, hence deterministic.
inline std::vector<Row> kernel(Mat m, long long p) {
    if (m.empty()) return {};
    size_t cols = m[0].size();
    std::vector<size_t> pivots = rref(m);
    std::vector<bool> is_pivot(cols, false);
    for (size_t c : pivots) is_pivot[c] = true;
    std::vector<Row> basis;
    for (size_t free_c = 0; free_c < cols; ++free_c) {
        if (is_pivot[free_c]) continue;
        Row v(cols, Scalar::zero(p));
        v[free_c] = Scalar::one(p);
        for (size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = -m[i][free_c];
        basis.push_back(std::move(v));
    }
    return basis;
}

// One exact solution of A x = b (free variables set to zero), or nullopt
// when the system is inconsistent.
inline std::optional<Row> solve(const Mat& a, const Row& b, long long p) {
    if (a.empty()) {
        for (const auto& s : b)
            if (!s.is_zero()) return std::nullopt;
        return Row{};
    }
    size_t rows = a.size(), cols = a[0].size();
    Mat aug = a;
    for (size_t i = 0; i < rows; ++i) aug[i].push_back(b[i]);
    std::vector<size_t> pivots = rref(aug);
    Row x(cols, Scalar::zero(p));
    for (size_t i = 0; i < pivots.size(); ++i) {
        if (pivots[i] == cols) return std::nullopt;   // pivot in the RHS column
        x[pivots[i]] = aug[i][cols];
    }
    return x;
}

// Span tracker: maintains an echelonized basis; insert() reports whether the
// vector enlarged the span.
class SpanBasis {
public:
    explicit SpanBasis(long long p) : p_(p) {}

    size_t dim() const { return rows_.size(); }

    bool contains(Row v) const { return !reduce(v); }

    bool insert(Row v) {
        if (!reduce(v)) return false;
        size_t lead = 0;
        while (v[lead].is_zero()) ++lead;
        Scalar inv = v[lead].inverse();
        for (auto& s : v) s *= inv;
        rows_.push_back(std::move(v));
        leads_.push_back(lead);
        return true;
    }

private:
    // reduces v against the basis; returns true when a nonzero remainder is left
    bool reduce(Row& v) const {
        for (size_t i = 0; i < rows_.size(); ++i) {
            if (v[leads_[i]].is_zero()) continue;
            Scalar f = v[leads_[i]];
            for (size_t j = 0; j < v.size(); ++j) v[j] -= f * rows_[i][j];
        }
        for (const auto& s : v)
            if (!s.is_zero()) return true;
        return false;
    }

    long long p_;
    std::vector<Row> rows_;
    std::vector<size_t> leads_;
};

} // namespace binform
