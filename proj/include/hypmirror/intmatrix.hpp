#pragma once

#include "hypmirror/rational.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <numeric>
#include <optional>
#include <vector>

namespace hypmirror {

struct IntMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<Int> a; // row-major

    IntMatrix() = default;
    IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

    static IntMatrix identity(int n) {
        IntMatrix m(n, n);
        for (int i = 0; i < n; ++i)
            m.at(i, i) = 1;
        return m;
    }

    static IntMatrix from_rows(const std::vector<std::vector<Int>>& rs) {
        IntMatrix m(static_cast<int>(rs.size()), rs.empty() ? 0 : static_cast<int>(rs[0].size()));
        for (int i = 0; i < m.rows; ++i) {
            assert(static_cast<int>(rs[i].size()) == m.cols);
            for (int j = 0; j < m.cols; ++j)
                m.at(i, j) = rs[i][j];
        }
        return m;
    }

    Int& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    const Int& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

    std::vector<Int> row(int r) const {
        std::vector<Int> out(cols);
        for (int j = 0; j < cols; ++j)
            out[j] = at(r, j);
        return out;
    }

    std::vector<Int> col(int c) const {
        std::vector<Int> out(rows);
        for (int i = 0; i < rows; ++i)
            out[i] = at(i, c);
        return out;
    }

    IntMatrix transpose() const {
        IntMatrix t(cols, rows);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j)
                t.at(j, i) = at(i, j);
        return t;
    }

    IntMatrix operator*(const IntMatrix& other) const {
        assert(cols == other.rows);
        IntMatrix p(rows, other.cols);
        for (int i = 0; i < rows; ++i)
            for (int k = 0; k < cols; ++k) {
                if (at(i, k) == 0)
                    continue;
                for (int j = 0; j < other.cols; ++j)
                    p.at(i, j) += at(i, k) * other.at(k, j);
            }
        return p;
    }

    bool operator==(const IntMatrix& other) const {
        return rows == other.rows && cols == other.cols && a == other.a;
    }

    bool is_zero() const {
        return std::all_of(a.begin(), a.end(), [](const Int& x) { return x == 0; });
    }
};

struct HnfResult {
    IntMatrix h; // row Hermite normal form, U * m = h
    IntMatrix u; // unimodular transform
    int rank = 0;
    std::vector<int> pivot_cols;
};

// Row-style Hermite normal form: pivots positive, entries above a pivot
// reduced into [0, pivot), zero rows at the bottom.
inline HnfResult row_hnf(const IntMatrix& m) {
    HnfResult res;
    res.h = m;
    res.u = IntMatrix::identity(m.rows);
    IntMatrix& h = res.h;
    IntMatrix& u = res.u;
    int r = 0;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int pivot = -1;
        for (int i = r; i < m.rows; ++i)
            if (h.at(i, c) != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0)
            continue;
        if (pivot != r) {
            for (int j = 0; j < m.cols; ++j)
                std::swap(h.at(pivot, j), h.at(r, j));
            for (int j = 0; j < m.rows; ++j)
                std::swap(u.at(pivot, j), u.at(r, j));
        }
        for (int i = r + 1; i < m.rows; ++i) {
            while (h.at(i, c) != 0) {
                Int q = floor_div(h.at(i, c), h.at(r, c));
                if (q != 0) {
                    for (int j = 0; j < m.cols; ++j)
                        h.at(i, j) -= q * h.at(r, j);
                    for (int j = 0; j < m.rows; ++j)
                        u.at(i, j) -= q * u.at(r, j);
                }
                if (h.at(i, c) == 0)
                    break;
                for (int j = 0; j < m.cols; ++j)
                    std::swap(h.at(i, j), h.at(r, j));
                for (int j = 0; j < m.rows; ++j)
                    std::swap(u.at(i, j), u.at(r, j));
            }
        }
        if (h.at(r, c) < 0) {
            for (int j = 0; j < m.cols; ++j)
                h.at(r, j) = -h.at(r, j);
            for (int j = 0; j < m.rows; ++j)
                u.at(r, j) = -u.at(r, j);
        }
        for (int i = 0; i < r; ++i) {
            Int q = floor_div(h.at(i, c), h.at(r, c));
            if (q != 0) {
                for (int j = 0; j < m.cols; ++j)
                    h.at(i, j) -= q * h.at(r, j);
                for (int j = 0; j < m.rows; ++j)
                    u.at(i, j) -= q * u.at(r, j);
            }
        }
        res.pivot_cols.push_back(c);
        ++r;
    }
    res.rank = r;
    return res;
}

inline int rank(const IntMatrix& m) { return row_hnf(m).rank; }

// Basis of { x in Z^cols : m x = 0 }, returned as rows of a matrix in
// canonical HNF (the kernel of an integer matrix is saturated, so the HNF
// basis is the canonical one).
inline IntMatrix kernel_lattice(const IntMatrix& m) {
    HnfResult t = row_hnf(m.transpose());
    int k = m.cols - t.rank;
    IntMatrix basis(k, m.cols);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < m.cols; ++j)
            basis.at(i, j) = t.u.at(t.rank + i, j);
    return row_hnf(basis).h;
}

// Fraction-free determinant (Bareiss).
inline Int det(const IntMatrix& m) {
    assert(m.rows == m.cols);
    int n = m.rows;
    if (n == 0)
        return 1;
    IntMatrix w = m;
    Int prev = 1;
    int sgn = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (w.at(k, k) == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (w.at(i, k) != 0) {
                    p = i;
                    break;
                }
            if (p < 0)
                return 0;
            for (int j = 0; j < n; ++j)
                std::swap(w.at(k, j), w.at(p, j));
            sgn = -sgn;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                w.at(i, j) = (w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j)) / prev;
        prev = w.at(k, k);
    }
    return sgn > 0 ? w.at(n - 1, n - 1) : -w.at(n - 1, n - 1);
}

struct Minor {
    std::vector<int> row_set;
    std::vector<int> col_set;
    Int value;
};

namespace detail {
inline void subsets_of_size(int n, int k, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> idx(k);
    std::function<void(int, int)> rec = [&](int start, int depth) {
        if (depth == k) {
            fn(idx);
            return;
        }
        for (int i = start; i <= n - (k - depth); ++i) {
            idx[depth] = i;
            rec(i + 1, depth + 1);
        }
    };
    if (k <= n)
        rec(0, 0);
}
} // namespace detail

// All k x k minors. When the matrix has exactly k rows only column subsets
// vary; otherwise row subsets are enumerated as well.
inline std::vector<Minor> square_minors(const IntMatrix& m, int k) {
    std::vector<Minor> out;
    std::vector<std::vector<int>> row_sets;
    if (m.rows == k) {
        std::vector<int> all(k);
        std::iota(all.begin(), all.end(), 0);
        row_sets.push_back(all);
    } else {
        detail::subsets_of_size(m.rows, k, [&](const std::vector<int>& rs) { row_sets.push_back(rs); });
    }
    detail::subsets_of_size(m.cols, k, [&](const std::vector<int>& cs) {
        for (const auto& rs : row_sets) {
            IntMatrix sub(k, k);
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j)
                    sub.at(i, j) = m.at(rs[i], cs[j]);
            out.push_back(Minor{rs, cs, det(sub)});
        }
    });
    return out;
}

// Smith invariant factors d_1 | d_2 | ... (nonzero ones only).
inline std::vector<Int> smith_invariants(const IntMatrix& m) {
    IntMatrix w = m;
    int n = std::min(w.rows, w.cols);
    std::vector<Int> inv;
    int offset = 0;
    while (offset < n) {
        // find a nonzero entry in the working block
        int pr = -1, pc = -1;
        for (int i = offset; i < w.rows && pr < 0; ++i)
            for (int j = offset; j < w.cols; ++j)
                if (w.at(i, j) != 0) {
                    pr = i;
                    pc = j;
                    break;
                }
        if (pr < 0)
            break;
        for (int j = 0; j < w.cols; ++j)
            std::swap(w.at(offset, j), w.at(pr, j));
        for (int i = 0; i < w.rows; ++i)
            std::swap(w.at(i, offset), w.at(i, pc));
        bool clean = false;
        while (!clean) {
            clean = true;
            for (int i = offset + 1; i < w.rows; ++i)
                while (w.at(i, offset) != 0) {
                    Int q = floor_div(w.at(i, offset), w.at(offset, offset));
                    for (int j = 0; j < w.cols; ++j)
                        w.at(i, j) -= q * w.at(offset, j);
                    if (w.at(i, offset) == 0)
                        break;
                    for (int j = 0; j < w.cols; ++j)
                        std::swap(w.at(i, j), w.at(offset, j));
                }
            for (int j = offset + 1; j < w.cols; ++j)
                while (w.at(offset, j) != 0) {
                    Int q = floor_div(w.at(offset, j), w.at(offset, offset));
                    for (int i = 0; i < w.rows; ++i)
                        w.at(i, j) -= q * w.at(i, offset);
                    if (w.at(offset, j) == 0)
                        break;
                    for (int i = 0; i < w.rows; ++i)
                        std::swap(w.at(i, j), w.at(i, offset));
                    clean = false; // column ops may have disturbed the pivot column
                }
            if (!clean)
                continue;
            // divisibility: pivot must divide every remaining entry
            for (int i = offset + 1; i < w.rows && clean; ++i)
                for (int j = offset + 1; j < w.cols && clean; ++j)
                    if (w.at(i, j) % w.at(offset, offset) != 0) {
                        for (int jj = 0; jj < w.cols; ++jj)
                            w.at(offset, jj) += w.at(i, jj);
                        clean = false;
                    }
        }
        if (w.at(offset, offset) < 0)
            for (int j = 0; j < w.cols; ++j)
                w.at(offset, j) = -w.at(offset, j);
        inv.push_back(w.at(offset, offset));
        ++offset;
    }
    return inv;
}

// Integer solution of m x = b, if one exists.
inline std::optional<std::vector<Int>> solve_integer(const IntMatrix& m, const std::vector<Int>& b) {
    assert(static_cast<int>(b.size()) == m.rows);
    HnfResult t = row_hnf(m.transpose()); // t.u * m^T = t.h, so m * t.u^T = t.h^T
    // Solve (t.h^T) y = b by consuming pivots, then x = t.u^T y.
    std::vector<Int> y(m.cols, 0);
    std::vector<Int> resid = b;
    for (int i = 0; i < t.rank; ++i) {
        int prow = t.pivot_cols[i]; // pivot position within column i of t.h^T
        const Int& p = t.h.at(i, prow);
        if (resid[prow] % p != 0)
            return std::nullopt;
        Int q = resid[prow] / p;
        y[i] = q;
        for (int rr = 0; rr < m.rows; ++rr)
            resid[rr] -= q * t.h.at(i, rr);
    }
    for (const Int& r : resid)
        if (r != 0)
            return std::nullopt;
    std::vector<Int> x(m.cols, 0);
    for (int j = 0; j < m.cols; ++j)
        for (int i = 0; i < m.cols; ++i)
            x[j] += t.u.at(i, j) * y[i];
    return x;
}

inline bool is_primitive(const std::vector<Int>& v) {
    Int g = 0;
    for (const Int& x : v)
        g = int_gcd(g, x);
    return g == 1;
}

} // namespace hypmirror
