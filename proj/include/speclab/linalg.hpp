#pragma once
// Dense exact linear algebra over a field, templated so the same code runs
// over the rationals (gmp mpq_class) and over small prime fields.  Systems
// arising here are tiny (commutation systems of quiver representations), so
// plain Gaussian elimination is ample.

#include <gmpxx.h>

#include <cassert>
#include <vector>

#include "speclab/common.hpp"

namespace speclab::linalg {

// Prime field with P elements, P a small prime.
template <int P>
struct Fp {
    int v = 0;
    Fp() = default;
    Fp(long long x) : v(int(((x % P) + P) % P)) {}
    friend Fp operator+(Fp a, Fp b) { return Fp(a.v + b.v); }
    friend Fp operator-(Fp a, Fp b) { return Fp(a.v - b.v); }
    friend Fp operator*(Fp a, Fp b) { return Fp(1LL * a.v * b.v); }
    friend Fp operator-(Fp a) { return Fp(-a.v); }
    friend bool operator==(Fp a, Fp b) { return a.v == b.v; }
    friend bool operator!=(Fp a, Fp b) { return a.v != b.v; }
    Fp inverse() const {  // Fermat: v^(P-2) mod P
        assert(v != 0);
        long long r = 1, base = v, e = P - 2;
        while (e) {
            if (e & 1) r = r * base % P;
            base = base * base % P;
            e >>= 1;
        }
        return Fp(r);
    }
};

template <class F>
F field_inverse(const F& x) { return x.inverse(); }
inline mpq_class field_inverse(const mpq_class& x) { return 1 / x; }

template <class F>
struct Matrix {
    int rows = 0, cols = 0;
    std::vector<F> a;  // row-major

    Matrix() = default;
    Matrix(int r, int c) : rows(r), cols(c), a(size_t(r) * c, F(0)) {}

    F& at(int r, int c) { return a[size_t(r) * cols + c]; }
    const F& at(int r, int c) const { return a[size_t(r) * cols + c]; }

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = F(1);
        return m;
    }

    Matrix<F> times(const Matrix<F>& o) const {
        assert(cols == o.rows);
        Matrix<F> r(rows, o.cols);
        for (int i = 0; i < rows; ++i)
            for (int k = 0; k < cols; ++k) {
                const F& x = at(i, k);
                if (x == F(0)) continue;
                for (int j = 0; j < o.cols; ++j) r.at(i, j) = r.at(i, j) + x * o.at(k, j);
            }
        return r;
    }

    Matrix<F> minus(const Matrix<F>& o) const {
        assert(rows == o.rows && cols == o.cols);
        Matrix<F> r(rows, cols);
        for (size_t i = 0; i < a.size(); ++i) r.a[i] = a[i] - o.a[i];
        return r;
    }

    bool is_zero() const {
        for (const F& x : a)
            if (!(x == F(0))) return false;
        return true;
    }
};

// Reduce m to row echelon form in place; returns the pivot columns.
template <class F>
std::vector<int> row_echelon(Matrix<F>& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols && row < m.rows; ++col) {
        int p = -1;
        for (int r = row; r < m.rows; ++r)
            if (!(m.at(r, col) == F(0))) { p = r; break; }
        if (p < 0) continue;
        for (int c = 0; c < m.cols; ++c) std::swap(m.at(row, c), m.at(p, c));
        F inv = field_inverse(m.at(row, col));
        for (int c = col; c < m.cols; ++c) m.at(row, c) = m.at(row, c) * inv;
        for (int r = 0; r < m.rows; ++r) {
            if (r == row) continue;
            F f = m.at(r, col);
            if (f == F(0)) continue;
            for (int c = col; c < m.cols; ++c) m.at(r, c) = m.at(r, c) - f * m.at(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

template <class F>
int rank(Matrix<F> m) { return int(row_echelon(m).size()); }

template <class F>
int kernel_dim(const Matrix<F>& m) { return m.cols - rank(m); }

// Basis of the right kernel {x : m x = 0}, one column vector per basis element.
template <class F>
std::vector<std::vector<F>> kernel_basis(Matrix<F> m) {
    std::vector<int> pivots = row_echelon(m);
    std::vector<int> pivot_of_col(m.cols, -1);
    for (size_t i = 0; i < pivots.size(); ++i) pivot_of_col[pivots[i]] = int(i);
    std::vector<std::vector<F>> basis;
    for (int free = 0; free < m.cols; ++free) {
        if (pivot_of_col[free] >= 0) continue;
        std::vector<F> v(m.cols, F(0));
        v[free] = F(1);
        for (int col = 0; col < m.cols; ++col) {
            int pr = pivot_of_col[col];
            if (pr >= 0) v[col] = -m.at(pr, free);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

// Solve m x = b; returns false when inconsistent.  Used by the test oracles
// to express images in a chosen basis.
template <class F>
bool solve(const Matrix<F>& m, const std::vector<F>& b, std::vector<F>& x) {
    assert(int(b.size()) == m.rows);
    Matrix<F> aug(m.rows, m.cols + 1);
    for (int r = 0; r < m.rows; ++r) {
        for (int c = 0; c < m.cols; ++c) aug.at(r, c) = m.at(r, c);
        aug.at(r, m.cols) = b[r];
    }
    std::vector<int> pivots = row_echelon(aug);
    for (int p : pivots)
        if (p == m.cols) return false;
    x.assign(m.cols, F(0));
    for (size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug.at(int(i), m.cols);
    return true;
}

}  // namespace speclab::linalg
