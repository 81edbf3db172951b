#pragma once

#include <stdexcept>
#include <vector>

#include "fockalg/scalar.hpp"

namespace fockalg {

template <class C>
struct Matrix {
    int rows = 0, cols = 0;
    std::vector<C> a;

    Matrix() = default;
    Matrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, C(0)) {}

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = C(1);
        return m;
    }

    C& operator()(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
    const C& operator()(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

    bool is_zero() const {
        for (const auto& x : a)
            if (!fockalg::is_zero(x)) return false;
        return true;
    }

    Matrix transpose() const {
        Matrix t(cols, rows);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend bool operator==(const Matrix& x, const Matrix& y) {
        return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
    }
    friend bool operator!=(const Matrix& x, const Matrix& y) { return !(x == y); }

    Matrix& operator+=(const Matrix& o) {
        check_same(o);
        for (size_t k = 0; k < a.size(); ++k) a[k] += o.a[k];
        return *this;
    }
    Matrix& operator-=(const Matrix& o) {
        check_same(o);
        for (size_t k = 0; k < a.size(); ++k) a[k] -= o.a[k];
        return *this;
    }
    friend Matrix operator+(Matrix x, const Matrix& y) { return x += y; }
    friend Matrix operator-(Matrix x, const Matrix& y) { return x -= y; }

    friend Matrix operator*(const Matrix& x, const Matrix& y) {
        if (x.cols != y.rows) throw std::invalid_argument("matrix shape mismatch in product");
        Matrix r(x.rows, y.cols);
        for (int i = 0; i < x.rows; ++i)
            for (int k = 0; k < x.cols; ++k) {
                const C& xik = x(i, k);
                if (fockalg::is_zero(xik)) continue;
                for (int j = 0; j < y.cols; ++j) {
                    const C& ykj = y(k, j);
                    if (fockalg::is_zero(ykj)) continue;
                    r(i, j) += xik * ykj;
                }
            }
        return r;
    }

    Matrix scaled(const C& s) const {
        Matrix r = *this;
        for (auto& x : r.a) x = x * s;
        return r;
    }

    Matrix block(int r0, int c0, int nr, int nc) const {
        Matrix b(nr, nc);
        for (int i = 0; i < nr; ++i)
            for (int j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
        return b;
    }

    void set_block(int r0, int c0, const Matrix& b) {
        for (int i = 0; i < b.rows; ++i)
            for (int j = 0; j < b.cols; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
    }

private:
    void check_same(const Matrix& o) const {
        if (rows != o.rows || cols != o.cols) throw std::invalid_argument("matrix shape mismatch");
    }
};

template <class C, class F>
auto map_matrix(const Matrix<C>& m, F f) {
    using D = decltype(f(m.a[0]));
    Matrix<D> r(m.rows, m.cols);
    for (size_t k = 0; k < m.a.size(); ++k) r.a[k] = f(m.a[k]);
    return r;
}

template <class D, class C>
Matrix<D> convert(const Matrix<C>& m) {
    Matrix<D> r(m.rows, m.cols);
    for (size_t k = 0; k < m.a.size(); ++k) r.a[k] = D(m.a[k]);
    return r;
}

inline Matrix<Q> evaluate(const Matrix<RatFunc>& m, const Q& u) {
    Matrix<Q> r(m.rows, m.cols);
    for (size_t k = 0; k < m.a.size(); ++k) r.a[k] = m.a[k](u);
    return r;
}

// Solve A X = B over a field by Gauss-Jordan elimination.
template <class C>
Matrix<C> solve(Matrix<C> A, Matrix<C> B) {
    if (A.rows != A.cols || A.rows != B.rows) throw std::invalid_argument("solve: shape mismatch");
    int n = A.rows;
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (!fockalg::is_zero(A(r, col))) {
                piv = r;
                break;
            }
        if (piv < 0) throw std::domain_error("solve: singular matrix");
        if (piv != col) {
            for (int j = 0; j < n; ++j) std::swap(A(piv, j), A(col, j));
            for (int j = 0; j < B.cols; ++j) std::swap(B(piv, j), B(col, j));
        }
        C inv = C(1) / A(col, col);
        for (int j = col; j < n; ++j) A(col, j) = A(col, j) * inv;
        for (int j = 0; j < B.cols; ++j) B(col, j) = B(col, j) * inv;
        for (int r = 0; r < n; ++r) {
            if (r == col || fockalg::is_zero(A(r, col))) continue;
            C f = A(r, col);
            for (int j = col; j < n; ++j) A(r, j) -= f * A(col, j);
            for (int j = 0; j < B.cols; ++j) B(r, j) -= f * B(col, j);
        }
    }
    return B;
}

template <class C>
Matrix<C> inverse(const Matrix<C>& A) {
    return solve(A, Matrix<C>::identity(A.rows));
}

template <class C>
C determinant(Matrix<C> A) {
    if (A.rows != A.cols) throw std::invalid_argument("determinant of non-square matrix");
    int n = A.rows;
    C det = C(1);
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (!fockalg::is_zero(A(r, col))) {
                piv = r;
                break;
            }
        if (piv < 0) return C(0);
        if (piv != col) {
            for (int j = 0; j < n; ++j) std::swap(A(piv, j), A(col, j));
            det = -det;
        }
        det = det * A(col, col);
        C inv = C(1) / A(col, col);
        for (int r = col + 1; r < n; ++r) {
            if (fockalg::is_zero(A(r, col))) continue;
            C f = A(r, col) * inv;
            for (int j = col; j < n; ++j) A(r, j) -= f * A(col, j);
        }
    }
    return det;
}

// Basis of the right null space, one column per free variable.
template <class C>
Matrix<C> nullspace(Matrix<C> A) {
    int m = A.rows, n = A.cols;
    std::vector<int> pivcol;
    int row = 0;
    for (int col = 0; col < n && row < m; ++col) {
        int piv = -1;
        for (int r = row; r < m; ++r)
            if (!fockalg::is_zero(A(r, col))) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        for (int j = 0; j < n; ++j) std::swap(A(piv, j), A(row, j));
        C inv = C(1) / A(row, col);
        for (int j = 0; j < n; ++j) A(row, j) = A(row, j) * inv;
        for (int r = 0; r < m; ++r) {
            if (r == row || fockalg::is_zero(A(r, col))) continue;
            C f = A(r, col);
            for (int j = 0; j < n; ++j) A(r, j) -= f * A(row, j);
        }
        pivcol.push_back(col);
        ++row;
    }
    std::vector<int> free;
    for (int col = 0, p = 0; col < n; ++col) {
        if (p < static_cast<int>(pivcol.size()) && pivcol[p] == col) {
            ++p;
            continue;
        }
        free.push_back(col);
    }
    Matrix<C> N(n, static_cast<int>(free.size()));
    for (size_t k = 0; k < free.size(); ++k) {
        N(free[k], static_cast<int>(k)) = C(1);
        for (size_t p = 0; p < pivcol.size(); ++p) N(pivcol[p], static_cast<int>(k)) = -A(static_cast<int>(p), free[k]);
    }
    return N;
}

template <class C>
Matrix<C> commutator(const Matrix<C>& x, const Matrix<C>& y) {
    return x * y - y * x;
}

// Characteristic polynomial det(x - A) via Hessenberg reduction.
Poly charpoly(const Matrix<Q>& A);
bool squarefree(const Poly& p);

// Fraction-free elimination for polynomial systems A X = B; result over RatFunc.
Matrix<RatFunc> bareiss_solve(Matrix<Poly> A, Matrix<Poly> B);
Poly bareiss_determinant(Matrix<Poly> A);

}  // namespace fockalg
