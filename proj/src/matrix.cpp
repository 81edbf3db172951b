#include "fockalg/matrix.hpp"

namespace fockalg {

Poly charpoly(const Matrix<Q>& A) {
    if (A.rows != A.cols) throw std::invalid_argument("charpoly of non-square matrix");
    int n = A.rows;
    Matrix<Q> H = A;
    for (int k = 0; k + 2 < n; ++k) {
        int p = -1;
        for (int i = k + 1; i < n; ++i)
            if (!is_zero(H(i, k))) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != k + 1) {
            for (int j = 0; j < n; ++j) std::swap(H(p, j), H(k + 1, j));
            for (int i = 0; i < n; ++i) std::swap(H(i, p), H(i, k + 1));
        }
        for (int i = k + 2; i < n; ++i) {
            if (is_zero(H(i, k))) continue;
            Q f = H(i, k) / H(k + 1, k);
            for (int j = 0; j < n; ++j) H(i, j) -= f * H(k + 1, j);
            for (int r = 0; r < n; ++r) H(r, k + 1) += f * H(r, i);
        }
    }
    auto h = [&](int i, int j) -> const Q& { return H(i - 1, j - 1); };
    std::vector<Poly> p(n + 1);
    p[0] = Poly(Q(1));
    Poly x = Poly::var();
    for (int m = 1; m <= n; ++m) {
        p[m] = (x - Poly(h(m, m))) * p[m - 1];
        Q t = 1;
        for (int i = m - 1; i >= 1; --i) {
            t *= h(i + 1, i);
            if (is_zero(t)) break;
            p[m] -= Poly(h(i, m) * t) * p[i - 1];
        }
    }
    return p[n];
}

bool squarefree(const Poly& p) {
    if (p.degree() <= 1) return true;
    return gcd(p, p.derivative()).is_constant();
}

namespace {

void bareiss_forward(Matrix<Poly>& A, Matrix<Poly>* B, int& sign) {
    int n = A.rows;
    Poly prev(Q(1));
    sign = 1;
    for (int k = 0; k < n; ++k) {
        int piv = -1;
        for (int r = k; r < n; ++r)
            if (!A(r, k).is_zero()) {
                piv = r;
                break;
            }
        if (piv < 0) throw std::domain_error("bareiss: singular matrix");
        if (piv != k) {
            for (int j = 0; j < n; ++j) std::swap(A(piv, j), A(k, j));
            if (B)
                for (int j = 0; j < B->cols; ++j) std::swap((*B)(piv, j), (*B)(k, j));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) A(i, j) = (A(k, k) * A(i, j) - A(i, k) * A(k, j)) / prev;
            if (B)
                for (int j = 0; j < B->cols; ++j)
                    (*B)(i, j) = (A(k, k) * (*B)(i, j) - A(i, k) * (*B)(k, j)) / prev;
            A(i, k) = Poly();
        }
        prev = A(k, k);
    }
}

}  // namespace

Matrix<RatFunc> bareiss_solve(Matrix<Poly> A, Matrix<Poly> B) {
    if (A.rows != A.cols || A.rows != B.rows) throw std::invalid_argument("bareiss_solve: shape mismatch");
    int n = A.rows;
    int sign;
    bareiss_forward(A, &B, sign);
    Matrix<RatFunc> X(n, B.cols);
    for (int c = 0; c < B.cols; ++c)
        for (int i = n - 1; i >= 0; --i) {
            RatFunc acc(B(i, c));
            for (int j = i + 1; j < n; ++j)
                if (!A(i, j).is_zero()) acc -= RatFunc(A(i, j)) * X(j, c);
            X(i, c) = acc / RatFunc(A(i, i));
        }
    return X;
}

Poly bareiss_determinant(Matrix<Poly> A) {
    if (A.rows != A.cols) throw std::invalid_argument("determinant of non-square matrix");
    if (A.rows == 0) return Poly(Q(1));
    int sign;
    try {
        bareiss_forward(A, nullptr, sign);
    } catch (const std::domain_error&) {
        return Poly();
    }
    Poly d = A(A.rows - 1, A.rows - 1);
    return sign > 0 ? d : -d;
}

}  // namespace fockalg
