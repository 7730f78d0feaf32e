#include "fuchsq/matrix.hpp"

#include <algorithm>

namespace fuchsq {

template class Matrix<Rat>;
template class Matrix<RatFun>;

template <class T>
std::vector<int> rref(Matrix<T>& m) {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int pr = -1;
        for (int i = row; i < m.rows(); ++i)
            if (!(m(i, col) == T(0))) {
                pr = i;
                break;
            }
        if (pr < 0) continue;
        if (pr != row)
            for (int j = 0; j < m.cols(); ++j) std::swap(m(pr, j), m(row, j));
        T inv = T(1) / m(row, col);
        for (int j = col; j < m.cols(); ++j) m(row, j) = m(row, j) * inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col) == T(0)) continue;
            T f = m(i, col);
            for (int j = col; j < m.cols(); ++j) m(i, j) = m(i, j) - f * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

template std::vector<int> rref(Matrix<Rat>&);
template std::vector<int> rref(Matrix<RatFun>&);

template <class T>
std::vector<std::vector<T>> kernel_basis(const Matrix<T>& m) {
    Matrix<T> r = m;
    std::vector<int> pivots = rref(r);
    std::vector<bool> is_pivot(m.cols(), false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<std::vector<T>> basis;
    for (int free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::vector<T> v(m.cols(), T(0));
        v[free] = T(1);
        for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r(static_cast<int>(i), free);
        // Normalize so the first nonzero entry is 1.
        for (const T& x : v)
            if (!(x == T(0))) {
                T inv = T(1) / x;
                for (T& y : v) y = y * inv;
                break;
            }
        basis.push_back(std::move(v));
    }
    return basis;
}

template std::vector<std::vector<Rat>> kernel_basis(const Matrix<Rat>&);
template std::vector<std::vector<RatFun>> kernel_basis(const Matrix<RatFun>&);

template <class T>
T determinant(const Matrix<T>& m) {
    if (!m.is_square()) throw NotSquareError("determinant of a non-square matrix");
    Matrix<T> a = m;
    int n = a.rows();
    T det(1);
    for (int col = 0; col < n; ++col) {
        int pr = -1;
        for (int i = col; i < n; ++i)
            if (!(a(i, col) == T(0))) {
                pr = i;
                break;
            }
        if (pr < 0) return T(0);
        if (pr != col) {
            for (int j = 0; j < n; ++j) std::swap(a(pr, j), a(col, j));
            det = -det;
        }
        det = det * a(col, col);
        T inv = T(1) / a(col, col);
        for (int i = col + 1; i < n; ++i) {
            if (a(i, col) == T(0)) continue;
            T f = a(i, col) * inv;
            for (int j = col; j < n; ++j) a(i, j) = a(i, j) - f * a(col, j);
        }
    }
    return det;
}

template Rat determinant(const Matrix<Rat>&);
template RatFun determinant(const Matrix<RatFun>&);

template <class T>
Matrix<T> inverse(const Matrix<T>& m) {
    if (!m.is_square()) throw NotSquareError("inverse of a non-square matrix");
    int n = m.rows();
    Matrix<T> aug(n, 2 * n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = T(1);
    }
    std::vector<int> pivots = rref(aug);
    // All n pivots must land in the left block, else the matrix is singular.
    if (static_cast<int>(pivots.size()) != n || (n > 0 && pivots.back() >= n))
        throw PreconditionError("inverse of a singular matrix");
    Matrix<T> r(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r(i, j) = aug(i, n + j);
    return r;
}

template Matrix<Rat> inverse(const Matrix<Rat>&);
template Matrix<RatFun> inverse(const Matrix<RatFun>&);

QMatrix constant_part(const RatMatrix& m) {
    QMatrix r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).constant_value();
    return r;
}

RatMatrix lift_to_ratfun(const QMatrix& m) {
    RatMatrix r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r(i, j) = RatFun(m(i, j));
    return r;
}

RatMatrix derivative(const RatMatrix& m) {
    RatMatrix r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).derivative();
    return r;
}

Poly char_poly(const QMatrix& m) {
    if (!m.is_square()) throw NotSquareError("characteristic polynomial of a non-square matrix");
    int n = m.rows();
    // Faddeev-LeVerrier: c_n = 1; M_1 = A; c_{n-k} = -tr(A M_k)/k;
    // M_{k+1} = A M_k + c_{n-k} Id.
    std::vector<Rat> c(n + 1, Rat(0));
    c[n] = 1;
    QMatrix mk = QMatrix::identity(n);
    for (int k = 1; k <= n; ++k) {
        mk = m * mk;
        Rat tr(0);
        for (int i = 0; i < n; ++i) tr += mk(i, i);
        c[n - k] = -tr / Rat(k);
        for (int i = 0; i < n; ++i) mk(i, i) += c[n - k];
    }
    return Poly(std::move(c));
}

std::vector<Eigenpair> rational_spectrum(const QMatrix& m) {
    Poly cp = char_poly(m);
    auto roots = rational_roots(cp);
    int total = 0;
    for (const auto& [v, mult] : roots) total += mult;
    if (total != m.rows())
        throw NonRationalSpectrumError(
            "characteristic polynomial does not split over the rationals");
    std::vector<Eigenpair> out;
    for (const auto& [v, mult] : roots) {
        QMatrix shifted = m;
        for (int i = 0; i < m.rows(); ++i) shifted(i, i) -= v;
        Eigenpair ep;
        ep.value = v;
        ep.multiplicity = mult;
        ep.space = kernel_basis(shifted);
        if (ep.space.empty())
            throw InternalAssertionFailure("eigenvalue with empty eigenspace");
        out.push_back(std::move(ep));
    }
    return out;
}

std::vector<Rat> spectrum_multiset(const QMatrix& m) {
    std::vector<Rat> out;
    for (const auto& ep : rational_spectrum(m))
        for (int i = 0; i < ep.multiplicity; ++i) out.push_back(ep.value);
    return out;
}

}  // namespace fuchsq
