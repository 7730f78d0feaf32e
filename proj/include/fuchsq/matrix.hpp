#ifndef FUCHSQ_MATRIX_HPP
#define FUCHSQ_MATRIX_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "fuchsq/errors.hpp"
#include "fuchsq/ratfun.hpp"

namespace fuchsq {

// Dense rectangular matrix over a field type (Rat or RatFun).
template <class T>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), e_(size_t(rows) * cols, T(0)) {}
    Matrix(int rows, int cols, std::vector<T> entries)
        : rows_(rows), cols_(cols), e_(std::move(entries)) {}

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    T& operator()(int r, int c) { return e_[size_t(r) * cols_ + c]; }
    const T& operator()(int r, int c) const { return e_[size_t(r) * cols_ + c]; }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
    }

    Matrix operator+(const Matrix& o) const {
        Matrix r = *this;
        for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = r.e_[i] + o.e_[i];
        return r;
    }
    Matrix operator-(const Matrix& o) const {
        Matrix r = *this;
        for (size_t i = 0; i < e_.size(); ++i) r.e_[i] = r.e_[i] - o.e_[i];
        return r;
    }
    Matrix operator*(const Matrix& o) const {
        Matrix r(rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const T& a = (*this)(i, k);
                if (a == T(0)) continue;
                for (int j = 0; j < o.cols_; ++j) r(i, j) = r(i, j) + a * o(k, j);
            }
        return r;
    }
    Matrix operator*(const T& s) const {
        Matrix r = *this;
        for (auto& x : r.e_) x = x * s;
        return r;
    }

    std::vector<T> col(int j) const {
        std::vector<T> v(rows_);
        for (int i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
        return v;
    }

    Matrix map(auto f) const {
        Matrix r = *this;
        for (auto& x : r.e_) x = f(x);
        return r;
    }

    bool is_zero() const {
        for (const auto& x : e_)
            if (!(x == T(0))) return false;
        return true;
    }

private:
    int rows_, cols_;
    std::vector<T> e_;
};

using QMatrix = Matrix<Rat>;
using RatMatrix = Matrix<RatFun>;

template <class T>
std::vector<T> operator*(const Matrix<T>& m, const std::vector<T>& v) {
    std::vector<T> r(m.rows(), T(0));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r[i] = r[i] + m(i, j) * v[j];
    return r;
}

// In-place reduced row echelon form; returns pivot columns.
template <class T>
std::vector<int> rref(Matrix<T>& m);

template <class T>
int rank(Matrix<T> m) {
    return static_cast<int>(rref(m).size());
}

// RREF-normalized kernel basis (empty iff injective).
template <class T>
std::vector<std::vector<T>> kernel_basis(const Matrix<T>& m);

template <class T>
T determinant(const Matrix<T>& m);

// Throws PreconditionError on a singular matrix.
template <class T>
Matrix<T> inverse(const Matrix<T>& m);

QMatrix constant_part(const RatMatrix& m);   // NotConstantError unless all entries constant
RatMatrix lift_to_ratfun(const QMatrix& m);
RatMatrix derivative(const RatMatrix& m);

// det(x Id - M), monic over Q (Faddeev-LeVerrier).
Poly char_poly(const QMatrix& m);

struct Eigenpair {
    Rat value;
    int multiplicity = 0;                  // algebraic
    std::vector<std::vector<Rat>> space;   // normalized eigenspace basis
};

// Certified rational spectrum: throws NonRationalSpectrumError unless the
// characteristic polynomial splits over Q.  Eigenvalues ascending; each
// eigenspace basis RREF-normalized (first nonzero entry 1).
std::vector<Eigenpair> rational_spectrum(const QMatrix& m);

// Flattened eigenvalue multiset (with algebraic multiplicity), ascending.
std::vector<Rat> spectrum_multiset(const QMatrix& m);

extern template class Matrix<Rat>;
extern template class Matrix<RatFun>;

}  // namespace fuchsq

#endif
