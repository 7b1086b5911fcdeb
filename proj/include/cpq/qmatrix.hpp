#pragma once

#include <stdexcept>
#include <vector>

#include "cpq/qscalar.hpp"

namespace cpq {

/// Dense matrix over QScalar. Sizes here are tiny (fundamental representation
/// tensor powers, W_k bases), so no sparsity games.
class QMatrix {
public:
    QMatrix() : rows_(0), cols_(0) {}
    QMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * static_cast<size_t>(cols)) {}

    static QMatrix identity(RootOrder ro, int n) {
        QMatrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = QScalar::one(ro);
        return m;
    }
    static QMatrix zero(int rows, int cols) { return QMatrix(rows, cols); }

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    QScalar& operator()(int i, int j) { return a_[idx(i, j)]; }
    const QScalar& operator()(int i, int j) const { return a_[idx(i, j)]; }

    QMatrix operator+(const QMatrix& o) const {
        check_same_shape(o);
        QMatrix r(rows_, cols_);
        for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
        return r;
    }
    QMatrix operator-(const QMatrix& o) const {
        check_same_shape(o);
        QMatrix r(rows_, cols_);
        for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
        return r;
    }
    QMatrix operator*(const QMatrix& o) const {
        if (cols_ != o.rows_) throw std::domain_error("QMatrix: shape mismatch in product");
        QMatrix r(rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const QScalar& v = (*this)(i, k);
                if (v.is_zero()) continue;
                for (int j = 0; j < o.cols_; ++j) {
                    if (o(k, j).is_zero()) continue;
                    r(i, j) += v * o(k, j);
                }
            }
        return r;
    }
    QMatrix scaled(const QScalar& c) const {
        QMatrix r(rows_, cols_);
        for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * c;
        return r;
    }
    QMatrix operator-() const {
        QMatrix r(rows_, cols_);
        for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = -a_[i];
        return r;
    }

    /// Conjugate transpose (entries conjugated, t fixed).
    QMatrix dagger() const {
        QMatrix r(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j).conj();
        return r;
    }
    QMatrix conj() const {
        QMatrix r(rows_, cols_);
        for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i].conj();
        return r;
    }
    QMatrix transpose() const {
        QMatrix r(cols_, rows_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    /// Kronecker product, row-major block convention.
    QMatrix kron(const QMatrix& o) const {
        QMatrix r(rows_ * o.rows_, cols_ * o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) {
                const QScalar& v = (*this)(i, j);
                if (v.is_zero()) continue;
                for (int k = 0; k < o.rows_; ++k)
                    for (int l = 0; l < o.cols_; ++l)
                        r(i * o.rows_ + k, j * o.cols_ + l) = v * o(k, l);
            }
        return r;
    }

    bool is_zero() const {
        for (const auto& v : a_)
            if (!v.is_zero()) return false;
        return true;
    }
    bool operator==(const QMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && (*this - o).is_zero();
    }
    bool operator!=(const QMatrix& o) const { return !(*this == o); }

    /// If the matrix is c * identity returns c, otherwise throws.
    QScalar scalar_value() const {
        if (rows_ != cols_ || rows_ == 0) throw std::domain_error("QMatrix: not square");
        const QScalar c = (*this)(0, 0);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                if (((i == j) && (*this)(i, j) != c) || ((i != j) && !(*this)(i, j).is_zero()))
                    throw std::domain_error("QMatrix: not a scalar matrix");
        return c;
    }

    /// Inverse of a diagonal matrix with monomial entries (the only inverses
    /// the representations need).
    QMatrix diagonal_inverse() const {
        if (rows_ != cols_) throw std::domain_error("QMatrix: not square");
        QMatrix r(rows_, cols_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j)
                if (i != j && !(*this)(i, j).is_zero())
                    throw std::domain_error("QMatrix: not diagonal");
        for (int i = 0; i < rows_; ++i) {
            if ((*this)(i, i).is_zero()) throw std::domain_error("QMatrix: singular diagonal");
            r(i, i) = QScalar::one(RootOrder((*this)(i, i).r())) / (*this)(i, i);
        }
        return r;
    }

private:
    size_t idx(int i, int j) const {
        if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
            throw std::out_of_range("QMatrix: index out of range");
        return static_cast<size_t>(i) * static_cast<size_t>(cols_) + static_cast<size_t>(j);
    }
    void check_same_shape(const QMatrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::domain_error("QMatrix: shape mismatch");
    }

    int rows_, cols_;
    std::vector<QScalar> a_;
};

inline QMatrix commutator(const QMatrix& a, const QMatrix& b) { return a * b - b * a; }

/// q-commutator [a,b]_q = ab - q^{-1} ba.
inline QMatrix q_commutator(RootOrder ro, const QMatrix& a, const QMatrix& b) {
    return a * b - (b * a).scaled(QScalar::q_power(ro, Rat(-1)));
}

} // namespace cpq
