#pragma once

#include <optional>

#include "cpq/multiindex.hpp"
#include "cpq/permutation.hpp"
#include "cpq/qmatrix.hpp"

namespace cpq::grassmann {

/// Element of W_k: coefficients over the lexicographic multi-index basis.
struct GrVector {
    int ell = 0;
    int k = 0;
    std::vector<QScalar> c;

    static GrVector zero(int ell, int k);
    /// Basis vector labelled by a multi-index.
    static GrVector basis(RootOrder ro, int ell, const MultiIndex& idx);

    bool is_zero() const {
        for (const auto& v : c)
            if (!v.is_zero()) return false;
        return true;
    }
    GrVector operator+(const GrVector& o) const;
    GrVector operator-(const GrVector& o) const;
    GrVector scaled(const QScalar& s) const;
    GrVector conj() const;
    bool operator==(const GrVector& o) const {
        return ell == o.ell && k == o.k && (*this - o).is_zero();
    }
};

/// Degree-graded operator between W_{dom_k} and W_{cod_k}; antilinear ones
/// conjugate the coefficient vector before the matrix acts.
struct GrOperator {
    int ell = 0;
    int dom_k = 0;
    int cod_k = 0;
    bool antilinear = false;
    QMatrix m;

    GrVector apply(const GrVector& v) const;
    /// (a.compose(b))(v) = a(b(v)); antilinearity composes by parity.
    GrOperator compose(const GrOperator& b) const;
    GrOperator scaled(const QScalar& s) const;
    bool operator==(const GrOperator& o) const {
        return dom_k == o.dom_k && cod_k == o.cod_k && antilinear == o.antilinear && m == o.m;
    }
};

enum class SGen { K, Kinv, E, F };

/// sigma_k(generator j) on W_k, the irreducible representation of
/// U_q(su(l)) with highest weight delta^k (counit for k = 0, l).
/// Generators are indexed 1 <= j <= l-1.
QMatrix sigma_matrix(RootOrder ro, int ell, int k, SGen g, int j);

/// q-wedge product W_h x W_k -> W_{h+k} (zero when h + k > l).
GrVector wedge(const GrVector& v, const GrVector& w);

/// The antilinear map J: W_k -> W_{l-k}.
GrVector jmap(RootOrder ro, const GrVector& w);
GrOperator jmap_operator(RootOrder ro, int ell, int k);

/// Left/right exterior products by x in W_1, as matrices W_k -> W_{k+1}.
QMatrix exterior_left(const GrVector& x, int k);
QMatrix exterior_right(const GrVector& x, int k);

/// Right contraction W_{k+1} -> W_k by the closed formula, and the left
/// contraction defined by adjunction against the standard inner product.
QMatrix contraction_right(const GrVector& x, int k);
QMatrix contraction_left(const GrVector& x, int k);

/// Quantum dimension of W_k as the character sum over Lambda_k.
QScalar qdim_W(RootOrder ro, int ell, int k);

/// Dimension of W_k.
int dim_W(int ell, int k);

} // namespace cpq::grassmann
