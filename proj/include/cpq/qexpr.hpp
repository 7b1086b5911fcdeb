#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "cpq/qscalar.hpp"

namespace cpq {

/// Small expression layer over QScalar. Spectral formulas are assembled from
/// these nodes so that the q = 1 limit can be taken exactly, node by node:
/// [x] specializes to x, q^e to 1, and a pole node (see below) to its finite
/// limit, with no 0/0 ever formed.
class QExpr {
public:
    QExpr() = default;

    static QExpr constant(const GRat& c);
    static QExpr constant(const Rat& c) { return constant(GRat(c)); }
    static QExpr integer(long v) { return constant(GRat(v)); }
    /// q^e
    static QExpr qpow(const Rat& e);
    /// [x]
    static QExpr num(const Rat& x);
    static QExpr num(long x) { return num(Rat(x)); }

    /// (sum_j c_j q^{e_j}) / (q - q^{-1})^2 with sum c_j = 0 and
    /// sum c_j e_j = 0, so the singularity at q = 1 is removable; the exact
    /// value there is sum c_j e_j^2 / 8. Generalizes [x][y] and [x]^2.
    static QExpr pole_sum(std::vector<std::pair<GRat, Rat>> terms);

    QExpr operator+(const QExpr& o) const;
    QExpr operator-(const QExpr& o) const;
    QExpr operator*(const QExpr& o) const;
    QExpr operator/(const QExpr& o) const;
    QExpr operator-() const;

    bool valid() const { return node_ != nullptr; }

    /// Exact rational function of t = q^{1/r}.
    QScalar to_qscalar(RootOrder ro) const;
    /// Exact value at q = 1 by node-wise specialization.
    GRat at_one() const;
    /// Direct floating-point value at q in (0,1); real-valued expressions only.
    double eval_double(double q) const;
    /// Numeric value at q in (0,1].
    double eval_at(double q) const {
        if (q == 1.0) {
            GRat v = at_one();
            return to_double(v.re);
        }
        return eval_double(q);
    }

    struct Node; // implementation detail, defined in qexpr.cpp

private:
    explicit QExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

} // namespace cpq
