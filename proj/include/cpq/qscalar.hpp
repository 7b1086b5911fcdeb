#pragma once

#include <string>
#include <vector>

#include "cpq/laurent.hpp"

namespace cpq {

/// Order of the formal root t = q^{1/r}. Fixed once per computation context;
/// r = 2(l+1) makes every exponent of the l-rank theory an integer power of t,
/// and r = 2l(l+1) additionally covers the K-hat^{2/l} exponents.
struct RootOrder {
    int r;

    explicit RootOrder(int order) : r(order) {
        if (r < 2 || r % 2 != 0)
            throw std::domain_error("RootOrder: r must be a positive even integer");
    }
    static RootOrder for_rank(int ell) { return RootOrder(2 * (ell + 1)); }
    static RootOrder for_rank_full(int ell) { return RootOrder(2 * ell * (ell + 1)); }
};

/// Exact rational function of t = q^{1/r} with Gaussian-rational coefficients.
/// Always stored reduced (numerator and denominator coprime) and canonically
/// normalized: denominator's lowest exponent is 0 and its lowest coefficient
/// is 1, so equality is plain structural comparison.
class QScalar {
public:
    QScalar() : r_(2) {} // zero with a default root order; reassigned on first op
    QScalar(RootOrder ro, LaurentPoly num, LaurentPoly den);

    static QScalar zero(RootOrder ro) { return constant(ro, GRat(0)); }
    static QScalar one(RootOrder ro) { return constant(ro, GRat(1)); }
    static QScalar constant(RootOrder ro, const GRat& c);
    static QScalar from_rat(RootOrder ro, const Rat& c) { return constant(ro, GRat(c)); }
    /// q^e for rational e with r*e integral.
    static QScalar q_power(RootOrder ro, const Rat& e);

    int r() const { return r_; }
    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_one(); }

    QScalar operator+(const QScalar& o) const;
    QScalar operator-(const QScalar& o) const;
    QScalar operator*(const QScalar& o) const;
    QScalar operator/(const QScalar& o) const;
    QScalar operator-() const;
    QScalar& operator+=(const QScalar& o) { *this = *this + o; return *this; }
    QScalar& operator-=(const QScalar& o) { *this = *this - o; return *this; }
    QScalar& operator*=(const QScalar& o) { *this = *this * o; return *this; }

    bool operator==(const QScalar& o) const;
    bool operator!=(const QScalar& o) const { return !(*this == o); }

    /// Complex conjugation: conjugates coefficients, fixes t (q is real).
    QScalar conj() const;
    /// q -> q^{-1}: negates every exponent. Involutive.
    QScalar q_inverse() const;

    /// Numeric value at real q in (0,1]. Throws SingularEvaluation if the
    /// denominator vanishes at the requested point, std::domain_error if q is
    /// out of range or the value is not real.
    double eval_at(double q) const;

    /// Exact value at q = 1; throws SingularEvaluation if den(1) = 0.
    GRat at_one() const;

    /// Canonical string, numerator and denominator as Laurent polynomials in t.
    std::string str() const;
    /// Human-oriented string in powers of q (fractional exponents allowed).
    std::string str_q() const;

private:
    void normalize();

    int r_;
    LaurentPoly num_;
    LaurentPoly den_ = LaurentPoly::one();
};

struct SingularEvaluation : std::domain_error {
    using std::domain_error::domain_error;
};
struct PrecisionError : std::domain_error {
    using std::domain_error::domain_error;
};

/// q-number [x] = (q^x - q^{-x})/(q - q^{-1}); requires r*x integral.
QScalar qnum(RootOrder ro, const Rat& x);
inline QScalar qnum(RootOrder ro, long x) { return qnum(ro, Rat(x)); }

/// [n]! = [n][n-1]...[1], with [0]! = 1.
QScalar qfact(RootOrder ro, long n);

/// [n]!/([k]![n-k]!) for 0 <= k <= n, zero otherwise. Always a Laurent
/// polynomial, invariant under q -> q^{-1}.
QScalar qbinom(RootOrder ro, long n, long k);

/// q-multinomial [j_1,...,j_m]! = [sum j]!/prod [j_i]! * q^{-sum_{r<s} j_r j_s}.
QScalar qmultinom(RootOrder ro, const std::vector<long>& j);

} // namespace cpq
