#include "cpq/qscalar.hpp"

#include <cmath>
#include <complex>
#include <sstream>

namespace cpq {

QScalar::QScalar(RootOrder ro, LaurentPoly num, LaurentPoly den)
    : r_(ro.r), num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("QScalar: zero denominator");
    normalize();
}

QScalar QScalar::constant(RootOrder ro, const GRat& c) {
    return QScalar(ro, LaurentPoly(c), LaurentPoly::one());
}

QScalar QScalar::q_power(RootOrder ro, const Rat& e) {
    Rat te = e * ro.r;
    if (denominator(te) != 1)
        throw PrecisionError("q_power: exponent " + e.str() + " not representable at r=" +
                             std::to_string(ro.r));
    long long m = numerator(te).convert_to<long long>();
    return QScalar(ro, LaurentPoly::monomial(GRat(1), m), LaurentPoly::one());
}

void QScalar::normalize() {
    if (num_.is_zero()) {
        den_ = LaurentPoly::one();
        return;
    }
    LaurentPoly g = poly_gcd(num_, den_);
    if (!g.is_one()) {
        num_ = poly_divexact(num_, g);
        den_ = poly_divexact(den_, g);
    }
    const long long sd = den_.min_exp();
    if (sd != 0) {
        num_ = num_.shifted(-sd);
        den_ = den_.shifted(-sd);
    }
    const GRat c = den_.coeff(0);
    if (!(c == GRat(1))) {
        num_ = num_.scaled(GRat(1) / c);
        den_ = den_.scaled(GRat(1) / c);
    }
}

namespace {
void require_same_r(int a, int b) {
    // A zero produced by the default constructor adopts the partner's order.
    if (a != b) throw std::domain_error("QScalar: mixed root orders in arithmetic");
}
} // namespace

QScalar QScalar::operator+(const QScalar& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    require_same_r(r_, o.r_);
    if (den_ == o.den_)
        return QScalar(RootOrder(r_), num_ + o.num_, den_);
    return QScalar(RootOrder(r_), num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

QScalar QScalar::operator-(const QScalar& o) const { return *this + (-o); }

QScalar QScalar::operator-() const {
    QScalar r = *this;
    r.num_ = -r.num_;
    return r;
}

QScalar QScalar::operator*(const QScalar& o) const {
    if (is_zero()) return *this;
    if (o.is_zero()) return o;
    require_same_r(r_, o.r_);
    return QScalar(RootOrder(r_), num_ * o.num_, den_ * o.den_);
}

QScalar QScalar::operator/(const QScalar& o) const {
    if (o.is_zero()) throw std::domain_error("QScalar: division by zero");
    if (is_zero()) return *this;
    require_same_r(r_, o.r_);
    return QScalar(RootOrder(r_), num_ * o.den_, den_ * o.num_);
}

bool QScalar::operator==(const QScalar& o) const {
    if (is_zero() || o.is_zero()) return is_zero() && o.is_zero();
    return num_ == o.num_ && den_ == o.den_;
}

QScalar QScalar::conj() const {
    QScalar r = *this;
    r.num_ = r.num_.conj();
    r.den_ = r.den_.conj();
    r.normalize();
    return r;
}

QScalar QScalar::q_inverse() const {
    if (is_zero()) return *this;
    return QScalar(RootOrder(r_), num_.exponents_negated(), den_.exponents_negated());
}

double QScalar::eval_at(double q) const {
    if (!(q > 0.0 && q <= 1.0)) throw std::domain_error("eval_at: q must lie in (0,1]");
    if (q == 1.0) {
        GRat v = at_one();
        if (!v.is_real()) throw std::domain_error("eval_at: value is not real");
        return to_double(v.re);
    }
    const double t = std::pow(q, 1.0 / static_cast<double>(r_));
    auto eval_cx = [t](const LaurentPoly& p) {
        std::complex<double> s(0.0, 0.0);
        for (const auto& [e, c] : p.terms())
            s += std::complex<double>(to_double(c.re), to_double(c.im)) *
                 std::pow(t, static_cast<double>(e));
        return s;
    };
    std::complex<double> nd = eval_cx(num_), dd = eval_cx(den_);
    if (dd == std::complex<double>(0.0, 0.0))
        throw SingularEvaluation("eval_at: denominator vanishes at q=" + std::to_string(q));
    std::complex<double> v = nd / dd;
    if (std::abs(v.imag()) > 1e-12 * (1.0 + std::abs(v.real())))
        throw std::domain_error("eval_at: value is not real");
    return v.real();
}

GRat QScalar::at_one() const {
    GRat d = den_.at_one();
    if (d.is_zero())
        throw SingularEvaluation("at_one: denominator vanishes at q=1");
    return num_.at_one() / d;
}

std::string QScalar::str() const {
    if (is_polynomial()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

namespace {
std::string q_exponent_str(long long e, int r) {
    // exponent e in t-units -> rational exponent of q
    Rat x(e, r);
    std::ostringstream os;
    os << x;
    return os.str();
}

std::string poly_q_str(const LaurentPoly& p, int r) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [e, c] = *it;
        std::string cs = c.str();
        bool neg = false;
        if (c.is_real() && c.re < 0) {
            neg = true;
            cs = (-c).str();
        }
        if (first) {
            if (neg) os << "-";
            first = false;
        } else {
            os << (neg ? " - " : " + ");
        }
        if (e == 0) {
            os << cs;
            continue;
        }
        if (cs != "1") {
            if (!c.is_real()) os << "(" << cs << ")*";
            else os << cs << "*";
        }
        os << "q";
        if (!(e == r)) os << "^(" << q_exponent_str(e, r) << ")";
    }
    return os.str();
}
} // namespace

std::string QScalar::str_q() const {
    if (is_polynomial()) return poly_q_str(num_, r_);
    return "(" + poly_q_str(num_, r_) + ")/(" + poly_q_str(den_, r_) + ")";
}

QScalar qnum(RootOrder ro, const Rat& x) {
    Rat te = x * ro.r;
    if (denominator(te) != 1)
        throw PrecisionError("qnum: [" + x.str() + "] not representable at r=" +
                             std::to_string(ro.r));
    long long m = numerator(te).convert_to<long long>();
    if (m == 0) return QScalar::zero(ro);
    LaurentPoly num;
    num.add_term(m, GRat(1));
    num.add_term(-m, GRat(-1));
    LaurentPoly den;
    den.add_term(ro.r, GRat(1));
    den.add_term(-ro.r, GRat(-1));
    return QScalar(ro, num, den);
}

QScalar qfact(RootOrder ro, long n) {
    if (n < 0) throw std::domain_error("qfact: negative argument");
    QScalar r = QScalar::one(ro);
    for (long i = 2; i <= n; ++i) r = r * qnum(ro, i);
    return r;
}

QScalar qbinom(RootOrder ro, long n, long k) {
    if (n < 0) throw std::domain_error("qbinom: negative n");
    if (k < 0 || k > n) return QScalar::zero(ro);
    // [n]!/([k]![n-k]!) built as a product of exact ratios keeps intermediates small.
    QScalar r = QScalar::one(ro);
    long kk = std::min(k, n - k);
    for (long i = 1; i <= kk; ++i) r = r * (qnum(ro, n - kk + i) / qnum(ro, i));
    return r;
}

QScalar qmultinom(RootOrder ro, const std::vector<long>& j) {
    long total = 0;
    for (long v : j) {
        if (v < 0) throw std::domain_error("qmultinom: negative part");
        total += v;
    }
    QScalar r = qfact(ro, total);
    for (long v : j) r = r / qfact(ro, v);
    long long cross = 0;
    for (size_t a = 0; a < j.size(); ++a)
        for (size_t b = a + 1; b < j.size(); ++b) cross += static_cast<long long>(j[a]) * j[b];
    return r * QScalar::q_power(ro, Rat(-cross));
}

} // namespace cpq
