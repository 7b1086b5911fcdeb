#pragma once

#include <cmath>
#include <map>
#include <stdexcept>
#include <string>

#include "cpq/rational.hpp"

namespace cpq {

/// Sparse Laurent polynomial in a single variable t, with Gaussian-rational
/// coefficients. Exponents are plain integers; the mapping to fractional
/// powers of q (t = q^{1/r}) is handled one level up, by QScalar.
class LaurentPoly {
public:
    using Terms = std::map<long long, GRat>;

    LaurentPoly() = default;
    explicit LaurentPoly(const GRat& c) {
        if (!c.is_zero()) terms_[0] = c;
    }
    static LaurentPoly monomial(const GRat& c, long long e) {
        LaurentPoly p;
        if (!c.is_zero()) p.terms_[e] = c;
        return p;
    }
    static LaurentPoly one() { return LaurentPoly(GRat(1)); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const {
        return terms_.size() == 1 && terms_.begin()->first == 0 &&
               terms_.begin()->second == GRat(1);
    }
    bool is_monomial() const { return terms_.size() == 1; }

    long long min_exp() const {
        if (is_zero()) throw std::domain_error("LaurentPoly: min_exp of zero");
        return terms_.begin()->first;
    }
    long long max_exp() const {
        if (is_zero()) throw std::domain_error("LaurentPoly: max_exp of zero");
        return terms_.rbegin()->first;
    }

    GRat coeff(long long e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? GRat() : it->second;
    }

    void add_term(long long e, const GRat& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_[e] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    LaurentPoly operator+(const LaurentPoly& o) const {
        LaurentPoly r = *this;
        for (const auto& [e, c] : o.terms_) r.add_term(e, c);
        return r;
    }
    LaurentPoly operator-(const LaurentPoly& o) const {
        LaurentPoly r = *this;
        for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
        return r;
    }
    LaurentPoly operator-() const {
        LaurentPoly r;
        for (const auto& [e, c] : terms_) r.terms_[e] = -c;
        return r;
    }
    LaurentPoly operator*(const LaurentPoly& o) const {
        LaurentPoly r;
        for (const auto& [e1, c1] : terms_)
            for (const auto& [e2, c2] : o.terms_) r.add_term(e1 + e2, c1 * c2);
        return r;
    }
    LaurentPoly scaled(const GRat& c) const {
        LaurentPoly r;
        if (c.is_zero()) return r;
        for (const auto& [e, k] : terms_) r.terms_[e] = k * c;
        return r;
    }
    LaurentPoly shifted(long long d) const {
        LaurentPoly r;
        for (const auto& [e, c] : terms_) r.terms_[e + d] = c;
        return r;
    }
    /// t -> t^{-1}
    LaurentPoly exponents_negated() const {
        LaurentPoly r;
        for (const auto& [e, c] : terms_) r.terms_[-e] = c;
        return r;
    }
    LaurentPoly conj() const {
        LaurentPoly r;
        for (const auto& [e, c] : terms_) r.terms_[e] = c.conj();
        return r;
    }

    bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    /// Exact value at t = 1 (sum of coefficients).
    GRat at_one() const {
        GRat s;
        for (const auto& [e, c] : terms_) s += c;
        return s;
    }

    /// Numeric value at real t > 0. Throws if any coefficient is non-real.
    double eval(double t) const {
        double s = 0.0;
        for (const auto& [e, c] : terms_) {
            if (!c.is_real())
                throw std::domain_error("LaurentPoly: numeric eval of non-real value");
            s += to_double(c.re) * std::pow(t, static_cast<double>(e));
        }
        return s;
    }

    std::string str(const std::string& var = "t") const;

private:
    Terms terms_;
};

/// Quotient and remainder of ordinary polynomial division (min_exp >= 0
/// required for the divisor logic to make sense; callers shift first).
void poly_divmod(const LaurentPoly& a, const LaurentPoly& b, LaurentPoly& q, LaurentPoly& rem);

/// Exact division; throws if the remainder is nonzero.
LaurentPoly poly_divexact(const LaurentPoly& a, const LaurentPoly& b);

/// Monic gcd in Q(i)[t] of the ordinary-polynomial parts (Laurent inputs are
/// shifted so their lowest exponent is 0 before running Euclid).
LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b);

} // namespace cpq
