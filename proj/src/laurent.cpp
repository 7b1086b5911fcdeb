#include "cpq/laurent.hpp"

#include <sstream>

namespace cpq {

std::string LaurentPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    // Highest exponent first.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
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
        bool unit_coeff = (cs == "1");
        if (e == 0) {
            os << cs;
        } else {
            if (!unit_coeff) {
                // Parenthesize complex coefficients so the string stays unambiguous.
                if (!c.is_real()) os << "(" << cs << ")*";
                else os << cs << "*";
            }
            os << var;
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

void poly_divmod(const LaurentPoly& a, const LaurentPoly& b, LaurentPoly& q, LaurentPoly& rem) {
    if (b.is_zero()) throw std::domain_error("poly_divmod: division by zero polynomial");
    q = LaurentPoly();
    rem = a;
    const long long db = b.max_exp();
    const GRat lead_b = b.coeff(db);
    while (!rem.is_zero() && rem.max_exp() >= db) {
        const long long e = rem.max_exp() - db;
        const GRat c = rem.coeff(rem.max_exp()) / lead_b;
        LaurentPoly m = LaurentPoly::monomial(c, e);
        q = q + m;
        rem = rem - m * b;
    }
}

LaurentPoly poly_divexact(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero()) return LaurentPoly();
    // Allow Laurent inputs: normalize shifts, divide, restore.
    const long long sa = a.min_exp(), sb = b.min_exp();
    LaurentPoly q, rem;
    poly_divmod(a.shifted(-sa), b.shifted(-sb), q, rem);
    if (!rem.is_zero()) throw std::domain_error("poly_divexact: inexact division");
    return q.shifted(sa - sb);
}

LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() && b.is_zero()) return LaurentPoly();
    if (a.is_zero()) return b.shifted(-b.min_exp());
    if (b.is_zero()) return a.shifted(-a.min_exp());
    LaurentPoly x = a.shifted(-a.min_exp());
    LaurentPoly y = b.shifted(-b.min_exp());
    if (x.is_monomial() || y.is_monomial()) return LaurentPoly::one();
    while (!y.is_zero()) {
        LaurentPoly q, r;
        poly_divmod(x, y, q, r);
        x = y;
        y = r;
        if (!y.is_zero()) y = y.shifted(-y.min_exp());
    }
    // Monic normalization makes the gcd canonical.
    return x.scaled(GRat(1) / x.coeff(x.max_exp()));
}

} // namespace cpq
