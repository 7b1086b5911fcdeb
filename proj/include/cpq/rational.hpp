#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace cpq {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int binomial(const Int& n, const Int& k) {
    if (k < 0 || k > n) return 0;
    Int r = 1;
    Int kk = k;
    if (n - k < kk) kk = n - k;
    for (Int i = 0; i < kk; ++i) {
        r *= (n - i);
        r /= (i + 1);
    }
    return r;
}

inline Int factorial(long n) {
    Int r = 1;
    for (long i = 2; i <= n; ++i) r *= i;
    return r;
}

/// Rational with a formal imaginary unit adjoined. All Laurent coefficients
/// live here so that antilinear maps (which conjugate coefficients) act
/// nontrivially in tests.
struct GRat {
    Rat re;
    Rat im;

    GRat() : re(0), im(0) {}
    GRat(long v) : re(v), im(0) {}
    GRat(const Rat& r) : re(r), im(0) {}
    GRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

    static GRat i() { return GRat(Rat(0), Rat(1)); }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    GRat conj() const { return GRat(re, -im); }

    GRat operator-() const { return GRat(-re, -im); }
    GRat operator+(const GRat& o) const { return GRat(re + o.re, im + o.im); }
    GRat operator-(const GRat& o) const { return GRat(re - o.re, im - o.im); }
    GRat operator*(const GRat& o) const {
        return GRat(re * o.re - im * o.im, re * o.im + im * o.re);
    }
    GRat operator/(const GRat& o) const {
        Rat n = o.re * o.re + o.im * o.im;
        if (n == 0) throw std::domain_error("GRat: division by zero");
        return GRat((re * o.re + im * o.im) / n, (im * o.re - re * o.im) / n);
    }
    GRat& operator+=(const GRat& o) { re += o.re; im += o.im; return *this; }
    GRat& operator-=(const GRat& o) { re -= o.re; im -= o.im; return *this; }
    GRat& operator*=(const GRat& o) { *this = *this * o; return *this; }

    bool operator==(const GRat& o) const { return re == o.re && im == o.im; }
    bool operator!=(const GRat& o) const { return !(*this == o); }

    std::string str() const {
        std::ostringstream os;
        if (im == 0) {
            os << re;
        } else if (re == 0) {
            os << im << "*i";
        } else {
            os << re << (im > 0 ? "+" : "") << im << "*i";
        }
        return os.str();
    }
};

inline std::ostream& operator<<(std::ostream& os, const GRat& g) { return os << g.str(); }

inline double to_double(const Rat& r) { return r.convert_to<double>(); }

} // namespace cpq
