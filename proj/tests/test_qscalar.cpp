#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cpq/qexpr.hpp"
#include "cpq/qscalar.hpp"

using namespace cpq;

namespace {

const RootOrder R4(4);

QScalar q(long e) { return QScalar::q_power(R4, Rat(e)); }

/// Random nonzero QScalar with small Laurent numerator and denominator.
QScalar random_qscalar(std::mt19937& rng, bool with_den = true) {
    std::uniform_int_distribution<int> nterms(1, 4), expo(-6, 6), coef(-5, 5);
    auto poly = [&](bool nonzero) {
        LaurentPoly p;
        for (int i = 0; i < nterms(rng); ++i) p.add_term(expo(rng), GRat(coef(rng)));
        if (nonzero && p.is_zero()) p.add_term(0, GRat(1));
        return p;
    };
    LaurentPoly num = poly(false), den = with_den ? poly(true) : LaurentPoly::one();
    return QScalar(R4, num, den);
}

} // namespace

TEST_CASE("ring operations: worked examples") {
    // (q + q^-1) * q = q^2 + 1
    CHECK((qnum(R4, 2) * q(1)) == (q(2) + q(0)));
    // a + 0 = a
    QScalar a = qnum(R4, 3);
    CHECK((a + QScalar::zero(R4)) == a);
    // (q^2 - q^-2)/(q - q^-1) = q + q^-1
    CHECK(((q(2) - q(-2)) / (q(1) - q(-1))) == (q(1) + q(-1)));
}

TEST_CASE("qnum: worked examples") {
    CHECK(qnum(R4, 0).is_zero());
    CHECK(qnum(R4, 1) == QScalar::one(R4));
    CHECK(qnum(R4, 2) == (q(1) + q(-1)));
    // [1/2] = 1/(q^{1/2} + q^{-1/2})
    QScalar half = qnum(R4, Rat(1, 2));
    QScalar expect = QScalar::one(R4) /
                     (QScalar::q_power(R4, Rat(1, 2)) + QScalar::q_power(R4, Rat(-1, 2)));
    CHECK(half == expect);
    // [-x] = -[x]
    CHECK(qnum(R4, -3) == -qnum(R4, 3));
    // r*x not integral
    CHECK_THROWS_AS(qnum(R4, Rat(1, 3)), PrecisionError);
}

TEST_CASE("qfact and qbinom") {
    CHECK(qfact(R4, 0) == QScalar::one(R4));
    CHECK(qfact(R4, 2) == (q(1) + q(-1)));
    CHECK(qfact(R4, 3) == (q(1) + q(-1)) * (q(2) + q(0) + q(-2)));
    CHECK(qbinom(R4, 5, 0) == QScalar::one(R4));
    CHECK(qbinom(R4, 2, 1) == (q(1) + q(-1)));
    CHECK(qbinom(R4, 4, 2).eval_at(1.0) == doctest::Approx(6.0));
    CHECK(qbinom(R4, 4, 7).is_zero());
    CHECK(qbinom(R4, 4, -1).is_zero());
    for (long n = 0; n <= 12; ++n)
        for (long k = 0; k <= n; ++k) {
            QScalar b = qbinom(R4, n, k);
            CHECK(b == qbinom(R4, n, n - k));
            CHECK(b == b.q_inverse());
            CHECK(b.is_polynomial());
        }
}

TEST_CASE("qmultinom: examples and recurrence") {
    CHECK(qmultinom(R4, {7, 0, 0}) == QScalar::one(R4));
    // [1,1]! = (q + q^-1) q^-1 = 1 + q^-2
    CHECK(qmultinom(R4, {1, 1}) == (q(0) + q(-2)));
    // recurrence instance at (1,1)
    CHECK(qmultinom(R4, {1, 1}) ==
          qmultinom(R4, {0, 1}) * q(-2) + qmultinom(R4, {1, 0}));

    // Pascal-type recurrence for all compositions of n <= 8 into <= 5 parts:
    // [j]! = sum_i [j - e_i]! q^{-2 sum_{k>i} j_k}
    auto check_rec = [&](const std::vector<long>& j) {
        QScalar rhs = QScalar::zero(R4);
        for (size_t i = 0; i < j.size(); ++i) {
            if (j[i] == 0) continue;
            std::vector<long> jm = j;
            jm[i] -= 1;
            long tail = 0;
            for (size_t k = i + 1; k < j.size(); ++k) tail += j[k];
            rhs += qmultinom(R4, jm) * q(-2 * tail);
        }
        CHECK(qmultinom(R4, j) == rhs);
    };
    std::vector<std::vector<long>> comps;
    std::vector<long> cur;
    auto rec = [&](auto&& self, int parts, long rem) -> void {
        if (parts == 1) {
            cur.push_back(rem);
            comps.push_back(cur);
            cur.pop_back();
            return;
        }
        for (long v = 0; v <= rem; ++v) {
            cur.push_back(v);
            self(self, parts - 1, rem - v);
            cur.pop_back();
        }
    };
    for (int parts = 2; parts <= 5; ++parts)
        for (long n = 1; n <= 8; ++n) rec(rec, parts, n);
    for (const auto& j : comps)
        if (std::any_of(j.begin(), j.end(), [](long v) { return v > 0; })) check_rec(j);
}

TEST_CASE("field axioms on random values") {
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 200; ++trial) {
        QScalar a = random_qscalar(rng), b = random_qscalar(rng), c = random_qscalar(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        if (!a.is_zero()) {
            QScalar inv = QScalar::one(R4) / a;
            CHECK(a * inv == QScalar::one(R4));
        }
        CHECK((a - a).is_zero());
    }
}

TEST_CASE("[x]^2 - [y]^2 = [x-y][x+y]") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> num(-12, 12);
    for (int trial = 0; trial < 100; ++trial) {
        Rat x(num(rng), 2), y(num(rng), 2); // r = 4 represents half-integers
        QScalar lhs = qnum(R4, x) * qnum(R4, x) - qnum(R4, y) * qnum(R4, y);
        QScalar rhs = qnum(R4, x - y) * qnum(R4, x + y);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("eval_at: examples and homomorphism") {
    CHECK(qnum(R4, 2).eval_at(0.5) == doctest::Approx(2.5));
    // [x] at q = 1 is x
    CHECK(qnum(R4, 7).eval_at(1.0) == doctest::Approx(7.0));
    CHECK(qnum(R4, Rat(3, 2)).eval_at(1.0) == doctest::Approx(1.5));
    // [3]!/[2]! at q = 1 -> 3 (exact removable-singularity handling through reduction)
    CHECK((qfact(R4, 3) / qfact(R4, 2)).eval_at(1.0) == doctest::Approx(3.0));
    // raw rational function with a genuine pole at q=1 must refuse
    QScalar pole = QScalar::one(R4) / (q(1) - q(-1));
    CHECK_THROWS_AS(pole.eval_at(1.0), SingularEvaluation);

    // ring homomorphism within 1e-12 relative tolerance on polynomials
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> expo(-100, 100), coef(-9, 9);
    for (int trial = 0; trial < 50; ++trial) {
        LaurentPoly pa, pb;
        for (int i = 0; i < 6; ++i) {
            pa.add_term(expo(rng), GRat(coef(rng)));
            pb.add_term(expo(rng), GRat(coef(rng)));
        }
        QScalar a(R4, pa, LaurentPoly::one()), b(R4, pb, LaurentPoly::one());
        for (double qq : {0.3, 0.7, 0.95}) {
            double va = a.eval_at(qq), vb = b.eval_at(qq);
            CHECK((a * b).eval_at(qq) ==
                  doctest::Approx(va * vb).epsilon(1e-12));
            CHECK((a + b).eval_at(qq) == doctest::Approx(va + vb).epsilon(1e-12));
        }
    }
}

TEST_CASE("substitute q -> q^{-1}") {
    QScalar a = qnum(R4, 2);
    CHECK(a.q_inverse() == a); // palindrome
    CHECK(q(2).q_inverse() == q(-2));
    std::mt19937 rng(3);
    for (int trial = 0; trial < 50; ++trial) {
        QScalar x = random_qscalar(rng);
        CHECK(x.q_inverse().q_inverse() == x);
    }
}

TEST_CASE("conjugation fixes t and flips i") {
    QScalar z = QScalar::constant(R4, GRat::i()) * qnum(R4, 2);
    CHECK(z.conj() == QScalar::constant(R4, -GRat::i()) * qnum(R4, 2));
    CHECK(z.conj().conj() == z);
}

TEST_CASE("division by zero") {
    CHECK_THROWS_AS(QScalar::one(R4) / QScalar::zero(R4), std::domain_error);
}

TEST_CASE("canonical string form") {
    CHECK(qnum(R4, 2).str() == "t^4 + t^-4");
    CHECK(qnum(R4, 2).str_q() == "q + q^(-1)");
    QScalar half = qnum(R4, Rat(1, 2));
    CHECK(half.str() == "(t^2)/(t^4 + 1)");
}

TEST_CASE("expression layer: q = 1 specialization") {
    // [x] -> x node-wise
    QExpr e = QExpr::num(5) * QExpr::num(3) - QExpr::qpow(Rat(7, 2));
    CHECK(e.at_one() == GRat(Rat(14)));
    CHECK(e.to_qscalar(R4).eval_at(1.0) == doctest::Approx(14.0));

    // pole node: [x]^2 as (q^{2x} + q^{-2x} - 2)/(q-q^{-1})^2
    QExpr p = QExpr::pole_sum({{GRat(1), Rat(6)}, {GRat(1), Rat(-6)}, {GRat(-2), Rat(0)}});
    CHECK(p.to_qscalar(R4) == (qnum(R4, 3) * qnum(R4, 3)));
    CHECK(p.at_one() == GRat(Rat(9)));

    // pole node preconditions
    CHECK_THROWS_AS(QExpr::pole_sum({{GRat(1), Rat(2)}}), std::logic_error);

    // division specializing to 0 in the denominator is refused
    QExpr bad = QExpr::integer(1) / (QExpr::num(2) - QExpr::integer(2));
    CHECK_THROWS_AS(bad.at_one(), SingularEvaluation);
}
