#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cpq/spectra.hpp"
#include "cpq/uqsl.hpp"
#include "cpq/verify.hpp"

using namespace cpq;
using namespace cpq::uqsl;

TEST_CASE("fundamental representation at l=1") {
    RootOrder ro = RootOrder::for_rank_full(1);
    MatrixRep pi = fundamental_rep(ro, 1);
    // pi(K_1) = diag(q^{-1/2}, q^{1/2})
    CHECK(pi.matrix({GK::K, 1})(0, 0) == QScalar::q_power(ro, Rat(-1, 2)));
    CHECK(pi.matrix({GK::K, 1})(1, 1) == QScalar::q_power(ro, Rat(1, 2)));
    // pi(E_1) is the lower-shift elementary matrix
    CHECK(pi.matrix({GK::E, 1})(1, 0) == QScalar::one(ro));
    CHECK(pi.matrix({GK::E, 1})(0, 1).is_zero());
    // K-hat = K_1 at l = 1
    CHECK(pi.matrix({GK::Khat, 0}) == pi.matrix({GK::K, 1}));
}

TEST_CASE("tensor representation basics") {
    for (int ell = 1; ell <= 3; ++ell) {
        RootOrder ro = RootOrder::for_rank_full(ell);
        MatrixRep pi = fundamental_rep(ro, ell);
        MatrixRep pp = tensor_rep(pi, pi);
        CHECK(pp.dim() == (ell + 1) * (ell + 1));
        // Delta(E) structure by construction
        for (int i = 1; i <= ell; ++i) {
            QMatrix expect = pi.matrix({GK::E, i}).kron(pi.matrix({GK::K, i})) +
                             pi.matrix({GK::Kinv, i}).kron(pi.matrix({GK::E, i}));
            CHECK(pp.matrix({GK::E, i}) == expect);
        }
        // [E_i, F_i] relation in the tensor representation
        const QScalar dq = QScalar::q_power(ro, Rat(1)) - QScalar::q_power(ro, Rat(-1));
        for (int i = 1; i <= ell; ++i) {
            QMatrix lhs = commutator(pp.matrix({GK::E, i}), pp.matrix({GK::F, i}));
            QMatrix rhs = (pp.matrix({GK::K, i}) * pp.matrix({GK::K, i}) -
                           pp.matrix({GK::Kinv, i}) * pp.matrix({GK::Kinv, i}))
                              .scaled(QScalar::one(ro) / dq);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("element calculus: star, antipode, coproduct") {
    const int ell = 2;
    RootOrder ro = RootOrder::for_rank_full(ell);
    MatrixRep pi = fundamental_rep(ro, ell);
    NCElement E1 = NCElement::generator(ro, ell, {GK::E, 1});

    // S(S(E_i)) = q^2 E_i
    CHECK(pi.evaluate(E1.antipode().antipode()) ==
          pi.matrix({GK::E, 1}).scaled(QScalar::q_power(ro, Rat(2))));
    // S(K) K = 1
    NCElement K1 = NCElement::generator(ro, ell, {GK::K, 1});
    CHECK(pi.evaluate(K1.antipode() * K1) == QMatrix::identity(ro, pi.dim()));
    // star is an involution on words
    NCElement m12 = root_vector_M(ro, ell, 1, 2);
    CHECK(pi.evaluate(m12.star().star()) == pi.evaluate(m12));
    // m(S (x) id) Delta(E_1) = eps(E_1) = 0 in pi
    NCTensor d = coproduct(ro, E1);
    QMatrix acc(pi.dim(), pi.dim());
    for (const auto& [w, c] : d.terms())
        acc = acc + (pi.evaluate(NCElement::word(ro, ell, w.first).antipode()) *
                     pi.evaluate_word(w.second))
                        .scaled(c);
    CHECK(acc.is_zero());
}

TEST_CASE("root vectors") {
    const int ell = 2;
    RootOrder ro = RootOrder::for_rank_full(ell);
    MatrixRep pi = fundamental_rep(ro, ell);
    // M_12 = E_1 E_2 - q^{-1} E_2 E_1
    NCElement m12 = root_vector_M(ro, ell, 1, 2);
    QMatrix expect = pi.matrix({GK::E, 1}) * pi.matrix({GK::E, 2}) -
                     (pi.matrix({GK::E, 2}) * pi.matrix({GK::E, 1}))
                         .scaled(QScalar::q_power(ro, Rat(-1)));
    CHECK(pi.evaluate(m12) == expect);
    // out-of-range labels give the zero element
    CHECK(root_vector_M(ro, ell, 2, 1).is_zero());
    // N_{i,i-1} is diagonal in pi
    for (int i = 1; i <= ell; ++i) {
        QMatrix n = pi.evaluate(cartan_N(ro, ell, i, i - 1));
        for (int r = 0; r < pi.dim(); ++r)
            for (int c = 0; c < pi.dim(); ++c)
                if (r != c) CHECK(n(r, c).is_zero());
    }
}

TEST_CASE("l=1: X_1 = K_1 K-hat^{-1} F_1 evaluates to pi(F_1)") {
    RootOrder ro = RootOrder::for_rank_full(1);
    MatrixRep pi = fundamental_rep(ro, 1);
    CHECK(pi.evaluate(vector_X(ro, 1, 1)) == pi.matrix({GK::F, 1}));
}

TEST_CASE("casimir matrix in pi is scalar with the closed-form value") {
    for (int ell = 1; ell <= 3; ++ell) {
        RootOrder ro = RootOrder::for_rank_full(ell);
        MatrixRep pi = fundamental_rep(ro, ell);
        QScalar val = casimir_matrix(pi, CasimirKind::Cq).scalar_value();
        spectra::HighestWeight n(static_cast<size_t>(ell), 0);
        n.back() = 1;
        CHECK(val == spectra::casimir_eigenvalue(ell, n).to_qscalar(ro));
    }
}

TEST_CASE("adjoint action examples") {
    for (int ell = 1; ell <= 3; ++ell) {
        RootOrder ro = RootOrder::for_rank_full(ell);
        MatrixRep pi = fundamental_rep(ro, ell);
        NCElement khat = NCElement::generator(ro, ell, {GK::Khat, 0});
        for (int i = 1; i <= ell; ++i) {
            NCElement xi = vector_X(ro, ell, i);
            CHECK(adjoint_action(xi, khat, pi) ==
                  pi.evaluate(xi).scaled(QScalar::q_power(ro, Rat(1))));
        }
    }
}

TEST_CASE("uqsl verification suite") {
    auto suite = verify::uqsl_suite(4);
    for (const auto& r : suite) {
        INFO(r.name, ": ", r.detail);
        CHECK(r.pass);
    }
}
