#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cpq/sphere.hpp"
#include "cpq/verify.hpp"

using namespace cpq;
using namespace cpq::sphere;

namespace {
const RootOrder R(2);
WordPoly z(int ell, int i) { return WordPoly::generator(R, ell, i, false); }
WordPoly zs(int ell, int i) { return WordPoly::generator(R, ell, i, true); }
} // namespace

TEST_CASE("normal form: single rewrites") {
    const int ell = 2;
    // z_2 z_1 -> q^{-1} z_1 z_2
    WordPoly lhs = normal_form(z(ell, 2) * z(ell, 1));
    REQUIRE(lhs.terms().size() == 1);
    const auto& [w, c] = *lhs.terms().begin();
    CHECK(w == SWord{{1, false}, {2, false}});
    CHECK(c == QScalar::q_power(R, Rat(-1)));

    // z*_1 z_1 -> z_1 z*_1
    WordPoly comm = normal_form(zs(ell, 1) * z(ell, 1));
    REQUIRE(comm.terms().size() == 1);
    CHECK(comm.terms().begin()->first == SWord{{1, false}, {1, true}});
    CHECK(comm.terms().begin()->second == QScalar::one(R));

    // sum_i z_i z_i^* -> 1
    WordPoly sum(R, ell);
    for (int i = 1; i <= ell + 1; ++i) sum = sum + z(ell, i) * zs(ell, i);
    CHECK(is_unit(normal_form(sum)));
}

TEST_CASE("normal words recognized") {
    const int ell = 2;
    CHECK(is_normal_word(ell, {{1, false}, {2, false}, {2, true}, {1, true}}));
    CHECK_FALSE(is_normal_word(ell, {{2, false}, {1, false}}));
    CHECK_FALSE(is_normal_word(ell, {{1, true}, {1, false}}));
    // z_3 z*_3 contains the sphere redex at l = 2
    CHECK_FALSE(is_normal_word(ell, {{3, false}, {3, true}}));
    CHECK(is_normal_word(ell, {{3, false}, {2, true}}));
}

TEST_CASE("partition of unity") {
    // N = 1 is the spherical relation itself, any l
    for (int ell = 1; ell <= 3; ++ell) {
        auto res = partition_of_unity_check(R, ell, 1);
        CHECK(res.holds);
        CHECK(res.summands == ell + 1);
    }
    // N = 2, l = 1
    auto res = partition_of_unity_check(R, 1, 2);
    CHECK(res.holds);
    CHECK(res.summands == 3);
    CHECK(res.residual.is_zero());
}

TEST_CASE("grading") {
    const int ell = 2;
    CHECK(khat_grading(normal_form(zs(ell, 1))) == std::optional<long>(1));
    CHECK(khat_grading(normal_form(z(ell, 1) * zs(ell, 2))) == std::optional<long>(0));
    CHECK(khat_grading(WordPoly::unit(R, ell)) == std::optional<long>(0));
    CHECK_FALSE(khat_grading(z(ell, 1) + zs(ell, 1)).has_value());
    // Psi_N-type monomial: (z^j)^* with |j| = N has grading N
    WordPoly psi = normal_form(zs(ell, 1) * zs(ell, 1) * zs(ell, 3));
    CHECK(khat_grading(psi) == std::optional<long>(3));
}

TEST_CASE("sphere verification suite") {
    auto suite = verify::sphere_suite(3);
    for (const auto& r : suite) {
        INFO(r.name, ": ", r.detail);
        CHECK(r.pass);
    }
}
