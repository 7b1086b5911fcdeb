#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "cpq/spectra.hpp"
#include "cpq/verify.hpp"

using namespace cpq;
using namespace cpq::spectra;

TEST_CASE("casimir_eigenvalue examples") {
    for (int ell = 1; ell <= 4; ++ell) {
        RootOrder ro = RootOrder::for_rank(ell);
        HighestWeight zero(static_cast<size_t>(ell), 0);
        CHECK(casimir_eigenvalue(ell, zero).to_qscalar(ro).is_zero());
    }
    // l=1: lambda(n) = [(n+1)/2]^2 - [1/2]^2, the n-independent offset being -[1/2]^2
    RootOrder ro = RootOrder::for_rank(1);
    for (long n = 0; n <= 6; ++n) {
        QScalar lam = casimir_eigenvalue(1, {n}).to_qscalar(ro);
        QScalar expect = qnum(ro, Rat(n + 1, 2)) * qnum(ro, Rat(n + 1, 2)) -
                         qnum(ro, Rat(1, 2)) * qnum(ro, Rat(1, 2));
        CHECK(lam == expect);
    }
}

TEST_CASE("weyl_dim examples") {
    CHECK(weyl_dim(3, {0, 0, 0}) == 1);
    for (long n = 0; n <= 6; ++n) CHECK(weyl_dim(1, {n}) == Int(n + 1));
    for (int ell = 1; ell <= 5; ++ell) {
        HighestWeight fund(static_cast<size_t>(ell), 0);
        fund[0] = 1;
        CHECK(weyl_dim(ell, fund) == Int(ell + 1));
    }
    CHECK_THROWS_AS(weyl_dim(2, {1}), std::domain_error);
}

TEST_CASE("hook_dim examples") {
    // n1 = nl = 0 gives binom(l+1, k)
    for (int ell = 1; ell <= 5; ++ell)
        for (int k = 1; k <= ell; ++k)
            CHECK(hook_dim(ell, 0, 0, k) == binomial(Int(ell + 1), Int(k)));
}

TEST_CASE("eig_lambda at q = 1 is the classical Casimir value") {
    for (int ell = 1; ell <= 4; ++ell)
        for (long n1 = 0; n1 <= 3; ++n1)
            for (long nl = 0; nl <= 3; ++nl)
                for (int k = 1; k <= ell; ++k) {
                    GRat a = eig_lambda(ell, n1, nl, k).at_one();
                    GRat b = casimir_eigenvalue(ell, family_weight(ell, n1, nl, k)).at_one();
                    CHECK(a == b); // classical limit is symmetric, so all routes agree
                }
}

TEST_CASE("harmonic decomposition examples") {
    // l=2, N=0, k=0: weights (m, m)
    auto t = harmonic_decomposition(2, 0, 0, 5);
    REQUIRE(t.blocks.size() == 6);
    for (const auto& b : t.blocks) {
        CHECK(b.weight[0] == b.level);
        CHECK(b.weight[1] == b.level);
    }
    // trivial weight appears exactly once, at m = 0
    CHECK(t.blocks[0].weight == HighestWeight{0, 0});
    CHECK(t.blocks[0].dim == 1);

    // l=3, N=4, k=3 (N > l branch): weights (m+N-l-1, 0, m) = (m, 0, m)
    auto t2 = harmonic_decomposition(3, 4, 3, 4);
    for (const auto& b : t2.blocks) {
        CHECK(b.weight[0] == b.level);
        CHECK(b.weight[1] == 0);
        CHECK(b.weight[2] == b.level);
    }

    // trivial rep in Omega^l_{l+1} at m=0
    auto t3 = harmonic_decomposition(2, 3, 2, 3);
    CHECK(t3.blocks[0].weight == HighestWeight{0, 0});

    // inconsistent case coverage impossible: every k in range resolves
    for (int ell = 1; ell <= 4; ++ell)
        for (int N = -3; N <= ell + 3; ++N)
            for (int k = 0; k <= ell; ++k) CHECK_NOTHROW(harmonic_decomposition(ell, N, k, 2));
}

TEST_CASE("find_level inverts the decomposition") {
    for (int ell = 1; ell <= 3; ++ell)
        for (int N = -2; N <= ell + 2; ++N)
            for (int k = 0; k <= ell; ++k) {
                auto t = harmonic_decomposition(ell, N, k, 6);
                for (const auto& b : t.blocks) {
                    auto m = find_level(ell, N, k, b.weight);
                    REQUIRE(m.has_value());
                    CHECK(*m == b.level);
                }
            }
}

TEST_CASE("laplacian scalar examples") {
    // k=0, N=0: the additive constant vanishes
    for (int ell = 1; ell <= 4; ++ell) {
        RootOrder ro = spectra_order(ell);
        auto ls = laplacian_scalar(ell, 0, 0);
        CHECK(ls.laplacian_constant.to_qscalar(ro).is_zero());
        // s(0,0) = 0 by the q-number recurrence q[l] + q^{-l} = [l+1]
        CHECK(ls.s.to_qscalar(ro).is_zero());
        // finite at q=1 for every (k,N) in range
        for (int N = -2; N <= ell + 2; ++N)
            for (int k = 0; k <= ell; ++k) CHECK_NOTHROW(laplacian_scalar(ell, N, k).s.at_one());
    }
    // l=1: D^2 = C_q^{sec2} - [1/2]^2 route; the general engine hits [k][k+1] directly
    RootOrder ro = spectra_order(1);
    Spectrum s = full_spectrum(1, 0, 6);
    for (const auto& line : s.lines) {
        if (line.kernel) continue;
        long k = line.weight[0] / 2; // chain weight V_{2k} carries the value [k][k+1]
        QScalar expect = qnum(ro, k) * qnum(ro, k + 1);
        CHECK(line.d2.to_qscalar(ro) == expect);
    }
}

TEST_CASE("CP^1 spectra (exact)") {
    RootOrder ro = spectra_order(1);
    SUBCASE("N=0: kernel 1, values [k][k+1], multiplicity 2k+1") {
        auto agg = aggregate_dirac(full_spectrum(1, 0, 21), ro);
        CHECK(agg.kernel_dim == 1);
        std::map<std::string, Int> by_value;
        for (const auto& l : agg.lines) by_value[l.d2.str()] = l.multiplicity;
        for (long k = 1; k <= 20; ++k) {
            QScalar expect = qnum(ro, k) * qnum(ro, k + 1);
            auto it = by_value.find(expect.str());
            REQUIRE(it != by_value.end());
            CHECK(it->second == Int(2 * k + 1));
        }
    }
    SUBCASE("N=1: no kernel, values q[k]^2, multiplicity 2k") {
        auto agg = aggregate_dirac(full_spectrum(1, 1, 21), ro);
        CHECK(agg.kernel_dim == 0);
        std::map<std::string, Int> by_value;
        for (const auto& l : agg.lines) by_value[l.d2.str()] = l.multiplicity;
        for (long k = 1; k <= 20; ++k) {
            QScalar expect = QScalar::q_power(ro, Rat(1)) * qnum(ro, k) * qnum(ro, k);
            auto it = by_value.find(expect.str());
            REQUIRE(it != by_value.end());
            CHECK(it->second == Int(2 * k));
        }
    }
}

TEST_CASE("CP^2 at N=0: D^2 = q^{-3} C_q") {
    RootOrder ro = spectra_order(2);
    QScalar qm3 = QScalar::q_power(ro, Rat(-3));
    Spectrum s = full_spectrum(2, 0, 7);
    int checked = 0;
    for (const auto& line : s.lines) {
        if (line.kernel) {
            CHECK(casimir_eigenvalue(2, line.weight).to_qscalar(ro).is_zero());
            continue;
        }
        CHECK(line.d2.to_qscalar(ro) ==
              qm3 * casimir_eigenvalue(2, line.weight).to_qscalar(ro));
        ++checked;
    }
    CHECK(checked >= 30);
}

TEST_CASE("classical spectrum examples") {
    // l=1, N=0: lambda^2 = (m+2)(m+1), mu = 2m+3
    auto cs = classical_spectrum(1, 0, 5);
    CHECK(cs.kernel_dim == 1);
    for (const auto& line : cs.lines) {
        CHECK(line.lambda_sq == Rat((line.m + 2) * (line.m + 1)));
        CHECK(line.multiplicity == Int(2 * line.m + 3));
    }
    // N=0, l=2: kernel dim binom(2,2) = 1
    CHECK(classical_spectrum(2, 0, 3).kernel_dim == 1);
    // l odd, N=(l+1)/2: eigenvalues +-sqrt((m + (l+1)/2)(m+k)), (l+1)/2 <= k <= l
    const int ell = 3, N = 2;
    auto cs3 = classical_spectrum(ell, N, 4);
    CHECK(cs3.kernel_dim == 0);
    for (const auto& line : cs3.lines) {
        // both regime pieces of the 1<=N<=l case give second factors in [N, l] here
        long kk = line.k;
        CHECK(kk >= N);
        CHECK(kk <= ell);
        CHECK(line.lambda_sq == Rat((line.m + 2) * (line.m + kk)));
    }
}

TEST_CASE("q = 1: engine equals the classical closed form (spot check l=2, N=-1)") {
    const int ell = 2, N = -1;
    auto engine = aggregate_dirac_at_one(full_spectrum(ell, N, 12));
    auto classical = classical_spectrum(ell, N, 10);
    CHECK(engine.kernel_dim == classical.kernel_dim);
    std::map<Rat, Int> cls;
    for (const auto& l : classical.lines) cls[l.lambda_sq] += l.multiplicity;
    for (const auto& [v, mult] : cls) {
        bool found = false;
        for (const auto& l : engine.lines)
            if (l.d2 == v) {
                CHECK(l.multiplicity == mult);
                found = true;
            }
        CHECK(found);
    }
}

TEST_CASE("growth diagnostics: CP^1 closed form") {
    // [k][k+1] ~ q^{-(2k+1)}/(q-q^{-1})^2: slope exactly 2 log(1/q) asymptotically
    auto rep = growth_diagnostics(1, 0, 0.5, 25);
    CHECK(rep.relative_error < 0.05);
    CHECK(rep.summable);
    for (const auto& t : rep.tails) CHECK(t.max_tail_ratio < 1.0);
}

TEST_CASE("spectra verification suite") {
    auto suite = verify::spectra_suite(3);
    for (const auto& r : suite) {
        INFO(r.name, ": ", r.detail);
        CHECK(r.pass);
    }
}
