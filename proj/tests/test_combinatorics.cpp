#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "cpq/multiindex.hpp"
#include "cpq/permutation.hpp"
#include "cpq/rational.hpp"

using namespace cpq;

TEST_CASE("enumeration of multi-indices") {
    auto v1 = enumerate_multiindices(3, 1);
    REQUIRE(v1.size() == 3);
    CHECK(v1[0].entries() == std::vector<int>{1});
    CHECK(v1[1].entries() == std::vector<int>{2});
    CHECK(v1[2].entries() == std::vector<int>{3});

    auto v2 = enumerate_multiindices(3, 2);
    REQUIRE(v2.size() == 3);
    CHECK(v2[0].entries() == std::vector<int>{1, 2});
    CHECK(v2[1].entries() == std::vector<int>{1, 3});
    CHECK(v2[2].entries() == std::vector<int>{2, 3});

    CHECK(enumerate_multiindices(6, 3).size() == 20);
    CHECK(enumerate_multiindices(4, 0).size() == 1);
    CHECK_THROWS_AS(enumerate_multiindices(3, 4), std::domain_error);

    // lexicographic order is part of the contract
    for (int ell = 1; ell <= 6; ++ell)
        for (int k = 0; k <= ell; ++k) {
            auto v = enumerate_multiindices(ell, k);
            CHECK(std::is_sorted(v.begin(), v.end()));
            CHECK(Int(v.size()) == binomial(Int(ell), Int(k)));
        }
}

TEST_CASE("sharp") {
    CHECK(MultiIndex(3, {1}).sharp(1) == 1);
    CHECK(MultiIndex(3, {1, 2}).sharp(1) == 0);
    CHECK(MultiIndex(3, {1, 3}).sharp(2) == -1);
    for (int ell = 1; ell <= 6; ++ell)
        for (int k = 0; k <= ell; ++k)
            for (const auto& i : enumerate_multiindices(ell, k))
                for (int j = 1; j <= ell; ++j) CHECK(std::abs(i.sharp(j)) <= 1);
}

TEST_CASE("shift") {
    CHECK(MultiIndex(3, {1}).shifted(1, +1) == MultiIndex(3, {2}));
    CHECK(MultiIndex(3, {1, 3}).shifted(2, -1) == MultiIndex(3, {1, 2}));
    CHECK(MultiIndex(3, {1, 3}).shifted(1, +1) == MultiIndex(3, {2, 3}));
    CHECK_THROWS_AS(MultiIndex(3, {1, 2}).shifted(1, +1), std::domain_error);
}

TEST_CASE("complement") {
    CHECK(MultiIndex(3, {1}).complement() == MultiIndex(3, {2, 3}));
    CHECK(MultiIndex(4, {}).complement() == MultiIndex(4, {1, 2, 3, 4}));
    CHECK(MultiIndex(2, {1, 2}).complement() == MultiIndex(2, {}));
    for (int ell = 1; ell <= 6; ++ell)
        for (int k = 0; k <= ell; ++k)
            for (const auto& i : enumerate_multiindices(ell, k)) {
                CHECK(i.complement().complement() == i);
                // sharp cancels against the complement for generator indices j <= l-1
                for (int j = 1; j <= ell - 1; ++j)
                    CHECK(i.sharp(j) + i.complement().sharp(j) == 0);
            }
}

TEST_CASE("position and the claim L(j,i^c) + L(j,i u j) = j+1") {
    CHECK(MultiIndex(3, {1, 3}).position(3) == 2);
    CHECK(MultiIndex(4, {1, 2, 4}).position(1) == 1);
    CHECK_THROWS_AS(MultiIndex(3, {1, 3}).position(2), std::domain_error);
    for (int ell = 1; ell <= 6; ++ell)
        for (int k = 0; k < ell; ++k)
            for (const auto& i : enumerate_multiindices(ell, k))
                for (int j = 1; j <= ell; ++j) {
                    if (i.contains(j)) continue;
                    CHECK(i.complement().position(j) + i.with(j).position(j) == j + 1);
                }
}

TEST_CASE("sharp/shift/complement identities") {
    for (int ell = 1; ell <= 6; ++ell)
        for (int k = 0; k <= ell; ++k)
            for (const auto& i : enumerate_multiindices(ell, k)) {
                // (a) l#(i^{j,+}) = l#i - 2 d_{jl} + d_{j,l+1} + d_{j,l-1}
                for (int j = 1; j <= ell - 1; ++j) {
                    if (i.sharp(j) != 1) continue;
                    MultiIndex ip = i.shifted(j, +1);
                    for (int l = 1; l <= ell - 1; ++l) {
                        int expect = i.sharp(l) - 2 * (j == l) + (j == l + 1) + (j == l - 1);
                        CHECK(ip.sharp(l) == expect);
                    }
                    // (c) (i^{j,+})^c = (i^c)^{j,-}
                    CHECK(ip.complement() == i.complement().shifted(j, -1));
                }
                // (b) delta identity
                for (int j = 1; j <= ell - 1; ++j)
                    for (int l = 1; l <= ell - 1; ++l) {
                        int lhs1 = (i.sharp(j) == 1 && i.shifted(j, +1).sharp(l) == -1) ? 1 : 0;
                        int lhs2 = (i.sharp(l) == -1 && i.shifted(l, -1).sharp(j) == 1) ? 1 : 0;
                        int rhs = (j == l) ? i.sharp(j) : 0;
                        CHECK(lhs1 - lhs2 == rhs);
                    }
            }
}

TEST_CASE("inversion counts") {
    CHECK(Permutation::identity(4).inversion_count() == 0);
    CHECK(Permutation({2, 1}).inversion_count() == 1);
    // worked example p = (3,1,2)
    Permutation p({3, 1, 2});
    CHECK(p.inversion_count() == 2);
    CHECK(p.inverse() == Permutation({2, 3, 1}));
    for (int n = 1; n <= 7; ++n)
        for (const auto& s : enumerate_permutations(n))
            CHECK(s.inversion_count() == s.inverse().inversion_count());
}

TEST_CASE("shuffles") {
    auto s11 = enumerate_shuffles(1, 1);
    REQUIRE(s11.size() == 2);
    CHECK(std::count(s11.begin(), s11.end(), Permutation::identity(2)) == 1);
    CHECK(std::count(s11.begin(), s11.end(), Permutation({2, 1})) == 1);

    auto s12 = enumerate_shuffles(1, 2);
    REQUIRE(s12.size() == 3);
    std::multiset<long> lens;
    for (const auto& p : s12) lens.insert(p.inversion_count());
    CHECK(lens == std::multiset<long>{0, 1, 2});

    CHECK(enumerate_shuffles(3, 3).size() == 20);

    // ascending on both blocks
    for (int h = 0; h <= 3; ++h)
        for (int k = 0; k <= 3; ++k)
            for (const auto& p : enumerate_shuffles(h, k)) {
                for (int i = 1; i < h; ++i) CHECK(p(i) < p(i + 1));
                for (int i = h + 1; i < h + k; ++i) CHECK(p(i) < p(i + 1));
            }
}

TEST_CASE("parabolic factorization (unique, length-additive)") {
    for (int n = 1; n <= 6; ++n)
        for (int k = 0; k <= n; ++k) {
            std::map<std::vector<int>, int> seen;
            for (const auto& p : enumerate_permutations(n)) {
                auto [pd, pdd] = coset_factorize(p, k);
                CHECK(pd * pdd == p);
                // p' in S^{(k)}_n
                for (int i = 1; i < k; ++i) CHECK(pd(i) < pd(i + 1));
                for (int i = k + 1; i < n; ++i) CHECK(pd(i) < pd(i + 1));
                // p'' preserves the blocks
                for (int i = 1; i <= k; ++i) CHECK(pdd(i) <= k);
                // length additivity
                CHECK(p.inversion_count() == pd.inversion_count() + pdd.inversion_count());
                seen[p.images()] += 1;
            }
            for (const auto& [img, cnt] : seen) CHECK(cnt == 1);
        }
}
