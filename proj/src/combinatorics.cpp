#include "cpq/multiindex.hpp"
#include "cpq/permutation.hpp"

#include <algorithm>
#include <numeric>

namespace cpq {

std::vector<MultiIndex> enumerate_multiindices(int ell, int k) {
    if (k < 0 || k > ell) throw std::domain_error("enumerate_multiindices: k out of range");
    std::vector<MultiIndex> out;
    std::vector<int> cur(static_cast<size_t>(k));
    // Standard lexicographic combination walk.
    for (int i = 0; i < k; ++i) cur[static_cast<size_t>(i)] = i + 1;
    while (true) {
        out.emplace_back(ell, cur);
        int i = k - 1;
        while (i >= 0 && cur[static_cast<size_t>(i)] == ell - (k - 1 - i)) --i;
        if (i < 0) break;
        ++cur[static_cast<size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            cur[static_cast<size_t>(j)] = cur[static_cast<size_t>(j - 1)] + 1;
    }
    return out;
}

std::vector<Permutation> enumerate_shuffles(int h, int k) {
    if (h < 0 || k < 0) throw std::domain_error("enumerate_shuffles: negative block size");
    const int n = h + k;
    std::vector<Permutation> out;
    // An element of S^{(h)}_{h+k} is determined by the image set of {1..h}.
    for (const MultiIndex& s : enumerate_multiindices(n == 0 ? 0 : n, h)) {
        std::vector<int> img(static_cast<size_t>(n));
        std::vector<bool> used(static_cast<size_t>(n) + 1, false);
        for (int i = 0; i < h; ++i) {
            img[static_cast<size_t>(i)] = s[i];
            used[static_cast<size_t>(s[i])] = true;
        }
        int pos = h;
        for (int v = 1; v <= n; ++v)
            if (!used[static_cast<size_t>(v)]) img[static_cast<size_t>(pos++)] = v;
        out.emplace_back(std::move(img));
    }
    return out;
}

std::vector<Permutation> enumerate_permutations(int n) {
    std::vector<int> img(static_cast<size_t>(n));
    std::iota(img.begin(), img.end(), 1);
    std::vector<Permutation> out;
    do {
        out.emplace_back(img);
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

std::pair<Permutation, Permutation> coset_factorize(const Permutation& p, int k) {
    const int n = p.n();
    if (k < 0 || k > n) throw std::domain_error("coset_factorize: k out of range");
    // p'' sorts within the two blocks; p' = p * p''^{-1} is the coset representative.
    std::vector<int> first, second;
    for (int i = 1; i <= k; ++i) first.push_back(p(i));
    for (int i = k + 1; i <= n; ++i) second.push_back(p(i));
    auto rank_sorted = [](std::vector<int>& blk, int offset) {
        std::vector<int> order(blk.size());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            return blk[static_cast<size_t>(a)] < blk[static_cast<size_t>(b)];
        });
        // position map: block slot -> sorted rank (1-based within block)
        std::vector<int> rank(blk.size());
        for (size_t r = 0; r < order.size(); ++r)
            rank[static_cast<size_t>(order[r])] = static_cast<int>(r) + 1 + offset;
        return rank;
    };
    std::vector<int> r1 = rank_sorted(first, 0), r2 = rank_sorted(second, k);
    std::vector<int> ppimg(static_cast<size_t>(n));
    for (int i = 0; i < k; ++i) ppimg[static_cast<size_t>(i)] = r1[static_cast<size_t>(i)];
    for (int i = k; i < n; ++i) ppimg[static_cast<size_t>(i)] = r2[static_cast<size_t>(i - k)];
    Permutation pdd(std::move(ppimg)); // in S_k x S_{n-k}
    Permutation pd = p * pdd.inverse();
    return {pd, pdd};
}

} // namespace cpq
