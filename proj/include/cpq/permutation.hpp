#pragma once

#include <stdexcept>
#include <vector>

namespace cpq {

/// Permutation of {1..n}, stored by images (p(1),...,p(n)).
class Permutation {
public:
    explicit Permutation(std::vector<int> images) : img_(std::move(images)) {
        std::vector<bool> seen(img_.size(), false);
        for (int v : img_) {
            if (v < 1 || v > static_cast<int>(img_.size()) || seen[static_cast<size_t>(v - 1)])
                throw std::domain_error("Permutation: images are not a bijection");
            seen[static_cast<size_t>(v - 1)] = true;
        }
    }
    static Permutation identity(int n) {
        std::vector<int> v(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) v[static_cast<size_t>(i)] = i + 1;
        return Permutation(std::move(v));
    }

    int n() const { return static_cast<int>(img_.size()); }
    /// p(i), 1-based.
    int operator()(int i) const { return img_[static_cast<size_t>(i - 1)]; }
    const std::vector<int>& images() const { return img_; }

    Permutation inverse() const {
        std::vector<int> v(img_.size());
        for (int i = 1; i <= n(); ++i) v[static_cast<size_t>((*this)(i) - 1)] = i;
        return Permutation(std::move(v));
    }

    /// Composition acting right-to-left: (p*q)(i) = p(q(i)).
    Permutation operator*(const Permutation& q) const {
        if (n() != q.n()) throw std::domain_error("Permutation: size mismatch");
        std::vector<int> v(img_.size());
        for (int i = 1; i <= n(); ++i) v[static_cast<size_t>(i - 1)] = (*this)(q(i));
        return Permutation(std::move(v));
    }

    /// Number of inversions; equals the Coxeter length ||p||.
    long inversion_count() const {
        long c = 0;
        for (int i = 1; i <= n(); ++i)
            for (int j = i + 1; j <= n(); ++j)
                if ((*this)(i) > (*this)(j)) ++c;
        return c;
    }

    bool operator==(const Permutation& o) const { return img_ == o.img_; }
    bool operator!=(const Permutation& o) const { return !(*this == o); }
    bool operator<(const Permutation& o) const { return img_ < o.img_; }

private:
    std::vector<int> img_;
};

/// All of S^{(h)}_{h+k}: permutations of {1..h+k} ascending on the first h and
/// on the last k positions. Cardinality binom(h+k,h).
std::vector<Permutation> enumerate_shuffles(int h, int k);

/// All n! permutations (small n only; used by exhaustive identity tests).
std::vector<Permutation> enumerate_permutations(int n);

/// Unique parabolic-coset factorization p = p' p'' with p' in S^{(k)}_n and
/// p'' in S_k x S_{n-k}; returns (p', p'').
std::pair<Permutation, Permutation> coset_factorize(const Permutation& p, int k);

} // namespace cpq
