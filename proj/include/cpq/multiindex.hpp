#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace cpq {

/// Strictly increasing k-tuple in {1..l}: a basis label of W_k. Stored as a
/// sorted integer sequence (not a bitmask) so equality and ordering are the
/// sequence ones and l is unbounded.
class MultiIndex {
public:
    MultiIndex(int ell, std::vector<int> entries) : ell_(ell), e_(std::move(entries)) {
        for (size_t i = 0; i < e_.size(); ++i) {
            if (e_[i] < 1 || e_[i] > ell_ || (i > 0 && e_[i] <= e_[i - 1]))
                throw std::domain_error("MultiIndex: entries must be strictly increasing in [1,l]");
        }
    }
    static MultiIndex empty(int ell) { return MultiIndex(ell, {}); }

    int ell() const { return ell_; }
    int size() const { return static_cast<int>(e_.size()); }
    int operator[](int i) const { return e_[static_cast<size_t>(i)]; }
    const std::vector<int>& entries() const { return e_; }

    bool contains(int j) const { return std::binary_search(e_.begin(), e_.end(), j); }

    /// Sum of the entries, written |i| in the quantum-dimension formulas.
    long weight() const {
        long s = 0;
        for (int v : e_) s += v;
        return s;
    }

    /// 1-based position of j inside the string; throws if j is absent.
    int position(int j) const {
        auto it = std::lower_bound(e_.begin(), e_.end(), j);
        if (it == e_.end() || *it != j) throw std::domain_error("MultiIndex::position: absent entry");
        return static_cast<int>(it - e_.begin()) + 1;
    }

    /// j#i: occurrences of j minus occurrences of j+1. Always in {-1,0,+1}.
    int sharp(int j) const {
        return (contains(j) ? 1 : 0) - (contains(j + 1) ? 1 : 0);
    }

    /// i^{j,+} (dir=+1, requires sharp=+1: replaces j by j+1) or
    /// i^{j,-} (dir=-1, requires sharp=-1: replaces j+1 by j).
    /// j is a generator index: 1 <= j <= l-1.
    MultiIndex shifted(int j, int dir) const {
        if (dir != 1 && dir != -1) throw std::domain_error("MultiIndex::shifted: bad direction");
        if (j < 1 || j > ell_ - 1) throw std::domain_error("MultiIndex::shifted: j out of range");
        if (sharp(j) != dir) throw std::domain_error("MultiIndex::shifted: sharp precondition violated");
        std::vector<int> v = e_;
        for (int& x : v) {
            if (dir == 1 && x == j) { x = j + 1; break; }
            if (dir == -1 && x == j + 1) { x = j; break; }
        }
        return MultiIndex(ell_, std::move(v));
    }

    /// Ordered complement {1..l} \ i; involutive.
    MultiIndex complement() const {
        std::vector<int> v;
        v.reserve(static_cast<size_t>(ell_) - e_.size());
        for (int j = 1; j <= ell_; ++j)
            if (!contains(j)) v.push_back(j);
        return MultiIndex(ell_, std::move(v));
    }

    /// Ordered union with a single absent entry j.
    MultiIndex with(int j) const {
        if (contains(j)) throw std::domain_error("MultiIndex::with: entry already present");
        std::vector<int> v = e_;
        v.insert(std::upper_bound(v.begin(), v.end(), j), j);
        return MultiIndex(ell_, std::move(v));
    }
    MultiIndex without(int j) const {
        if (!contains(j)) throw std::domain_error("MultiIndex::without: entry absent");
        std::vector<int> v = e_;
        v.erase(std::lower_bound(v.begin(), v.end(), j));
        return MultiIndex(ell_, std::move(v));
    }

    bool operator==(const MultiIndex& o) const { return ell_ == o.ell_ && e_ == o.e_; }
    bool operator!=(const MultiIndex& o) const { return !(*this == o); }
    bool operator<(const MultiIndex& o) const { return e_ < o.e_; }

    std::string str() const {
        std::string s = "(";
        for (size_t i = 0; i < e_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(e_[i]);
        }
        return s + ")";
    }

private:
    int ell_;
    std::vector<int> e_;
};

/// All binom(l,k) multi-indices of length k, in lexicographic order. The
/// order is part of the contract: it fixes every matrix layout downstream.
std::vector<MultiIndex> enumerate_multiindices(int ell, int k);

} // namespace cpq
