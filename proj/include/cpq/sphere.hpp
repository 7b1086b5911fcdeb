#pragma once

#include <optional>

#include "cpq/qscalar.hpp"

namespace cpq::sphere {

/// One generator letter of A(S^{2l+1}_q): z_idx or z_idx^*.
struct Letter {
    int idx;
    bool star;
    bool operator<(const Letter& o) const {
        return idx != o.idx ? idx < o.idx : star < o.star;
    }
    bool operator==(const Letter& o) const { return idx == o.idx && star == o.star; }
};

using SWord = std::vector<Letter>;

/// Formal sum of words in the sphere generators. Words are free; normal_form
/// rewrites them into the normal order (unstarred ascending, then starred
/// descending, with z_{l+1} z_{l+1}^* eliminated by the sphere relation).
class WordPoly {
public:
    WordPoly() = default;
    WordPoly(RootOrder ro, int ell) : r_(ro.r), ell_(ell) {}

    static WordPoly unit(RootOrder ro, int ell);
    static WordPoly generator(RootOrder ro, int ell, int idx, bool star);
    /// Monomial z_1^{a_1} ... z_{l+1}^{a_{l+1}} (z^b)^* in normal order.
    static WordPoly normal_monomial(RootOrder ro, int ell, const std::vector<long>& a,
                                    const std::vector<long>& b);

    int ell() const { return ell_; }
    RootOrder root_order() const { return RootOrder(r_); }
    const std::map<SWord, QScalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const SWord& w, const QScalar& c);

    WordPoly operator+(const WordPoly& o) const;
    WordPoly operator-(const WordPoly& o) const;
    WordPoly operator*(const WordPoly& o) const;
    WordPoly scaled(const QScalar& c) const;
    WordPoly star() const;

    bool operator==(const WordPoly& o) const { return terms_ == o.terms_; }

private:
    int r_ = 2;
    int ell_ = 0;
    std::map<SWord, QScalar> terms_;
};

/// Rewriting strategy knobs, used by the confluence property tests. The
/// default is the deterministic leftmost-innermost strategy.
struct NormalOptions {
    bool apply_sphere = true; // orient sum z_i z_i^* = 1 to kill z_{l+1} z_{l+1}^*
    unsigned seed = 0;        // 0: leftmost redex; nonzero: seeded random redex choice
};

bool is_normal_word(int ell, const SWord& w, bool sphere_reduced = true);

/// Rewrite to normal order. Terminates for every input; with the default
/// strategy the result is the canonical normal form used everywhere else.
WordPoly normal_form(const WordPoly& p, const NormalOptions& opt = {});

/// Is this (normal-form) polynomial the scalar 1?
bool is_unit(const WordPoly& p);

/// Builds sum_{|j| = N} [j_1,...,j_{l+1}]! z^j (z^j)^* and reduces it.
/// Returns (reduced == 1, residual = reduced - 1, number of summands).
struct PartitionCheck {
    bool holds = false;
    WordPoly residual;
    long summands = 0;
};
PartitionCheck partition_of_unity_check(RootOrder ro, int ell, long N);

/// K-hat grading of a normal-form polynomial: the common N with
/// L_{K-hat} p = q^{l N/(l+1)} p, i.e. N = deg_{z^*} - deg_z per monomial;
/// nullopt when mixed.
std::optional<long> khat_grading(const WordPoly& p);

} // namespace cpq::sphere
