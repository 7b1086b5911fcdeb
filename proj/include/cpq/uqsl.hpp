#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "cpq/qmatrix.hpp"

namespace cpq::uqsl {

/// Generator symbols of U_q(su(l+1)) extended by the fractional Cartan
/// element K-hat and its inverse.
enum class GK : std::uint8_t { K, Kinv, E, F, Khat, KhatInv };

struct GenSym {
    GK kind;
    int idx; // 1..l for K/E/F, ignored for Khat

    bool operator<(const GenSym& o) const {
        return kind != o.kind ? kind < o.kind : idx < o.idx;
    }
    bool operator==(const GenSym& o) const { return kind == o.kind && idx == o.idx; }
};

using Word = std::vector<GenSym>;

/// Formal sum of scalar-weighted free words in the generators. No relations
/// are applied at this level: every identity is checked after evaluation in a
/// concrete representation.
class NCElement {
public:
    NCElement() = default;
    explicit NCElement(int ell) : ell_(ell) {}

    static NCElement zero(int ell) { return NCElement(ell); }
    static NCElement unit(RootOrder ro, int ell);
    static NCElement generator(RootOrder ro, int ell, GenSym g);
    static NCElement word(RootOrder ro, int ell, const Word& w);

    int ell() const { return ell_; }
    const std::map<Word, QScalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Word& w, const QScalar& c);

    NCElement operator+(const NCElement& o) const;
    NCElement operator-(const NCElement& o) const;
    NCElement operator*(const NCElement& o) const;
    NCElement operator-() const;
    NCElement scaled(const QScalar& c) const;

    /// * : reverses words, conjugates coefficients, swaps E <-> F.
    NCElement star() const;
    /// Antipode (an anti-homomorphism): S(K)=K^{-1}, S(E)=-qE, S(F)=-q^{-1}F.
    NCElement antipode() const;
    /// S^{-1}: S^{-1}(E)=-q^{-1}E, S^{-1}(F)=-qF.
    NCElement antipode_inverse() const;

private:
    int ell_ = 0;
    std::map<Word, QScalar> terms_;
};

/// Formal sum of pairs of words: coproducts live here.
class NCTensor {
public:
    explicit NCTensor(int ell = 0) : ell_(ell) {}
    int ell() const { return ell_; }
    const std::map<std::pair<Word, Word>, QScalar>& terms() const { return terms_; }
    void add_term(const Word& a, const Word& b, const QScalar& c);
    NCTensor operator+(const NCTensor& o) const;
    NCTensor operator*(const NCTensor& o) const;

private:
    int ell_ = 0;
    std::map<std::pair<Word, Word>, QScalar> terms_;
};

/// Coproduct, expanded on generators (K group-like, Delta(E)=E(x)K+K^{-1}(x)E,
/// Delta(F)=F(x)K+K^{-1}(x)F, K-hat group-like).
NCTensor coproduct(RootOrder ro, const NCElement& e);

/// Assignment of matrices to the generator symbols.
class MatrixRep {
public:
    MatrixRep(RootOrder ro, int ell, int dim, std::string label)
        : ro_(ro), ell_(ell), dim_(dim), label_(std::move(label)) {}

    RootOrder root_order() const { return ro_; }
    int ell() const { return ell_; }
    int dim() const { return dim_; }
    const std::string& label() const { return label_; }

    void set(GenSym g, QMatrix m) { mats_[g] = std::move(m); }
    const QMatrix& matrix(GenSym g) const;

    QMatrix evaluate(const NCElement& e) const;
    QMatrix evaluate_word(const Word& w) const;
    /// Evaluate a tensor-word sum in this (tensor-product) representation
    /// given the two factor representations.
    static QMatrix evaluate_tensor(const NCTensor& t, const MatrixRep& a, const MatrixRep& b);

    /// Exact fractional power of the (diagonal, monomial) K-hat matrix.
    QMatrix khat_power(const Rat& exponent) const;

private:
    RootOrder ro_;
    int ell_;
    int dim_;
    std::string label_;
    std::map<GenSym, QMatrix> mats_;
};

/// The basic (l+1)-dimensional representation with highest weight (0,...,0,1).
MatrixRep fundamental_rep(RootOrder ro, int ell);

/// Hopf tensor product of two representations over the same l.
MatrixRep tensor_rep(const MatrixRep& a, const MatrixRep& b);

/// Root vector M_{jk} as an iterated q-commutator of E_j..E_k; zero element
/// when the labels are out of range (j > k).
NCElement root_vector_M(RootOrder ro, int ell, int j, int k);
/// Cartan word N_{jk} = (K_j...K_l)(K_{k+1}...K_l) K-hat^{-1}, 1<=j<=l, 0<=k<=l.
NCElement cartan_N(RootOrder ro, int ell, int j, int k);
/// X_i = N_{il} M_{il}^*.
NCElement vector_X(RootOrder ro, int ell, int i);
/// K_{2rho}, the element implementing the square of the antipode.
NCElement k2rho(RootOrder ro, int ell);

enum class CasimirKind { Cq, CPrimeQ };

/// Casimir of U_q(su(l+1)) as an abstract element (Cq only; CPrimeQ has no
/// word form here because of the K-hat^{2/l} factor and is produced directly
/// as a matrix by casimir_matrix).
NCElement casimir_element(RootOrder ro, int ell);

/// Evaluation of the chosen Casimir in a representation; CPrimeQ solves the
/// defining relation using invertibility of the K-hat^{2/l} matrix, which
/// needs r divisible by 2l(l+1).
QMatrix casimir_matrix(const MatrixRep& rep, CasimirKind which);

/// Right adjoint action x <| h = S(h_(1)) x h_(2), evaluated in rep.
QMatrix adjoint_action(const NCElement& x, const NCElement& h, const MatrixRep& rep);

} // namespace cpq::uqsl
