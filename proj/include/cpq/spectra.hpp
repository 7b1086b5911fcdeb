#pragma once

#include <optional>
#include <string>

#include "cpq/qexpr.hpp"

namespace cpq::spectra {

/// Highest weight of an irreducible *-representation: l non-negative integers.
using HighestWeight = std::vector<long>;

HighestWeight reversed(const HighestWeight& n);

/// Casimir eigenvalue on V_n, computed on the highest-weight vector:
/// sum_i (q^{-2 x_i(n)} - q^{-2 x_i(0)}) / (q - q^{-1})^2 with
/// x_i(n) = (sum_{j<i} j n_j - sum_{j>=i} (l+1-j) n_j)/(l+1) + i - (l+2)/2.
/// This is the value the Casimir matrix actually takes in representations;
/// it is NOT symmetric under weight reversal (instead, reversing the weight
/// inverts q). A single removable-pole node keeps q = 1 exact.
QExpr casimir_eigenvalue(int ell, const HighestWeight& n);

/// The symmetrized closed form 1/2 sum_i [x_i(n)]^2 + (l+1-[l+1])/(q-q^{-1})^2.
/// Equals the average of casimir_eigenvalue over n and its reversal, and
/// agrees with casimir_eigenvalue exactly on reversal-symmetric weights (in
/// particular everywhere at l = 1, and at q = 1).
QExpr casimir_eigenvalue_symmetrized(int ell, const HighestWeight& n);

/// The symmetrized value in its literal shape, with the additive constant
/// carried by a pole node. Used to verify the pole-free rewrite symbolically.
QExpr casimir_eigenvalue_symmetrized_literal(int ell, const HighestWeight& n);

/// Weyl dimension of V_n.
Int weyl_dim(int ell, const HighestWeight& n);

/// Closed-form dimension for the two-line-hook family (n1,0,...,0,nl) + e_k.
Int hook_dim(int ell, long n1, long nl, int k);

/// The weight (n1,0,...,0,nl) + e_k as a vector (components add when l is
/// small enough for the slots to coincide).
HighestWeight family_weight(int ell, long n1, long nl, int k);

/// Casimir eigenvalue on the family weight in the closed form of the
/// two-parameter lemma, with N := n1 - nl + k.
QExpr eig_lambda(int ell, long n1, long nl, int k);

/// The scalar s(k,N) by which the Casimir-minus-X-sum combination acts on
/// Omega^k_N, and the additive constant of the Laplacian identity,
/// q^{N-l-k}[k][l+1-N].
struct LaplacianScalars {
    QExpr s;
    QExpr laplacian_constant;
};
LaplacianScalars laplacian_scalar(int ell, int N, int k);

/// One irreducible block of the harmonic decomposition.
struct IrrepBlock {
    HighestWeight weight;
    Int dim;
    QExpr casimir;
    QExpr casimir_reversed; // eigenvalue of S^{-1}(C_q): Casimir at the reversed weight
    long level = 0;         // the decomposition parameter m
    int family = 0;         // 0: e_k-type / single family, 1: e_{k+1}-type
    std::string case_label;
};

struct DecompositionTable {
    int ell = 0;
    int N = 0;
    int k = 0;
    long m_max = 0;
    std::vector<IrrepBlock> blocks;
};

/// Branching of Omega^k_N into irreducibles, levels m = 0..m_max.
DecompositionTable harmonic_decomposition(int ell, int N, int k, long m_max);

/// If `weight` occurs in the decomposition of Omega^k_N, the level it occurs
/// at (each weight occurs at most once per degree).
std::optional<long> find_level(int ell, int N, int k, const HighestWeight& weight);

/// Laplacian scalar of the chain through a weight, read off the lower degree
/// via the Hodge identity: theta = q^{2N/(l+1)-(l+1)} (lambda - s(k,N)) +
/// q^{N-l-k}[k][l+1-N].
QExpr chain_theta(int ell, int N, int lower_k, const QExpr& casimir);

/// D_N^2 eigenvalue on a block of Omega^k_N. Zero exactly when the weight is
/// unpaired (the harmonic blocks). See README for the normalization.
QExpr dirac_squared_eigenvalue(int ell, int N, int k, const IrrepBlock& block);

struct SpectralLine {
    int degree = 0;
    long level = 0;
    HighestWeight weight;
    QExpr d2;            // eigenvalue of D^2 on the block
    Int multiplicity;    // Weyl dimension of the block
    bool kernel = false; // unpaired block: D vanishes on it identically
};

struct Spectrum {
    int ell = 0;
    int N = 0;
    long m_max = 0;
    std::vector<SpectralLine> lines; // ordered: degree ascending, level, family
};

Spectrum full_spectrum(int ell, int N, long m_max);

/// Aggregated +/- Dirac lines: distinct |eigenvalue| with per-sign
/// multiplicity. Nonzero totals must be even (pairing across degrees).
struct DiracLine {
    QScalar d2;
    Int multiplicity; // per sign
};
struct DiracSpectrum {
    Int kernel_dim;
    std::vector<DiracLine> lines; // ordered by canonical form of d2
};
DiracSpectrum aggregate_dirac(const Spectrum& s, RootOrder ro);

/// Aggregation at q = 1: exact rational eigenvalue squares.
struct DiracLineQ1 {
    Rat d2;
    Int multiplicity; // per sign
};
struct DiracSpectrumQ1 {
    Int kernel_dim;
    std::vector<DiracLineQ1> lines; // ascending d2
};
DiracSpectrumQ1 aggregate_dirac_at_one(const Spectrum& s);

/// Classical (q = 1) spectrum per the closed formulas: lambda^2 = (m+N')(m+k)
/// with the regime bookkeeping and kernel binomials.
struct ClassicalLine {
    long m = 0;
    int k = 0;
    Rat lambda_sq;
    Int multiplicity; // per sign
};
struct ClassicalSpectrum {
    Int kernel_dim;
    std::vector<ClassicalLine> lines;
};
ClassicalSpectrum classical_spectrum(int ell, int N, long m_max);

/// Exponential-growth and summability probes at numeric q.
struct GrowthReport {
    double slope = 0;          // least-squares slope of log(min nonzero D^2) vs level
    double target = 0;         // 2 log(1/q)
    double relative_error = 0; // |slope - target| / target
    struct Tail {
        double s;
        double max_tail_ratio; // max over upper levels of T_{m+1}/T_m for sum lambda^{-s}
        double partial_sum;
    };
    std::vector<Tail> tails;
    bool summable = false;
};
GrowthReport growth_diagnostics(int ell, int N, double q, long m_max);

/// Root order used by the spectral engine for rank l.
inline RootOrder spectra_order(int ell) { return RootOrder::for_rank_full(ell); }

} // namespace cpq::spectra
