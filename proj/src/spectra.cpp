#include "cpq/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

namespace cpq::spectra {

HighestWeight reversed(const HighestWeight& n) {
    return HighestWeight(n.rbegin(), n.rend());
}

namespace {

void check_weight(int ell, const HighestWeight& n) {
    if (static_cast<int>(n.size()) != ell)
        throw std::domain_error("HighestWeight: wrong rank");
    for (long v : n)
        if (v < 0) throw std::domain_error("HighestWeight: negative entry");
}

/// x_i(n) = (sum_{j<i} j n_j - sum_{j>=i} (l+1-j) n_j)/(l+1) + i - (l+2)/2
Rat bracket_arg(int ell, const HighestWeight& n, int i) {
    long s = 0;
    for (int j = 1; j < i; ++j) s += static_cast<long>(j) * n[static_cast<size_t>(j - 1)];
    for (int j = i; j <= ell; ++j) s -= static_cast<long>(ell + 1 - j) * n[static_cast<size_t>(j - 1)];
    return Rat(s, ell + 1) + Rat(i) - Rat(ell + 2, 2);
}

QExpr sq(const QExpr& e) { return e * e; }

} // namespace

QExpr casimir_eigenvalue(int ell, const HighestWeight& n) {
    check_weight(ell, n);
    // (sum_i q^{-2 x_i(n)} - [l+1]) / (q-q^{-1})^2, with the subtracted term
    // expanded as sum_i q^{-2 x_i(0)}. The two groups cancel to second order
    // at q = 1, so the whole eigenvalue fits in one removable-pole node.
    std::vector<std::pair<GRat, Rat>> terms;
    for (int i = 1; i <= ell + 1; ++i) {
        terms.emplace_back(GRat(1), Rat(-2) * bracket_arg(ell, n, i));
        terms.emplace_back(GRat(-1), Rat(-2) * (Rat(i) - Rat(ell + 2, 2)));
    }
    return QExpr::pole_sum(std::move(terms));
}

QExpr casimir_eigenvalue_symmetrized(int ell, const HighestWeight& n) {
    check_weight(ell, n);
    // 1/2 sum_i ([x_i(n)]^2 - [x_i(0)]^2): the constant term of the closed
    // formula is exactly -1/2 sum_i [x_i(0)]^2, and this difference shape
    // removes the (q-q^{-1})^{-2} pole altogether.
    QExpr acc = QExpr::integer(0);
    for (int i = 1; i <= ell + 1; ++i) {
        Rat xi = bracket_arg(ell, n, i);
        Rat x0 = Rat(i) - Rat(ell + 2, 2);
        acc = acc + sq(QExpr::num(xi)) - sq(QExpr::num(x0));
    }
    return QExpr::constant(Rat(1, 2)) * acc;
}

QExpr casimir_eigenvalue_symmetrized_literal(int ell, const HighestWeight& n) {
    check_weight(ell, n);
    QExpr acc = QExpr::integer(0);
    for (int i = 1; i <= ell + 1; ++i) acc = acc + sq(QExpr::num(bracket_arg(ell, n, i)));
    // (l+1 - [l+1])/(q-q^{-1})^2 as a single removable-pole node.
    std::vector<std::pair<GRat, Rat>> terms;
    terms.emplace_back(GRat(static_cast<long>(ell) + 1), Rat(0));
    for (int i = 1; i <= ell + 1; ++i) terms.emplace_back(GRat(-1), Rat(ell + 2 - 2 * i));
    return QExpr::constant(Rat(1, 2)) * acc + QExpr::pole_sum(std::move(terms));
}

Int weyl_dim(int ell, const HighestWeight& n) {
    check_weight(ell, n);
    Int num = 1;
    for (int r = 1; r <= ell; ++r)
        for (int s = r; s <= ell; ++s) {
            long v = s - r + 1;
            for (int i = r; i <= s; ++i) v += n[static_cast<size_t>(i - 1)];
            num *= v;
        }
    Int den = 1;
    for (int r = 1; r <= ell; ++r) den *= factorial(r);
    if (num % den != 0) throw std::logic_error("weyl_dim: non-integral value");
    return num / den;
}

Int hook_dim(int ell, long n1, long nl, int k) {
    if (k < 1 || k > ell) throw std::domain_error("hook_dim: k out of range");
    Rat v = Rat(static_cast<long>(k) * (n1 + nl + ell + 1), (n1 + k) * (nl + ell + 1 - k));
    v *= Rat(binomial(Int(n1 + ell), Int(ell)) * binomial(Int(nl + ell), Int(ell)) *
             binomial(Int(ell), Int(k)));
    if (denominator(v) != 1) throw std::logic_error("hook_dim: non-integral value");
    return numerator(v);
}

HighestWeight family_weight(int ell, long n1, long nl, int k) {
    HighestWeight n(static_cast<size_t>(ell), 0);
    n[0] += n1;
    n[static_cast<size_t>(ell - 1)] += nl;
    if (k >= 1) n[static_cast<size_t>(k - 1)] += 1;
    return n;
}

QExpr eig_lambda(int ell, long n1, long nl, int k) {
    if (k < 1 || k > ell) throw std::domain_error("eig_lambda: k out of range");
    const long N = n1 - nl + k;
    const Rat twoN(2 * N, ell + 1);
    QExpr two_lambda =
        QExpr::num(Rat(n1 + k)) * QExpr::num(Rat(n1) - twoN + Rat(ell + 2 - k)) +
        QExpr::num(Rat(nl)) * QExpr::num(Rat(nl) + twoN + Rat(ell)) +
        QExpr::num(Rat(ell + 1)) * sq(QExpr::num(Rat(N, ell + 1)));
    return QExpr::constant(Rat(1, 2)) * two_lambda;
}

namespace {

/// Bracket argument of the rank-(l-1) Casimir at the weight delta^k of
/// U_q(su(l)): y_i(k) for i = 1..l. The k = 0 and k = l endpoints give the
/// counit (all contributions cancel).
Rat cprime_bracket_arg(int ell, int k, int i) {
    Rat w = (i <= k) ? Rat(-(ell - k), ell) : Rat(k, ell);
    if (k == 0 || k == ell) w = 0;
    return w + Rat(i) - Rat(ell + 1, 2);
}

} // namespace

LaplacianScalars laplacian_scalar(int ell, int N, int k) {
    if (k < 0 || k > ell) throw std::domain_error("laplacian_scalar: k out of range");
    const Rat kappa = Rat(k) - Rat(static_cast<long>(ell) * N, ell + 1);
    const Rat a = Rat(1) + Rat(2) * kappa / ell; // K-hat^{2/l} exponent plus one
    // s(k,N) = q^a (C'_q(delta^k) + [l]/(q-q^{-1})^2) + q^{-2kappa-l}/(q-q^{-1})^2
    //          - [l+1]/(q-q^{-1})^2
    // with the highest-weight value C'_q(delta^k) = (sum_i q^{-2 y_i} - [l]) /
    // (q-q^{-1})^2. The two [l] terms cancel, leaving a single pole node.
    std::vector<std::pair<GRat, Rat>> terms;
    for (int i = 1; i <= ell; ++i)
        terms.emplace_back(GRat(1), a - Rat(2) * cprime_bracket_arg(ell, k, i));
    terms.emplace_back(GRat(1), -Rat(2) * kappa - Rat(ell));
    for (int i = 1; i <= ell + 1; ++i) terms.emplace_back(GRat(-1), Rat(ell + 2 - 2 * i));
    LaplacianScalars out;
    out.s = QExpr::pole_sum(std::move(terms));
    out.laplacian_constant =
        QExpr::qpow(Rat(N - ell - k)) * QExpr::num(Rat(k)) * QExpr::num(Rat(ell + 1 - N));
    return out;
}

QExpr chain_theta(int ell, int N, int lower_k, const QExpr& casimir) {
    LaplacianScalars ls = laplacian_scalar(ell, N, lower_k);
    return QExpr::qpow(Rat(2 * N, ell + 1) - Rat(ell + 1)) * (casimir - ls.s) + ls.laplacian_constant;
}

namespace {

/// Parameterized family of weights at one degree: weight(m) = base + m*step.
struct Family {
    HighestWeight base;
    HighestWeight step;
    std::string label;
};

HighestWeight add_scaled(const HighestWeight& a, const HighestWeight& b, long m) {
    HighestWeight r = a;
    for (size_t i = 0; i < r.size(); ++i) r[i] += m * b[i];
    return r;
}

/// Families of Prop. "harmonic decomposition" for Omega^k_N. Weights are
/// built as n1*e_1 + nl*e_l (+ e_j), which also covers the low ranks where
/// the slots coincide.
std::vector<Family> degree_families(int ell, int N, int k) {
    auto wv = [ell](long n1, long nl, int j) { return family_weight(ell, n1, nl, j); };
    const HighestWeight step = wv(1, 1, 0);
    std::vector<Family> fams;
    if (k == 0) {
        if (N >= 0)
            fams.push_back({wv(N, 0, 0), step, "k=0,N>=0"});
        else
            fams.push_back({wv(0, -N, 0), step, "k=0,N<0"});
    } else if (k == ell) {
        if (N <= ell)
            fams.push_back({wv(0, ell + 1 - N, 0), step, "k=l,N<=l"});
        else
            fams.push_back({wv(N - ell - 1, 0, 0), step, "k=l,N>l"});
    } else {
        if (1 <= k && k <= std::min(N, ell) - 1) {
            fams.push_back({wv(N - k, 0, k), step, "1<=k<=min(N,l)-1"});
            fams.push_back({wv(N - k - 1, 0, k + 1), step, "1<=k<=min(N,l)-1"});
        } else if (std::max(1, N) <= k && k <= ell - 1) {
            fams.push_back({wv(0, -N + k, k), step, "max(1,N)<=k<=l-1"});
            fams.push_back({wv(0, -N + k + 1, k + 1), step, "max(1,N)<=k<=l-1"});
        } else {
            throw std::logic_error("degree_families: (N,k) matches no branch");
        }
    }
    return fams;
}

IrrepBlock make_block(int ell, const HighestWeight& w, long m, int family,
                      const std::string& label) {
    IrrepBlock b;
    b.weight = w;
    b.dim = weyl_dim(ell, w);
    b.casimir = casimir_eigenvalue(ell, w);
    b.casimir_reversed = casimir_eigenvalue(ell, reversed(w));
    b.level = m;
    b.family = family;
    b.case_label = label;
    return b;
}

} // namespace

DecompositionTable harmonic_decomposition(int ell, int N, int k, long m_max) {
    if (k < 0 || k > ell) throw std::domain_error("harmonic_decomposition: k out of range");
    if (m_max < 0) throw std::domain_error("harmonic_decomposition: m_max negative");
    DecompositionTable t;
    t.ell = ell;
    t.N = N;
    t.k = k;
    t.m_max = m_max;
    auto fams = degree_families(ell, N, k);
    for (long m = 0; m <= m_max; ++m)
        for (size_t f = 0; f < fams.size(); ++f)
            t.blocks.push_back(make_block(ell, add_scaled(fams[f].base, fams[f].step, m), m,
                                          static_cast<int>(f), fams[f].label));
    return t;
}

std::optional<long> find_level(int ell, int N, int k, const HighestWeight& weight) {
    if (k < 0 || k > ell) return std::nullopt;
    for (const Family& f : degree_families(ell, N, k)) {
        // weight = base + m*step with step supported on the edge slots.
        long m = -1;
        for (size_t i = 0; i < f.step.size(); ++i) {
            if (f.step[i] == 0) continue;
            long d = weight[i] - f.base[i];
            if (d < 0 || d % f.step[i] != 0) { m = -2; break; }
            long cand = d / f.step[i];
            if (m == -1) m = cand;
            else if (m != cand) { m = -2; break; }
        }
        if (m < 0) continue;
        if (add_scaled(f.base, f.step, m) == weight) return m;
    }
    return std::nullopt;
}

QExpr dirac_squared_eigenvalue(int ell, int N, int k, const IrrepBlock& block) {
    std::optional<long> below = (k >= 1) ? find_level(ell, N, k - 1, block.weight) : std::nullopt;
    std::optional<long> above = (k + 1 <= ell) ? find_level(ell, N, k + 1, block.weight) : std::nullopt;
    if (below && above)
        throw std::logic_error("dirac_squared_eigenvalue: weight paired on both sides");
    if (!below && !above) return QExpr::integer(0); // harmonic block
    const int lower_k = below ? k - 1 : k;
    // Engine normalization: D = q^{2-l} (dbar + dbar^dagger); see README.
    return QExpr::qpow(Rat(2 * (2 - ell))) * chain_theta(ell, N, lower_k, block.casimir);
}

Spectrum full_spectrum(int ell, int N, long m_max) {
    Spectrum s;
    s.ell = ell;
    s.N = N;
    s.m_max = m_max;
    std::set<std::pair<int, HighestWeight>> present;
    auto emit = [&](int k, const IrrepBlock& b) {
        SpectralLine line;
        line.degree = k;
        line.level = b.level;
        line.weight = b.weight;
        line.multiplicity = b.dim;
        line.d2 = dirac_squared_eigenvalue(ell, N, k, b);
        bool paired = (k >= 1 && find_level(ell, N, k - 1, b.weight)) ||
                      (k + 1 <= ell && find_level(ell, N, k + 1, b.weight));
        line.kernel = !paired;
        present.insert({k, b.weight});
        s.lines.push_back(std::move(line));
    };
    for (int k = 0; k <= ell; ++k) {
        DecompositionTable t = harmonic_decomposition(ell, N, k, m_max);
        for (const IrrepBlock& b : t.blocks) emit(k, b);
    }
    // The cutoff in m can leave a chain with only one side enumerated (the
    // partner sits one level beyond m_max in the adjacent degree). Append the
    // missing partners so +/- aggregation always sees whole chains.
    const size_t enumerated = s.lines.size();
    for (size_t i = 0; i < enumerated; ++i) {
        const SpectralLine line = s.lines[i];
        if (line.kernel) continue;
        for (int dk : {-1, +1}) {
            int pk = line.degree + dk;
            if (pk < 0 || pk > ell) continue;
            auto pm = find_level(ell, N, pk, line.weight);
            if (!pm || present.count({pk, line.weight})) continue;
            DecompositionTable pt = harmonic_decomposition(ell, N, pk, *pm);
            for (const IrrepBlock& x : pt.blocks)
                if (x.weight == line.weight && x.level == *pm) {
                    emit(pk, x);
                    break;
                }
        }
    }
    std::stable_sort(s.lines.begin(), s.lines.end(),
                     [](const SpectralLine& a, const SpectralLine& b) {
                         if (a.degree != b.degree) return a.degree < b.degree;
                         if (a.level != b.level) return a.level < b.level;
                         return a.weight < b.weight;
                     });
    return s;
}

DiracSpectrum aggregate_dirac(const Spectrum& s, RootOrder ro) {
    std::map<std::string, std::pair<QScalar, Int>> groups;
    Int kernel = 0;
    for (const SpectralLine& line : s.lines) {
        if (line.kernel) {
            kernel += line.multiplicity;
            continue;
        }
        QScalar v = line.d2.to_qscalar(ro);
        if (v.is_zero())
            throw std::logic_error("aggregate_dirac: paired block with vanishing eigenvalue");
        auto& g = groups[v.str()];
        g.first = v;
        g.second += line.multiplicity;
    }
    DiracSpectrum out;
    out.kernel_dim = kernel;
    for (auto& [key, g] : groups) {
        if (g.second % 2 != 0)
            throw std::logic_error("aggregate_dirac: odd total multiplicity for nonzero eigenvalue");
        out.lines.push_back({g.first, g.second / 2});
    }
    return out;
}

DiracSpectrumQ1 aggregate_dirac_at_one(const Spectrum& s) {
    std::map<Rat, Int> groups;
    Int kernel = 0;
    for (const SpectralLine& line : s.lines) {
        GRat v = line.d2.at_one();
        if (!v.is_real()) throw std::logic_error("aggregate_dirac_at_one: non-real eigenvalue");
        if (line.kernel) {
            kernel += line.multiplicity;
            continue;
        }
        if (v.is_zero())
            throw std::logic_error("aggregate_dirac_at_one: paired block with vanishing eigenvalue");
        groups[v.re] += line.multiplicity;
    }
    DiracSpectrumQ1 out;
    out.kernel_dim = kernel;
    for (auto& [v, mult] : groups) {
        if (mult % 2 != 0)
            throw std::logic_error("aggregate_dirac_at_one: odd total multiplicity");
        out.lines.push_back({v, mult / 2});
    }
    return out;
}

ClassicalSpectrum classical_spectrum(int ell, int N, long m_max) {
    ClassicalSpectrum out;
    auto mu = [ell](long m, int k, long Np) -> Int {
        Rat v = Rat(static_cast<long>(k) * (2 * m + k + Np), (m + Np) * (m + k));
        v *= Rat(binomial(Int(m + ell), Int(ell)) * binomial(Int(m + k + Np - 1), Int(ell)) *
                 binomial(Int(ell), Int(k)));
        if (denominator(v) != 1) throw std::logic_error("classical multiplicity: non-integral");
        return numerator(v);
    };
    auto push = [&](long m, int k, long Np) {
        ClassicalLine line;
        line.m = m;
        line.k = k;
        line.lambda_sq = Rat((m + Np) * (m + k));
        line.multiplicity = mu(m, k, Np);
        if (line.multiplicity != 0) out.lines.push_back(std::move(line));
    };
    if (N <= 0) {
        out.kernel_dim = binomial(Int(-N + ell), Int(ell));
        for (int k = 1; k <= ell; ++k)
            for (long m = 0; m <= m_max; ++m) push(m, k, ell + 1 - N);
    } else if (N > ell) {
        out.kernel_dim = binomial(Int(N - 1), Int(ell));
        for (int k = 1; k <= ell; ++k)
            for (long m = 0; m <= m_max; ++m) push(m, k, N);
    } else {
        out.kernel_dim = 0;
        for (int k = 1; k < N; ++k)
            for (long m = 0; m <= m_max; ++m) push(m, ell + 1 - k, N);
        for (int k = N; k <= ell; ++k)
            for (long m = 0; m <= m_max; ++m) push(m, k, ell + 1 - N);
    }
    return out;
}

GrowthReport growth_diagnostics(int ell, int N, double q, long m_max) {
    if (!(q > 0.0 && q < 1.0)) throw std::domain_error("growth_diagnostics: q must lie in (0,1)");
    if (m_max < 5) throw std::domain_error("growth_diagnostics: m_max too small");
    Spectrum s = full_spectrum(ell, N, m_max);

    std::map<long, double> min_per_level;
    std::map<long, std::vector<std::pair<double, double>>> vals_per_level; // (d2, mult)
    for (const SpectralLine& line : s.lines) {
        if (line.kernel) continue;
        double v = line.d2.eval_double(q);
        if (v <= 0) throw std::logic_error("growth_diagnostics: nonpositive D^2 eigenvalue");
        auto it = min_per_level.find(line.level);
        if (it == min_per_level.end() || v < it->second) min_per_level[line.level] = v;
        vals_per_level[line.level].push_back({v, line.multiplicity.convert_to<double>()});
    }

    // Least-squares slope of log(min D^2) against the level.
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    double n = 0;
    for (const auto& [m, v] : min_per_level) {
        double x = static_cast<double>(m), y = std::log(v);
        sx += x; sy += y; sxx += x * x; sxy += x * y;
        n += 1;
    }
    GrowthReport rep;
    rep.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    rep.target = 2.0 * std::log(1.0 / q);
    rep.relative_error = std::abs(rep.slope - rep.target) / rep.target;

    rep.summable = true;
    for (double sexp : {0.5, 0.1, 0.01}) {
        // Partial sum of |lambda|^{-s} with multiplicities (informational),
        // and the geometric-tail probe on the level-minimum eigenvalue: the
        // eigenvalues grow like q^{-2m}, so T_m := min-lambda(m)^{-s} decays
        // by a factor q^{s} per level once the exponential regime sets in.
        double total = 0;
        for (const auto& [m, vals] : vals_per_level)
            for (auto [v, mult] : vals) total += 2.0 * mult * std::pow(v, -sexp / 2.0);
        double max_ratio = 0;
        long half = m_max / 2;
        for (long m = half; m + 1 <= m_max; ++m) {
            auto a = min_per_level.find(m), b = min_per_level.find(m + 1);
            if (a == min_per_level.end() || b == min_per_level.end()) continue;
            max_ratio = std::max(max_ratio, std::pow(b->second, -sexp / 2.0) /
                                                std::pow(a->second, -sexp / 2.0));
        }
        rep.tails.push_back({sexp, max_ratio, total});
        if (max_ratio >= 1.0) rep.summable = false;
    }
    return rep;
}

} // namespace cpq::spectra
