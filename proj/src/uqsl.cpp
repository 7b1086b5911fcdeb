#include "cpq/uqsl.hpp"

namespace cpq::uqsl {

NCElement NCElement::unit(RootOrder ro, int ell) {
    NCElement e(ell);
    e.add_term({}, QScalar::one(ro));
    return e;
}

NCElement NCElement::generator(RootOrder ro, int ell, GenSym g) {
    NCElement e(ell);
    e.add_term({g}, QScalar::one(ro));
    return e;
}

NCElement NCElement::word(RootOrder ro, int ell, const Word& w) {
    NCElement e(ell);
    e.add_term(w, QScalar::one(ro));
    return e;
}

void NCElement::add_term(const Word& w, const QScalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, c);
    } else {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

NCElement NCElement::operator+(const NCElement& o) const {
    NCElement r = *this;
    if (r.ell_ == 0) r.ell_ = o.ell_;
    for (const auto& [w, c] : o.terms_) r.add_term(w, c);
    return r;
}

NCElement NCElement::operator-(const NCElement& o) const { return *this + (-o); }

NCElement NCElement::operator-() const {
    NCElement r(ell_);
    for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
    return r;
}

NCElement NCElement::operator*(const NCElement& o) const {
    NCElement r(ell_ ? ell_ : o.ell_);
    for (const auto& [w1, c1] : terms_)
        for (const auto& [w2, c2] : o.terms_) {
            Word w = w1;
            w.insert(w.end(), w2.begin(), w2.end());
            r.add_term(w, c1 * c2);
        }
    return r;
}

NCElement NCElement::scaled(const QScalar& c) const {
    NCElement r(ell_);
    if (c.is_zero()) return r;
    for (const auto& [w, k] : terms_) r.terms_.emplace(w, k * c);
    return r;
}

namespace {
GenSym starred(GenSym g) {
    switch (g.kind) {
    case GK::E: return {GK::F, g.idx};
    case GK::F: return {GK::E, g.idx};
    default: return g; // K-type generators are self-adjoint
    }
}
} // namespace

NCElement NCElement::star() const {
    NCElement r(ell_);
    for (const auto& [w, c] : terms_) {
        Word rw;
        rw.reserve(w.size());
        for (auto it = w.rbegin(); it != w.rend(); ++it) rw.push_back(starred(*it));
        r.add_term(rw, c.conj());
    }
    return r;
}

namespace {
/// Shared engine for S and S^{-1}: both reverse words; they differ only in
/// the scalar attached to E and F.
NCElement apply_antipode(const NCElement& e, const Rat& e_power, const Rat& f_power) {
    NCElement r(e.ell());
    for (const auto& [w, c] : e.terms()) {
        Word rw;
        rw.reserve(w.size());
        QScalar coeff = c;
        for (auto it = w.rbegin(); it != w.rend(); ++it) {
            GenSym g = *it;
            switch (g.kind) {
            case GK::K: rw.push_back({GK::Kinv, g.idx}); break;
            case GK::Kinv: rw.push_back({GK::K, g.idx}); break;
            case GK::Khat: rw.push_back({GK::KhatInv, 0}); break;
            case GK::KhatInv: rw.push_back({GK::Khat, 0}); break;
            case GK::E:
                coeff = -(coeff * QScalar::q_power(RootOrder(coeff.r()), e_power));
                rw.push_back(g);
                break;
            case GK::F:
                coeff = -(coeff * QScalar::q_power(RootOrder(coeff.r()), f_power));
                rw.push_back(g);
                break;
            }
        }
        r.add_term(rw, coeff);
    }
    return r;
}
} // namespace

NCElement NCElement::antipode() const { return apply_antipode(*this, Rat(1), Rat(-1)); }
NCElement NCElement::antipode_inverse() const { return apply_antipode(*this, Rat(-1), Rat(1)); }

void NCTensor::add_term(const Word& a, const Word& b, const QScalar& c) {
    if (c.is_zero()) return;
    auto key = std::make_pair(a, b);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(std::move(key), c);
    } else {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

NCTensor NCTensor::operator+(const NCTensor& o) const {
    NCTensor r = *this;
    for (const auto& [k, c] : o.terms_) r.add_term(k.first, k.second, c);
    return r;
}

NCTensor NCTensor::operator*(const NCTensor& o) const {
    NCTensor r(ell_);
    for (const auto& [k1, c1] : terms_)
        for (const auto& [k2, c2] : o.terms_) {
            Word a = k1.first, b = k1.second;
            a.insert(a.end(), k2.first.begin(), k2.first.end());
            b.insert(b.end(), k2.second.begin(), k2.second.end());
            r.add_term(a, b, c1 * c2);
        }
    return r;
}

NCTensor coproduct(RootOrder ro, const NCElement& e) {
    NCTensor out(e.ell());
    const QScalar one = QScalar::one(ro);
    for (const auto& [w, c] : e.terms()) {
        NCTensor acc(e.ell());
        acc.add_term({}, {}, c);
        for (const GenSym& g : w) {
            NCTensor dg(e.ell());
            switch (g.kind) {
            case GK::K:
            case GK::Kinv:
            case GK::Khat:
            case GK::KhatInv:
                dg.add_term({g}, {g}, one);
                break;
            case GK::E:
                dg.add_term({g}, {{GK::K, g.idx}}, one);
                dg.add_term({{GK::Kinv, g.idx}}, {g}, one);
                break;
            case GK::F:
                dg.add_term({g}, {{GK::K, g.idx}}, one);
                dg.add_term({{GK::Kinv, g.idx}}, {g}, one);
                break;
            }
            acc = acc * dg;
        }
        out = out + acc;
    }
    return out;
}

const QMatrix& MatrixRep::matrix(GenSym g) const {
    auto it = mats_.find(g);
    if (it == mats_.end()) throw std::domain_error("MatrixRep: generator not assigned");
    return it->second;
}

QMatrix MatrixRep::evaluate_word(const Word& w) const {
    QMatrix m = QMatrix::identity(ro_, dim_);
    for (const GenSym& g : w) m = m * matrix(g);
    return m;
}

QMatrix MatrixRep::evaluate(const NCElement& e) const {
    QMatrix acc(dim_, dim_);
    for (const auto& [w, c] : e.terms()) acc = acc + evaluate_word(w).scaled(c);
    return acc;
}

QMatrix MatrixRep::evaluate_tensor(const NCTensor& t, const MatrixRep& a, const MatrixRep& b) {
    QMatrix acc(a.dim() * b.dim(), a.dim() * b.dim());
    for (const auto& [k, c] : t.terms())
        acc = acc + a.evaluate_word(k.first).kron(b.evaluate_word(k.second)).scaled(c);
    return acc;
}

QMatrix MatrixRep::khat_power(const Rat& exponent) const {
    const QMatrix& kh = matrix({GK::Khat, 0});
    QMatrix r(dim_, dim_);
    for (int i = 0; i < dim_; ++i) {
        for (int j = 0; j < dim_; ++j)
            if (i != j && !kh(i, j).is_zero())
                throw std::domain_error("khat_power: K-hat matrix is not diagonal");
        const QScalar& d = kh(i, i);
        if (!d.is_polynomial() || !d.num().is_monomial() || !(d.num().coeff(d.num().min_exp()) == GRat(1)))
            throw std::domain_error("khat_power: K-hat entries must be monomials t^m");
        Rat e = Rat(d.num().min_exp()) * exponent; // t-exponent times the power
        if (denominator(e) != 1)
            throw PrecisionError("khat_power: fractional power not representable at this root order");
        r(i, i) = QScalar(ro_, LaurentPoly::monomial(GRat(1), numerator(e).convert_to<long long>()),
                          LaurentPoly::one());
    }
    return r;
}

MatrixRep fundamental_rep(RootOrder ro, int ell) {
    const int n = ell + 1;
    MatrixRep rep(ro, ell, n, "fundamental");
    for (int i = 1; i <= ell; ++i) {
        QMatrix K(n, n), Kinv(n, n), E(n, n), F(n, n);
        for (int j = 1; j <= n; ++j) {
            Rat e(0);
            if (j == i + 1) e += Rat(1, 2);
            if (j == i) e -= Rat(1, 2);
            K(j - 1, j - 1) = QScalar::q_power(ro, e);
            Kinv(j - 1, j - 1) = QScalar::q_power(ro, -e);
        }
        E(i, i - 1) = QScalar::one(ro);      // pi(E_i): 1 in row i+1, column i
        F(i - 1, i) = QScalar::one(ro);      // pi(F_i) = pi(E_i)^dagger
        rep.set({GK::K, i}, std::move(K));
        rep.set({GK::Kinv, i}, std::move(Kinv));
        rep.set({GK::E, i}, std::move(E));
        rep.set({GK::F, i}, std::move(F));
    }
    // K-hat = (K_1 K_2^2 ... K_l^l)^{2/(l+1)} = diag(q^{-1/(l+1)}, ..., q^{l/(l+1)})
    QMatrix Khat(n, n), KhatInv(n, n);
    for (int j = 1; j <= n; ++j) {
        Rat e = (j <= ell) ? Rat(-1, ell + 1) : Rat(ell, ell + 1);
        Khat(j - 1, j - 1) = QScalar::q_power(ro, e);
        KhatInv(j - 1, j - 1) = QScalar::q_power(ro, -e);
    }
    rep.set({GK::Khat, 0}, std::move(Khat));
    rep.set({GK::KhatInv, 0}, std::move(KhatInv));
    return rep;
}

MatrixRep tensor_rep(const MatrixRep& a, const MatrixRep& b) {
    if (a.ell() != b.ell()) throw std::domain_error("tensor_rep: rank mismatch");
    RootOrder ro = a.root_order();
    const int ell = a.ell();
    MatrixRep rep(ro, ell, a.dim() * b.dim(), a.label() + "(x)" + b.label());
    auto grouplike = [&](GenSym g) { return a.matrix(g).kron(b.matrix(g)); };
    for (int i = 1; i <= ell; ++i) {
        rep.set({GK::K, i}, grouplike({GK::K, i}));
        rep.set({GK::Kinv, i}, grouplike({GK::Kinv, i}));
        // Delta(E) = E (x) K + K^{-1} (x) E, same shape for F.
        rep.set({GK::E, i}, a.matrix({GK::E, i}).kron(b.matrix({GK::K, i})) +
                                a.matrix({GK::Kinv, i}).kron(b.matrix({GK::E, i})));
        rep.set({GK::F, i}, a.matrix({GK::F, i}).kron(b.matrix({GK::K, i})) +
                                a.matrix({GK::Kinv, i}).kron(b.matrix({GK::F, i})));
    }
    rep.set({GK::Khat, 0}, grouplike({GK::Khat, 0}));
    rep.set({GK::KhatInv, 0}, grouplike({GK::KhatInv, 0}));
    return rep;
}

NCElement root_vector_M(RootOrder ro, int ell, int j, int k) {
    if (j < 1 || k > ell || j > k) return NCElement::zero(ell);
    NCElement m = NCElement::generator(ro, ell, {GK::E, k});
    // M_{jk} = [E_j, M_{j+1,k}]_q, unwound from the top.
    for (int i = k - 1; i >= j; --i) {
        NCElement e = NCElement::generator(ro, ell, {GK::E, i});
        m = e * m - (m * e).scaled(QScalar::q_power(ro, Rat(-1)));
    }
    return m;
}

NCElement cartan_N(RootOrder ro, int ell, int j, int k) {
    if (j < 1 || j > ell || k < 0 || k > ell)
        throw std::domain_error("cartan_N: labels out of range");
    Word w;
    for (int i = j; i <= ell; ++i) w.push_back({GK::K, i});
    for (int i = k + 1; i <= ell; ++i) w.push_back({GK::K, i});
    w.push_back({GK::KhatInv, 0});
    return NCElement::word(ro, ell, w);
}

NCElement vector_X(RootOrder ro, int ell, int i) {
    return cartan_N(ro, ell, i, ell) * root_vector_M(ro, ell, i, ell).star();
}

NCElement k2rho(RootOrder ro, int ell) {
    Word w;
    for (int j = 1; j <= ell; ++j) {
        long reps = 2L * j * (ell - j + 1);
        for (long t = 0; t < reps; ++t) w.push_back({GK::K, j});
    }
    return NCElement::word(ro, ell, w);
}

NCElement casimir_element(RootOrder ro, int ell) {
    const QScalar dq = QScalar::q_power(ro, Rat(1)) - QScalar::q_power(ro, Rat(-1));
    const QScalar dq2 = dq * dq;
    NCElement c = NCElement::zero(ell);
    for (int i = 1; i <= ell; ++i) {
        NCElement n = cartan_N(ro, ell, i, i - 1);
        c = c + (n * n).scaled(QScalar::q_power(ro, Rat(ell + 2 - 2 * i)) / dq2);
    }
    c = c + NCElement::word(ro, ell, {{GK::KhatInv, 0}, {GK::KhatInv, 0}})
                .scaled(QScalar::q_power(ro, Rat(-ell)) / dq2);
    for (int j = 1; j <= ell; ++j)
        for (int k = j; k <= ell; ++k) {
            NCElement m = root_vector_M(ro, ell, j, k);
            NCElement n = cartan_N(ro, ell, j, k);
            c = c + (m.star() * n * n * m).scaled(QScalar::q_power(ro, Rat(ell + 1 - 2 * j)));
        }
    c = c - NCElement::unit(ro, ell).scaled(qnum(ro, ell + 1) / dq2);
    return c;
}

QMatrix casimir_matrix(const MatrixRep& rep, CasimirKind which) {
    RootOrder ro = rep.root_order();
    const int ell = rep.ell();
    const QScalar dq = QScalar::q_power(ro, Rat(1)) - QScalar::q_power(ro, Rat(-1));
    const QScalar dq2 = dq * dq;
    if (which == CasimirKind::Cq) return rep.evaluate(casimir_element(ro, ell));
    // K-hat^{2/l} C'_q = sum_i q^{l+1-2i}/(q-q^{-1})^2 N_{i,i-1}^2
    //   + sum_{j<=k<=l-1} q^{l-2j} M* N^2 M - [l]/(q-q^{-1})^2 K-hat^{2/l}
    QMatrix khat2l = rep.khat_power(Rat(2, ell));
    QMatrix rhs(rep.dim(), rep.dim());
    for (int i = 1; i <= ell; ++i) {
        NCElement n = cartan_N(ro, ell, i, i - 1);
        rhs = rhs + rep.evaluate((n * n).scaled(QScalar::q_power(ro, Rat(ell + 1 - 2 * i)) / dq2));
    }
    for (int j = 1; j <= ell - 1; ++j)
        for (int k = j; k <= ell - 1; ++k) {
            NCElement m = root_vector_M(ro, ell, j, k);
            NCElement n = cartan_N(ro, ell, j, k);
            rhs = rhs + rep.evaluate((m.star() * n * n * m).scaled(QScalar::q_power(ro, Rat(ell - 2 * j))));
        }
    rhs = rhs - khat2l.scaled(qnum(ro, ell) / dq2);
    return khat2l.diagonal_inverse() * rhs;
}

QMatrix adjoint_action(const NCElement& x, const NCElement& h, const MatrixRep& rep) {
    RootOrder ro = rep.root_order();
    NCTensor dh = coproduct(ro, h);
    QMatrix acc(rep.dim(), rep.dim());
    const QMatrix xm = rep.evaluate(x);
    for (const auto& [k, c] : dh.terms()) {
        NCElement h1 = NCElement::word(ro, rep.ell(), k.first).antipode();
        acc = acc + (rep.evaluate(h1) * xm * rep.evaluate_word(k.second)).scaled(c);
    }
    return acc;
}

} // namespace cpq::uqsl
