#include "cpq/grassmann.hpp"

#include <map>

namespace cpq::grassmann {

namespace {

const std::vector<MultiIndex>& basis_of(int ell, int k) {
    static std::map<std::pair<int, int>, std::vector<MultiIndex>> cache;
    auto key = std::make_pair(ell, k);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, enumerate_multiindices(ell, k)).first;
    return it->second;
}

int basis_index(int ell, int k, const MultiIndex& idx) {
    const auto& b = basis_of(ell, k);
    for (size_t i = 0; i < b.size(); ++i)
        if (b[i] == idx) return static_cast<int>(i);
    throw std::logic_error("basis_index: index not found");
}

RootOrder order_of(const GrVector& v) {
    for (const auto& s : v.c)
        if (!s.is_zero()) return RootOrder(s.r());
    throw std::domain_error("GrVector: cannot infer root order from the zero vector");
}

} // namespace

int dim_W(int ell, int k) { return static_cast<int>(basis_of(ell, k).size()); }

GrVector GrVector::zero(int ell, int k) {
    GrVector v;
    v.ell = ell;
    v.k = k;
    v.c.assign(static_cast<size_t>(dim_W(ell, k)), QScalar());
    return v;
}

GrVector GrVector::basis(RootOrder ro, int ell, const MultiIndex& idx) {
    GrVector v = zero(ell, idx.size());
    v.c[static_cast<size_t>(basis_index(ell, idx.size(), idx))] = QScalar::one(ro);
    return v;
}

GrVector GrVector::operator+(const GrVector& o) const {
    if (ell != o.ell || k != o.k) throw std::domain_error("GrVector: degree mismatch");
    GrVector r = *this;
    for (size_t i = 0; i < c.size(); ++i) r.c[i] = c[i] + o.c[i];
    return r;
}

GrVector GrVector::operator-(const GrVector& o) const {
    if (ell != o.ell || k != o.k) throw std::domain_error("GrVector: degree mismatch");
    GrVector r = *this;
    for (size_t i = 0; i < c.size(); ++i) r.c[i] = c[i] - o.c[i];
    return r;
}

GrVector GrVector::scaled(const QScalar& s) const {
    GrVector r = *this;
    for (auto& v : r.c) v = v * s;
    return r;
}

GrVector GrVector::conj() const {
    GrVector r = *this;
    for (auto& v : r.c) v = v.conj();
    return r;
}

GrVector GrOperator::apply(const GrVector& v) const {
    if (v.ell != ell || v.k != dom_k) throw std::domain_error("GrOperator: domain mismatch");
    GrVector in = antilinear ? v.conj() : v;
    GrVector out = GrVector::zero(ell, cod_k);
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            out.c[static_cast<size_t>(i)] += m(i, j) * in.c[static_cast<size_t>(j)];
    return out;
}

GrOperator GrOperator::compose(const GrOperator& b) const {
    if (b.cod_k != dom_k || b.ell != ell) throw std::domain_error("GrOperator: compose mismatch");
    GrOperator r;
    r.ell = ell;
    r.dom_k = b.dom_k;
    r.cod_k = cod_k;
    r.antilinear = antilinear != b.antilinear;
    r.m = m * (antilinear ? b.m.conj() : b.m);
    return r;
}

GrOperator GrOperator::scaled(const QScalar& s) const {
    GrOperator r = *this;
    r.m = m.scaled(s);
    return r;
}

QMatrix sigma_matrix(RootOrder ro, int ell, int k, SGen g, int j) {
    if (j < 1 || j > ell - 1) throw std::domain_error("sigma_matrix: generator index out of range");
    if (k < 0 || k > ell) throw std::domain_error("sigma_matrix: degree out of range");
    const auto& b = basis_of(ell, k);
    const int n = static_cast<int>(b.size());
    QMatrix m(n, n);
    for (int row = 0; row < n; ++row) {
        const MultiIndex& i = b[static_cast<size_t>(row)];
        switch (g) {
        case SGen::K:
        case SGen::Kinv: {
            int s = i.sharp(j);
            Rat e(s, 2);
            if (g == SGen::Kinv) e = -e;
            m(row, row) = QScalar::q_power(ro, e);
            break;
        }
        case SGen::E: {
            // {sigma(E_j) w}_i = delta_{j#i,+1} w_{i^{j,+}}: row i reads the
            // component at i^{j,+}.
            if (i.sharp(j) == 1)
                m(row, basis_index(ell, k, i.shifted(j, +1))) = QScalar::one(ro);
            break;
        }
        case SGen::F: {
            if (i.sharp(j) == -1)
                m(row, basis_index(ell, k, i.shifted(j, -1))) = QScalar::one(ro);
            break;
        }
        }
    }
    return m;
}

GrVector wedge(const GrVector& v, const GrVector& w) {
    if (v.ell != w.ell) throw std::domain_error("wedge: rank mismatch");
    const int ell = v.ell, h = v.k, k = w.k;
    if (h + k > ell) {
        // v ^ w := 0 above the top degree; W_{h+k} is the zero space then.
        GrVector z;
        z.ell = ell;
        z.k = h + k;
        return z;
    }
    GrVector out = GrVector::zero(ell, h + k);
    if (v.is_zero() || w.is_zero()) return out;
    RootOrder ro = order_of(v);
    const auto& target = basis_of(ell, h + k);
    const auto shuffles = enumerate_shuffles(h, k);
    const QScalar mqinv = -QScalar::q_power(ro, Rat(-1));
    for (size_t ti = 0; ti < target.size(); ++ti) {
        const MultiIndex& idx = target[ti];
        QScalar acc = QScalar::zero(ro);
        for (const Permutation& p : shuffles) {
            std::vector<int> a, bb;
            a.reserve(static_cast<size_t>(h));
            bb.reserve(static_cast<size_t>(k));
            for (int s = 1; s <= h; ++s) a.push_back(idx[p(s) - 1]);
            for (int s = h + 1; s <= h + k; ++s) bb.push_back(idx[p(s) - 1]);
            const QScalar& vc = v.c[static_cast<size_t>(basis_index(ell, h, MultiIndex(ell, a)))];
            if (vc.is_zero()) continue;
            const QScalar& wc = w.c[static_cast<size_t>(basis_index(ell, k, MultiIndex(ell, bb)))];
            if (wc.is_zero()) continue;
            QScalar sign = QScalar::one(ro);
            long len = p.inversion_count();
            for (long s = 0; s < len; ++s) sign = sign * mqinv;
            acc += sign * vc * wc;
        }
        out.c[ti] = acc;
    }
    return out;
}

GrVector jmap(RootOrder ro, const GrVector& w) {
    return jmap_operator(ro, w.ell, w.k).apply(w);
}

GrOperator jmap_operator(RootOrder ro, int ell, int k) {
    GrOperator op;
    op.ell = ell;
    op.dom_k = k;
    op.cod_k = ell - k;
    op.antilinear = true;
    const auto& bout = basis_of(ell, ell - k);
    op.m = QMatrix(static_cast<int>(bout.size()), dim_W(ell, k));
    const Rat quarter(static_cast<long>(ell) * (ell + 1), 4);
    for (size_t row = 0; row < bout.size(); ++row) {
        const MultiIndex& i = bout[row];
        // (Jw)_i = (-1/q)^{|i|} q^{l(l+1)/4} conj(w_{i^c})
        QScalar coeff = QScalar::q_power(ro, quarter - Rat(i.weight()));
        if (i.weight() % 2 != 0) coeff = -coeff;
        op.m(static_cast<int>(row), basis_index(ell, k, i.complement())) = coeff;
    }
    return op;
}

QMatrix exterior_left(const GrVector& x, int k) {
    if (x.k != 1) throw std::domain_error("exterior_left: x must have degree 1");
    const int ell = x.ell;
    const int out_k = k + 1;
    if (out_k > ell) return QMatrix(0, dim_W(ell, k));
    QMatrix m(dim_W(ell, out_k), dim_W(ell, k));
    if (x.is_zero()) return m;
    const auto& dom = basis_of(ell, k);
    for (size_t col = 0; col < dom.size(); ++col) {
        GrVector b = GrVector::basis(order_of(x), ell, dom[col]);
        GrVector img = wedge(x, b);
        for (size_t row = 0; row < img.c.size(); ++row) m(static_cast<int>(row), static_cast<int>(col)) = img.c[row];
    }
    return m;
}

QMatrix exterior_right(const GrVector& x, int k) {
    if (x.k != 1) throw std::domain_error("exterior_right: x must have degree 1");
    const int ell = x.ell;
    const int out_k = k + 1;
    if (out_k > ell) return QMatrix(0, dim_W(ell, k));
    if (x.is_zero()) return QMatrix(dim_W(ell, out_k), dim_W(ell, k));
    RootOrder ro = order_of(x);
    QScalar factor = QScalar::q_power(ro, Rat(k));
    if (k % 2 != 0) factor = -factor; // (-q)^k
    QMatrix m(dim_W(ell, out_k), dim_W(ell, k));
    const auto& dom = basis_of(ell, k);
    for (size_t col = 0; col < dom.size(); ++col) {
        GrVector b = GrVector::basis(ro, ell, dom[col]);
        GrVector img = wedge(b, x).scaled(factor);
        for (size_t row = 0; row < img.c.size(); ++row) m(static_cast<int>(row), static_cast<int>(col)) = img.c[row];
    }
    return m;
}

QMatrix contraction_right(const GrVector& x, int k) {
    if (x.k != 1) throw std::domain_error("contraction_right: x must have degree 1");
    const int ell = x.ell;
    if (k + 1 > ell) return QMatrix(dim_W(ell, k), 0);
    if (x.is_zero()) return QMatrix(dim_W(ell, k), dim_W(ell, k + 1));
    RootOrder ro = order_of(x);
    const auto& out = basis_of(ell, k);
    const auto& dom = basis_of(ell, k + 1);
    QMatrix m(static_cast<int>(out.size()), static_cast<int>(dom.size()));
    for (size_t row = 0; row < out.size(); ++row) {
        const MultiIndex& i = out[row];
        for (int j = 1; j <= ell; ++j) {
            if (i.contains(j)) continue;
            MultiIndex iu = i.with(j);
            const QScalar& xj = x.c[static_cast<size_t>(basis_index(ell, 1, MultiIndex(ell, {j})))];
            if (xj.is_zero()) continue;
            const int L = iu.position(j);
            QScalar coeff = QScalar::q_power(ro, Rat(L - 1));
            if ((L - 1) % 2 != 0) coeff = -coeff; // (-q)^{L-1}
            m(static_cast<int>(row), basis_index(ell, k + 1, iu)) =
                m(static_cast<int>(row), basis_index(ell, k + 1, iu)) + coeff * xj.conj();
        }
    }
    return m;
}

QMatrix contraction_left(const GrVector& x, int k) {
    // Defined by adjunction against <v,w> = sum conj(v_i) w_i.
    return exterior_left(x, k).dagger();
}

QScalar qdim_W(RootOrder ro, int ell, int k) {
    if (k < 0 || k > ell) throw std::domain_error("qdim_W: k out of range");
    QScalar s = QScalar::zero(ro);
    for (const MultiIndex& i : basis_of(ell, k))
        s += QScalar::q_power(ro, Rat(static_cast<long>(k) * (ell + 1) - 2 * i.weight()));
    return s;
}

} // namespace cpq::grassmann
