#include "cpq/sphere.hpp"

#include <random>

namespace cpq::sphere {

WordPoly WordPoly::unit(RootOrder ro, int ell) {
    WordPoly p(ro, ell);
    p.add_term({}, QScalar::one(ro));
    return p;
}

WordPoly WordPoly::generator(RootOrder ro, int ell, int idx, bool star) {
    if (idx < 1 || idx > ell + 1) throw std::domain_error("sphere generator index out of range");
    WordPoly p(ro, ell);
    p.add_term({{idx, star}}, QScalar::one(ro));
    return p;
}

WordPoly WordPoly::normal_monomial(RootOrder ro, int ell, const std::vector<long>& a,
                                   const std::vector<long>& b) {
    if (static_cast<int>(a.size()) != ell + 1 || static_cast<int>(b.size()) != ell + 1)
        throw std::domain_error("normal_monomial: exponent vectors must have l+1 entries");
    SWord w;
    for (int i = 1; i <= ell + 1; ++i)
        for (long t = 0; t < a[static_cast<size_t>(i - 1)]; ++t) w.push_back({i, false});
    for (int i = ell + 1; i >= 1; --i)
        for (long t = 0; t < b[static_cast<size_t>(i - 1)]; ++t) w.push_back({i, true});
    WordPoly p(ro, ell);
    p.add_term(w, QScalar::one(ro));
    return p;
}

void WordPoly::add_term(const SWord& w, const QScalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, c);
    } else {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

WordPoly WordPoly::operator+(const WordPoly& o) const {
    WordPoly r = *this;
    if (r.ell_ == 0) { r.ell_ = o.ell_; r.r_ = o.r_; }
    for (const auto& [w, c] : o.terms_) r.add_term(w, c);
    return r;
}

WordPoly WordPoly::operator-(const WordPoly& o) const { return *this + o.scaled(-QScalar::one(o.root_order())); }

WordPoly WordPoly::operator*(const WordPoly& o) const {
    WordPoly r(RootOrder(r_), ell_);
    for (const auto& [w1, c1] : terms_)
        for (const auto& [w2, c2] : o.terms_) {
            SWord w = w1;
            w.insert(w.end(), w2.begin(), w2.end());
            r.add_term(w, c1 * c2);
        }
    return r;
}

WordPoly WordPoly::scaled(const QScalar& c) const {
    WordPoly r(RootOrder(r_), ell_);
    for (const auto& [w, k] : terms_) r.add_term(w, k * c);
    return r;
}

WordPoly WordPoly::star() const {
    WordPoly r(RootOrder(r_), ell_);
    for (const auto& [w, c] : terms_) {
        SWord rw;
        rw.reserve(w.size());
        for (auto it = w.rbegin(); it != w.rend(); ++it) rw.push_back({it->idx, !it->star});
        r.add_term(rw, c.conj());
    }
    return r;
}

namespace {

/// Index of the first rewritable adjacent pair, or -1 if the word is normal.
/// sphere toggles whether z_{l+1} z_{l+1}^* counts as a redex.
int first_redex(int ell, const SWord& w, bool sphere) {
    for (size_t i = 0; i + 1 < w.size(); ++i) {
        const Letter &x = w[i], &y = w[i + 1];
        if (!x.star && !y.star) {
            if (x.idx > y.idx) return static_cast<int>(i);
        } else if (x.star && y.star) {
            if (x.idx < y.idx) return static_cast<int>(i);
        } else if (x.star && !y.star) {
            return static_cast<int>(i);
        } else { // !x.star && y.star : normal junction, except the sphere pair
            if (sphere && x.idx == ell + 1 && y.idx == ell + 1) return static_cast<int>(i);
        }
    }
    return -1;
}

std::vector<int> all_redexes(int ell, const SWord& w, bool sphere) {
    std::vector<int> out;
    for (size_t i = 0; i + 1 < w.size(); ++i) {
        const Letter &x = w[i], &y = w[i + 1];
        bool redex = false;
        if (!x.star && !y.star) redex = x.idx > y.idx;
        else if (x.star && y.star) redex = x.idx < y.idx;
        else if (x.star && !y.star) redex = true;
        else redex = sphere && x.idx == ell + 1 && y.idx == ell + 1;
        if (redex) out.push_back(static_cast<int>(i));
    }
    return out;
}

SWord splice(const SWord& w, size_t at, const SWord& repl) {
    SWord r;
    r.reserve(w.size() + repl.size());
    r.insert(r.end(), w.begin(), w.begin() + static_cast<long>(at));
    r.insert(r.end(), repl.begin(), repl.end());
    r.insert(r.end(), w.begin() + static_cast<long>(at) + 2, w.end());
    return r;
}

/// One rewriting step at position i; appends the resulting terms.
void rewrite_at(RootOrder ro, int ell, const SWord& w, size_t i, const QScalar& coeff,
                std::vector<std::pair<SWord, QScalar>>& out) {
    const Letter x = w[i], y = w[i + 1];
    const QScalar q = QScalar::q_power(ro, Rat(1));
    const QScalar qinv = QScalar::q_power(ro, Rat(-1));
    if (!x.star && !y.star) {
        // z_x z_y with x > y:  z_x z_y = q^{-1} z_y z_x
        out.emplace_back(splice(w, i, {y, x}), coeff * qinv);
    } else if (x.star && y.star) {
        // z*_x z*_y with x < y: z*_x z*_y = q^{-1} z*_y z*_x
        out.emplace_back(splice(w, i, {y, x}), coeff * qinv);
    } else if (x.star && !y.star) {
        if (x.idx != y.idx) {
            // z*_i z_j = q z_j z*_i (i != j)
            out.emplace_back(splice(w, i, {y, x}), coeff * q);
        } else if (x.idx == 1) {
            // [z*_1, z_1] = 0
            out.emplace_back(splice(w, i, {y, x}), coeff);
        } else {
            // z*_j z_j = z_j z*_j + (1 - q^2) sum_{i<j} z_i z*_i
            out.emplace_back(splice(w, i, {y, x}), coeff);
            QScalar c = coeff * (QScalar::one(ro) - QScalar::q_power(ro, Rat(2)));
            for (int s = 1; s < x.idx; ++s)
                out.emplace_back(splice(w, i, {{s, false}, {s, true}}), c);
        }
    } else {
        // sphere relation: z_{l+1} z*_{l+1} = 1 - sum_{i<=l} z_i z*_i
        out.emplace_back(splice(w, i, {}), coeff);
        for (int s = 1; s <= ell; ++s)
            out.emplace_back(splice(w, i, {{s, false}, {s, true}}), -coeff);
    }
}

} // namespace

bool is_normal_word(int ell, const SWord& w, bool sphere_reduced) {
    return first_redex(ell, w, sphere_reduced) < 0;
}

WordPoly normal_form(const WordPoly& p, const NormalOptions& opt) {
    RootOrder ro = p.root_order();
    const int ell = p.ell();
    std::mt19937 rng(opt.seed);
    // TODO: memoize normal forms of word suffixes if partition checks at
    // larger N are ever needed; the plain worklist is fine up to N ~ 6.
    WordPoly done(ro, ell);
    std::vector<std::pair<SWord, QScalar>> work(p.terms().begin(), p.terms().end());
    while (!work.empty()) {
        auto [w, c] = std::move(work.back());
        work.pop_back();
        if (c.is_zero()) continue;
        if (opt.seed == 0) {
            int i = first_redex(ell, w, opt.apply_sphere);
            if (i < 0) {
                done.add_term(w, c);
            } else {
                rewrite_at(ro, ell, w, static_cast<size_t>(i), c, work);
            }
        } else {
            auto redexes = all_redexes(ell, w, opt.apply_sphere);
            if (redexes.empty()) {
                done.add_term(w, c);
            } else {
                size_t pick = std::uniform_int_distribution<size_t>(0, redexes.size() - 1)(rng);
                rewrite_at(ro, ell, w, static_cast<size_t>(redexes[pick]), c, work);
            }
        }
    }
    return done;
}

bool is_unit(const WordPoly& p) {
    return p.terms().size() == 1 && p.terms().begin()->first.empty() &&
           p.terms().begin()->second == QScalar::one(p.root_order());
}

PartitionCheck partition_of_unity_check(RootOrder ro, int ell, long N) {
    if (N < 0) throw std::domain_error("partition_of_unity_check: N must be non-negative");
    // Enumerate compositions j_1 + ... + j_{l+1} = N.
    std::vector<long> j(static_cast<size_t>(ell + 1), 0);
    WordPoly sum(ro, ell);
    long count = 0;
    auto emit = [&]() {
        WordPoly zj = WordPoly::normal_monomial(ro, ell, j, std::vector<long>(j.size(), 0));
        sum = sum + (zj * zj.star()).scaled(qmultinom(ro, j));
        ++count;
    };
    auto rec = [&](auto&& self, int slot, long rem) -> void {
        if (slot == ell) {
            j[static_cast<size_t>(slot)] = rem;
            emit();
            return;
        }
        for (long v = rem; v >= 0; --v) {
            j[static_cast<size_t>(slot)] = v;
            self(self, slot + 1, rem - v);
        }
    };
    rec(rec, 0, N);
    PartitionCheck out;
    out.summands = count;
    WordPoly reduced = normal_form(sum);
    out.holds = is_unit(reduced);
    out.residual = reduced - WordPoly::unit(ro, ell);
    out.residual = normal_form(out.residual);
    return out;
}

std::optional<long> khat_grading(const WordPoly& p) {
    std::optional<long> common;
    for (const auto& [w, c] : p.terms()) {
        long dz = 0, dzs = 0;
        for (const Letter& l : w) (l.star ? dzs : dz) += 1;
        long n = dzs - dz;
        if (!common) common = n;
        else if (*common != n) return std::nullopt;
    }
    return common;
}

} // namespace cpq::sphere
