#include "cpq/qexpr.hpp"

#include <cmath>

namespace cpq {

struct QExpr::Node {
    enum class Kind { Const, QPow, QNum, PoleSum, Add, Sub, Mul, Div, Neg };
    Kind kind;
    GRat c;                                    // Const
    Rat x;                                     // QPow / QNum argument
    std::vector<std::pair<GRat, Rat>> terms;   // PoleSum
    std::shared_ptr<const Node> a, b;
};

namespace {
using Node = QExpr::Node;
std::shared_ptr<const Node> make(Node n) { return std::make_shared<const Node>(std::move(n)); }
} // namespace

QExpr QExpr::constant(const GRat& c) {
    Node n;
    n.kind = Node::Kind::Const;
    n.c = c;
    return QExpr(make(std::move(n)));
}

QExpr QExpr::qpow(const Rat& e) {
    Node n;
    n.kind = Node::Kind::QPow;
    n.x = e;
    return QExpr(make(std::move(n)));
}

QExpr QExpr::num(const Rat& x) {
    Node n;
    n.kind = Node::Kind::QNum;
    n.x = x;
    return QExpr(make(std::move(n)));
}

QExpr QExpr::pole_sum(std::vector<std::pair<GRat, Rat>> terms) {
    GRat s0;
    Rat s1 = 0;
    for (const auto& [c, e] : terms) {
        s0 += c;
        if (!c.is_real()) throw std::logic_error("pole_sum: coefficients must be real");
        s1 += Rat(c.re) * e;
    }
    if (!s0.is_zero() || s1 != 0)
        throw std::logic_error("pole_sum: terms do not cancel to second order at q=1");
    Node n;
    n.kind = Node::Kind::PoleSum;
    n.terms = std::move(terms);
    return QExpr(make(std::move(n)));
}

namespace {
Node binary(Node::Kind k, const std::shared_ptr<const Node>& a,
            const std::shared_ptr<const Node>& b) {
    Node n;
    n.kind = k;
    n.a = a;
    n.b = b;
    return n;
}
} // namespace

QExpr QExpr::operator+(const QExpr& o) const { return QExpr(make(binary(Node::Kind::Add, node_, o.node_))); }
QExpr QExpr::operator-(const QExpr& o) const { return QExpr(make(binary(Node::Kind::Sub, node_, o.node_))); }
QExpr QExpr::operator*(const QExpr& o) const { return QExpr(make(binary(Node::Kind::Mul, node_, o.node_))); }
QExpr QExpr::operator/(const QExpr& o) const { return QExpr(make(binary(Node::Kind::Div, node_, o.node_))); }
QExpr QExpr::operator-() const {
    Node n;
    n.kind = Node::Kind::Neg;
    n.a = node_;
    return QExpr(make(std::move(n)));
}

namespace {
QScalar node_to_qscalar(const Node* n, RootOrder ro) {
    using K = Node::Kind;
    switch (n->kind) {
    case K::Const: return QScalar::constant(ro, n->c);
    case K::QPow: return QScalar::q_power(ro, n->x);
    case K::QNum: return qnum(ro, n->x);
    case K::PoleSum: {
        LaurentPoly num;
        for (const auto& [c, e] : n->terms) {
            Rat te = e * ro.r;
            if (denominator(te) != 1)
                throw PrecisionError("pole_sum: exponent not representable");
            num.add_term(numerator(te).convert_to<long long>(), c);
        }
        LaurentPoly d1;
        d1.add_term(ro.r, GRat(1));
        d1.add_term(-ro.r, GRat(-1));
        return QScalar(ro, num, d1 * d1);
    }
    case K::Add: return node_to_qscalar(n->a.get(), ro) + node_to_qscalar(n->b.get(), ro);
    case K::Sub: return node_to_qscalar(n->a.get(), ro) - node_to_qscalar(n->b.get(), ro);
    case K::Mul: return node_to_qscalar(n->a.get(), ro) * node_to_qscalar(n->b.get(), ro);
    case K::Div: return node_to_qscalar(n->a.get(), ro) / node_to_qscalar(n->b.get(), ro);
    case K::Neg: return -node_to_qscalar(n->a.get(), ro);
    }
    throw std::logic_error("unreachable");
}

GRat node_at_one(const Node* n) {
    using K = Node::Kind;
    switch (n->kind) {
    case K::Const: return n->c;
    case K::QPow: return GRat(1);
    case K::QNum: return GRat(Rat(n->x));
    case K::PoleSum: {
        Rat s = 0;
        for (const auto& [c, e] : n->terms) s += Rat(c.re) * e * e;
        return GRat(s / 8);
    }
    case K::Add: return node_at_one(n->a.get()) + node_at_one(n->b.get());
    case K::Sub: return node_at_one(n->a.get()) - node_at_one(n->b.get());
    case K::Mul: return node_at_one(n->a.get()) * node_at_one(n->b.get());
    case K::Div: {
        GRat d = node_at_one(n->b.get());
        if (d.is_zero())
            throw SingularEvaluation("QExpr::at_one: denominator node specializes to 0");
        return node_at_one(n->a.get()) / d;
    }
    case K::Neg: return -node_at_one(n->a.get());
    }
    throw std::logic_error("unreachable");
}
} // namespace

namespace {
double node_eval(const Node* n, double q) {
    using K = Node::Kind;
    switch (n->kind) {
    case K::Const:
        if (!n->c.is_real()) throw std::domain_error("eval_double: non-real constant");
        return to_double(n->c.re);
    case K::QPow: return std::pow(q, to_double(Rat(n->x)));
    case K::QNum: {
        double x = to_double(Rat(n->x));
        return (std::pow(q, x) - std::pow(q, -x)) / (q - 1.0 / q);
    }
    case K::PoleSum: {
        double s = 0;
        for (const auto& [c, e] : n->terms) s += to_double(c.re) * std::pow(q, to_double(Rat(e)));
        double d = q - 1.0 / q;
        return s / (d * d);
    }
    case K::Add: return node_eval(n->a.get(), q) + node_eval(n->b.get(), q);
    case K::Sub: return node_eval(n->a.get(), q) - node_eval(n->b.get(), q);
    case K::Mul: return node_eval(n->a.get(), q) * node_eval(n->b.get(), q);
    case K::Div: return node_eval(n->a.get(), q) / node_eval(n->b.get(), q);
    case K::Neg: return -node_eval(n->a.get(), q);
    }
    throw std::logic_error("unreachable");
}
} // namespace

QScalar QExpr::to_qscalar(RootOrder ro) const {
    if (!node_) throw std::logic_error("QExpr: empty expression");
    return node_to_qscalar(node_.get(), ro);
}

double QExpr::eval_double(double q) const {
    if (!node_) throw std::logic_error("QExpr: empty expression");
    if (!(q > 0.0 && q < 1.0)) throw std::domain_error("eval_double: q must lie in (0,1)");
    return node_eval(node_.get(), q);
}

GRat QExpr::at_one() const {
    if (!node_) throw std::logic_error("QExpr: empty expression");
    return node_at_one(node_.get());
}

} // namespace cpq
