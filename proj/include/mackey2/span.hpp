#pragma once

#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "comma.hpp"

namespace mackey2 {

struct SpanComposite;

// A 1-cell G <-u- P -i-> H from G to H; i is faithful.
struct Span {
    GroupoidPtr left, right, middle;
    Functor u, i;
    bool unit = false;                            // strict identity span
    std::shared_ptr<const SpanComposite> parts;  // set when built by hcompose
};

struct SpanComposite {
    Span g, f;
    SkeletalComma comma;  // (f.i / g.u)
};

inline bool same(const Span& a, const Span& b) {
    return same(a.left, b.left) && same(a.right, b.right) && same(a.u, b.u) && same(a.i, b.i);
}

inline Span make_span(const Functor& u, const Functor& i) {
    if (!same(u.dom, i.dom)) throw Mismatch("make_span: legs have different domains");
    if (!is_faithful(i)) throw NotFaithful("make_span: right leg is not faithful");
    return Span{u.cod, i.cod, u.dom, u, i, false, nullptr};
}

// i_! = (P = P -i-> H)
inline Span lower(const Functor& i) { return make_span(identity_functor(i.dom), i); }

// u^* = (G <-u- P = P)
inline Span upper(const Functor& u) { return make_span(u, identity_functor(u.dom)); }

inline Span identity_span(const GroupoidPtr& g) {
    auto id = identity_functor(g);
    return Span{g, g, g, id, id, true, nullptr};
}

inline Span zero_span(const GroupoidPtr& left, const GroupoidPtr& right) {
    auto e = Groupoid::empty();
    return make_span(Functor{e, left, {}, {}}, Functor{e, right, {}, {}});
}

// g o f, through the skeleton of (f.i / g.u).
inline Span hcompose(const Span& g, const Span& f) {
    if (!same(f.right, g.left)) throw Mismatch("hcompose: feet do not match");
    auto parts = std::make_shared<SpanComposite>();
    parts->g = g;
    parts->f = f;
    parts->comma = SkeletalComma(f.i, g.u);
    const auto& sc = parts->comma;
    Span r{f.left, g.right, sc.apex(), compose(f.u, sc.p()), compose(g.i, sc.q()), false, nullptr};
    r.parts = std::move(parts);
    return r;
}

inline Span direct_sum(const Span& a, const Span& b) {
    if (!same(a.left, b.left) || !same(a.right, b.right)) throw Mismatch("direct_sum: feet do not match");
    auto c = coproduct({a.middle, b.middle});
    return make_span(copair(c, {a.u, b.u}, a.left), copair(c, {a.i, b.i}, a.right));
}

// ---------------------------------------------------------------------------
// Representatives [a, alpha1, alpha2] of 2-cells of Span from src = (u, P, i) to
// tgt = (v, Q, j): a : P -> Q faithful, alpha1 : u => v a, alpha2 : j a => i.

struct SpanRep {
    Span src, tgt;
    Functor a;
    NatIso a1, a2;
};

inline bool is_valid(const SpanRep& x) {
    if (!same(x.a.dom, x.src.middle) || !same(x.a.cod, x.tgt.middle)) return false;
    if (!is_valid(x.a) || !is_faithful(x.a) || !is_valid(x.a1) || !is_valid(x.a2)) return false;
    return same(x.a1.src, x.src.u) && same(x.a1.tgt, compose(x.tgt.u, x.a)) && same(x.a2.src, compose(x.tgt.i, x.a)) &&
           same(x.a2.tgt, x.src.i);
}

inline SpanRep identity_rep(const Span& f) {
    return SpanRep{f, f, identity_functor(f.middle), identity_nat(f.u), identity_nat(f.i)};
}

// y o x
inline SpanRep vcompose(const SpanRep& y, const SpanRep& x) {
    if (!same(x.tgt, y.src)) throw Mismatch("vcompose: 2-cells are not composable");
    SpanRep r;
    r.src = x.src;
    r.tgt = y.tgt;
    r.a = compose(y.a, x.a);
    r.a1 = vcomp(whisker(y.a1, x.a), x.a1);
    r.a2 = vcomp(x.a2, whisker(y.a2, x.a));
    return r;
}

// Rep from X into a composite gf = g o f, given F1 : X.mid -> P, F2 : X.mid -> Q,
// delta : f.i F1 => g.u F2, l1 : X.u => f.u F1 and l2 : g.i F2 => X.i.
inline SpanRep into_composite(const Span& x, const Span& gf, const Functor& f1, const Functor& f2,
                              const NatIso& delta, const NatIso& l1, const NatIso& l2) {
    if (!gf.parts) throw Mismatch("into_composite: target is not a composite");
    const auto& f = gf.parts->f;
    const auto& g = gf.parts->g;
    auto ind = gf.parts->comma.induce(f1, f2, delta);
    SpanRep r;
    r.src = x;
    r.tgt = gf;
    r.a = ind.c;
    r.a1 = vcomp(whisker(f.u, ind.z1), l1);
    r.a2 = vcomp(l2, whisker(g.i, inverse(ind.z2)));
    return r;
}

// Horizontal composite of x : f => f' (G -> H) and y : g => g' (H -> K).
inline SpanRep hcompose(const SpanRep& y, const SpanRep& x) {
    Span src = hcompose(y.src, x.src);
    Span tgt = hcompose(y.tgt, x.tgt);
    const auto& sc = src.parts->comma;
    auto f1 = compose(x.a, sc.p());
    auto f2 = compose(y.a, sc.q());
    auto delta = vcomp(whisker(y.a1, sc.q()), sc.gamma(), whisker(x.a2, sc.p()));
    return into_composite(src, tgt, f1, f2, delta, whisker(x.a1, sc.p()), whisker(y.a2, sc.q()));
}

inline SpanRep whisker(const Span& g, const SpanRep& x) { return hcompose(identity_rep(g), x); }
inline SpanRep whisker(const SpanRep& y, const Span& f) { return hcompose(y, identity_rep(f)); }

// Inverse of a rep whose 1-cell component is an equivalence.
inline SpanRep inverse(const SpanRep& x) {
    auto q = quasi_inverse(x.a);
    if (!q) throw Mismatch("inverse: 1-cell component is not an equivalence");
    const auto& b = q->g;
    SpanRep r;
    r.src = x.tgt;
    r.tgt = x.src;
    r.a = b;
    r.a1 = vcomp(whisker(inverse(x.a1), b), whisker(x.tgt.u, inverse(q->counit)));
    r.a2 = vcomp(whisker(x.tgt.i, q->counit), whisker(inverse(x.a2), b));
    return r;
}

inline bool is_invertible(const SpanRep& x) { return is_equivalence(x.a); }

// [a, alpha] = [b, beta] iff some phi : a => b has (v phi) alpha1 = beta1 and
// alpha2 = beta2 (j phi). Faithfulness of j forces phi, so only one candidate is tested.
inline bool equal(const SpanRep& x, const SpanRep& y) {
    if (!same(x.src, y.src) || !same(x.tgt, y.tgt)) throw Mismatch("equal: 2-cells have different endpoints");
    const auto& P = *x.src.middle;
    const auto& Q = *x.tgt.middle;
    const auto& H = *x.tgt.right;
    const auto& G = *x.tgt.left;
    const auto& j = x.tgt.i;
    const auto& v = x.tgt.u;
    std::vector<int> phi(P.objects());
    for (int p = 0; p < P.objects(); ++p) {
        int want = H.comp(H.inv(y.a2.comp[p]), x.a2.comp[p]);
        int found = -1;
        for (int m : Q.hom(x.a.obj[p], y.a.obj[p]))
            if (j.mor[m] == want) found = m;
        if (found < 0) return false;
        phi[p] = found;
        if (G.comp(v.mor[found], x.a1.comp[p]) != y.a1.comp[p]) return false;
    }
    return is_valid(NatIso{x.a, y.a, phi});
}

// Copairing of reps out of a direct sum into a common target.
inline SpanRep copair(const Span& sum, const std::vector<SpanRep>& xs) {
    std::vector<GroupoidPtr> parts;
    for (const auto& x : xs) parts.push_back(x.src.middle);
    auto c = coproduct(parts);
    if (!same(c.sum, sum.middle)) throw Mismatch("copair: source is not the direct sum");
    std::vector<Functor> as;
    std::vector<NatIso> a1s, a2s;
    for (const auto& x : xs) {
        as.push_back(x.a);
        a1s.push_back(x.a1);
        a2s.push_back(x.a2);
    }
    const auto& tgt = xs.at(0).tgt;
    SpanRep r;
    r.src = sum;
    r.tgt = tgt;
    r.a = copair(c, as, tgt.middle);
    r.a1 = copair(c, a1s, tgt.left);
    r.a2 = copair(c, a2s, tgt.right);
    r.a1.src = sum.u;
    r.a1.tgt = compose(tgt.u, r.a);
    r.a2.src = compose(tgt.i, r.a);
    r.a2.tgt = sum.i;
    return r;
}

// The empty rep out of a zero span.
inline SpanRep from_zero(const Span& zero, const Span& tgt) {
    Functor a{zero.middle, tgt.middle, {}, {}};
    return SpanRep{zero, tgt, a, NatIso{zero.u, compose(tgt.u, a), {}}, NatIso{compose(tgt.i, a), zero.i, {}}};
}

// ---------------------------------------------------------------------------
// Coherence: unitors and associator.

// f => f o Id
inline SpanRep right_unitor_inv(const Span& f) {
    auto gf = hcompose(f, identity_span(f.left));
    return into_composite(f, gf, f.u, identity_functor(f.middle), identity_nat(f.u), identity_nat(f.u),
                          identity_nat(f.i));
}

// f o Id => f
inline SpanRep right_unitor(const Span& f) {
    auto gf = hcompose(f, identity_span(f.left));
    const auto& sc = gf.parts->comma;
    return SpanRep{gf, f, sc.q(), sc.gamma(), identity_nat(compose(f.i, sc.q()))};
}

// f => Id o f
inline SpanRep left_unitor_inv(const Span& f) {
    auto gf = hcompose(identity_span(f.right), f);
    return into_composite(f, gf, identity_functor(f.middle), f.i, identity_nat(f.i), identity_nat(f.u),
                          identity_nat(f.i));
}

// Id o f => f
inline SpanRep left_unitor(const Span& f) {
    auto gf = hcompose(identity_span(f.right), f);
    const auto& sc = gf.parts->comma;
    return SpanRep{gf, f, sc.p(), identity_nat(compose(f.u, sc.p())), sc.gamma()};
}

// (h g) f => h (g f)
inline SpanRep associator(const Span& h, const Span& g, const Span& f) {
    auto hg = hcompose(h, g);
    auto x = hcompose(hg, f);
    auto gf = hcompose(g, f);
    auto y = hcompose(h, gf);
    const auto& sx = x.parts->comma;
    const auto& shg = hg.parts->comma;
    const auto& sgf = gf.parts->comma;
    auto inner = sgf.induce(sx.p(), compose(shg.p(), sx.q()), sx.gamma());
    auto f2 = compose(shg.q(), sx.q());
    auto delta = vcomp(whisker(shg.gamma(), sx.q()), whisker(g.i, inverse(inner.z2)));
    return into_composite(x, y, inner.c, f2, delta, whisker(f.u, inner.z1), identity_nat(x.i));
}

// ---------------------------------------------------------------------------
// Formal composites and canonical coherence isomorphisms between bracketings.

struct ExprNode;
using Expr = std::shared_ptr<const ExprNode>;

struct ExprNode {
    Span value;
    Expr g, f;  // g o f, or a leaf when null
    bool leaf() const { return !g; }
};

inline Expr leaf(const Span& s) { return std::make_shared<ExprNode>(ExprNode{s, nullptr, nullptr}); }
inline Expr comp(const Expr& g, const Expr& f) {
    return std::make_shared<ExprNode>(ExprNode{hcompose(g->value, f->value), g, f});
}
inline Expr comp(const Expr& h, const Expr& g, const Expr& f) { return comp(h, comp(g, f)); }

inline void leaves(const Expr& e, std::vector<Span>& out) {
    if (e->leaf()) {
        if (!e->value.unit) out.push_back(e->value);
        return;
    }
    leaves(e->g, out);
    leaves(e->f, out);
}

struct Normalized {
    Expr nf;
    SpanRep rep;  // value(e) => value(nf)
};

namespace detail {

// A and B normal; returns the normal form of A o B with the comparison.
inline Normalized merge(const Expr& a, const Expr& b) {
    if (b->leaf() && b->value.unit) return {a, right_unitor(a->value)};
    if (a->leaf() && a->value.unit) return {b, left_unitor(b->value)};
    if (a->leaf()) {
        auto e = comp(a, b);
        return {e, identity_rep(e->value)};
    }
    auto assoc = associator(a->g->value, a->f->value, b->value);
    auto inner = merge(a->f, b);
    auto step = whisker(a->g->value, inner.rep);
    auto e = comp(a->g, inner.nf);
    return {e, vcompose(step, assoc)};
}

}  // namespace detail

inline Normalized normalize(const Expr& e) {
    if (e->leaf()) return {e, identity_rep(e->value)};
    auto ng = normalize(e->g);
    auto nf = normalize(e->f);
    auto first = hcompose(ng.rep, nf.rep);
    auto m = detail::merge(ng.nf, nf.nf);
    return {m.nf, vcompose(m.rep, first)};
}

// The coherence isomorphism value(from) => value(to).
inline SpanRep canonical_iso(const Expr& from, const Expr& to) {
    std::vector<Span> a, b;
    leaves(from, a);
    leaves(to, b);
    bool ok = a.size() == b.size();
    for (size_t k = 0; ok && k < a.size(); ++k) ok = same(a[k], b[k]);
    if (!ok) throw Mismatch("canonical_iso: expressions have different factors");
    if (same(from->value, to->value) && from.get() == to.get()) return identity_rep(from->value);
    auto nf = normalize(from);
    auto nt = normalize(to);
    return vcompose(inverse(nt.rep), nf.rep);
}

// ---------------------------------------------------------------------------
// Debug output

inline std::string to_dot(const Groupoid& g, const std::string& name = "middle") {
    std::ostringstream os;
    os << "digraph " << name << " {\n";
    for (int x = 0; x < g.objects(); ++x) os << "  n" << x << " [label=\"" << x << " |Aut|=" << g.aut(x).size() << "\"];\n";
    for (int m = 0; m < g.morphisms(); ++m)
        if (m != g.id(g.src(m))) os << "  n" << g.src(m) << " -> n" << g.tgt(m) << " [label=\"" << m << "\"];\n";
    os << "}\n";
    return os.str();
}

inline std::string to_dot(const Span& s) { return to_dot(*s.middle); }

}  // namespace mackey2
