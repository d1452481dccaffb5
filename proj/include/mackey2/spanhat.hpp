#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "span.hpp"

namespace mackey2 {

// A 2-cell src => tgt of Spanhat: a middle 1-cell with reps up : mid -> src and
// down : mid -> tgt.
struct DoubleSpanTwoCell {
    Span src, tgt, mid;
    SpanRep up, down;
};

inline DoubleSpanTwoCell identity_cell(const Span& f) {
    auto id = identity_rep(f);
    return {f, f, f, id, id};
}

// The image of x : f => g under Span -> Spanhat.
inline DoubleSpanTwoCell covariant(const SpanRep& x) { return {x.src, x.tgt, x.src, identity_rep(x.src), x}; }

// The image of x : f => g under Span^co -> Spanhat, a 2-cell g => f.
inline DoubleSpanTwoCell contravariant(const SpanRep& x) { return {x.tgt, x.src, x.src, x, identity_rep(x.src)}; }

inline DoubleSpanTwoCell transpose(const DoubleSpanTwoCell& t) { return {t.tgt, t.src, t.mid, t.down, t.up}; }

// t2 o t1 through the strict pullback of t1.down and t2.up.
inline DoubleSpanTwoCell vcompose(const DoubleSpanTwoCell& t2, const DoubleSpanTwoCell& t1) {
    if (!same(t1.tgt, t2.src)) throw Mismatch("vcompose: 2-cells are not composable");
    const auto& g = t1.tgt;
    const auto& d = t1.down;
    const auto& e = t2.up;
    SkeletalComma sc(d.a, e.a);
    const auto& p = sc.p();
    const auto& q = sc.q();
    auto n = make_span(compose(g.u, d.a, p), compose(g.i, d.a, p));
    SpanRep r1{n, t1.mid, p, whisker(inverse(d.a1), p), whisker(inverse(d.a2), p)};
    SpanRep r2{n, t2.mid, q, vcomp(whisker(inverse(e.a1), q), whisker(g.u, sc.gamma())),
               vcomp(whisker(g.i, inverse(sc.gamma())), whisker(inverse(e.a2), q))};
    return {t1.src, t2.tgt, n, vcompose(t1.up, r1), vcompose(t2.down, r2)};
}

inline DoubleSpanTwoCell hcompose(const DoubleSpanTwoCell& s, const DoubleSpanTwoCell& t) {
    auto up = hcompose(s.up, t.up);
    auto down = hcompose(s.down, t.down);
    return {up.tgt, down.tgt, up.src, up, down};
}

inline DoubleSpanTwoCell whisker(const Span& g, const DoubleSpanTwoCell& t) { return hcompose(identity_cell(g), t); }
inline DoubleSpanTwoCell whisker(const DoubleSpanTwoCell& t, const Span& f) { return hcompose(t, identity_cell(f)); }

inline DoubleSpanTwoCell add(const DoubleSpanTwoCell& a, const DoubleSpanTwoCell& b) {
    if (!same(a.src, b.src) || !same(a.tgt, b.tgt)) throw Mismatch("add: 2-cells have different endpoints");
    auto mid = direct_sum(a.mid, b.mid);
    return {a.src, a.tgt, mid, copair(mid, {a.up, b.up}), copair(mid, {a.down, b.down})};
}

inline DoubleSpanTwoCell zero_cell(const Span& f, const Span& g) {
    if (!same(f.left, g.left) || !same(f.right, g.right)) throw Mismatch("zero_cell: feet do not match");
    auto z = zero_span(f.left, f.right);
    return {f, g, z, from_zero(z, f), from_zero(z, g)};
}

// ---------------------------------------------------------------------------
// Equality. Each cell is first rewritten with middle legs u b, i b (so up = [b, id, id])
// and a skeletal middle; the remaining data is A1 : u b => v a and A2 : j a => i b.

namespace detail {

struct NormalCell {
    GroupoidPtr mid;
    Functor b, a;
    std::vector<int> A1, A2;
};

inline NormalCell normal_cell(const DoubleSpanTwoCell& t) {
    const auto& G = *t.src.left;
    const auto& H = *t.src.right;
    auto sk = skeletalize(t.mid.middle);
    NormalCell n;
    n.mid = sk.skel;
    n.b = compose(t.up.a, sk.incl);
    n.a = compose(t.down.a, sk.incl);
    for (int r = 0; r < sk.skel->objects(); ++r) {
        int x = sk.incl.obj[r];
        n.A1.push_back(G.comp(t.down.a1.comp[x], G.inv(t.up.a1.comp[x])));
        n.A2.push_back(H.comp(H.inv(t.up.a2.comp[x]), t.down.a2.comp[x]));
    }
    return n;
}

// Whether component r of x and r2 of y are related by some tau : b'(r2) -> b(r).
inline bool compatible(const DoubleSpanTwoCell& t, const NormalCell& x, int r, const NormalCell& y, int r2) {
    const auto& R = *x.mid;
    const auto& R2 = *y.mid;
    auto ar = R.aut(r);
    auto ar2 = R2.aut(r2);
    if (ar.size() != ar2.size()) return false;
    const auto& P = *t.src.middle;
    const auto& Q = *t.tgt.middle;
    const auto& G = *t.src.left;
    const auto& H = *t.src.right;
    const auto &u = t.src.u, &i = t.src.i, &v = t.tgt.u, &j = t.tgt.i;
    std::map<int, int> pre;
    for (int m : ar2) pre[y.b.mor[m]] = m;
    for (int tau : P.hom(y.b.obj[r2], x.b.obj[r])) {
        bool ok = true;
        std::vector<int> f(ar.size());
        for (size_t k = 0; k < ar.size() && ok; ++k) {
            int img = P.comp(P.inv(tau), x.b.mor[ar[k]], tau);
            auto it = pre.find(img);
            if (it == pre.end()) ok = false;
            else f[k] = it->second;
        }
        if (!ok) continue;
        int want = H.comp(H.inv(x.A2[r]), i.mor[tau], y.A2[r2]);
        int sigma = -1;
        for (int s : Q.hom(y.a.obj[r2], x.a.obj[r]))
            if (j.mor[s] == want) sigma = s;
        if (sigma < 0) continue;
        if (G.comp(v.mor[sigma], y.A1[r2], G.inv(u.mor[tau])) != x.A1[r]) continue;
        for (size_t k = 0; k < ar.size() && ok; ++k)
            ok = Q.comp(x.a.mor[ar[k]], sigma) == Q.comp(sigma, y.a.mor[f[k]]);
        if (ok) return true;
    }
    return false;
}

inline bool perfect_matching(const std::vector<std::vector<char>>& adj) {
    int n = static_cast<int>(adj.size());
    std::vector<int> match(n, -1);
    for (int l = 0; l < n; ++l) {
        std::vector<char> seen(n, 0);
        auto aug = [&](auto&& self, int x) -> bool {
            for (int y = 0; y < n; ++y)
                if (adj[x][y] && !seen[y]) {
                    seen[y] = 1;
                    if (match[y] < 0 || self(self, match[y])) {
                        match[y] = x;
                        return true;
                    }
                }
            return false;
        };
        if (!aug(aug, l)) return false;
    }
    return true;
}

}  // namespace detail

// Monodromy normal form of an endomorphism of Id_G for a one-object G: one pair
// (subgroup, element) per component, each minimised over simultaneous conjugation.
inline std::vector<std::pair<std::vector<int>, int>> monodromy_classes(const DoubleSpanTwoCell& t) {
    const auto& G = *t.src.middle;
    if (!t.src.unit || !t.tgt.unit || G.objects() != 1) throw Mismatch("monodromy: not an endomorphism of Id_G");
    auto n = detail::normal_cell(t);
    std::vector<std::pair<std::vector<int>, int>> out;
    for (int r = 0; r < n.mid->objects(); ++r) {
        std::vector<int> h;
        for (int m : n.mid->aut(r)) h.push_back(n.b.mor[m]);
        int c = G.comp(n.A2[r], n.A1[r]);
        std::pair<std::vector<int>, int> best;
        bool first = true;
        for (int g = 0; g < G.morphisms(); ++g) {
            std::vector<int> hc;
            for (int x : h) hc.push_back(G.comp(g, x, G.inv(g)));
            std::sort(hc.begin(), hc.end());
            std::pair<std::vector<int>, int> cand{hc, G.comp(g, c, G.inv(g))};
            if (first || cand < best) best = cand;
            first = false;
        }
        out.push_back(best);
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline bool equal(const DoubleSpanTwoCell& x, const DoubleSpanTwoCell& y) {
    if (!same(x.src, y.src) || !same(x.tgt, y.tgt)) throw Mismatch("equal: 2-cells have different endpoints");
    if (x.src.unit && x.tgt.unit && x.src.middle->objects() == 1) return monodromy_classes(x) == monodromy_classes(y);
    auto nx = detail::normal_cell(x);
    auto ny = detail::normal_cell(y);
    int k = nx.mid->objects();
    if (ny.mid->objects() != k) return false;
    std::vector<std::vector<char>> adj(k, std::vector<char>(k, 0));
    for (int r = 0; r < k; ++r)
        for (int r2 = 0; r2 < k; ++r2) adj[r][r2] = detail::compatible(x, nx, r, ny, r2);
    return detail::perfect_matching(adj);
}

// The same decision without the monodromy shortcut.
inline bool equal_by_matching(const DoubleSpanTwoCell& x, const DoubleSpanTwoCell& y) {
    if (!same(x.src, y.src) || !same(x.tgt, y.tgt)) throw Mismatch("equal: 2-cells have different endpoints");
    auto nx = detail::normal_cell(x);
    auto ny = detail::normal_cell(y);
    int k = nx.mid->objects();
    if (ny.mid->objects() != k) return false;
    std::vector<std::vector<char>> adj(k, std::vector<char>(k, 0));
    for (int r = 0; r < k; ++r)
        for (int r2 = 0; r2 < k; ++r2) adj[r][r2] = detail::compatible(x, nx, r, ny, r2);
    return detail::perfect_matching(adj);
}

// ---------------------------------------------------------------------------
// Units and counits of i_! -| i^* -| i_* for faithful i : H -> G.

struct Adjunctions {
    DoubleSpanTwoCell eta_l;  // Id_H => i^* i_!
    DoubleSpanTwoCell eps_l;  // i_! i^* => Id_G
    DoubleSpanTwoCell eta_r;  // Id_G => i_! i^*
    DoubleSpanTwoCell eps_r;  // i^* i_! => Id_H
};

inline Adjunctions unit_counit(const Functor& i) {
    if (!is_faithful(i)) throw NotFaithful("unit_counit: functor is not faithful");
    auto lo = lower(i);
    auto up = upper(i);
    auto idh = identity_functor(i.dom);
    auto unit_rep = into_composite(identity_span(i.dom), hcompose(up, lo), idh, idh, identity_nat(i), identity_nat(idh),
                                   identity_nat(idh));
    auto gf = hcompose(lo, up);
    const auto& sc = gf.parts->comma;
    auto ip = compose(i, sc.p());
    SpanRep counit_rep{gf, identity_span(i.cod), ip, identity_nat(ip), whisker(i, sc.gamma())};
    Adjunctions a;
    a.eta_l = covariant(unit_rep);
    a.eps_l = covariant(counit_rep);
    a.eta_r = transpose(a.eps_l);
    a.eps_r = transpose(a.eta_l);
    return a;
}

// ---------------------------------------------------------------------------
// Pasting with formal source and target, inserting coherence isomorphisms as needed.

struct Cell {
    DoubleSpanTwoCell t;
    Expr src, tgt;
};

namespace detail {

inline bool same_shape(const Expr& a, const Expr& b) {
    if (a.get() == b.get()) return true;
    if (a->leaf() != b->leaf()) return false;
    if (a->leaf()) return same(a->value, b->value);
    return same_shape(a->g, b->g) && same_shape(a->f, b->f);
}

}  // namespace detail

inline Cell make_cell(const DoubleSpanTwoCell& t, Expr src, Expr tgt) {
    if (!same(t.src, src->value) || !same(t.tgt, tgt->value)) throw Mismatch("make_cell: endpoints disagree");
    return Cell{t, std::move(src), std::move(tgt)};
}

inline Cell iso_cell(const Expr& from, const Expr& to) { return Cell{covariant(canonical_iso(from, to)), from, to}; }

inline Cell identity_cell(const Expr& e) { return Cell{identity_cell(e->value), e, e}; }

// c2 after c1
inline Cell then(const Cell& c2, const Cell& c1) {
    if (detail::same_shape(c1.tgt, c2.src)) return Cell{vcompose(c2.t, c1.t), c1.src, c2.tgt};
    auto iso = iso_cell(c1.tgt, c2.src);
    return Cell{vcompose(c2.t, vcompose(iso.t, c1.t)), c1.src, c2.tgt};
}

inline Cell then(std::initializer_list<Cell> cs) {
    auto it = cs.begin();
    Cell acc = *it;
    for (++it; it != cs.end(); ++it) acc = then(*it, acc);
    return acc;
}

inline Cell whisker(const Expr& g, const Cell& c) { return Cell{whisker(g->value, c.t), comp(g, c.src), comp(g, c.tgt)}; }
inline Cell whisker(const Cell& c, const Expr& f) { return Cell{whisker(c.t, f->value), comp(c.src, f), comp(c.tgt, f)}; }
inline Cell whisker(const Expr& g, const Cell& c, const Expr& f) { return whisker(whisker(g, c), f); }

// Reframe a cell to formal endpoints with the same normal form.
inline Cell reframe(const Cell& c, const Expr& src, const Expr& tgt) {
    Cell r = c;
    if (!detail::same_shape(src, c.src)) r = then(r, iso_cell(src, c.src));
    if (!detail::same_shape(c.tgt, tgt)) r = then(iso_cell(c.tgt, tgt), r);
    r.src = src;
    r.tgt = tgt;
    return r;
}

// ---------------------------------------------------------------------------
// Squares and mates. A square is gamma : i v => u j with i : H -> G, u : K -> G,
// v : L -> H, j : L -> K.

struct Square {
    Functor i, u, v, j;
    NatIso gamma;
};

inline Square iso_comma_square(const Functor& i, const Functor& u) {
    SkeletalComma sc(i, u);
    return Square{i, u, sc.p(), sc.q(), sc.gamma()};
}

// The square of subgroups H, K <= G whose apex is the sum of K meet gHg^-1 over
// representatives g of K\G/H, with legs x |-> g^-1 x g into H and inclusion into K.
inline Square double_coset_square(const Group& g, const GroupoidPtr& gg, const Subgroup& h, const Subgroup& k) {
    auto ih = subgroup_inclusion(g, gg, h);
    auto ik = subgroup_inclusion(g, gg, k);
    auto reps = double_coset_reps(g, k, h);
    std::vector<GroupoidPtr> parts;
    std::vector<Subgroup> inters;
    for (int x : reps) {
        inters.push_back(intersect(k, conjugate(g, x, h)));
        parts.push_back(Groupoid::from_group(subgroup_group(g, inters.back())));
    }
    auto c = coproduct(parts);
    Functor v{c.sum, ih.gpd, std::vector<int>(c.sum->objects(), 0), std::vector<int>(c.sum->morphisms())};
    Functor j{c.sum, ik.gpd, std::vector<int>(c.sum->objects(), 0), std::vector<int>(c.sum->morphisms())};
    auto pos = [](const Subgroup& s, int e) { return static_cast<int>(std::lower_bound(s.begin(), s.end(), e) - s.begin()); };
    NatIso gamma{{}, {}, {}};
    for (size_t n = 0; n < reps.size(); ++n) {
        int x = reps[n];
        for (size_t m = 0; m < inters[n].size(); ++m) {
            int e = inters[n][m];
            v.mor[c.mor_off[n] + m] = pos(h, g.conj(g.inv(x), e));
            j.mor[c.mor_off[n] + m] = pos(k, e);
        }
        gamma.comp.push_back(x);
    }
    gamma.src = compose(ih.incl, v);
    gamma.tgt = compose(ik.incl, j);
    return Square{ih.incl, ik.incl, v, j, gamma};
}

inline bool is_mackey(const Square& s) { return is_mackey_square(s.i, s.u, s.v, s.j, s.gamma); }

namespace detail {

// (iv)^* => v^* i^*
inline SpanRep pseudo_functoriality(const Functor& i, const Functor& v) {
    auto x = upper(compose(i, v));
    auto gf = hcompose(upper(v), upper(i));
    auto idl = identity_functor(v.dom);
    return into_composite(x, gf, v, idl, identity_nat(v), identity_nat(x.u), identity_nat(idl));
}

}  // namespace detail

// alpha^* : v^* i^* => j^* u^* for alpha : i v => u j.
inline Cell restriction_cell(const Functor& i, const Functor& u, const Functor& v, const Functor& j, const NatIso& alpha) {
    auto iv = upper(compose(i, v));
    auto uj = upper(compose(u, j));
    SpanRep mid{iv, uj, identity_functor(v.dom), alpha, identity_nat(identity_functor(v.dom))};
    auto rep = vcompose(detail::pseudo_functoriality(u, j), vcompose(mid, inverse(detail::pseudo_functoriality(i, v))));
    return Cell{covariant(rep), comp(leaf(upper(v)), leaf(upper(i))), comp(leaf(upper(j)), leaf(upper(u)))};
}

// gamma_! : j_! v^* => u^* i_!
inline Cell mate_left(const Square& s) {
    auto I = leaf(lower(s.i)), Is = leaf(upper(s.i));
    auto J = leaf(lower(s.j)), Js = leaf(upper(s.j));
    auto U = leaf(upper(s.u)), V = leaf(upper(s.v));
    auto idH = leaf(identity_span(s.i.dom)), idK = leaf(identity_span(s.j.cod));
    auto ai = unit_counit(s.i);
    auto aj = unit_counit(s.j);
    auto JV = comp(J, V);
    auto eta = make_cell(ai.eta_l, idH, comp(Is, I));
    auto eps = make_cell(aj.eps_l, comp(J, Js), idK);
    auto alpha = restriction_cell(s.i, s.u, s.v, s.j, s.gamma);
    auto c = then({whisker(JV, eta), whisker(J, alpha, I), whisker(eps, comp(U, I))});
    return reframe(c, JV, comp(U, I));
}

// (gamma^-1)_* : u^* i_! => j_! v^*
inline Cell mate_right(const Square& s) {
    auto I = leaf(lower(s.i)), Is = leaf(upper(s.i));
    auto J = leaf(lower(s.j)), Js = leaf(upper(s.j));
    auto U = leaf(upper(s.u)), V = leaf(upper(s.v));
    auto idH = leaf(identity_span(s.i.dom)), idK = leaf(identity_span(s.j.cod));
    auto ai = unit_counit(s.i);
    auto aj = unit_counit(s.j);
    auto UI = comp(U, I);
    auto eta = make_cell(aj.eta_r, idK, comp(J, Js));
    auto eps = make_cell(ai.eps_r, comp(Is, I), idH);
    auto beta = restriction_cell(s.u, s.i, s.j, s.v, inverse(s.gamma));
    auto c = then({whisker(eta, UI), whisker(J, beta, I), whisker(comp(J, V), eps)});
    return reframe(c, UI, comp(J, V));
}

// ---------------------------------------------------------------------------
// Identities checked by the verification suites.

struct TriangleReport {
    bool left_1, left_2, right_1, right_2, frobenius;
    bool all() const { return left_1 && left_2 && right_1 && right_2 && frobenius; }
};

inline TriangleReport check_triangles(const Functor& i) {
    auto a = unit_counit(i);
    auto I = leaf(lower(i)), Is = leaf(upper(i));
    auto idH = leaf(identity_span(i.dom)), idG = leaf(identity_span(i.cod));
    auto eta_l = make_cell(a.eta_l, idH, comp(Is, I));
    auto eps_l = make_cell(a.eps_l, comp(I, Is), idG);
    auto eta_r = make_cell(a.eta_r, idG, comp(I, Is));
    auto eps_r = make_cell(a.eps_r, comp(Is, I), idH);
    TriangleReport r{};
    auto t1 = reframe(then(whisker(eps_l, I), whisker(I, eta_l)), I, I);
    r.left_1 = equal(t1.t, identity_cell(I->value));
    auto t2 = reframe(then(whisker(Is, eps_l), whisker(eta_l, Is)), Is, Is);
    r.left_2 = equal(t2.t, identity_cell(Is->value));
    auto t3 = reframe(then(whisker(eps_r, Is), whisker(Is, eta_r)), Is, Is);
    r.right_1 = equal(t3.t, identity_cell(Is->value));
    auto t4 = reframe(then(whisker(I, eps_r), whisker(eta_r, I)), I, I);
    r.right_2 = equal(t4.t, identity_cell(I->value));
    auto f = then(eps_r, eta_l);
    r.frobenius = equal(f.t, identity_cell(identity_span(i.dom)));
    return r;
}

struct MackeyReport {
    bool left_inverse, right_inverse;
    bool all() const { return left_inverse && right_inverse; }
};

// gamma_! (gamma^-1)_* = id and (gamma^-1)_* gamma_! = id.
inline MackeyReport check_strict_mackey(const Square& s) {
    if (!is_faithful(s.i) || !is_faithful(s.j)) throw NotFaithful("strict Mackey: i and j must be faithful");
    if (!is_mackey(s)) throw NotMackey("strict Mackey: square is not a Mackey square");
    auto l = mate_left(s);
    auto r = mate_right(s);
    MackeyReport m{};
    m.left_inverse = equal(then(l, r).t, identity_cell(r.src->value));
    m.right_inverse = equal(then(r, l).t, identity_cell(l.src->value));
    return m;
}

// ---------------------------------------------------------------------------
// Debug output

inline std::string to_dot(const DoubleSpanTwoCell& t) { return to_dot(*t.mid.middle, "cell"); }

}  // namespace mackey2
