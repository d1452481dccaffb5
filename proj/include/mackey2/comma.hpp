#pragma once

#include <memory>
#include <optional>
#include <tuple>
#include <vector>

#include "groupoid.hpp"

namespace mackey2 {

// Iso-comma (i/u) built from its explicit description: objects are triples
// (x, y, g : i(x) -> u(y)), morphisms (a, b) with u(b) g = g' i(a).
struct IsoCommaSquare {
    Functor i, u;
    GroupoidPtr apex;
    Functor p, q;
    NatIso gamma;  // i p => u q
    std::vector<int> ox, oy, og;  // object dictionary
    std::vector<int> base;        // base[x * |B| + y]

    int object_of(int x, int y, int g) const {
        return base[x * u.dom->objects() + y] + i.cod->hom_pos(g);
    }
};

inline IsoCommaSquare iso_comma(const Functor& i, const Functor& u) {
    if (!same(i.cod, u.cod)) throw Mismatch("iso_comma: legs have different codomains");
    const auto& A = *i.dom;
    const auto& B = *u.dom;
    const auto& C = *i.cod;
    IsoCommaSquare s;
    s.i = i;
    s.u = u;
    int nA = A.objects(), nB = B.objects();
    s.base.assign(nA * nB + 1, 0);
    for (int x = 0; x < nA; ++x)
        for (int y = 0; y < nB; ++y) {
            int k = x * nB + y;
            s.base[k + 1] = s.base[k] + static_cast<int>(C.hom(i.obj[x], u.obj[y]).size());
            for (int g : C.hom(i.obj[x], u.obj[y])) {
                s.ox.push_back(x);
                s.oy.push_back(y);
                s.og.push_back(g);
            }
        }
    int n = s.base[nA * nB];
    auto obj = [&](int x, int y, int g) { return s.base[x * nB + y] + C.hom_pos(g); };
    std::vector<int> mbase(n + 1, 0);
    for (int o = 0; o < n; ++o) mbase[o + 1] = mbase[o] + A.out_size(s.ox[o]) * B.out_size(s.oy[o]);
    int nm = mbase[n];
    std::vector<int> src(nm), tgt(nm), ma(nm), mb(nm), ident(n), inv(nm);
    for (int o = 0; o < n; ++o) {
        int x = s.ox[o], y = s.oy[o], g = s.og[o];
        int k = mbase[o];
        for (int a : A.out(x))
            for (int b : B.out(y)) {
                src[k] = o;
                ma[k] = a;
                mb[k] = b;
                tgt[k] = obj(A.tgt(a), B.tgt(b), C.comp(u.mor[b], g, C.inv(i.mor[a])));
                ++k;
            }
    }
    auto mor = [&](int o, int a, int b) { return mbase[o] + A.pos_out(a) * B.out_size(s.oy[o]) + B.pos_out(b); };
    for (int o = 0; o < n; ++o) ident[o] = mor(o, A.id(s.ox[o]), B.id(s.oy[o]));
    for (int m = 0; m < nm; ++m) inv[m] = mor(tgt[m], A.inv(ma[m]), B.inv(mb[m]));
    s.apex = Groupoid::build(n, src, tgt, ident, inv,
                             [&](int h, int f) { return mor(src[f], A.comp(ma[h], ma[f]), B.comp(mb[h], mb[f])); });
    s.p = Functor{s.apex, i.dom, s.ox, ma};
    s.q = Functor{s.apex, u.dom, s.oy, mb};
    s.gamma = NatIso{compose(i, s.p), compose(u, s.q), s.og};
    return s;
}

// The unique functor c : T -> (i/u) with p c = F1, q c = F2 and gamma c = delta.
inline Functor induced_functor(const IsoCommaSquare& s, const Functor& f1, const Functor& f2, const NatIso& delta) {
    const auto& T = *f1.dom;
    const auto& P = *s.apex;
    int nB = s.u.dom->objects();
    Functor c{f1.dom, s.apex, std::vector<int>(T.objects()), std::vector<int>(T.morphisms())};
    for (int t = 0; t < T.objects(); ++t) {
        int x = f1.obj[t], y = f2.obj[t], g = delta.comp[t];
        c.obj[t] = s.base[x * nB + y] + s.i.cod->hom_pos(g);
    }
    for (int m = 0; m < T.morphisms(); ++m) {
        int o = c.obj[T.src(m)];
        int a = f1.mor[m], b = f2.mor[m];
        int k = -1;
        for (int h : P.out(o))
            if (s.p.mor[h] == a && s.q.mor[h] == b) k = h;
        if (k < 0) throw Mismatch("induced_functor: cone does not commute");
        c.mor[m] = k;
    }
    return c;
}

// Two-dimensional property: given c, c' and phi1 : p c => p c', phi2 : q c => q c'
// compatible with gamma, returns the unique phi : c => c' over them, or nothing.
inline std::optional<NatIso> induced_2cell(const IsoCommaSquare& s, const Functor& c, const Functor& c2,
                                           const NatIso& phi1, const NatIso& phi2) {
    const auto& P = *s.apex;
    NatIso r{c, c2, std::vector<int>(c.obj.size())};
    for (size_t t = 0; t < c.obj.size(); ++t) {
        int k = -1;
        for (int h : P.hom(c.obj[t], c2.obj[t]))
            if (s.p.mor[h] == phi1.comp[t] && s.q.mor[h] == phi2.comp[t]) k = h;
        if (k < 0) return std::nullopt;
        r.comp[t] = k;
    }
    if (!is_valid(r)) return std::nullopt;
    return r;
}

// Delta_i : H -> (i/i), x |-> (x, x, id).
inline Functor diagonal_functor(const IsoCommaSquare& s) {
    if (!is_faithful(s.i)) throw NotFaithful("diagonal_functor: leg is not faithful");
    if (!same(s.i, s.u)) throw Mismatch("diagonal_functor: not a self iso-comma");
    auto id = identity_functor(s.i.dom);
    return induced_functor(s, id, id, identity_nat(s.i));
}

// ---------------------------------------------------------------------------
// Skeleton of (i/u) computed without materialising the full iso-comma.

class SkeletalComma {
public:
    SkeletalComma() = default;

    SkeletalComma(Functor i, Functor u) : i_(std::move(i)), u_(std::move(u)) {
        if (!same(i_.cod, u_.cod)) throw Mismatch("comma: legs have different codomains");
        const auto& A = *i_.dom;
        const auto& B = *u_.dom;
        const auto& C = *i_.cod;
        nB_ = B.objects();
        base_.assign(A.objects() * nB_ + 1, 0);
        for (int x = 0; x < A.objects(); ++x)
            for (int y = 0; y < nB_; ++y)
                base_[x * nB_ + y + 1] = base_[x * nB_ + y] + static_cast<int>(C.hom(i_.obj[x], u_.obj[y]).size());
        int n = base_.back();
        comp_of_.assign(n, -1);
        theta_a_.assign(n, -1);
        theta_b_.assign(n, -1);
        std::vector<int> qx, qy, qg;
        for (int x0 = 0; x0 < A.objects(); ++x0)
            for (int y0 = 0; y0 < nB_; ++y0)
                for (int g0 : C.hom(i_.obj[x0], u_.obj[y0])) {
                    int o0 = full_index(x0, y0, g0);
                    if (comp_of_[o0] >= 0) continue;
                    int k = static_cast<int>(rx_.size());
                    rx_.push_back(x0);
                    ry_.push_back(y0);
                    rg_.push_back(g0);
                    comp_of_[o0] = k;
                    theta_a_[o0] = A.id(x0);
                    theta_b_[o0] = B.id(y0);
                    qx.assign(1, x0);
                    qy.assign(1, y0);
                    qg.assign(1, g0);
                    for (size_t h = 0; h < qx.size(); ++h) {
                        int x = qx[h], y = qy[h], g = qg[h];
                        int o = full_index(x, y, g);
                        for (int a : A.out(x)) {
                            int ia = C.inv(i_.mor[a]);
                            for (int b : B.out(y)) {
                                int g2 = C.comp(u_.mor[b], g, ia);
                                int o2 = full_index(A.tgt(a), B.tgt(b), g2);
                                if (comp_of_[o2] >= 0) continue;
                                comp_of_[o2] = k;
                                theta_a_[o2] = A.comp(a, theta_a_[o]);
                                theta_b_[o2] = B.comp(b, theta_b_[o]);
                                qx.push_back(A.tgt(a));
                                qy.push_back(B.tgt(b));
                                qg.push_back(g2);
                            }
                        }
                    }
                }
        int nk = static_cast<int>(rx_.size());
        mbase_.assign(nk + 1, 0);
        lookup_.resize(nk);
        std::vector<int> src, ident, inv;
        for (int k = 0; k < nk; ++k) {
            auto ax = A.aut(rx_[k]);
            auto by = B.aut(ry_[k]);
            lookup_[k].assign(ax.size() * by.size(), -1);
            int g0 = rg_[k];
            for (int a : ax)
                for (int b : by)
                    if (C.comp(u_.mor[b], g0) == C.comp(g0, i_.mor[a])) {
                        lookup_[k][A.hom_pos(a) * by.size() + B.hom_pos(b)] = static_cast<int>(ma_.size());
                        ma_.push_back(a);
                        mb_.push_back(b);
                        src.push_back(k);
                    }
            mbase_[k + 1] = static_cast<int>(ma_.size());
        }
        for (int k = 0; k < nk; ++k) ident.push_back(local(k, A.id(rx_[k]), B.id(ry_[k])));
        for (size_t m = 0; m < ma_.size(); ++m) inv.push_back(local(src[m], A.inv(ma_[m]), B.inv(mb_[m])));
        apex_ = Groupoid::build(nk, src, src, ident, inv,
                                [&](int h, int f) { return local(src[f], A.comp(ma_[h], ma_[f]), B.comp(mb_[h], mb_[f])); });
        p_ = Functor{apex_, i_.dom, rx_, ma_};
        q_ = Functor{apex_, u_.dom, ry_, mb_};
        gamma_ = NatIso{compose(i_, p_), compose(u_, q_), rg_};
    }

    const Functor& i() const { return i_; }
    const Functor& u() const { return u_; }
    const GroupoidPtr& apex() const { return apex_; }
    const Functor& p() const { return p_; }
    const Functor& q() const { return q_; }
    const NatIso& gamma() const { return gamma_; }
    int components() const { return apex_->objects(); }
    int full_objects() const { return base_.back(); }
    std::tuple<int, int, int> rep(int k) const { return {rx_[k], ry_[k], rg_[k]}; }

    int component_of(int x, int y, int g) const { return comp_of_[full_index(x, y, g)]; }

    // Vertex-group morphism (a, b) at component k, or -1.
    int local(int k, int a, int b) const {
        const auto& by = *u_.dom;
        int nb = static_cast<int>(by.aut(ry_[k]).size());
        return lookup_[k][i_.dom->hom_pos(a) * nb + by.hom_pos(b)];
    }

    struct Induced {
        Functor c;
        NatIso z1;  // F1 => p c
        NatIso z2;  // F2 => q c
    };

    // Induced functor into the skeleton for a cone (F1, F2, delta : i F1 => u F2).
    // The 2-cells satisfy gamma c . i z1 = u z2 . delta.
    Induced induce(const Functor& f1, const Functor& f2, const NatIso& delta) const {
        if (!same(f1.cod, i_.dom) || !same(f2.cod, u_.dom) || !same(f1.dom, f2.dom))
            throw Mismatch("comma: cone does not match the cospan");
        const auto& T = *f1.dom;
        const auto& A = *i_.dom;
        const auto& B = *u_.dom;
        Induced r;
        r.c = Functor{f1.dom, apex_, std::vector<int>(T.objects()), std::vector<int>(T.morphisms())};
        std::vector<int> ta(T.objects()), tb(T.objects());
        for (int t = 0; t < T.objects(); ++t) {
            int o = full_index(f1.obj[t], f2.obj[t], delta.comp[t]);
            r.c.obj[t] = comp_of_[o];
            ta[t] = theta_a_[o];
            tb[t] = theta_b_[o];
        }
        for (int m = 0; m < T.morphisms(); ++m) {
            int s = T.src(m), t = T.tgt(m);
            int a = A.comp(A.inv(ta[t]), f1.mor[m], ta[s]);
            int b = B.comp(B.inv(tb[t]), f2.mor[m], tb[s]);
            int k = local(r.c.obj[s], a, b);
            if (k < 0) throw Mismatch("comma: cone is not natural");
            r.c.mor[m] = k;
        }
        r.z1 = NatIso{f1, compose(p_, r.c), std::vector<int>(T.objects())};
        r.z2 = NatIso{f2, compose(q_, r.c), std::vector<int>(T.objects())};
        for (int t = 0; t < T.objects(); ++t) {
            r.z1.comp[t] = A.inv(ta[t]);
            r.z2.comp[t] = B.inv(tb[t]);
        }
        return r;
    }

private:
    int full_index(int x, int y, int g) const { return base_[x * nB_ + y] + i_.cod->hom_pos(g); }

    Functor i_, u_;
    int nB_ = 0;
    std::vector<int> base_, comp_of_, theta_a_, theta_b_;
    std::vector<int> rx_, ry_, rg_;
    std::vector<int> ma_, mb_, mbase_;
    std::vector<std::vector<int>> lookup_;
    GroupoidPtr apex_;
    Functor p_, q_;
    NatIso gamma_;
};

// Whether gamma : i v => u j exhibits L as the iso-comma up to equivalence.
inline bool is_mackey_square(const Functor& i, const Functor& u, const Functor& v, const Functor& j,
                             const NatIso& gamma) {
    if (!same(i.cod, u.cod) || !same(v.cod, i.dom) || !same(j.cod, u.dom) || !same(v.dom, j.dom))
        throw Mismatch("is_mackey_square: ill-typed square");
    if (!is_valid(gamma) || !same(gamma.src, compose(i, v)) || !same(gamma.tgt, compose(u, j)))
        throw Mismatch("is_mackey_square: gamma has the wrong type");
    SkeletalComma sc(i, u);
    auto ind = sc.induce(v, j, gamma);
    return is_equivalence(ind.c);
}

}  // namespace mackey2
