#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "group.hpp"

namespace mackey2 {

class Groupoid;
using GroupoidPtr = std::shared_ptr<const Groupoid>;

// Finite groupoid on dense indices. Morphisms out of each object are kept sorted by
// target so hom-sets are contiguous; composition is a table per middle object.
class Groupoid {
public:
    template <class ComposeFn>
    static GroupoidPtr build(int objects, std::vector<int> src, std::vector<int> tgt, std::vector<int> ident,
                             std::vector<int> inverse, ComposeFn&& comp) {
        auto g = std::shared_ptr<Groupoid>(new Groupoid());
        g->n_ = objects;
        g->src_ = std::move(src);
        g->tgt_ = std::move(tgt);
        g->id_ = std::move(ident);
        g->inv_ = std::move(inverse);
        g->index();
        int nm = g->morphisms();
        g->tab_off_.assign(g->n_ + 1, 0);
        for (int y = 0; y < g->n_; ++y)
            g->tab_off_[y + 1] = g->tab_off_[y] + static_cast<int64_t>(g->in_size(y)) * g->out_size(y);
        g->tab_.assign(static_cast<size_t>(g->tab_off_[g->n_]), -1);
        for (int f = 0; f < nm; ++f) {
            int y = g->tgt_[f];
            int64_t base = g->tab_off_[y] + static_cast<int64_t>(g->pos_in_[f]) * g->out_size(y);
            for (int h : g->out(y)) g->tab_[base + g->pos_out_[h]] = comp(h, f);
        }
        g->rehash();
        return g;
    }

    static GroupoidPtr empty() {
        return build(0, {}, {}, {}, {}, [](int, int) { return -1; });
    }

    static GroupoidPtr from_group(const Group& grp) {
        int n = grp.order();
        std::vector<int> z(n, 0), inv(n);
        for (int a = 0; a < n; ++a) inv[a] = grp.inv(a);
        auto g = build(1, z, z, {grp.identity()}, inv, [&](int h, int f) { return grp.mul(h, f); });
        return g;
    }

    static GroupoidPtr point() { return from_group(Group()); }

    int objects() const { return n_; }
    int morphisms() const { return static_cast<int>(src_.size()); }
    int src(int m) const { return src_[m]; }
    int tgt(int m) const { return tgt_[m]; }
    int id(int x) const { return id_[x]; }
    int inv(int m) const { return inv_[m]; }
    // h o f, defined when tgt(f) == src(h)
    int comp(int h, int f) const {
        int y = tgt_[f];
        return tab_[tab_off_[y] + static_cast<int64_t>(pos_in_[f]) * out_size(y) + pos_out_[h]];
    }
    int comp(int h, int g, int f) const { return comp(h, comp(g, f)); }
    std::span<const int> out(int x) const {
        return {out_.data() + out_off_[x], static_cast<size_t>(out_off_[x + 1] - out_off_[x])};
    }
    std::span<const int> in(int y) const {
        return {in_.data() + in_off_[y], static_cast<size_t>(in_off_[y + 1] - in_off_[y])};
    }
    std::span<const int> hom(int x, int y) const {
        auto o = out(x);
        auto lo = std::lower_bound(o.begin(), o.end(), y, [&](int m, int t) { return tgt_[m] < t; });
        auto hi = std::upper_bound(lo, o.end(), y, [&](int t, int m) { return t < tgt_[m]; });
        return {o.data() + (lo - o.begin()), static_cast<size_t>(hi - lo)};
    }
    std::span<const int> aut(int x) const { return hom(x, x); }
    int out_size(int x) const { return out_off_[x + 1] - out_off_[x]; }
    int in_size(int y) const { return in_off_[y + 1] - in_off_[y]; }
    int pos_out(int m) const { return pos_out_[m]; }
    // position of m inside hom(src m, tgt m)
    int hom_pos(int m) const { return hom_pos_[m]; }
    uint64_t hash() const { return hash_; }

    bool same(const Groupoid& o) const {
        if (this == &o) return true;
        return hash_ == o.hash_ && n_ == o.n_ && src_ == o.src_ && tgt_ == o.tgt_ && id_ == o.id_ &&
               inv_ == o.inv_ && tab_ == o.tab_;
    }

    const std::vector<int>& sources() const { return src_; }
    const std::vector<int>& targets() const { return tgt_; }

    // Exhaustive check of the groupoid axioms.
    bool validate(std::string* why = nullptr) const {
        auto fail = [&](const std::string& s) {
            if (why) *why = s;
            return false;
        };
        int nm = morphisms();
        if (static_cast<int>(id_.size()) != n_ || static_cast<int>(inv_.size()) != nm ||
            static_cast<int>(tgt_.size()) != nm)
            return fail("array sizes disagree");
        for (int m = 0; m < nm; ++m)
            if (src_[m] < 0 || src_[m] >= n_ || tgt_[m] < 0 || tgt_[m] >= n_) return fail("endpoint out of range");
        for (auto v : tab_)
            if (v < 0 || v >= nm) return fail("composition table incomplete");
        for (int x = 0; x < n_; ++x) {
            int e = id_[x];
            if (e < 0 || e >= nm || src_[e] != x || tgt_[e] != x) return fail("bad identity");
        }
        for (int f = 0; f < nm; ++f) {
            if (comp(id_[tgt_[f]], f) != f || comp(f, id_[src_[f]]) != f) return fail("identity is not a unit");
            int g = inv_[f];
            if (g < 0 || g >= nm || src_[g] != tgt_[f] || tgt_[g] != src_[f]) return fail("bad inverse");
            if (comp(g, f) != id_[src_[f]] || comp(f, g) != id_[tgt_[f]]) return fail("inverse law fails");
            for (int g2 : out(tgt_[f])) {
                int gf = comp(g2, f);
                if (src_[gf] != src_[f] || tgt_[gf] != tgt_[g2]) return fail("composite has wrong endpoints");
                for (int h : out(tgt_[g2]))
                    if (comp(h, gf) != comp(comp(h, g2), f)) return fail("composition is not associative");
            }
        }
        return true;
    }

private:
    Groupoid() = default;

    void index() {
        int nm = morphisms();
        out_off_.assign(n_ + 1, 0);
        in_off_.assign(n_ + 1, 0);
        for (int m = 0; m < nm; ++m) {
            ++out_off_[src_[m] + 1];
            ++in_off_[tgt_[m] + 1];
        }
        for (int x = 0; x < n_; ++x) {
            out_off_[x + 1] += out_off_[x];
            in_off_[x + 1] += in_off_[x];
        }
        out_.assign(nm, 0);
        in_.assign(nm, 0);
        {
            auto o = out_off_, i = in_off_;
            for (int m = 0; m < nm; ++m) {
                out_[o[src_[m]]++] = m;
                in_[i[tgt_[m]]++] = m;
            }
        }
        for (int x = 0; x < n_; ++x)
            std::stable_sort(out_.begin() + out_off_[x], out_.begin() + out_off_[x + 1],
                             [&](int a, int b) { return tgt_[a] < tgt_[b]; });
        pos_out_.assign(nm, 0);
        pos_in_.assign(nm, 0);
        hom_pos_.assign(nm, 0);
        for (int x = 0; x < n_; ++x) {
            int start = out_off_[x];
            for (int k = out_off_[x]; k < out_off_[x + 1]; ++k) {
                int m = out_[k];
                if (k > out_off_[x] && tgt_[out_[k - 1]] != tgt_[m]) start = k;
                pos_out_[m] = k - out_off_[x];
                hom_pos_[m] = k - start;
            }
            for (int k = in_off_[x]; k < in_off_[x + 1]; ++k) pos_in_[in_[k]] = k - in_off_[x];
        }
    }

    void rehash() {
        uint64_t h = 1469598103934665603ull;
        auto mix = [&](int64_t v) {
            h ^= static_cast<uint64_t>(v);
            h *= 1099511628211ull;
        };
        mix(n_);
        for (int v : src_) mix(v);
        for (int v : tgt_) mix(v);
        for (int v : id_) mix(v);
        for (int v : inv_) mix(v);
        for (int v : tab_) mix(v);
        hash_ = h;
    }

    int n_ = 0;
    std::vector<int> src_, tgt_, id_, inv_;
    std::vector<int> out_, out_off_, in_, in_off_;
    std::vector<int> pos_out_, pos_in_, hom_pos_;
    std::vector<int> tab_;
    std::vector<int64_t> tab_off_;
    uint64_t hash_ = 0;
};

inline bool same(const GroupoidPtr& a, const GroupoidPtr& b) { return a == b || a->same(*b); }

// ---------------------------------------------------------------------------
// Functors and natural isomorphisms

struct Functor {
    GroupoidPtr dom, cod;
    std::vector<int> obj, mor;
};

inline Functor identity_functor(const GroupoidPtr& g) {
    Functor f{g, g, std::vector<int>(g->objects()), std::vector<int>(g->morphisms())};
    for (int x = 0; x < g->objects(); ++x) f.obj[x] = x;
    for (int m = 0; m < g->morphisms(); ++m) f.mor[m] = m;
    return f;
}

// g o f
inline Functor compose(const Functor& g, const Functor& f) {
    if (!same(f.cod, g.dom)) throw Mismatch("functor composition: codomain/domain mismatch");
    Functor h{f.dom, g.cod, std::vector<int>(f.obj.size()), std::vector<int>(f.mor.size())};
    for (size_t x = 0; x < f.obj.size(); ++x) h.obj[x] = g.obj[f.obj[x]];
    for (size_t m = 0; m < f.mor.size(); ++m) h.mor[m] = g.mor[f.mor[m]];
    return h;
}

inline Functor compose(const Functor& h, const Functor& g, const Functor& f) { return compose(h, compose(g, f)); }

inline bool same(const Functor& a, const Functor& b) {
    return a.obj == b.obj && a.mor == b.mor && same(a.dom, b.dom) && same(a.cod, b.cod);
}

inline bool is_identity(const Functor& f) {
    if (!same(f.dom, f.cod)) return false;
    for (size_t x = 0; x < f.obj.size(); ++x)
        if (f.obj[x] != static_cast<int>(x)) return false;
    for (size_t m = 0; m < f.mor.size(); ++m)
        if (f.mor[m] != static_cast<int>(m)) return false;
    return true;
}

// Exhaustive functoriality check.
inline bool is_valid(const Functor& f) {
    const auto& a = *f.dom;
    const auto& b = *f.cod;
    if (static_cast<int>(f.obj.size()) != a.objects() || static_cast<int>(f.mor.size()) != a.morphisms())
        return false;
    for (int x : f.obj)
        if (x < 0 || x >= b.objects()) return false;
    for (int m = 0; m < a.morphisms(); ++m) {
        int fm = f.mor[m];
        if (fm < 0 || fm >= b.morphisms()) return false;
        if (b.src(fm) != f.obj[a.src(m)] || b.tgt(fm) != f.obj[a.tgt(m)]) return false;
    }
    for (int x = 0; x < a.objects(); ++x)
        if (f.mor[a.id(x)] != b.id(f.obj[x])) return false;
    for (int m = 0; m < a.morphisms(); ++m)
        for (int h : a.out(a.tgt(m)))
            if (f.mor[a.comp(h, m)] != b.comp(f.mor[h], f.mor[m])) return false;
    return true;
}

inline bool is_faithful(const Functor& f) {
    const auto& a = *f.dom;
    std::vector<std::pair<int, int>> seen;
    for (int x = 0; x < a.objects(); ++x) {
        seen.clear();
        for (int m : a.out(x)) seen.emplace_back(a.tgt(m), f.mor[m]);
        std::sort(seen.begin(), seen.end());
        if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) return false;
    }
    return true;
}

inline bool is_full(const Functor& f) {
    const auto& a = *f.dom;
    const auto& b = *f.cod;
    std::vector<int> img;
    for (int x = 0; x < a.objects(); ++x)
        for (int y = 0; y < a.objects(); ++y) {
            img.clear();
            for (int m : a.hom(x, y)) img.push_back(f.mor[m]);
            std::sort(img.begin(), img.end());
            img.erase(std::unique(img.begin(), img.end()), img.end());
            if (img.size() != b.hom(f.obj[x], f.obj[y]).size()) return false;
        }
    return true;
}

struct NatIso {
    Functor src, tgt;
    std::vector<int> comp;  // comp[x] : src(x) -> tgt(x)
};

inline NatIso identity_nat(const Functor& f) {
    NatIso n{f, f, std::vector<int>(f.obj.size())};
    for (size_t x = 0; x < f.obj.size(); ++x) n.comp[x] = f.cod->id(f.obj[x]);
    return n;
}

inline bool is_valid(const NatIso& n) {
    const auto& a = *n.src.dom;
    const auto& c = *n.src.cod;
    if (!same(n.src.dom, n.tgt.dom) || !same(n.src.cod, n.tgt.cod)) return false;
    if (static_cast<int>(n.comp.size()) != a.objects()) return false;
    for (int x = 0; x < a.objects(); ++x) {
        int k = n.comp[x];
        if (k < 0 || k >= c.morphisms() || c.src(k) != n.src.obj[x] || c.tgt(k) != n.tgt.obj[x]) return false;
    }
    for (int m = 0; m < a.morphisms(); ++m)
        if (c.comp(n.tgt.mor[m], n.comp[a.src(m)]) != c.comp(n.comp[a.tgt(m)], n.src.mor[m])) return false;
    return true;
}

// b o a (vertical)
inline NatIso vcomp(const NatIso& b, const NatIso& a) {
    NatIso r{a.src, b.tgt, std::vector<int>(a.comp.size())};
    const auto& c = *a.src.cod;
    for (size_t x = 0; x < a.comp.size(); ++x) r.comp[x] = c.comp(b.comp[x], a.comp[x]);
    return r;
}

inline NatIso vcomp(const NatIso& c, const NatIso& b, const NatIso& a) { return vcomp(c, vcomp(b, a)); }

inline NatIso inverse(const NatIso& a) {
    NatIso r{a.tgt, a.src, a.comp};
    for (auto& k : r.comp) k = a.src.cod->inv(k);
    return r;
}

// h a
inline NatIso whisker(const Functor& h, const NatIso& a) {
    NatIso r{compose(h, a.src), compose(h, a.tgt), a.comp};
    for (auto& k : r.comp) k = h.mor[k];
    return r;
}

// a k
inline NatIso whisker(const NatIso& a, const Functor& k) {
    if (!same(k.cod, a.src.dom)) throw Mismatch("whiskering: codomain/domain mismatch");
    NatIso r{compose(a.src, k), compose(a.tgt, k), std::vector<int>(k.obj.size())};
    for (size_t x = 0; x < k.obj.size(); ++x) r.comp[x] = a.comp[k.obj[x]];
    return r;
}

inline bool same_components(const NatIso& a, const NatIso& b) { return a.comp == b.comp; }

// ---------------------------------------------------------------------------
// Connected components, skeleta, equivalences

struct Components {
    std::vector<int> comp_of;  // object -> component
    std::vector<int> rep;      // component -> smallest object
    std::vector<int> theta;    // object x -> chosen morphism rep(x) -> x
    std::vector<std::vector<int>> blocks;
    std::vector<int> vertex_order;
    int count() const { return static_cast<int>(rep.size()); }
};

inline Components components(const Groupoid& g) {
    Components c;
    int n = g.objects();
    c.comp_of.assign(n, -1);
    c.theta.assign(n, -1);
    for (int x0 = 0; x0 < n; ++x0) {
        if (c.comp_of[x0] >= 0) continue;
        int k = c.count();
        c.rep.push_back(x0);
        c.blocks.emplace_back();
        c.vertex_order.push_back(static_cast<int>(g.aut(x0).size()));
        c.comp_of[x0] = k;
        c.theta[x0] = g.id(x0);
        std::vector<int> queue{x0};
        for (size_t q = 0; q < queue.size(); ++q) {
            int x = queue[q];
            c.blocks[k].push_back(x);
            for (int m : g.out(x)) {
                int y = g.tgt(m);
                if (c.comp_of[y] >= 0) continue;
                c.comp_of[y] = k;
                c.theta[y] = g.comp(m, c.theta[x]);
                queue.push_back(y);
            }
        }
        std::sort(c.blocks[k].begin(), c.blocks[k].end());
    }
    return c;
}

inline bool is_essentially_surjective(const Functor& f) {
    auto c = components(*f.cod);
    std::vector<char> hit(c.count(), 0);
    for (int y : f.obj) hit[c.comp_of[y]] = 1;
    return std::all_of(hit.begin(), hit.end(), [](char h) { return h != 0; });
}

inline bool is_equivalence(const Functor& f) {
    return is_faithful(f) && is_full(f) && is_essentially_surjective(f);
}

// Vertex group of x as a group; element k is aut(x)[k].
inline Group vertex_group(const Groupoid& g, int x) {
    auto a = g.aut(x);
    int n = static_cast<int>(a.size());
    std::vector<int> t(n * n);
    for (int p = 0; p < n; ++p)
        for (int q = 0; q < n; ++q) t[p * n + q] = g.hom_pos(g.comp(a[p], a[q]));
    return Group(n, std::move(t), {}, "Aut");
}

struct Skeleton {
    GroupoidPtr skel;
    Functor incl;    // skel -> G
    Functor retr;    // G -> skel, retr o incl = Id
    NatIso counit;   // incl o retr => Id_G
};

inline Skeleton skeletalize(const GroupoidPtr& g) {
    auto c = components(*g);
    int k = c.count();
    std::vector<int> src, inv, ident, base(k + 1, 0), back;
    for (int j = 0; j < k; ++j) base[j + 1] = base[j] + static_cast<int>(g->aut(c.rep[j]).size());
    src.resize(base[k]);
    back.resize(base[k]);
    for (int j = 0; j < k; ++j) {
        auto a = g->aut(c.rep[j]);
        for (size_t p = 0; p < a.size(); ++p) {
            src[base[j] + p] = j;
            back[base[j] + p] = a[p];
        }
    }
    auto local = [&](int m) { return base[c.comp_of[g->src(m)]] + g->hom_pos(m); };
    inv.resize(base[k]);
    for (int m = 0; m < base[k]; ++m) inv[m] = local(g->inv(back[m]));
    for (int j = 0; j < k; ++j) ident.push_back(local(g->id(c.rep[j])));
    auto s = Groupoid::build(k, src, src, ident, inv, [&](int h, int f) { return local(g->comp(back[h], back[f])); });
    Skeleton out;
    out.skel = s;
    out.incl = Functor{s, g, c.rep, back};
    out.retr = Functor{g, s, c.comp_of, std::vector<int>(g->morphisms())};
    for (int m = 0; m < g->morphisms(); ++m) {
        int x = g->src(m), y = g->tgt(m);
        out.retr.mor[m] = local(g->comp(g->inv(c.theta[y]), m, c.theta[x]));
    }
    out.counit = NatIso{compose(out.incl, out.retr), identity_functor(g), c.theta};
    return out;
}

struct Equivalence {
    Functor f;       // G -> H
    Functor g;       // H -> G
    NatIso unit;     // Id_G => g f
    NatIso counit;   // f g => Id_H
};

namespace detail {

// Functor G -> H that sends each component of G to a chosen component of H through a
// vertex-group isomorphism. phi[k] maps aut(repG[k]) positions to aut(repH[match[k]]) positions.
inline Functor component_functor(const GroupoidPtr& G, const Components& cg, const GroupoidPtr& H,
                                 const Components& ch, const std::vector<int>& match,
                                 const std::vector<std::vector<int>>& phi) {
    Functor f{G, H, std::vector<int>(G->objects()), std::vector<int>(G->morphisms())};
    for (int x = 0; x < G->objects(); ++x) f.obj[x] = ch.rep[match[cg.comp_of[x]]];
    for (int m = 0; m < G->morphisms(); ++m) {
        int x = G->src(m), y = G->tgt(m), k = cg.comp_of[x];
        int loop = G->comp(G->inv(cg.theta[y]), m, cg.theta[x]);
        f.mor[m] = H->aut(ch.rep[match[k]])[phi[k][G->hom_pos(loop)]];
    }
    return f;
}

}  // namespace detail

inline std::optional<Equivalence> are_equivalent(const GroupoidPtr& G, const GroupoidPtr& H) {
    auto cg = components(*G);
    auto ch = components(*H);
    if (cg.count() != ch.count()) return std::nullopt;
    int k = cg.count();
    std::vector<int> match(k, -1), back(k, -1);
    std::vector<std::vector<int>> phi(k), phinv(k);
    std::vector<Group> vh;
    for (int j = 0; j < k; ++j) vh.push_back(vertex_group(*H, ch.rep[j]));
    for (int j = 0; j < k; ++j) {
        Group vg = vertex_group(*G, cg.rep[j]);
        for (int l = 0; l < k && match[j] < 0; ++l) {
            if (back[l] >= 0 || vh[l].order() != vg.order()) continue;
            auto iso = find_isomorphism(vg, vh[l]);
            if (!iso) continue;
            match[j] = l;
            back[l] = j;
            phi[j] = *iso;
            phinv[j].assign(iso->size(), 0);
            for (size_t p = 0; p < iso->size(); ++p) phinv[j][(*iso)[p]] = static_cast<int>(p);
        }
        if (match[j] < 0) return std::nullopt;
    }
    std::vector<std::vector<int>> phiH(k);
    for (int l = 0; l < k; ++l) phiH[l] = phinv[back[l]];
    Equivalence e;
    e.f = detail::component_functor(G, cg, H, ch, match, phi);
    e.g = detail::component_functor(H, ch, G, cg, back, phiH);
    e.unit = NatIso{identity_functor(G), compose(e.g, e.f), std::vector<int>(G->objects())};
    for (int x = 0; x < G->objects(); ++x) e.unit.comp[x] = G->inv(cg.theta[x]);
    e.counit = NatIso{compose(e.f, e.g), identity_functor(H), ch.theta};
    return e;
}

struct QuasiInverse {
    Functor g;      // B -> A
    NatIso unit;    // Id_A => g F
    NatIso counit;  // F g => Id_B
};

// Quasi-inverse of an equivalence F: A -> B.
inline std::optional<QuasiInverse> quasi_inverse(const Functor& F) {
    if (!is_equivalence(F)) return std::nullopt;
    const auto& A = *F.dom;
    const auto& B = *F.cod;
    auto cb = components(B);
    std::vector<int> chosen(cb.count(), -1);
    for (int x = 0; x < A.objects(); ++x) {
        int k = cb.comp_of[F.obj[x]];
        if (chosen[k] < 0) chosen[k] = x;
    }
    // e_y : F(chosen) -> y
    std::vector<int> e(B.objects());
    for (int y = 0; y < B.objects(); ++y) {
        int k = cb.comp_of[y];
        int fy = F.obj[chosen[k]];
        e[y] = B.comp(cb.theta[y], B.inv(cb.theta[fy]));
    }
    std::vector<int> pre(B.morphisms(), -1);
    for (int k = 0; k < cb.count(); ++k)
        for (int m : A.aut(chosen[k])) pre[F.mor[m]] = m;
    QuasiInverse q;
    q.g = Functor{F.cod, F.dom, std::vector<int>(B.objects()), std::vector<int>(B.morphisms())};
    for (int y = 0; y < B.objects(); ++y) q.g.obj[y] = chosen[cb.comp_of[y]];
    for (int n = 0; n < B.morphisms(); ++n) {
        int y = B.src(n), y2 = B.tgt(n);
        q.g.mor[n] = pre[B.comp(B.inv(e[y2]), n, e[y])];
    }
    q.counit = NatIso{compose(F, q.g), identity_functor(F.cod), e};
    q.unit = NatIso{identity_functor(F.dom), compose(q.g, F), std::vector<int>(A.objects())};
    for (int a = 0; a < A.objects(); ++a) {
        int target = B.inv(e[F.obj[a]]);
        int x = q.g.obj[F.obj[a]];
        for (int m : A.hom(a, x))
            if (F.mor[m] == target) q.unit.comp[a] = m;
    }
    return q;
}

// ---------------------------------------------------------------------------
// Coproducts

struct Coproduct {
    GroupoidPtr sum;
    std::vector<Functor> incl;
    std::vector<int> obj_off, mor_off;
};

inline Coproduct coproduct(const std::vector<GroupoidPtr>& parts) {
    Coproduct c;
    c.obj_off.push_back(0);
    c.mor_off.push_back(0);
    for (const auto& p : parts) {
        c.obj_off.push_back(c.obj_off.back() + p->objects());
        c.mor_off.push_back(c.mor_off.back() + p->morphisms());
    }
    std::vector<int> src, tgt, ident, inv, part_of;
    for (size_t k = 0; k < parts.size(); ++k) {
        const auto& p = *parts[k];
        for (int m = 0; m < p.morphisms(); ++m) {
            src.push_back(p.src(m) + c.obj_off[k]);
            tgt.push_back(p.tgt(m) + c.obj_off[k]);
            inv.push_back(p.inv(m) + c.mor_off[k]);
            part_of.push_back(static_cast<int>(k));
        }
        for (int x = 0; x < p.objects(); ++x) ident.push_back(p.id(x) + c.mor_off[k]);
    }
    c.sum = Groupoid::build(c.obj_off.back(), src, tgt, ident, inv, [&](int h, int f) {
        int k = part_of[f];
        return parts[k]->comp(h - c.mor_off[k], f - c.mor_off[k]) + c.mor_off[k];
    });
    for (size_t k = 0; k < parts.size(); ++k) {
        Functor f{parts[k], c.sum, std::vector<int>(parts[k]->objects()), std::vector<int>(parts[k]->morphisms())};
        for (int x = 0; x < parts[k]->objects(); ++x) f.obj[x] = x + c.obj_off[k];
        for (int m = 0; m < parts[k]->morphisms(); ++m) f.mor[m] = m + c.mor_off[k];
        c.incl.push_back(std::move(f));
    }
    return c;
}

// [F_0, F_1, ...] : sum -> C
inline Functor copair(const Coproduct& c, const std::vector<Functor>& fs, const GroupoidPtr& cod) {
    Functor r{c.sum, cod, std::vector<int>(c.sum->objects()), std::vector<int>(c.sum->morphisms())};
    for (size_t k = 0; k < fs.size(); ++k) {
        if (!same(fs[k].cod, cod)) throw Mismatch("copair: codomain mismatch");
        for (size_t x = 0; x < fs[k].obj.size(); ++x) r.obj[x + c.obj_off[k]] = fs[k].obj[x];
        for (size_t m = 0; m < fs[k].mor.size(); ++m) r.mor[m + c.mor_off[k]] = fs[k].mor[m];
    }
    return r;
}

inline NatIso copair(const Coproduct& c, const std::vector<NatIso>& ns, const GroupoidPtr& cod) {
    std::vector<Functor> s, t;
    for (const auto& n : ns) {
        s.push_back(n.src);
        t.push_back(n.tgt);
    }
    NatIso r{copair(c, s, cod), copair(c, t, cod), std::vector<int>(c.sum->objects())};
    for (size_t k = 0; k < ns.size(); ++k)
        for (size_t x = 0; x < ns[k].comp.size(); ++x) r.comp[x + c.obj_off[k]] = ns[k].comp[x];
    return r;
}

// The unique functor to the one-object trivial groupoid.
inline Functor to_point(const GroupoidPtr& g, const GroupoidPtr& pt) {
    return Functor{g, pt, std::vector<int>(g->objects(), 0), std::vector<int>(g->morphisms(), pt->id(0))};
}

// Functor between one-object groupoids induced by a group homomorphism.
inline Functor group_hom(const GroupoidPtr& a, const GroupoidPtr& b, std::vector<int> images) {
    Functor f{a, b, std::vector<int>(a->objects(), 0), std::move(images)};
    if (!is_valid(f)) throw Mismatch("not a homomorphism");
    return f;
}

// A group with its one-object groupoid.
struct GroupGroupoid {
    Group group;
    GroupoidPtr gpd;
};

inline GroupGroupoid make_group_groupoid(const Group& g) { return {g, Groupoid::from_group(g)}; }

// One-object groupoid of a subgroup H <= G with its inclusion.
struct SubgroupInclusion {
    Subgroup h;
    Group group;
    GroupoidPtr gpd;
    Functor incl;
};

inline SubgroupInclusion subgroup_inclusion(const Group& g, const GroupoidPtr& gg, const Subgroup& h,
                                            std::string label = "H") {
    SubgroupInclusion s{h, subgroup_group(g, h, std::move(label)), nullptr, {}};
    s.gpd = Groupoid::from_group(s.group);
    s.incl = Functor{s.gpd, gg, {0}, h};
    return s;
}

}  // namespace mackey2
