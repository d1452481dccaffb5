#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

#include "catalog.hpp"
#include "spanhat.hpp"

namespace mackey2 {

// ---------------------------------------------------------------------------
// Conjugacy classes of subgroups and of pairs (H, a) with a centralising H.

struct SubgroupClass {
    Subgroup rep;                // lexicographically smallest member
    std::vector<Subgroup> orbit;
    std::string label;
};

struct SubgroupIndex {
    std::vector<SubgroupClass> classes;
    std::map<Subgroup, std::pair<int, int>> where;  // S -> (class, t) with t S t^-1 = rep

    int class_of(const Subgroup& s) const {
        auto it = where.find(s);
        if (it == where.end()) throw Mismatch("class_of: not a subgroup");
        return it->second.first;
    }
    int conjugator(const Subgroup& s) const { return where.at(s).second; }
    int size() const { return static_cast<int>(classes.size()); }
};

namespace detail {

inline std::string subgroup_type(const Group& g, const Subgroup& h) {
    if (h.size() == 1) return "1";
    return iso_type_name(subgroup_group(g, h));
}

inline std::string generator_names(const Group& g, const Subgroup& h) {
    auto sg = subgroup_group(g, h);
    std::string s = "<";
    auto gens = generating_set(sg);
    for (size_t k = 0; k < gens.size(); ++k) s += (k ? "," : "") + g.name(h[gens[k]]);
    return s + ">";
}

}  // namespace detail

// Classes ordered by (order, representative).
inline SubgroupIndex subgroup_index(const Group& g) {
    SubgroupIndex idx;
    for (const auto& s : all_subgroups(g)) {
        if (idx.where.count(s)) continue;
        int c = idx.size();
        SubgroupClass sc{s, {}, ""};
        for (int t = 0; t < g.order(); ++t) {
            // t^-1 s t lies in the class; t (t^-1 s t) t^-1 = s
            auto x = conjugate(g, g.inv(t), s);
            if (idx.where.emplace(x, std::pair{c, t}).second) sc.orbit.push_back(x);
        }
        std::sort(sc.orbit.begin(), sc.orbit.end());
        idx.classes.push_back(std::move(sc));
    }
    std::map<std::string, int> count;
    for (auto& c : idx.classes) ++count[detail::subgroup_type(g, c.rep)];
    for (auto& c : idx.classes) {
        auto t = detail::subgroup_type(g, c.rep);
        if (c.rep.size() == static_cast<size_t>(g.order()) && !g.label().empty()) t = g.label();
        c.label = count[detail::subgroup_type(g, c.rep)] > 1 ? t + detail::generator_names(g, c.rep) : t;
    }
    return idx;
}

inline std::vector<SubgroupClass> subgroup_classes(const Group& g) { return subgroup_index(g).classes; }

struct PairClass {
    Subgroup h;
    int a = 0;
    int subgroup_class = 0;
    std::string label;
};

struct PairIndex {
    SubgroupIndex subs;
    std::vector<PairClass> classes;
    std::vector<std::vector<int>> by_element;  // [subgroup class][a] -> pair class, for the class rep

    int class_of(const Group& g, const Subgroup& h, int a) const {
        auto [c, t] = subs.where.at(h);
        int k = by_element[c][g.conj(t, a)];
        if (k < 0) throw Mismatch("pair class: element does not centralise the subgroup");
        return k;
    }
    int size() const { return static_cast<int>(classes.size()); }
};

inline PairIndex pair_index(const Group& g) {
    PairIndex p;
    p.subs = subgroup_index(g);
    for (int c = 0; c < p.subs.size(); ++c) {
        const auto& h = p.subs.classes[c].rep;
        auto cent = centralizer(g, h);
        auto norm = normalizer(g, h);
        std::vector<int> row(g.order(), -1);
        for (int a : cent) {
            if (row[a] >= 0) continue;
            int k = p.size();
            for (int t : norm) row[g.conj(t, a)] = k;
            p.classes.push_back(PairClass{h, a, c, "[" + p.subs.classes[c].label + "," + g.name(a) + "]"});
        }
        p.by_element.push_back(std::move(row));
    }
    return p;
}

inline std::vector<PairClass> pair_classes(const Group& g) { return pair_index(g).classes; }

// ---------------------------------------------------------------------------
// Rings with a finite Z-basis, and their elements.

struct Ring {
    std::string name;  // e.g. "B(S3)", "xB(S3)", "End(Id_S3)"
    std::vector<std::string> basis;
    std::vector<std::vector<std::vector<long>>> constants;  // e_i e_j = sum_k c[i][j][k] e_k
    int unit = 0;

    int rank() const { return static_cast<int>(basis.size()); }
};

struct RingElement {
    std::string ring;
    std::vector<mpq_class> c;
};

inline RingElement basis_element(const Ring& r, int k) {
    RingElement x{r.name, std::vector<mpq_class>(r.rank())};
    x.c[k] = 1;
    return x;
}

inline RingElement one(const Ring& r) { return basis_element(r, r.unit); }
inline RingElement zero(const Ring& r) { return RingElement{r.name, std::vector<mpq_class>(r.rank())}; }

inline void check_member(const Ring& r, const RingElement& x) {
    if (x.ring != r.name || static_cast<int>(x.c.size()) != r.rank())
        throw Mismatch("element of " + x.ring + " used in " + r.name);
}

inline RingElement multiply(const Ring& r, const RingElement& x, const RingElement& y) {
    check_member(r, x);
    check_member(r, y);
    auto z = zero(r);
    for (int i = 0; i < r.rank(); ++i) {
        if (x.c[i] == 0) continue;
        for (int j = 0; j < r.rank(); ++j) {
            if (y.c[j] == 0) continue;
            mpq_class s = x.c[i] * y.c[j];
            const auto& row = r.constants[i][j];
            for (int k = 0; k < r.rank(); ++k)
                if (row[k]) z.c[k] += s * row[k];
        }
    }
    return z;
}

inline RingElement operator+(const RingElement& x, const RingElement& y) {
    if (x.ring != y.ring) throw Mismatch("sum of elements of different rings");
    auto z = x;
    for (size_t k = 0; k < z.c.size(); ++k) z.c[k] += y.c[k];
    return z;
}

inline RingElement operator-(const RingElement& x, const RingElement& y) {
    if (x.ring != y.ring) throw Mismatch("difference of elements of different rings");
    auto z = x;
    for (size_t k = 0; k < z.c.size(); ++k) z.c[k] -= y.c[k];
    return z;
}

inline RingElement operator*(const mpq_class& s, const RingElement& x) {
    auto z = x;
    for (auto& v : z.c) v *= s;
    return z;
}

inline bool operator==(const RingElement& x, const RingElement& y) { return x.ring == y.ring && x.c == y.c; }

inline bool is_integral(const RingElement& x) {
    for (const auto& v : x.c)
        if (v.get_den() != 1) return false;
    return true;
}

inline bool is_zero(const RingElement& x) {
    for (const auto& v : x.c)
        if (v != 0) return false;
    return true;
}

inline bool is_commutative(const Ring& r) {
    for (int i = 0; i < r.rank(); ++i)
        for (int j = 0; j < i; ++j)
            if (r.constants[i][j] != r.constants[j][i]) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Burnside ring: [G/K][G/H] = sum over K\G/H of [G/(K cap gHg^-1)].

inline Ring burnside_ring(const Group& g, const SubgroupIndex& idx) {
    Ring r;
    r.name = "B(" + g.label() + ")";
    int n = idx.size();
    for (const auto& c : idx.classes) r.basis.push_back("[" + g.label() + "/" + c.label + "]");
    r.constants.assign(n, std::vector<std::vector<long>>(n, std::vector<long>(n, 0)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const auto& k = idx.classes[i].rep;
            const auto& h = idx.classes[j].rep;
            for (int x : double_coset_reps(g, k, h)) ++r.constants[i][j][idx.class_of(intersect(k, conjugate(g, x, h)))];
        }
    r.unit = n - 1;
    return r;
}

inline Ring burnside_ring(const Group& g) { return burnside_ring(g, subgroup_index(g)); }

// Crossed Burnside ring: [K,b][H,a] = sum over K\G/H of [K cap gHg^-1, b gag^-1].
inline Ring crossed_burnside_ring(const Group& g, const PairIndex& idx) {
    Ring r;
    r.name = "xB(" + g.label() + ")";
    int n = idx.size();
    for (const auto& c : idx.classes) r.basis.push_back(c.label);
    r.constants.assign(n, std::vector<std::vector<long>>(n, std::vector<long>(n, 0)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const auto& [k, b, ci, li] = idx.classes[i];
            const auto& [h, a, cj, lj] = idx.classes[j];
            for (int x : double_coset_reps(g, k, h)) {
                auto l = intersect(k, conjugate(g, x, h));
                ++r.constants[i][j][idx.class_of(g, l, g.mul(b, g.conj(x, a)))];
            }
        }
    // [G, e]
    r.unit = idx.class_of(g, whole(g), g.identity());
    return r;
}

inline Ring crossed_burnside_ring(const Group& g) { return crossed_burnside_ring(g, pair_index(g)); }

inline RingElement burnside_product(const Ring& r, const RingElement& x, const RingElement& y) {
    if (r.name.rfind("B(", 0) != 0) throw Mismatch("burnside_product: " + r.name + " is not a Burnside ring");
    return multiply(r, x, y);
}

inline RingElement crossed_product(const Ring& r, const RingElement& x, const RingElement& y) {
    if (r.name.rfind("xB(", 0) != 0) throw Mismatch("crossed_product: " + r.name + " is not a crossed Burnside ring");
    return multiply(r, x, y);
}

// pi([H,a]) = [G/H], iota([G/H]) = [H,e].
inline RingElement pi(const Ring& b, const PairIndex& idx, const RingElement& x) {
    if (static_cast<int>(x.c.size()) != idx.size()) throw Mismatch("pi: not an element of the crossed ring");
    auto y = zero(b);
    for (int k = 0; k < idx.size(); ++k) y.c[idx.classes[k].subgroup_class] += x.c[k];
    return y;
}

inline RingElement iota(const Ring& xb, const Group& g, const PairIndex& idx, const RingElement& x) {
    if (static_cast<int>(x.c.size()) != idx.subs.size()) throw Mismatch("iota: not an element of the Burnside ring");
    auto y = zero(xb);
    for (int k = 0; k < idx.subs.size(); ++k) y.c[idx.class_of(g, idx.subs.classes[k].rep, g.identity())] += x.c[k];
    return y;
}

// ---------------------------------------------------------------------------
// The bicategorical side: endomorphisms of Id_G and of (1 <- G = G).

// sigma^c(H, a): middle G <- H -> G (inclusions), up [incl, id, id], down [incl, gamma_a, id].
inline DoubleSpanTwoCell sigma_c(const Group& g, const GroupoidPtr& gg, const Subgroup& h, int a) {
    for (int x : h)
        if (g.mul(a, x) != g.mul(x, a)) throw Mismatch("sigma_c: element does not centralise the subgroup");
    auto inc = subgroup_inclusion(g, gg, h).incl;
    auto id = identity_span(gg);
    auto mid = make_span(inc, inc);
    auto one = identity_nat(inc);
    SpanRep up{mid, id, inc, one, one};
    SpanRep down{mid, id, inc, NatIso{inc, inc, {a}}, one};
    return {id, id, mid, up, down};
}

// The 1-cell 1 <- G = G.
inline Span point_span(const GroupoidPtr& gg) { return make_span(to_point(gg, Groupoid::point()), identity_functor(gg)); }

// sigma([G/H]) in End(1 <- G = G): middle 1 <- H -> G with both reps [incl, id, id].
inline DoubleSpanTwoCell sigma_b(const Group& g, const GroupoidPtr& gg, const Span& t, const Subgroup& h) {
    auto inc = subgroup_inclusion(g, gg, h).incl;
    auto mid = make_span(to_point(inc.dom, t.left), inc);
    SpanRep r{mid, t, inc, identity_nat(mid.u), identity_nat(inc)};
    return {t, t, mid, r, r};
}

// phi: whiskering an endomorphism of Id_G with 1 <- G = G.
inline DoubleSpanTwoCell phi(const DoubleSpanTwoCell& x, const Span& t) {
    auto c = make_cell(whisker(x, t), comp(leaf(x.src), leaf(t)), comp(leaf(x.tgt), leaf(t)));
    return reframe(c, leaf(t), leaf(t)).t;
}

// psi: (R, b, a, beta, alpha) |-> (G <-k- R -k-> G, up [b, beta^-1, beta], down [a, alpha^-1, alpha]),
// where k is the right leg of the middle and beta, alpha the right 2-cells of the two reps.
inline DoubleSpanTwoCell psi(const DoubleSpanTwoCell& x, const GroupoidPtr& gg) {
    auto k = x.mid.i;
    if (!same(k.cod, gg)) throw Mismatch("psi: not an endomorphism of 1 <- G = G");
    auto id = identity_span(gg);
    auto mid = make_span(k, k);
    SpanRep up{mid, id, x.up.a, inverse(x.up.a2), x.up.a2};
    SpanRep down{mid, id, x.down.a, inverse(x.down.a2), x.down.a2};
    return {id, id, mid, up, down};
}

// Class of each component of a 1-cell 1 -> G: the image of its vertex group.
inline std::vector<long> classify_one_cell(const Span& x, const SubgroupIndex& idx) {
    std::vector<long> v(idx.size(), 0);
    auto comps = components(*x.middle);
    for (int c = 0; c < comps.count(); ++c) {
        Subgroup s;
        for (int m : x.middle->aut(comps.rep[c])) s.push_back(x.i.mor[m]);
        std::sort(s.begin(), s.end());
        ++v[idx.class_of(s)];
    }
    return v;
}

// Decomposition of an endomorphism of Id_G into the sigma^c basis.
inline std::vector<long> decompose_endomorphism(const DoubleSpanTwoCell& t, const Group& g, const PairIndex& idx) {
    std::vector<long> v(idx.size(), 0);
    for (const auto& [h, a] : monodromy_classes(t)) ++v[idx.class_of(g, h, a)];
    return v;
}

// Decomposition of an endomorphism of 1 <- G = G into the sigma basis.
inline std::vector<long> decompose_point_endomorphism(const DoubleSpanTwoCell& t, const SubgroupIndex& idx) {
    return classify_one_cell(t.mid, idx);
}

// Sum of basis cells with multiplicities.
inline DoubleSpanTwoCell basis_sum(const std::vector<DoubleSpanTwoCell>& basis, const std::vector<long>& v,
                                   const Span& src, const Span& tgt) {
    auto acc = zero_cell(src, tgt);
    for (size_t k = 0; k < v.size(); ++k)
        for (long m = 0; m < v[k]; ++m) acc = add(acc, basis[k]);
    return acc;
}

struct EndRing {
    Ring ring;                                // structure constants from vertical composition
    std::vector<DoubleSpanTwoCell> cells;     // sigma^c of each pair class
    bool reduces = true;                      // every product equals its basis decomposition
    bool agrees = true;                       // table equals the crossed Burnside table
    bool horizontal_agrees = true;            // horizontal composition gives the same table
};

inline EndRing end_ring(const Group& g, const GroupoidPtr& gg, const PairIndex& idx, bool horizontal = true) {
    EndRing e;
    int n = idx.size();
    for (const auto& p : idx.classes) e.cells.push_back(sigma_c(g, gg, p.h, p.a));
    e.ring.name = "End(Id_" + g.label() + ")";
    for (const auto& p : idx.classes) e.ring.basis.push_back(p.label);
    e.ring.unit = idx.class_of(g, whole(g), g.identity());
    e.ring.constants.assign(n, std::vector<std::vector<long>>(n));
    auto id = identity_span(gg);
    auto I = leaf(id);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            auto prod = vcompose(e.cells[i], e.cells[j]);
            auto v = decompose_endomorphism(prod, g, idx);
            e.ring.constants[i][j] = v;
            if (i <= j && !equal_by_matching(prod, basis_sum(e.cells, v, id, id))) e.reduces = false;
            if (horizontal && i <= j) {
                auto c = make_cell(hcompose(e.cells[i], e.cells[j]), comp(I, I), comp(I, I));
                if (decompose_endomorphism(reframe(c, I, I).t, g, idx) != v) e.horizontal_agrees = false;
            }
        }
    auto xb = crossed_burnside_ring(g, idx);
    e.agrees = xb.constants == e.ring.constants;
    return e;
}

inline EndRing end_ring(const Group& g, bool horizontal = true) {
    return end_ring(g, Groupoid::from_group(g), pair_index(g), horizontal);
}

// The square relating End(Id_G) = xB(G) and End(1 <- G = G) = B(G), checked on bases:
// phi(sigma^c[H,a]) = sigma(pi[H,a]) and psi(phi(sigma^c[H,a])) = sigma^c(iota pi [H,a]).
struct SquareReport {
    bool section = true;   // pi o iota = id
    bool phi_ok = true;
    bool psi_ok = true;
    bool homomorphisms = true;  // pi and iota multiplicative
    bool all() const { return section && phi_ok && psi_ok && homomorphisms; }
};

inline SquareReport check_phi_psi(const Group& g) {
    SquareReport rep;
    auto gg = Groupoid::from_group(g);
    auto idx = pair_index(g);
    auto b = burnside_ring(g, idx.subs);
    auto xb = crossed_burnside_ring(g, idx);
    for (int k = 0; k < b.rank(); ++k) {
        auto x = basis_element(b, k);
        if (!(pi(b, idx, iota(xb, g, idx, x)) == x)) rep.section = false;
        for (int l = 0; l < b.rank(); ++l) {
            auto y = basis_element(b, l);
            if (!(iota(xb, g, idx, multiply(b, x, y)) == multiply(xb, iota(xb, g, idx, x), iota(xb, g, idx, y))))
                rep.homomorphisms = false;
        }
    }
    for (int k = 0; k < xb.rank(); ++k)
        for (int l = 0; l < xb.rank(); ++l) {
            auto x = basis_element(xb, k), y = basis_element(xb, l);
            if (!(pi(b, idx, multiply(xb, x, y)) == multiply(b, pi(b, idx, x), pi(b, idx, y)))) rep.homomorphisms = false;
        }
    auto t = point_span(gg);
    for (const auto& p : idx.classes) {
        auto f = phi(sigma_c(g, gg, p.h, p.a), t);
        if (!equal(f, sigma_b(g, gg, t, p.h))) rep.phi_ok = false;
        if (!equal(psi(f, gg), sigma_c(g, gg, p.h, g.identity()))) rep.psi_ok = false;
    }
    return rep;
}

}  // namespace mackey2
