#pragma once

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "rings.hpp"

namespace mackey2 {

// ---------------------------------------------------------------------------
// Finite G-sets.

struct GSet {
    Group g;
    int n = 0;
    std::vector<int> act;  // act[a * n + x] = a . x

    int operator()(int a, int x) const { return act[a * n + x]; }
};

inline bool is_valid(const GSet& x) {
    if (static_cast<int>(x.act.size()) != x.g.order() * x.n) return false;
    for (int p = 0; p < x.n; ++p) {
        if (x(x.g.identity(), p) != p) return false;
        for (int a = 0; a < x.g.order(); ++a)
            for (int b = 0; b < x.g.order(); ++b)
                if (x(x.g.mul(a, b), p) != x(a, x(b, p))) return false;
    }
    return true;
}

// G/H; point k is the coset of the k-th smallest coset representative.
inline GSet coset_set(const Group& g, const Subgroup& h) {
    auto reps = coset_reps(g, h);
    std::vector<int> of(g.order());
    for (size_t k = 0; k < reps.size(); ++k)
        for (int y : h) of[g.mul(reps[k], y)] = static_cast<int>(k);
    GSet x{g, static_cast<int>(reps.size()), {}};
    x.act.resize(g.order() * x.n);
    for (int a = 0; a < g.order(); ++a)
        for (int k = 0; k < x.n; ++k) x.act[a * x.n + k] = of[g.mul(a, reps[k])];
    return x;
}

inline GSet disjoint_union(const GSet& x, const GSet& y) {
    GSet z{x.g, x.n + y.n, {}};
    z.act.resize(x.g.order() * z.n);
    for (int a = 0; a < x.g.order(); ++a) {
        for (int p = 0; p < x.n; ++p) z.act[a * z.n + p] = x(a, p);
        for (int p = 0; p < y.n; ++p) z.act[a * z.n + x.n + p] = x.n + y(a, p);
    }
    return z;
}

inline GSet point_set(const Group& g) { return GSet{g, 1, std::vector<int>(g.order(), 0)}; }

inline Subgroup stabilizer(const GSet& x, int p) {
    Subgroup s;
    for (int a = 0; a < x.g.order(); ++a)
        if (x(a, p) == p) s.push_back(a);
    return s;
}

// Orbit representatives (smallest point of each orbit).
inline std::vector<int> orbit_reps(const GSet& x) {
    std::vector<char> seen(x.n, 0);
    std::vector<int> reps;
    for (int p = 0; p < x.n; ++p) {
        if (seen[p]) continue;
        reps.push_back(p);
        for (int a = 0; a < x.g.order(); ++a) seen[x(a, p)] = 1;
    }
    return reps;
}

struct GSetMap {
    GSet src, tgt;
    std::vector<int> map;
};

inline bool is_equivariant(const GSetMap& f) {
    if (static_cast<int>(f.map.size()) != f.src.n) return false;
    for (int a = 0; a < f.src.g.order(); ++a)
        for (int p = 0; p < f.src.n; ++p)
            if (f.map[f.src(a, p)] != f.tgt(a, f.map[p])) return false;
    return true;
}

// Fiber product with the diagonal action and its two projections.
struct GSetPullback {
    GSet p;
    GSetMap pr1, pr2;
    std::vector<std::pair<int, int>> points;
};

inline GSetPullback gset_pullback(const GSetMap& f, const GSetMap& g) {
    if (f.tgt.n != g.tgt.n || f.tgt.act != g.tgt.act) throw Mismatch("gset_pullback: maps have different targets");
    GSetPullback r;
    std::map<std::pair<int, int>, int> index;
    for (int x = 0; x < f.src.n; ++x)
        for (int y = 0; y < g.src.n; ++y)
            if (f.map[x] == g.map[y]) {
                index.emplace(std::pair{x, y}, static_cast<int>(r.points.size()));
                r.points.push_back({x, y});
            }
    const auto& grp = f.src.g;
    r.p = GSet{grp, static_cast<int>(r.points.size()), {}};
    r.p.act.resize(grp.order() * r.p.n);
    for (int a = 0; a < grp.order(); ++a)
        for (int k = 0; k < r.p.n; ++k)
            r.p.act[a * r.p.n + k] = index.at({f.src(a, r.points[k].first), g.src(a, r.points[k].second)});
    r.pr1 = GSetMap{r.p, f.src, {}};
    r.pr2 = GSetMap{r.p, g.src, {}};
    for (const auto& [x, y] : r.points) {
        r.pr1.map.push_back(x);
        r.pr2.map.push_back(y);
    }
    return r;
}

// ---------------------------------------------------------------------------
// Transport groupoids G |x X: objects the points, arrows (a, x) : x -> a x, numbered a * n + x.

struct Transport {
    GroupoidPtr gpd;
    Functor proj;  // into the one-object groupoid of G
};

inline Transport transport_groupoid(const GSet& x, const GroupoidPtr& gg) {
    int n = x.n, m = x.g.order();
    std::vector<int> src(m * n), tgt(m * n), ident(n), inv(m * n);
    for (int a = 0; a < m; ++a)
        for (int p = 0; p < n; ++p) {
            src[a * n + p] = p;
            tgt[a * n + p] = x(a, p);
            inv[a * n + p] = x.g.inv(a) * n + x(a, p);
        }
    for (int p = 0; p < n; ++p) ident[p] = x.g.identity() * n + p;
    // (b, a x) o (a, x) = (b a, x)
    auto gpd = Groupoid::build(n, src, tgt, ident, inv, [&](int h, int f) { return x.g.mul(h / n, f / n) * n + f % n; });
    Functor pr{gpd, gg, std::vector<int>(n, 0), std::vector<int>(m * n)};
    for (int k = 0; k < m * n; ++k) pr.mor[k] = k / n;
    return {gpd, pr};
}

inline Functor transport_map(const GSetMap& f, const Transport& s, const Transport& t) {
    Functor r{s.gpd, t.gpd, f.map, std::vector<int>(s.gpd->morphisms())};
    int n = f.src.n, n2 = f.tgt.n;
    for (int k = 0; k < s.gpd->morphisms(); ++k) r.mor[k] = (k / n) * n2 + f.map[k % n];
    return r;
}

// The transported image of a pullback square is a Mackey square.
inline bool transport_pullback_check(const GSetMap& f, const GSetMap& g, const GroupoidPtr& gg) {
    auto pb = gset_pullback(f, g);
    auto tx = transport_groupoid(f.src, gg), ty = transport_groupoid(g.src, gg), tz = transport_groupoid(f.tgt, gg);
    auto tp = transport_groupoid(pb.p, gg);
    auto i = transport_map(f, tx, tz);
    auto u = transport_map(g, ty, tz);
    auto v = transport_map(pb.pr1, tp, tx);
    auto j = transport_map(pb.pr2, tp, ty);
    return is_mackey_square(i, u, v, j, identity_nat(compose(i, v)));
}

// ---------------------------------------------------------------------------
// Mackey functors on G as matrix tables. M(H) is given for every subgroup H; matrices
// act on column vectors, rows indexed by the target basis.

using IntMat = std::vector<std::vector<long>>;

inline IntMat matmul(const IntMat& a, const IntMat& b) {
    size_t n = a.size(), m = b.empty() ? 0 : b[0].size(), k = b.size();
    IntMat c(n, std::vector<long>(m, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t l = 0; l < k; ++l)
            if (a[i][l])
                for (size_t j = 0; j < m; ++j) c[i][j] += a[i][l] * b[l][j];
    return c;
}

inline IntMat matadd(IntMat a, const IntMat& b) {
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a[i].size(); ++j) a[i][j] += b[i][j];
    return a;
}

inline IntMat identity_matrix(int n) {
    IntMat m(n, std::vector<long>(n, 0));
    for (int k = 0; k < n; ++k) m[k][k] = 1;
    return m;
}

inline IntMat zero_matrix(int rows, int cols) { return IntMat(rows, std::vector<long>(cols, 0)); }

struct MackeyFunctorTable {
    Group g;
    std::vector<Subgroup> subgroups;                // every subgroup, in all_subgroups order
    std::map<Subgroup, int> index;
    std::vector<std::vector<std::string>> basis;    // basis labels of M(H)
    std::map<std::pair<int, int>, IntMat> res;      // (H, K), K <= H : M(H) -> M(K)
    std::map<std::pair<int, int>, IntMat> ind;      // (H, K), K <= H : M(K) -> M(H)
    std::vector<std::vector<IntMat>> conj;          // [H][g] : M(H) -> M(gHg^-1)

    int id(const Subgroup& h) const { return index.at(h); }
    int dim(int h) const { return static_cast<int>(basis[h].size()); }
    const IntMat& R(int h, int k) const { return res.at({h, k}); }
    const IntMat& I(int h, int k) const { return ind.at({h, k}); }
    const IntMat& c(int h, int x) const { return conj[h][x]; }
};

namespace detail {

// Double coset representatives of K\H/L with K, L <= H.
inline std::vector<int> double_coset_reps_in(const Group& g, const Subgroup& h, const Subgroup& k, const Subgroup& l) {
    std::vector<char> seen(g.order(), 0);
    std::vector<int> reps;
    for (int x : h) {
        if (seen[x]) continue;
        reps.push_back(x);
        for (int a : k)
            for (int b : l) seen[g.mul(g.mul(a, x), b)] = 1;
    }
    return reps;
}

// H-conjugacy classes of subgroups of H, ordered by (order, smallest member).
struct LocalClasses {
    std::vector<Subgroup> reps;
    std::map<Subgroup, int> of;
};

inline LocalClasses local_classes(const Group& g, const Subgroup& h, const std::vector<Subgroup>& all) {
    LocalClasses lc;
    for (const auto& l : all) {
        if (!is_subgroup_of(l, h) || lc.of.count(l)) continue;
        int c = static_cast<int>(lc.reps.size());
        lc.reps.push_back(l);
        for (int x : h) lc.of.emplace(conjugate(g, x, l), c);
    }
    return lc;
}

}  // namespace detail

// The Burnside Mackey functor: M(H) = B(H) with basis [H/L], L up to H-conjugacy.
inline MackeyFunctorTable burnside_mackey_functor(const Group& g) {
    MackeyFunctorTable m;
    m.g = g;
    m.subgroups = all_subgroups(g);
    int ns = static_cast<int>(m.subgroups.size());
    for (int k = 0; k < ns; ++k) m.index.emplace(m.subgroups[k], k);
    std::vector<detail::LocalClasses> lc;
    auto sname = [&](const Subgroup& s) {
        std::string r = "<";
        for (size_t k = 0; k < s.size(); ++k) r += (k ? "," : "") + g.name(s[k]);
        return r + ">";
    };
    for (const auto& h : m.subgroups) {
        lc.push_back(detail::local_classes(g, h, m.subgroups));
        std::vector<std::string> labels;
        for (const auto& l : lc.back().reps) labels.push_back("[" + sname(h) + "/" + sname(l) + "]");
        m.basis.push_back(labels);
    }
    for (int hi = 0; hi < ns; ++hi)
        for (int ki = 0; ki < ns; ++ki) {
            const auto& h = m.subgroups[hi];
            const auto& k = m.subgroups[ki];
            if (!is_subgroup_of(k, h)) continue;
            IntMat r = zero_matrix(m.dim(ki), m.dim(hi));
            for (int c = 0; c < m.dim(hi); ++c) {
                const auto& l = lc[hi].reps[c];
                for (int x : detail::double_coset_reps_in(g, h, k, l)) ++r[lc[ki].of.at(intersect(k, conjugate(g, x, l)))][c];
            }
            m.res.emplace(std::pair{hi, ki}, r);
            IntMat in = zero_matrix(m.dim(hi), m.dim(ki));
            for (int c = 0; c < m.dim(ki); ++c) ++in[lc[hi].of.at(lc[ki].reps[c])][c];
            m.ind.emplace(std::pair{hi, ki}, in);
        }
    m.conj.resize(ns);
    for (int hi = 0; hi < ns; ++hi)
        for (int x = 0; x < g.order(); ++x) {
            const auto& h = m.subgroups[hi];
            int ti = m.index.at(conjugate(g, x, h));
            IntMat c = zero_matrix(m.dim(ti), m.dim(hi));
            for (int b = 0; b < m.dim(hi); ++b) ++c[lc[ti].of.at(conjugate(g, x, lc[hi].reps[b]))][b];
            m.conj[hi].push_back(c);
        }
    return m;
}

// Both sides of R^H_J I^H_K = sum over J\H/K of I^J_{J cap xKx^-1} c_x R^K_{x^-1Jx cap K}, as maps M(K) -> M(J).
inline std::pair<IntMat, IntMat> double_coset_sides(const MackeyFunctorTable& m, int h, int j, int k) {
    const auto& g = m.g;
    const auto& H = m.subgroups[h];
    const auto& J = m.subgroups[j];
    const auto& K = m.subgroups[k];
    IntMat lhs = matmul(m.R(h, j), m.I(h, k));
    IntMat rhs = zero_matrix(m.dim(j), m.dim(k));
    for (int x : detail::double_coset_reps_in(g, H, J, K)) {
        int a = m.id(intersect(conjugate(g, g.inv(x), J), K));  // J^x cap K
        int b = m.id(intersect(J, conjugate(g, x, K)));         // J cap xK
        rhs = matadd(rhs, matmul(m.I(j, b), matmul(m.c(a, x), m.R(k, a))));
    }
    return {lhs, rhs};
}

inline bool verify_double_coset(const MackeyFunctorTable& m, int h, int j, int k) {
    auto [l, r] = double_coset_sides(m, h, j, k);
    return l == r;
}

// With ambient group G.
inline bool verify_double_coset(const MackeyFunctorTable& m, const Subgroup& j, const Subgroup& k) {
    return verify_double_coset(m, m.id(whole(m.g)), m.id(j), m.id(k));
}

struct MackeyAxiomReport {
    bool a = true, b = true, c = true, formula = true;
    long checks = 0;
    std::string first_failure;
    bool all() const { return a && b && c && formula; }
};

inline MackeyAxiomReport check_mackey_axioms(const MackeyFunctorTable& m) {
    MackeyAxiomReport r;
    const auto& g = m.g;
    int ns = static_cast<int>(m.subgroups.size());
    auto fail = [&](bool& flag, const std::string& what) {
        if (flag && r.first_failure.empty()) r.first_failure = what;
        flag = false;
    };
    for (int h = 0; h < ns; ++h) {
        auto id = identity_matrix(m.dim(h));
        ++r.checks;
        if (m.R(h, h) != id || m.I(h, h) != id) fail(r.a, "R^H_H or I^H_H");
        for (int x : m.subgroups[h]) {
            ++r.checks;
            if (m.c(h, x) != id) fail(r.a, "c_h on M(H)");
        }
        for (int x = 0; x < g.order(); ++x)
            for (int y = 0; y < g.order(); ++y) {
                int hy = m.id(conjugate(g, y, m.subgroups[h]));
                ++r.checks;
                if (m.c(h, g.mul(x, y)) != matmul(m.c(hy, x), m.c(h, y))) fail(r.b, "c_{xy} = c_x c_y");
            }
    }
    for (int h = 0; h < ns; ++h)
        for (int k = 0; k < ns; ++k) {
            if (!is_subgroup_of(m.subgroups[k], m.subgroups[h])) continue;
            for (int j = 0; j < ns; ++j) {
                if (!is_subgroup_of(m.subgroups[j], m.subgroups[k])) continue;
                ++r.checks;
                if (m.R(h, j) != matmul(m.R(k, j), m.R(h, k)) || m.I(h, j) != matmul(m.I(h, k), m.I(k, j)))
                    fail(r.b, "transitivity");
            }
            for (int x = 0; x < g.order(); ++x) {
                int gh = m.id(conjugate(g, x, m.subgroups[h])), gk = m.id(conjugate(g, x, m.subgroups[k]));
                ++r.checks;
                if (matmul(m.c(k, x), m.R(h, k)) != matmul(m.R(gh, gk), m.c(h, x)) ||
                    matmul(m.c(h, x), m.I(h, k)) != matmul(m.I(gh, gk), m.c(k, x)))
                    fail(r.c, "conjugation compatibility");
            }
            for (int j = 0; j < ns; ++j) {
                if (!is_subgroup_of(m.subgroups[j], m.subgroups[h])) continue;
                ++r.checks;
                if (!verify_double_coset(m, h, j, k)) fail(r.formula, "double-coset formula");
            }
        }
    return r;
}

// ---------------------------------------------------------------------------
// Decategorification: iso classes of 1-cells 1 -> G.

// The 1-cell 1 <- H -> G of a subgroup.
inline Span subgroup_one_cell(const Group& g, const GroupoidPtr& gg, const GroupoidPtr& pt, const Subgroup& h) {
    auto inc = subgroup_inclusion(g, gg, h).incl;
    return make_span(to_point(inc.dom, pt), inc);
}

// The 1-cell 1 <- G |x X -> G of a G-set.
inline Span gset_one_cell(const GSet& x, const GroupoidPtr& gg, const GroupoidPtr& pt) {
    auto t = transport_groupoid(x, gg);
    return make_span(to_point(t.gpd, pt), t.proj);
}

struct K0Report {
    int rank = 0;
    int expected_rank = 0;
    bool classes_distinct = true;   // non-conjugate subgroups give non-isomorphic 1-cells
    bool classes_complete = true;   // conjugate subgroups give isomorphic 1-cells
    bool action_matches = true;     // [G/K] acting by i_K! i_K^* equals burnside_product
    bool comparison_iso = true;     // G/H |-> G |x G/H sends the basis to the basis, additively
    bool all() const {
        return rank == expected_rank && classes_distinct && classes_complete && action_matches && comparison_iso;
    }
};

inline K0Report k0_bridge(const Group& g) {
    K0Report r;
    auto gg = Groupoid::from_group(g);
    auto pt = Groupoid::point();
    auto idx = subgroup_index(g);
    auto b = burnside_ring(g, idx);
    r.expected_rank = idx.size();
    // completeness: each subgroup's 1-cell is isomorphic to its class representative's
    for (const auto& s : all_subgroups(g)) {
        auto [c, t] = idx.where.at(s);
        const auto& rep = idx.classes[c].rep;
        auto xs = subgroup_one_cell(g, gg, pt, s);
        auto xr = subgroup_one_cell(g, gg, pt, rep);
        std::vector<int> img;
        for (int y : s) img.push_back(static_cast<int>(std::lower_bound(rep.begin(), rep.end(), g.conj(t, y)) - rep.begin()));
        auto a = group_hom(xs.middle, xr.middle, img);
        SpanRep iso{xs, xr, a, NatIso{xs.u, compose(xr.u, a), {0}}, NatIso{compose(xr.i, a), xs.i, {g.inv(t)}}};
        if (!is_valid(iso) || !is_invertible(iso)) r.classes_complete = false;
    }
    // distinctness: the vertex group up to conjugacy is an invariant of the 1-cell
    std::set<std::vector<long>> seen;
    for (const auto& c : idx.classes) seen.insert(classify_one_cell(subgroup_one_cell(g, gg, pt, c.rep), idx));
    r.classes_distinct = static_cast<int>(seen.size()) == idx.size();
    r.rank = static_cast<int>(seen.size());
    // the B(G)-action by composition with i_K! i_K^*
    for (int k = 0; k < idx.size(); ++k) {
        auto inc = subgroup_inclusion(g, gg, idx.classes[k].rep).incl;
        auto act = hcompose(lower(inc), upper(inc));
        for (int h = 0; h < idx.size(); ++h) {
            auto x = subgroup_one_cell(g, gg, pt, idx.classes[h].rep);
            auto v = classify_one_cell(hcompose(act, x), idx);
            auto w = burnside_product(b, basis_element(b, k), basis_element(b, h));
            for (int l = 0; l < idx.size(); ++l)
                if (w.c[l] != v[l]) r.action_matches = false;
        }
    }
    // comparison with G-sets
    GSet all{g, 0, {}};
    std::vector<long> total(idx.size(), 0);
    for (int h = 0; h < idx.size(); ++h) {
        auto x = coset_set(g, idx.classes[h].rep);
        auto v = classify_one_cell(gset_one_cell(x, gg, pt), idx);
        std::vector<long> e(idx.size(), 0);
        e[h] = 1;
        if (v != e) r.comparison_iso = false;
        all = h == 0 ? x : disjoint_union(all, x);
        ++total[h];
    }
    if (classify_one_cell(gset_one_cell(all, gg, pt), idx) != total) r.comparison_iso = false;
    return r;
}

// ---------------------------------------------------------------------------
// Spans of G-sets against spans of groupoids faithful over G.

struct GSetSpan {
    GSet a;
    GSetMap left, right;  // a -> x, a -> y
};

// Random transitive G-set with equivariant maps to x and y: G/H with H fixing chosen points.
inline GSetSpan random_gset_span(const GSet& x, const GSet& y, std::mt19937& rng) {
    const auto& g = x.g;
    auto subs = all_subgroups(g);
    for (int attempt = 0;; ++attempt) {
        const auto& h = subs[std::uniform_int_distribution<size_t>(0, subs.size() - 1)(rng)];
        std::vector<int> fx, fy;
        for (int p = 0; p < x.n; ++p)
            if (is_subgroup_of(h, stabilizer(x, p))) fx.push_back(p);
        for (int p = 0; p < y.n; ++p)
            if (is_subgroup_of(h, stabilizer(y, p))) fy.push_back(p);
        if (fx.empty() || fy.empty()) continue;
        int px = fx[std::uniform_int_distribution<size_t>(0, fx.size() - 1)(rng)];
        int py = fy[std::uniform_int_distribution<size_t>(0, fy.size() - 1)(rng)];
        auto a = coset_set(g, h);
        auto reps = coset_reps(g, h);
        GSetSpan s{a, {a, x, {}}, {a, y, {}}};
        for (int r : reps) {
            s.left.map.push_back(x(r, px));
            s.right.map.push_back(y(r, py));
        }
        return s;
    }
}

struct SpanCategoryReport {
    int triples = 0;
    bool objects_biject = true;      // G/H <-> (G |x G/H -> G) hits every subgroup class once
    bool composition_matches = true; // transported pullback composite is isomorphic to the groupoid composite
    bool identities_match = true;
    bool all() const { return objects_biject && composition_matches && identities_match; }
};

inline SpanCategoryReport span_category_over_G(const Group& g, int triples = 20, unsigned seed = 5u) {
    SpanCategoryReport r;
    auto gg = Groupoid::from_group(g);
    auto idx = subgroup_index(g);
    std::set<int> hit;
    for (const auto& c : idx.classes) {
        auto x = coset_set(g, c.rep);
        auto t = transport_groupoid(x, gg);
        auto comps = components(*t.gpd);
        if (comps.count() != 1) r.objects_biject = false;
        Subgroup s;
        for (int m : t.gpd->aut(0)) s.push_back(t.proj.mor[m]);
        std::sort(s.begin(), s.end());
        hit.insert(idx.class_of(s));
    }
    r.objects_biject = r.objects_biject && static_cast<int>(hit.size()) == idx.size();
    std::mt19937 rng(seed);
    auto subs = all_subgroups(g);
    auto random_set = [&]() {
        auto x = coset_set(g, subs[std::uniform_int_distribution<size_t>(0, subs.size() - 1)(rng)]);
        if (rng() % 2) x = disjoint_union(x, coset_set(g, subs[std::uniform_int_distribution<size_t>(0, subs.size() - 1)(rng)]));
        return x;
    };
    for (int t = 0; t < triples; ++t) {
        auto x = random_set(), y = random_set(), z = random_set();
        auto s1 = random_gset_span(x, y, rng);
        auto s2 = random_gset_span(y, z, rng);
        auto tx = transport_groupoid(x, gg), ty = transport_groupoid(y, gg), tz = transport_groupoid(z, gg);
        auto ta = transport_groupoid(s1.a, gg), tb = transport_groupoid(s2.a, gg);
        auto sp1 = make_span(transport_map(s1.left, ta, tx), transport_map(s1.right, ta, ty));
        auto sp2 = make_span(transport_map(s2.left, tb, ty), transport_map(s2.right, tb, tz));
        auto comp = hcompose(sp2, sp1);
        auto pb = gset_pullback(s1.right, s2.left);
        auto tp = transport_groupoid(pb.p, gg);
        auto f1 = transport_map(pb.pr1, tp, ta);
        auto f2 = transport_map(pb.pr2, tp, tb);
        auto left = compose(sp1.u, f1), right = compose(sp2.i, f2);
        auto direct = make_span(left, right);
        auto rep = into_composite(direct, comp, f1, f2, identity_nat(compose(sp1.i, f1)), identity_nat(left),
                                  identity_nat(right));
        ++r.triples;
        if (!is_valid(rep) || !is_invertible(rep)) r.composition_matches = false;
    }
    // identity span X = X = X transports to a 1-cell isomorphic to Id
    auto x = random_set();
    auto tx = transport_groupoid(x, gg);
    auto idt = identity_functor(tx.gpd);
    SpanRep unit{make_span(idt, idt), identity_span(tx.gpd), idt, identity_nat(idt), identity_nat(idt)};
    if (!is_valid(unit) || !is_invertible(unit))
        r.identities_match = false;
    return r;
}

}  // namespace mackey2
