#include <gtest/gtest.h>

#include <numeric>
#include <set>

#include "mackey2/rings.hpp"

using namespace mackey2;

namespace {

int find_root(std::vector<int>& p, int x) { return p[x] == x ? x : p[x] = find_root(p, p[x]); }

// Orbit count of pairs (H, a), a in C_G(H), under simultaneous conjugation, by union-find.
int brute_pair_orbits(const Group& g) {
    auto subs = all_subgroups(g);
    std::map<std::pair<Subgroup, int>, int> id;
    for (const auto& h : subs)
        for (int a : centralizer(g, h)) id.emplace(std::pair{h, a}, static_cast<int>(id.size()));
    std::vector<int> p(id.size());
    std::iota(p.begin(), p.end(), 0);
    for (const auto& [k, v] : id)
        for (int t = 0; t < g.order(); ++t) {
            int w = id.at({conjugate(g, t, k.first), g.conj(t, k.second)});
            p[find_root(p, v)] = find_root(p, w);
        }
    int n = 0;
    for (size_t k = 0; k < p.size(); ++k) n += find_root(p, static_cast<int>(k)) == static_cast<int>(k);
    return n;
}

int brute_subgroup_orbits(const Group& g) {
    auto subs = all_subgroups(g);
    std::set<Subgroup> seen;
    int n = 0;
    for (const auto& h : subs) {
        if (seen.count(h)) continue;
        ++n;
        for (int t = 0; t < g.order(); ++t) seen.insert(conjugate(g, t, h));
    }
    return n;
}

// mark of L on G/H: number of cosets xH fixed by L
long mark(const Group& g, const Subgroup& l, const Subgroup& h) {
    long m = 0;
    for (int x : coset_reps(g, h)) {
        auto c = conjugate(g, x, h);
        m += is_subgroup_of(l, c);
    }
    return m;
}

// Product of the G-sets over G^c for [K,b] and [H,a], decomposed into orbits directly.
std::vector<long> crossed_oracle(const Group& g, const PairIndex& idx, int i, int j) {
    const auto& ki = idx.classes[i];
    const auto& hj = idx.classes[j];
    auto ck = coset_reps(g, ki.h), ch = coset_reps(g, hj.h);
    // point x K is represented by x; value x b x^-1
    auto coset_of = [&](const std::vector<int>& reps, const Subgroup& s, int y) {
        for (size_t k = 0; k < reps.size(); ++k)
            for (int z : s)
                if (g.mul(reps[k], z) == y) return static_cast<int>(k);
        return -1;
    };
    std::vector<long> out(idx.size(), 0);
    std::set<std::pair<int, int>> seen;
    for (size_t x = 0; x < ck.size(); ++x)
        for (size_t y = 0; y < ch.size(); ++y) {
            if (seen.count({x, y})) continue;
            Subgroup stab;
            for (int t = 0; t < g.order(); ++t) {
                int x2 = coset_of(ck, ki.h, g.mul(t, ck[x]));
                int y2 = coset_of(ch, hj.h, g.mul(t, ch[y]));
                seen.insert({x2, y2});
                if (x2 == static_cast<int>(x) && y2 == static_cast<int>(y)) stab.push_back(t);
            }
            int val = g.mul(g.conj(ck[x], ki.a), g.conj(ch[y], hj.a));
            ++out[idx.class_of(g, stab, val)];
        }
    return out;
}

RingElement elem(const Ring& r, const std::string& label) {
    for (int k = 0; k < r.rank(); ++k)
        if (r.basis[k] == label) return basis_element(r, k);
    throw std::runtime_error("no basis element " + label);
}

}  // namespace

TEST(Rings, SubgroupClassCounts) {
    std::map<std::string, int> expect{{"C1", 1}, {"C2", 2}, {"S3", 4}, {"V4", 5}, {"D4", 8},
                                      {"Q8", 6}, {"A4", 5}, {"S4", 11}};
    for (const auto& n : catalog_names()) {
        auto g = catalog_group(n);
        auto c = subgroup_classes(g);
        EXPECT_EQ(static_cast<int>(c.size()), brute_subgroup_orbits(g)) << n;
        if (expect.count(n)) {
            EXPECT_EQ(static_cast<int>(c.size()), expect[n]) << n;
        }
        for (size_t k = 1; k < c.size(); ++k) EXPECT_LE(c[k - 1].rep.size(), c[k].rep.size());
        for (const auto& s : c) EXPECT_EQ(s.rep, s.orbit.front());
        std::set<std::string> labels;
        for (const auto& s : c) labels.insert(s.label);
        EXPECT_EQ(labels.size(), c.size()) << n;
    }
}

TEST(Rings, PairClassCounts) {
    EXPECT_EQ(pair_classes(catalog_group("C1")).size(), 1u);
    EXPECT_EQ(pair_classes(catalog_group("C2")).size(), 4u);
    auto s3 = pair_classes(catalog_group("S3"));
    ASSERT_EQ(s3.size(), 8u);
    std::vector<int> per(4, 0);
    for (const auto& p : s3) ++per[p.subgroup_class];
    EXPECT_EQ(per, (std::vector<int>{3, 2, 2, 1}));
    for (const auto& n : catalog_names()) {
        auto g = catalog_group(n);
        EXPECT_EQ(static_cast<int>(pair_classes(g).size()), brute_pair_orbits(g)) << n;
    }
}

TEST(Rings, BurnsideAnchors) {
    auto b = burnside_ring(catalog_group("S3"));
    auto c2 = elem(b, "[S3/C2]");
    EXPECT_TRUE(burnside_product(b, c2, c2) == c2 + elem(b, "[S3/1]"));
    EXPECT_TRUE(burnside_product(b, one(b), c2) == c2);
    EXPECT_EQ(b.basis[b.unit], "[S3/S3]");
    auto bc2 = burnside_ring(catalog_group("C2"));
    auto r = elem(bc2, "[C2/1]");
    EXPECT_TRUE(burnside_product(bc2, r, r) == mpq_class(2) * r);
    EXPECT_EQ(burnside_ring(catalog_group("C1")).rank(), 1);
    auto xb = crossed_burnside_ring(catalog_group("S3"));
    EXPECT_THROW(burnside_product(b, c2, one(xb)), Mismatch);
    EXPECT_THROW(crossed_product(b, c2, c2), Mismatch);
}

TEST(Rings, BurnsideAgreesWithMarks) {
    for (const auto& n : catalog_names()) {
        auto g = catalog_group(n);
        auto idx = subgroup_index(g);
        auto b = burnside_ring(g, idx);
        for (int i = 0; i < b.rank(); ++i)
            for (int j = 0; j < b.rank(); ++j)
                for (const auto& l : idx.classes) {
                    long lhs = 0;
                    for (int k = 0; k < b.rank(); ++k) lhs += b.constants[i][j][k] * mark(g, l.rep, idx.classes[k].rep);
                    EXPECT_EQ(lhs, mark(g, l.rep, idx.classes[i].rep) * mark(g, l.rep, idx.classes[j].rep)) << n;
                }
    }
}

TEST(Rings, CrossedAnchors) {
    auto x2 = crossed_burnside_ring(catalog_group("C2"));
    EXPECT_EQ(x2.rank(), 4);
    EXPECT_TRUE(crossed_product(x2, elem(x2, "[C2,r]"), elem(x2, "[C2,r]")) == elem(x2, "[C2,e]"));
    auto x3 = crossed_burnside_ring(catalog_group("S3"));
    EXPECT_EQ(x3.rank(), 8);
    auto c3r = elem(x3, "[C3,r]");
    EXPECT_TRUE(crossed_product(x3, c3r, c3r) == c3r + elem(x3, "[C3,e]"));
    for (int k = 0; k < x3.rank(); ++k)
        EXPECT_TRUE(crossed_product(x3, elem(x3, "[S3,e]"), basis_element(x3, k)) == basis_element(x3, k));
}

TEST(Rings, CrossedAgreesWithOrbitOracle) {
    for (const auto& n : {"C2", "C4", "V4", "S3", "D4", "Q8", "A4"}) {
        auto g = catalog_group(n);
        auto idx = pair_index(g);
        auto r = crossed_burnside_ring(g, idx);
        for (int i = 0; i < r.rank(); ++i)
            for (int j = 0; j < r.rank(); ++j) EXPECT_EQ(r.constants[i][j], crossed_oracle(g, idx, i, j)) << n;
    }
}

TEST(Rings, RingAxioms) {
    for (const auto& n : catalog_names()) {
        auto g = catalog_group(n);
        for (const auto& r : {burnside_ring(g), crossed_burnside_ring(g)}) {
            EXPECT_TRUE(is_commutative(r)) << r.name;
            int m = r.rank();
            for (int i = 0; i < m; ++i) {
                auto x = basis_element(r, i);
                EXPECT_TRUE(multiply(r, one(r), x) == x);
                for (int j = 0; j < m; ++j) {
                    auto xy = multiply(r, x, basis_element(r, j));
                    for (int k = 0; k < m; ++k) {
                        auto z = basis_element(r, k);
                        EXPECT_TRUE(multiply(r, xy, z) == multiply(r, x, multiply(r, basis_element(r, j), z)));
                    }
                }
            }
        }
    }
}

TEST(Rings, SectionAndProjection) {
    auto g = catalog_group("S3");
    auto idx = pair_index(g);
    auto b = burnside_ring(g, idx.subs);
    auto xb = crossed_burnside_ring(g, idx);
    auto x = elem(b, "[S3/C3]");
    EXPECT_TRUE(pi(b, idx, iota(xb, g, idx, x)) == x);
    auto c2 = catalog_group("C2");
    auto i2 = pair_index(c2);
    auto b2 = burnside_ring(c2, i2.subs);
    auto xb2 = crossed_burnside_ring(c2, i2);
    EXPECT_TRUE(iota(xb2, c2, i2, elem(b2, "[C2/1]")) == elem(xb2, "[1,e]"));
    EXPECT_THROW(pi(b, idx, x), Mismatch);
}

TEST(Rings, SigmaC) {
    auto g = catalog_group("S3");
    auto gg = Groupoid::from_group(g);
    auto id = sigma_c(g, gg, whole(g), g.identity());
    EXPECT_TRUE(equal(id, identity_cell(identity_span(gg))));
    EXPECT_TRUE(equal_by_matching(id, identity_cell(identity_span(gg))));
    auto s = generate(g, {g.find("s")});
    for (int t = 0; t < g.order(); ++t) {
        auto x = sigma_c(g, gg, s, g.find("s"));
        auto y = sigma_c(g, gg, conjugate(g, t, s), g.conj(t, g.find("s")));
        EXPECT_TRUE(equal_by_matching(x, y));
    }
    EXPECT_FALSE(equal_by_matching(sigma_c(g, gg, s, g.find("s")), sigma_c(g, gg, s, g.identity())));
    EXPECT_THROW(sigma_c(g, gg, s, g.find("r")), Mismatch);
    auto c2 = catalog_group("C2");
    auto gc = Groupoid::from_group(c2);
    EXPECT_EQ(sigma_c(c2, gc, trivial_subgroup(c2), c2.identity()).mid.middle->morphisms(), 1);
}

TEST(Rings, EndRingMatchesCrossedBurnside) {
    for (const auto& n : {"C1", "C2", "C3", "V4", "S3"}) {
        auto g = catalog_group(n);
        auto e = end_ring(g);
        EXPECT_TRUE(e.agrees) << n;
        EXPECT_TRUE(e.reduces) << n;
        EXPECT_TRUE(e.horizontal_agrees) << n;
        EXPECT_TRUE(is_commutative(e.ring)) << n;
    }
    EXPECT_EQ(end_ring(catalog_group("C1")).ring.rank(), 1);
    EXPECT_EQ(end_ring(catalog_group("C2")).ring.rank(), 4);
    EXPECT_EQ(end_ring(catalog_group("S3")).ring.rank(), 8);
}

TEST(Rings, PhiPsiSquare) {
    for (const auto& n : {"C1", "C2", "C3", "V4", "S3"}) {
        auto r = check_phi_psi(catalog_group(n));
        EXPECT_TRUE(r.section) << n;
        EXPECT_TRUE(r.phi_ok) << n;
        EXPECT_TRUE(r.psi_ok) << n;
        EXPECT_TRUE(r.homomorphisms) << n;
    }
}

TEST(Rings, PhiOfC3Loop) {
    auto g = catalog_group("S3");
    auto gg = Groupoid::from_group(g);
    auto t = point_span(gg);
    auto c3 = generate(g, {g.find("r")});
    auto f = phi(sigma_c(g, gg, c3, g.find("r")), t);
    EXPECT_TRUE(equal(f, sigma_b(g, gg, t, c3)));
    EXPECT_FALSE(equal(f, sigma_b(g, gg, t, whole(g))));
    auto idx = subgroup_index(g);
    auto v = decompose_point_endomorphism(f, idx);
    EXPECT_EQ(v[idx.class_of(c3)], 1);
}
