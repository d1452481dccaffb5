#include <gtest/gtest.h>

#include <set>

#include "mackey2/catalog.hpp"
#include "mackey2/comma.hpp"

using namespace mackey2;

namespace {

// Orbits of K x H on G by (k, h) . x = k x h^-1, computed by brute force.
std::vector<std::vector<int>> double_cosets(const Group& g, const Subgroup& k, const Subgroup& h) {
    std::vector<std::vector<int>> out;
    std::set<int> seen;
    for (int x = 0; x < g.order(); ++x) {
        if (seen.count(x)) continue;
        std::set<int> orbit;
        for (int a : k)
            for (int b : h) orbit.insert(g.mul(g.mul(a, x), g.inv(b)));
        seen.insert(orbit.begin(), orbit.end());
        out.emplace_back(orbit.begin(), orbit.end());
    }
    return out;
}

int intersection_order(const Group& g, const Subgroup& k, const Subgroup& h, int x) {
    int n = 0;
    for (int a : k)
        for (int b : h)
            if (a == g.conj(x, b)) ++n;
    return n;
}

struct Fixture {
    Group g;
    GroupoidPtr gg;
    std::vector<Subgroup> subs;
    explicit Fixture(const std::string& name)
        : g(catalog_group(name)), gg(Groupoid::from_group(g)), subs(all_subgroups(g)) {}
    SubgroupInclusion incl(const Subgroup& h) const { return subgroup_inclusion(g, gg, h); }
};

}  // namespace

TEST(IsoComma, C2InS3) {
    Fixture f("S3");
    auto c2 = f.incl(generate(f.g, {f.g.find("s")}));
    auto sq = iso_comma(c2.incl, c2.incl);
    EXPECT_EQ(sq.apex->objects(), 6);
    EXPECT_EQ(sq.apex->morphisms(), 24);
    EXPECT_TRUE(sq.apex->validate());
    auto comps = components(*sq.apex);
    std::multiset<int> orders(comps.vertex_order.begin(), comps.vertex_order.end());
    EXPECT_EQ(orders, (std::multiset<int>{2, 1}));
    auto other = coproduct({c2.gpd, Groupoid::point()});
    EXPECT_TRUE(are_equivalent(sq.apex, other.sum));
    auto sk = skeletalize(sq.apex);
    EXPECT_TRUE(are_equivalent(sk.skel, other.sum));
}

TEST(IsoComma, TrivialInC2) {
    Fixture f("C2");
    auto one = f.incl(trivial_subgroup(f.g));
    auto sq = iso_comma(one.incl, one.incl);
    EXPECT_EQ(sq.apex->objects(), 2);
    EXPECT_EQ(sq.apex->morphisms(), 2);
    EXPECT_EQ(components(*sq.apex).count(), 2);
}

TEST(IsoComma, IdentityLegsGiveG) {
    Fixture f("D4");
    auto id = identity_functor(f.gg);
    auto sq = iso_comma(id, id);
    EXPECT_TRUE(are_equivalent(sq.apex, f.gg));
}

TEST(IsoComma, MismatchedCodomains) {
    Fixture a("C2"), b("C3");
    EXPECT_THROW(iso_comma(identity_functor(a.gg), identity_functor(b.gg)), Mismatch);
}

TEST(IsoComma, DoubleCosetDecomposition) {
    for (const auto& name : {"C4", "V4", "S3", "D4", "Q8", "A4"}) {
        Fixture f(name);
        for (const auto& k : f.subs)
            for (const auto& h : f.subs) {
                auto ik = f.incl(k), ih = f.incl(h);
                auto sq = iso_comma(ih.incl, ik.incl);
                auto comps = components(*sq.apex);
                auto dc = double_cosets(f.g, k, h);
                ASSERT_EQ(comps.count(), static_cast<int>(dc.size()));
                std::multiset<int> got(comps.vertex_order.begin(), comps.vertex_order.end()), want;
                for (const auto& orbit : dc) want.insert(intersection_order(f.g, k, h, orbit[0]));
                EXPECT_EQ(got, want);
                SkeletalComma sc(ih.incl, ik.incl);
                EXPECT_EQ(sc.components(), comps.count());
                EXPECT_TRUE(sc.apex()->validate());
                EXPECT_TRUE(are_equivalent(sc.apex(), sq.apex));
            }
    }
}

TEST(IsoComma, VertexGroupsAreIntersections) {
    Fixture f("S4");
    for (const auto& k : f.subs)
        for (const auto& h : f.subs) {
            SkeletalComma sc(f.incl(h).incl, f.incl(k).incl);
            for (int c = 0; c < sc.components(); ++c) {
                auto [x, y, g] = sc.rep(c);
                // component of g: k g h^-1, vertex group {k in K : k = g h g^-1}
                Subgroup inter = intersect(k, conjugate(f.g, g, h));
                ASSERT_EQ(sc.apex()->aut(c).size(), inter.size());
                std::set<int> img;
                for (int m : sc.apex()->aut(c)) img.insert(f.incl(k).incl.mor[sc.q().mor[m]]);
                EXPECT_EQ(img, std::set<int>(inter.begin(), inter.end()));
            }
        }
}

TEST(IsoComma, ProjectionFaithful) {
    Fixture f("S3");
    for (const auto& h : f.subs) {
        auto pt = Groupoid::point();
        auto ih = f.incl(h);
        auto u = Functor{pt, f.gg, {0}, {f.gg->id(0)}};
        auto sq = iso_comma(ih.incl, u);
        EXPECT_TRUE(is_faithful(sq.q));
        EXPECT_TRUE(is_valid(sq.p));
        EXPECT_TRUE(is_valid(sq.gamma));
    }
}

namespace {

// All functors from a one-object groupoid T into a groupoid A.
std::vector<Functor> functors_from_group(const GroupoidPtr& t, const GroupoidPtr& a) {
    std::vector<Functor> out;
    const auto& T = *t;
    int n = T.morphisms();
    for (int x = 0; x < a->objects(); ++x) {
        auto aut = a->aut(x);
        std::vector<int> img(n, 0);
        while (true) {
            Functor f{t, a, {x}, std::vector<int>(n)};
            for (int m = 0; m < n; ++m) f.mor[m] = aut[img[m]];
            if (is_valid(f)) out.push_back(f);
            int p = n - 1;
            while (p >= 0 && ++img[p] == static_cast<int>(aut.size())) img[p--] = 0;
            if (p < 0) break;
        }
    }
    return out;
}

}  // namespace

TEST(IsoComma, UniversalPropertyAgainstProbes) {
    Fixture f("S3");
    auto c2 = f.incl(generate(f.g, {f.g.find("s")}));
    auto c3 = f.incl(generate(f.g, {f.g.find("r")}));
    auto sq = iso_comma(c2.incl, c3.incl);
    std::vector<GroupoidPtr> probes{Groupoid::point(), Groupoid::from_group(catalog_group("C2"))};
    probes.push_back(coproduct({Groupoid::point(), Groupoid::point()}).sum);
    int cones = 0;
    for (const auto& t : probes) {
        std::vector<Functor> f1s, f2s;
        if (t->objects() == 1) {
            f1s = functors_from_group(t, c2.gpd);
            f2s = functors_from_group(t, c3.gpd);
        } else {
            f1s.push_back(Functor{t, c2.gpd, {0, 0}, {c2.gpd->id(0), c2.gpd->id(0)}});
            f2s.push_back(Functor{t, c3.gpd, {0, 0}, {c3.gpd->id(0), c3.gpd->id(0)}});
        }
        for (const auto& f1 : f1s)
            for (const auto& f2 : f2s) {
                // all delta : i f1 => u f2
                int no = t->objects();
                std::vector<int> d(no, 0);
                while (true) {
                    NatIso delta{compose(c2.incl, f1), compose(c3.incl, f2), d};
                    if (is_valid(delta)) {
                        ++cones;
                        auto c = induced_functor(sq, f1, f2, delta);
                        EXPECT_TRUE(is_valid(c));
                        EXPECT_TRUE(same(compose(sq.p, c), f1));
                        EXPECT_TRUE(same(compose(sq.q, c), f2));
                        EXPECT_EQ(whisker(sq.gamma, c).comp, delta.comp);
                        auto phi = induced_2cell(sq, c, c, identity_nat(f1), identity_nat(f2));
                        ASSERT_TRUE(phi);
                        EXPECT_EQ(phi->comp, identity_nat(c).comp);
                    }
                    int p = no - 1;
                    while (p >= 0 && ++d[p] == f.g.order()) d[p--] = 0;
                    if (p < 0) break;
                }
            }
    }
    EXPECT_GT(cones, 0);
}

TEST(IsoComma, Diagonal) {
    Fixture f("S3");
    for (const auto& h : f.subs) {
        auto ih = f.incl(h);
        auto sq = iso_comma(ih.incl, ih.incl);
        auto d = diagonal_functor(sq);
        EXPECT_TRUE(is_valid(d));
        EXPECT_TRUE(is_faithful(d));
        EXPECT_TRUE(is_full(d));
        EXPECT_TRUE(is_identity(compose(sq.p, d)));
        EXPECT_TRUE(is_identity(compose(sq.q, d)));
    }
    Fixture c2("C2");
    auto one = c2.incl(trivial_subgroup(c2.g));
    auto sq = iso_comma(one.incl, one.incl);
    auto d = diagonal_functor(sq);
    auto comps = components(*sq.apex);
    EXPECT_EQ(comps.count(), 2);
    EXPECT_EQ(d.obj.size(), 1u);
    auto pt = Groupoid::point();
    auto proj = to_point(c2.gg, pt);
    EXPECT_THROW(diagonal_functor(iso_comma(proj, proj)), NotFaithful);
}

TEST(IsoComma, MackeySquares) {
    Fixture f("S3");
    auto c2 = f.incl(generate(f.g, {f.g.find("s")}));
    auto sq = iso_comma(c2.incl, c2.incl);
    EXPECT_TRUE(is_mackey_square(c2.incl, c2.incl, sq.p, sq.q, sq.gamma));

    // L = C2 + 1 with one leg per double coset representative {e, r}
    int r = f.g.find("r");
    auto L = coproduct({c2.gpd, Groupoid::point()});
    Functor v{L.sum, c2.gpd, {0, 0}, std::vector<int>(L.sum->morphisms())};
    Functor j = v;
    for (int m = 0; m < c2.gpd->morphisms(); ++m) v.mor[m] = j.mor[m] = m;
    v.mor[2] = j.mor[2] = c2.gpd->id(0);
    NatIso gamma{compose(c2.incl, v), compose(c2.incl, j), {f.gg->id(0), r}};
    ASSERT_TRUE(is_valid(gamma));
    EXPECT_TRUE(is_mackey_square(c2.incl, c2.incl, v, j, gamma));

    // dropping the second double coset fails
    auto E = Groupoid::empty();
    Functor ve{E, c2.gpd, {}, {}};
    NatIso ge{compose(c2.incl, ve), compose(c2.incl, ve), {}};
    EXPECT_FALSE(is_mackey_square(c2.incl, c2.incl, ve, ve, ge));
}
