#include <gtest/gtest.h>

#include <set>

#include "mackey2/catalog.hpp"
#include "mackey2/groupoid.hpp"

using namespace mackey2;

namespace {

// Orbit count of a permutation action, used as an independent check on components.
int count_blocks(int n, const std::vector<std::pair<int, int>>& edges) {
    std::vector<int> parent(n);
    for (int k = 0; k < n; ++k) parent[k] = k;
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (auto [a, b] : edges) parent[find(a)] = find(b);
    std::set<int> roots;
    for (int k = 0; k < n; ++k) roots.insert(find(k));
    return static_cast<int>(roots.size());
}

}  // namespace

TEST(Group, CatalogOrders) {
    std::map<std::string, int> expect{{"C1", 1}, {"C2", 2}, {"C3", 3}, {"C4", 4}, {"C6", 6}, {"V4", 4},
                                      {"S3", 6}, {"D4", 8}, {"Q8", 8}, {"A4", 12}, {"D6", 12}, {"S4", 24}};
    for (const auto& n : catalog_names()) EXPECT_EQ(catalog_group(n).order(), expect.at(n)) << n;
}

TEST(Group, CatalogIsomorphismTypesDiffer) {
    const auto& names = catalog_names();
    for (size_t a = 0; a < names.size(); ++a)
        for (size_t b = a + 1; b < names.size(); ++b)
            EXPECT_FALSE(find_isomorphism(catalog_group(names[a]), catalog_group(names[b])))
                << names[a] << " " << names[b];
}

TEST(Group, SubgroupCounts) {
    // number of subgroups of each catalog group
    std::map<std::string, size_t> expect{{"C1", 1}, {"C2", 2}, {"C3", 2}, {"C4", 3}, {"C6", 4}, {"V4", 5},
                                         {"S3", 6}, {"D4", 10}, {"Q8", 6}, {"A4", 10}, {"D6", 16}, {"S4", 30}};
    for (const auto& n : catalog_names()) EXPECT_EQ(all_subgroups(catalog_group(n)).size(), expect.at(n)) << n;
}

TEST(Group, Q8HasOneInvolution) {
    auto q = catalog_group("Q8");
    int inv = 0;
    for (int a = 0; a < 8; ++a) inv += q.element_order(a) == 2;
    EXPECT_EQ(inv, 1);
    EXPECT_FALSE(q.is_abelian());
}

TEST(Group, MalformedTablesRejected) {
    EXPECT_THROW(Group(2, {0, 1, 1, 1}), MalformedGroup);
    EXPECT_THROW(Group(2, {0, 1, 1}), MalformedGroup);
    EXPECT_THROW(Group(3, {0, 1, 2, 1, 0, 2, 2, 2, 0}), MalformedGroup);
}

TEST(Groupoid, FromGroup) {
    auto t = Groupoid::from_group(Group());
    EXPECT_EQ(t->objects(), 1);
    EXPECT_EQ(t->morphisms(), 1);
    auto c2 = Groupoid::from_group(catalog_group("C2"));
    EXPECT_EQ(c2->morphisms(), 2);
    int s = 1 - c2->id(0);
    EXPECT_EQ(c2->inv(s), s);
    EXPECT_EQ(c2->comp(s, s), c2->id(0));
    for (const auto& n : catalog_names()) EXPECT_TRUE(Groupoid::from_group(catalog_group(n))->validate()) << n;
}

TEST(Groupoid, CoproductCounts) {
    auto c = coproduct({Groupoid::from_group(catalog_group("C2")), Groupoid::from_group(catalog_group("C3"))});
    EXPECT_EQ(c.sum->objects(), 2);
    EXPECT_EQ(c.sum->morphisms(), 5);
    EXPECT_TRUE(c.sum->validate());
    auto comps = components(*c.sum);
    ASSERT_EQ(comps.count(), 2);
    std::multiset<int> orders(comps.vertex_order.begin(), comps.vertex_order.end());
    EXPECT_EQ(orders, (std::multiset<int>{2, 3}));
    for (const auto& f : c.incl) {
        EXPECT_TRUE(is_valid(f));
        EXPECT_TRUE(is_faithful(f));
    }
    auto e = coproduct({});
    EXPECT_EQ(e.sum->objects(), 0);
    EXPECT_EQ(components(*e.sum).count(), 0);
}

TEST(Groupoid, ComponentsAgreeWithUnionFind) {
    auto a = coproduct({Groupoid::from_group(catalog_group("S3")), Groupoid::from_group(catalog_group("V4")),
                        Groupoid::from_group(catalog_group("C1"))});
    std::vector<std::pair<int, int>> edges;
    for (int m = 0; m < a.sum->morphisms(); ++m) edges.emplace_back(a.sum->src(m), a.sum->tgt(m));
    EXPECT_EQ(components(*a.sum).count(), count_blocks(a.sum->objects(), edges));
}

TEST(Groupoid, Faithfulness) {
    auto s3 = catalog_group("S3");
    auto gs3 = Groupoid::from_group(s3);
    auto sub = subgroup_inclusion(s3, gs3, generate(s3, {s3.find("s")}));
    EXPECT_TRUE(is_valid(sub.incl));
    EXPECT_TRUE(is_faithful(sub.incl));
    auto pt = Groupoid::point();
    EXPECT_FALSE(is_faithful(to_point(sub.gpd, pt)));
    EXPECT_TRUE(is_faithful(identity_functor(gs3)));
}

TEST(Groupoid, SkeletonAndEquivalence) {
    for (const auto& n : {"C1", "C2", "S3", "D4"}) {
        auto g = Groupoid::from_group(catalog_group(n));
        auto c = coproduct({g, g, Groupoid::point()});
        auto sk = skeletalize(c.sum);
        EXPECT_TRUE(sk.skel->validate());
        EXPECT_TRUE(is_valid(sk.incl));
        EXPECT_TRUE(is_valid(sk.retr));
        EXPECT_TRUE(is_valid(sk.counit));
        EXPECT_TRUE(is_identity(compose(sk.retr, sk.incl)));
        auto e = are_equivalent(c.sum, sk.skel);
        ASSERT_TRUE(e);
        EXPECT_TRUE(is_valid(e->unit));
        EXPECT_TRUE(is_valid(e->counit));
        EXPECT_TRUE(is_equivalence(e->f));
        EXPECT_TRUE(is_equivalence(e->g));
    }
    EXPECT_FALSE(are_equivalent(Groupoid::from_group(catalog_group("C2")), Groupoid::point()));
    EXPECT_FALSE(are_equivalent(Groupoid::from_group(catalog_group("C4")), Groupoid::from_group(catalog_group("V4"))));
}

TEST(Groupoid, QuasiInverse) {
    auto g = Groupoid::from_group(catalog_group("D4"));
    auto c = coproduct({g, g});
    auto sk = skeletalize(c.sum);
    auto q = quasi_inverse(sk.retr);
    ASSERT_TRUE(q);
    EXPECT_TRUE(is_valid(q->g));
    EXPECT_TRUE(is_valid(q->unit));
    EXPECT_TRUE(is_valid(q->counit));
    EXPECT_FALSE(quasi_inverse(to_point(g, Groupoid::point())));
}

TEST(Groupoid, EquivalenceIsAnEquivalenceRelationOnCatalog) {
    std::vector<GroupoidPtr> gs;
    for (const auto& n : catalog_names()) gs.push_back(Groupoid::from_group(catalog_group(n)));
    for (size_t a = 0; a < gs.size(); ++a)
        for (size_t b = 0; b < gs.size(); ++b) {
            bool ab = are_equivalent(gs[a], gs[b]).has_value();
            EXPECT_EQ(ab, a == b);
            EXPECT_EQ(ab, are_equivalent(gs[b], gs[a]).has_value());
        }
}
