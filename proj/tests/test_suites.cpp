#include <gtest/gtest.h>

#include "mackey2/suites.hpp"

using namespace mackey2;

namespace {

std::vector<Group> small() { return {catalog_group("C1"), catalog_group("C2"), catalog_group("S3")}; }

}  // namespace

TEST(Suites, AllPassOnSmallGroups) {
    for (const auto& s : suite_names()) {
        auto r = run_suite(s, small());
        EXPECT_FALSE(r.checks.empty()) << s;
        EXPECT_TRUE(r.all_passed()) << s << ": " << to_json(r).dump().substr(0, 400);
        EXPECT_EQ(r.suite, s);
    }
}

TEST(Suites, UnknownSuite) { EXPECT_THROW(run_suite("nope", small()), UnknownName); }

TEST(Suites, CheckCounts) {
    // inclusions K <= H up to conjugacy: C1 has 1, C2 has 3, S3 has 8
    EXPECT_EQ(suite_adjunction({catalog_group("C1")}).checks.size(), 1u);
    EXPECT_EQ(suite_adjunction({catalog_group("C2")}).checks.size(), 3u);
    EXPECT_EQ(suite_frobenius({catalog_group("S3")}).checks.size(), 9u);
    // every ordered pair of subgroups of S3
    EXPECT_EQ(suite_iso_comma({catalog_group("S3")}).checks.size(), 36u);
}

TEST(Suites, FailuresAreRecordedWithPayload) {
    RunReport r{"demo", {}};
    detail::run_check(r, "ok", "x", [] { return json(nullptr); });
    detail::run_check(r, "bad", "y", [] { return json{{"why", 1}}; });
    detail::run_check(r, "throws", "z", []() -> json { throw Mismatch("boom"); });
    EXPECT_EQ(r.failures(), 2);
    EXPECT_FALSE(r.all_passed());
    auto j = to_json(r);
    EXPECT_EQ(j["total"], 3);
    EXPECT_EQ(j["failed"], 2);
    EXPECT_FALSE(j["checks"][0].contains("counterexample"));
    EXPECT_EQ(j["checks"][1]["counterexample"]["why"], 1);
    EXPECT_EQ(j["checks"][2]["counterexample"]["error"], "boom");
    EXPECT_FALSE(j["checks"][0].contains("ms"));
    EXPECT_TRUE(to_json(r, true)["checks"][0].contains("ms"));
}

TEST(Suites, SquarePayload) {
    // a passing square has no payload; the square data itself serializes with its apex
    auto g = catalog_group("S3");
    auto gg = Groupoid::from_group(g);
    auto c2 = generate(g, {g.find("s")});
    auto sq = double_coset_square(g, gg, c2, c2);
    auto payload = detail::mackey_failure(sq);
    EXPECT_TRUE(payload.is_null());
    auto d = detail::square_json(sq);
    EXPECT_TRUE(d["apex"].contains("compose"));
    EXPECT_EQ(d["gamma"]["components"].size(), 2u);
}

TEST(Suites, TriangleFailurePayload) {
    auto g = catalog_group("C2");
    auto gg = Groupoid::from_group(g);
    auto i = subgroup_inclusion(g, gg, trivial_subgroup(g)).incl;
    TriangleReport t{true, true, true, true, false};
    auto p = detail::triangle_failure(i, t, true);
    ASSERT_FALSE(p.is_null());
    EXPECT_EQ(p["frobenius"], false);
    EXPECT_TRUE(p["lower"].contains("middle"));
    EXPECT_TRUE(detail::triangle_failure(i, TriangleReport{true, true, true, true, true}, false).is_null());
}

TEST(Suites, ReportsAreDeterministic) {
    auto a = to_json(suite_pullover({catalog_group("S3")})).dump();
    auto b = to_json(suite_pullover({catalog_group("S3")})).dump();
    EXPECT_EQ(a, b);
}

TEST(Suites, PropertyCorpusHasDistinctClasses) {
    auto g = catalog_group("S3");
    auto gg = Groupoid::from_group(g);
    auto idx = pair_index(g);
    auto xb = crossed_burnside_ring(g, idx);
    auto c = detail::endo_corpus(g, gg, idx, xb, 14, 20240611u);
    ASSERT_EQ(c.cells.size(), 14u);
    int unequal = 0;
    for (size_t a = 0; a < c.cells.size(); ++a)
        for (size_t b = a + 1; b < c.cells.size(); ++b) unequal += !(c.coords[a] == c.coords[b]);
    EXPECT_GT(unequal, 0);
    // zero and the basis cells are pairwise distinct
    for (int k = 0; k <= idx.size(); ++k)
        for (int l = k + 1; l <= idx.size(); ++l) EXPECT_FALSE(equal(c.cells[k], c.cells[l]));
}
