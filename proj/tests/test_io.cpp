#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "mackey2/io.hpp"

using namespace mackey2;
namespace fs = std::filesystem;

namespace {

fs::path temp_dir(const std::string& name) {
    auto d = fs::temp_directory_path() / ("mackey2_io_" + name + "_" + std::to_string(::getpid()));
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
}

void write(const fs::path& p, const std::string& s) { std::ofstream(p) << s; }

bool same_table(const Group& a, const Group& b) {
    if (a.order() != b.order()) return false;
    for (int x = 0; x < a.order(); ++x)
        for (int y = 0; y < a.order(); ++y)
            if (a.mul(x, y) != b.mul(x, y)) return false;
    return true;
}

}  // namespace

TEST(GroupJson, RoundTripCatalog) {
    for (const auto& n : catalog_names()) {
        auto g = catalog_group(n);
        auto h = group_from_json(json::parse(to_json(g).dump()));
        EXPECT_TRUE(same_table(g, h)) << n;
        EXPECT_EQ(h.label(), g.label());
        EXPECT_EQ(h.name(1 % g.order()), g.name(1 % g.order()));
    }
}

TEST(GroupJson, FlatTableAndDefaults) {
    auto g = group_from_json(json::parse(R"({"order": 3, "table": [0,1,2, 1,2,0, 2,0,1]})"));
    EXPECT_EQ(g.order(), 3);
    EXPECT_EQ(g.identity(), 0);
    EXPECT_EQ(g.mul(2, 2), 1);
    EXPECT_EQ(iso_type_name(g), "C3");
}

TEST(GroupJson, MalformedRejected) {
    EXPECT_THROW(group_from_json(json::parse(R"({"order": 2, "table": [[0,1],[1,1]]})")), MalformedGroup);
    EXPECT_THROW(group_from_json(json::parse(R"({"order": 2, "table": [[0,1]]})")), MalformedGroup);
    EXPECT_THROW(group_from_json(json::parse(R"({"table": [[0]]})")), MalformedGroup);
    // not associative: a quasigroup of order 3 with identity 0
    EXPECT_THROW(group_from_json(json::parse(R"({"order": 3, "table": [[0,1,2],[1,0,2],[2,2,0]]})")), MalformedGroup);
}

TEST(GroupoidJson, RoundTripTransport) {
    auto g = catalog_group("S3");
    auto gg = Groupoid::from_group(g);
    auto t = transport_groupoid(coset_set(g, generate(g, {g.find("s")})), gg);
    auto j = to_json(*t.gpd);
    EXPECT_EQ(j["objects"], 3);
    EXPECT_EQ(j["morphisms"].size(), 18u);
    EXPECT_EQ(j["compose"].size(), 18u * 6u);
    auto back = groupoid_from_json(json::parse(j.dump()));
    EXPECT_TRUE(back->same(*t.gpd));
}

TEST(GroupoidJson, MalformedRejected) {
    // two objects joined by an arrow 2 : 0 -> 1 with inverse 3
    auto good = json::parse(R"({"objects": 2, "morphisms": [[0,0],[1,1],[0,1],[1,0]],
        "compose": [[0,0,0],[1,1,1],[2,0,2],[1,2,2],[3,1,3],[0,3,3],[3,2,0],[2,3,1]],
        "identities": [0,1], "inverses": [0,1,3,2]})");
    EXPECT_EQ(groupoid_from_json(good)->objects(), 2);
    auto missing = good;
    missing["compose"].erase(missing["compose"].size() - 1);
    EXPECT_THROW(groupoid_from_json(missing), MalformedGroup);
    auto bad_inverse = good;
    bad_inverse["inverses"] = {0, 1, 2, 3};
    EXPECT_THROW(groupoid_from_json(bad_inverse), MalformedGroup);
    auto not_composable = good;
    not_composable["compose"].push_back({2, 2, 2});
    EXPECT_THROW(groupoid_from_json(not_composable), MalformedGroup);
    auto wrong = good;
    wrong["compose"][6] = {3, 2, 1};  // 3 o 2 should be the identity of 0
    EXPECT_THROW(groupoid_from_json(wrong), MalformedGroup);
}

TEST(Resolve, CatalogThenEnvThenFile) {
    auto d = temp_dir("resolve");
    write(d / "Z5.json", R"({"order": 5, "table": [[0,1,2,3,4],[1,2,3,4,0],[2,3,4,0,1],[3,4,0,1,2],[4,0,1,2,3]]})");
    // a file named like a catalog group must not shadow the built-in
    write(d / "S3.json", R"({"order": 1, "table": [[0]]})");
    ::setenv("MACKEY2_CATALOG", d.c_str(), 1);
    auto z5 = resolve_group("Z5");
    EXPECT_EQ(z5.order(), 5);
    EXPECT_EQ(z5.label(), "Z5");
    EXPECT_EQ(resolve_group("S3").order(), 6);
    ::unsetenv("MACKEY2_CATALOG");
    EXPECT_THROW(resolve_group("Z5"), UnknownName);
    EXPECT_EQ(resolve_group((d / "Z5.json").string()).order(), 5);
    // a one-object groupoid file resolves to its group
    write(d / "c2gpd.json", to_json(*Groupoid::from_group(catalog_group("C2"))).dump());
    EXPECT_EQ(resolve_group((d / "c2gpd.json").string()).order(), 2);
    EXPECT_EQ(resolve_groupoid((d / "c2gpd.json").string())->objects(), 1);
    write(d / "broken.json", "{not json");
    EXPECT_THROW(resolve_group((d / "broken.json").string()), MalformedGroup);
    fs::remove_all(d);
}

TEST(RingText, S3Entries) {
    auto r = burnside_ring(catalog_group("S3"));
    auto t = ring_text(r);
    EXPECT_NE(t.find("[S3/1] + [S3/C2]"), std::string::npos);
    EXPECT_EQ(std::count(t.begin(), t.end(), '\n'), 5);
    auto j = to_json(r);
    EXPECT_EQ(j["basis"].size(), 4u);
    EXPECT_EQ(j["unit"], 3);
    EXPECT_EQ(ring_text(burnside_ring(catalog_group("C1"))), "B(C1)   | [C1/C1]\n[C1/C1] | [C1/C1]\n");
}

TEST(RingText, FormatElement) {
    std::vector<std::string> b{"x", "y", "z"};
    EXPECT_EQ(format_element(b, std::vector<mpq_class>{0, 0, 0}), "0");
    EXPECT_EQ(format_element(b, std::vector<mpq_class>{-1, mpq_class(1, 2), 3}), "-x + 1/2*y + 3z");
    EXPECT_EQ(format_element(b, std::vector<long>{0, -2, 1}), "-2y + z");
}

TEST(MackeyJson, HasAllMatrices) {
    auto g = catalog_group("S3");
    auto m = burnside_mackey_functor(g);
    auto j = to_json(m);
    EXPECT_EQ(j["values"].size(), m.subgroups.size());
    EXPECT_EQ(j["R"].size(), m.res.size());
    EXPECT_EQ(j["I"].size(), m.ind.size());
    EXPECT_EQ(j["c"].size(), m.subgroups.size() * 6);
}
