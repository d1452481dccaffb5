#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

struct Result {
    int status = -1;
    std::string out;
};

Result run(const std::string& args, const std::string& env = "") {
    std::string cmd = env + (env.empty() ? "" : " ") + MACKEY2_CLI_PATH + std::string(" ") + args + " 2>/dev/null";
    Result r;
    FILE* p = ::popen(cmd.c_str(), "r");
    if (!p) return r;
    std::array<char, 4096> buf;
    size_t n;
    while ((n = std::fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
    int st = ::pclose(p);
    r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

int lines(const std::string& s) { return static_cast<int>(std::count(s.begin(), s.end(), '\n')); }

}  // namespace

TEST(Cli, RingS3) {
    auto r = run("ring S3");
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(lines(r.out), 5);
    EXPECT_NE(r.out.find("[S3/C2] | 3[S3/1] | [S3/1] + [S3/C2]"), std::string::npos) << r.out;
}

TEST(Cli, RingC2Crossed) {
    auto r = run("ring C2 --crossed");
    EXPECT_EQ(r.status, 0);
    EXPECT_NE(r.out.find("End(Id) ≅ xB: OK"), std::string::npos);
    // the row of the generator pair class squares to [C2,e]
    EXPECT_NE(r.out.find("[C2,r] | [1,r]  | [1,e]  | [C2,r] | [C2,e]"), std::string::npos) << r.out;
}

TEST(Cli, RingC1AndJson) {
    EXPECT_EQ(lines(run("ring C1").out), 2);
    auto r = run("ring S3 --format json --rational");
    ASSERT_EQ(r.status, 0);
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["ring"]["basis"].size(), 4u);
    EXPECT_EQ(j["rational_idempotents"].size(), 4u);
    EXPECT_EQ(j["ring"]["constants"][1][1], (nlohmann::json{1, 1, 0, 0}));
}

TEST(Cli, VerifyExitCodes) {
    auto r = run("verify frobenius C2 S3");
    EXPECT_EQ(r.status, 0);
    EXPECT_NE(r.out.find("frobenius: 12/12 checks passed"), std::string::npos) << r.out;
    EXPECT_EQ(run("verify mackey-formula C1").status, 0);
    EXPECT_EQ(run("verify strict-mackey S3").status, 0);
    EXPECT_NE(run("verify nosuchsuite C1").status, 0);
    EXPECT_NE(run("verify adjunction NoSuchGroup").status, 0);
    auto j = nlohmann::json::parse(run("verify k0 C2 --format json").out);
    EXPECT_EQ(j["suite"], "k0");
    EXPECT_EQ(j["failed"], 0);
}

TEST(Cli, Blocks) {
    auto q = run("blocks S3 --coeff Q --target burnside");
    EXPECT_EQ(q.status, 0);
    EXPECT_NE(q.out.find("4 primitive idempotents over Q"), std::string::npos) << q.out;
    auto z = run("blocks S3 --coeff Z --target burnside");
    EXPECT_NE(z.out.find("1 block "), std::string::npos) << z.out;
    auto c = run("blocks C1 --coeff Z --target crossed --format json");
    EXPECT_EQ(nlohmann::json::parse(c.out)["idempotents"].size(), 1u);
    EXPECT_NE(run("blocks S3 --coeff R").status, 0);
}

TEST(Cli, Compose) {
    auto r = run("compose S3 res:s ind:s");
    EXPECT_EQ(r.status, 0);
    EXPECT_NE(r.out.find("2 components"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("|Aut| = 2"), std::string::npos);
    EXPECT_NE(r.out.find("|Aut| = 1"), std::string::npos);
    EXPECT_EQ(run("compose S3 ind:s ind:s").status, 2);
    EXPECT_EQ(run("compose S3 res:s ind:s --dot").out.rfind("digraph", 0), 0u);
}

TEST(Cli, GroupoidDump) {
    auto r = run("groupoid dump C3");
    EXPECT_EQ(r.out.rfind("digraph", 0), 0u);
    EXPECT_EQ(lines(r.out), 5);
    auto j = nlohmann::json::parse(run("groupoid dump S3 --format json").out);
    EXPECT_EQ(j["morphisms"].size(), 6u);
}

TEST(Cli, Deterministic) {
    for (const char* args : {"ring D4 --crossed", "verify pullover S3 --format json", "blocks A4 --coeff Q"})
        EXPECT_EQ(run(args).out, run(args).out) << args;
}

TEST(Cli, CatalogDirectory) {
    auto d = fs::temp_directory_path() / ("mackey2_cli_" + std::to_string(::getpid()));
    fs::create_directories(d);
    std::ofstream(d / "Z2xZ2.json") << R"({"order": 4, "table": [[0,1,2,3],[1,0,3,2],[2,3,0,1],[3,2,1,0]]})";
    auto r = run("ring Z2xZ2", "MACKEY2_CATALOG=" + d.string());
    EXPECT_EQ(r.status, 0);
    EXPECT_EQ(lines(r.out), 6);
    EXPECT_NE(run("ring Z2xZ2").status, 0);
    EXPECT_EQ(run("ring " + (d / "Z2xZ2.json").string()).status, 0);
    fs::remove_all(d);
}
