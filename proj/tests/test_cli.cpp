#include "singram/graph6.hpp"
#include "singram/json_io.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace fs = std::filesystem;
using namespace singram;

namespace {

struct Result
{
    int code = -1;
    std::string out;
};

auto scratch(const std::string & name) -> fs::path
{
    auto dir = fs::temp_directory_path() / ("singram_cli_" + name);
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

auto run(const std::string & args, const std::string & env = "") -> Result
{
    std::string cmd = env + (env.empty() ? "" : " ") + SINGRAM_CLI + std::string(" ") + args + " 2>&1";
    Result r;
    FILE * p = popen(cmd.c_str(), "r");
    if (! p)
        return r;
    char buf[4096];
    while (std::fgets(buf, sizeof buf, p))
        r.out += buf;
    const int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

auto slurp(const fs::path & path) -> std::string
{
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

auto read_json(const fs::path & path) -> nlohmann::json { return nlohmann::json::parse(slurp(path)); }

} // namespace

TEST(Cli, BuildConstructions)
{
    auto dir = scratch("build");
    auto r = run("--out " + dir.string() + " build paw30");
    EXPECT_EQ(r.code, 0) << r.out;
    auto rep = read_json(dir / "build_paw30.json");
    EXPECT_EQ(rep["order"], 30);
    EXPECT_TRUE(rep["verifiedSr"].get<bool>());
    EXPECT_TRUE(rep["classesMatch"].get<bool>());
    EXPECT_EQ(g6_decode(slurp(dir / "build_paw30.g6")).order(), 30);

    EXPECT_EQ(run("--out " + dir.string() + " build theorem2 --n 4").code, 0);
    EXPECT_EQ(g6_decode(slurp(dir / "build_theorem2_n4.g6")).order(), 9);
    EXPECT_EQ(run("--out " + dir.string() + " build hk --k 3").code, 0);
    EXPECT_EQ(g6_decode(slurp(dir / "build_hk_k3.g6")).order(), 12);

    EXPECT_EQ(run("--out " + dir.string() + " build nosuch").code, 2);
    EXPECT_EQ(run("--out " + dir.string() + " build hk").code, 2);
    EXPECT_EQ(run("--out " + dir.string() + " build star_odd --s 4").code, 2);
}

TEST(Cli, CheckExitCodes)
{
    auto dir = scratch("check");
    ASSERT_EQ(run("--out " + dir.string() + " build k3_21").code, 0);
    EXPECT_EQ(run("--out " + dir.string() + " check " + (dir / "build_k3_21.g6").string() + " --f1 K3").code, 0);

    std::ofstream(dir / "k4.g6") << g6_encode(complete_graph(4)) << "\n";
    auto v = run("--out " + dir.string() + " check " + (dir / "k4.g6").string() + " --f1 K3");
    EXPECT_EQ(v.code, 1);
    EXPECT_NE(v.out.find("singular K3"), std::string::npos);
    auto verdict = read_json(dir / "check_k4.json");
    EXPECT_FALSE(verdict["results"][0]["sr"].get<bool>());
    EXPECT_EQ(verdict["results"][0]["vertices"].size(), 3U);

    auto full = g6_encode(build_k3_21().graph);
    std::ofstream(dir / "trunc.g6") << full.substr(0, full.size() / 2) << "\n";
    EXPECT_EQ(run("--out " + dir.string() + " check " + (dir / "trunc.g6").string() + " --f1 K3").code, 2);
    EXPECT_EQ(run("--out " + dir.string() + " check " + (dir / "missing.g6").string() + " --f1 K3").code, 2);
    EXPECT_EQ(run("--out " + dir.string() + " check " + (dir / "k4.g6").string() + " --f1 X9").code, 2);
}

TEST(Cli, CertifyCompleteAndBudget)
{
    auto dir = scratch("certify");
    auto r = run("--out " + dir.string() + " certify --f1 P4");
    EXPECT_EQ(r.code, 0) << r.out;
    auto cert = read_json(dir / "certify_P4_P4_k1.json");
    EXPECT_EQ(cert["value"], 13);
    EXPECT_TRUE(cert["complete"].get<bool>());
    EXPECT_EQ(cert["sweep"].back()["method"], "profile-infeasible");

    auto k = run("--out " + dir.string() + " certify --f1 K3 --f2 K13");
    EXPECT_EQ(k.code, 0) << k.out;
    EXPECT_EQ(read_json(dir / "certify_K3_K13_k1.json")["value"], 29);

    auto b = run("--out " + dir.string() + " certify --f1 K3 --f2 K13 --node-budget 10");
    EXPECT_EQ(b.code, 3) << b.out;
    auto partial = read_json(dir / "certify_K3_K13_k1.json");
    EXPECT_FALSE(partial["complete"].get<bool>());
    EXPECT_EQ(partial["value"], 29);
    EXPECT_EQ(partial["upper"], 31);
}

TEST(Cli, Turan)
{
    auto dir = scratch("turan");
    auto r = run("--out " + dir.string() + " turan --n 6 --pattern K3 --mode exact");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(slurp(dir / "turan_exact_K3_n6.csv").find("\n6,1,K3,13,exhaustive,"), std::string::npos);
    EXPECT_EQ(run("--out " + dir.string() + " turan --n 8 --pattern K3 --mode gap").code, 0);
    EXPECT_EQ(read_json(dir / "turan_gap_K3_n8.json")[0]["gap"], 2);
    auto big = run("--out " + dir.string() + " turan --n 12 --pattern K3 --mode exact");
    EXPECT_EQ(big.code, 2);
    EXPECT_NE(big.out.find("lower"), std::string::npos);
    EXPECT_EQ(run("--out " + dir.string() + " turan --n 12 --pattern K3 --mode lower").code, 0);
}

TEST(Cli, Enum)
{
    auto dir = scratch("enum");
    EXPECT_EQ(run("--out " + dir.string() + " enum --n 5 --f1 K3 --f2 K13").code, 0);
    auto side = read_json(dir / "catalog_n5_K3_K13.json");
    EXPECT_EQ(side["count"], 2);
    auto cat = read_g6_file((dir / "catalog_n5_K3_K13.g6").string());
    ASSERT_EQ(cat.size(), 2U);
    auto s = run("--out " + dir.string() + " enum --stability C5 --f1 K3");
    EXPECT_EQ(s.code, 0);
    EXPECT_NE(s.out.find(": stable"), std::string::npos);
    auto u = run("--out " + dir.string() + " enum --stability K23 --f1 K3 --f2 K13");
    EXPECT_EQ(u.code, 0);
    EXPECT_NE(u.out.find("unstable"), std::string::npos);
    EXPECT_NE(u.out.find("vertex"), std::string::npos);
    EXPECT_EQ(run("--out " + dir.string() + " enum --n 11 --f1 K3").code, 2);
    EXPECT_EQ(run("--out " + dir.string() + " enum --stability K4 --f1 K3").code, 2);
}

TEST(Cli, ManifestAndIdempotence)
{
    auto a = scratch("idem_a");
    auto b = scratch("idem_b");
    for (const auto & dir : {a, b}) {
        ASSERT_EQ(run("certify --f1 K3 --no-timing", "SINGRAM_OUT=" + dir.string()).code, 0);
        ASSERT_EQ(run("build star_odd --s 5", "SINGRAM_OUT=" + dir.string()).code, 0);
    }
    for (const char * f : {"certify_K3_K3_k1.json", "build_star_odd_s5.json", "build_star_odd_s5.g6"})
        EXPECT_EQ(slurp(a / f), slurp(b / f)) << f;
    auto m = read_json(a / "certify_K3_K3_k1.manifest.json");
    EXPECT_EQ(m["exitCode"], 0);
    ASSERT_EQ(m["outputs"].size(), 1U);
    EXPECT_EQ(m["outputs"][0]["fnv1a64"], file_digest(a / "certify_K3_K3_k1.json"));
    EXPECT_EQ(m["wallMillis"], 0);
}

TEST(Cli, UsageErrors)
{
    EXPECT_EQ(run("").code, 2);
    EXPECT_EQ(run("frobnicate").code, 2);
    EXPECT_EQ(run("--version").code, 0);
}
