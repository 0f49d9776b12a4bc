#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>

#include "json.hpp"
#include "qalg/cli.hpp"
#include "test_util.hpp"

using namespace qalg;
using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run qalg_run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string ex(const std::string& name)
{
    return testutil::source_path("algebras/" + name + ".qalg");
}

std::vector<std::string> keys(const json& j)
{
    std::vector<std::string> out;
    for (auto it = j.begin(); it != j.end(); ++it)
        out.push_back(it.key());
    return out;
}

class CiEnv {
public:
    explicit CiEnv(const char* value) { setenv("QALG_CI", value, 1); }
    ~CiEnv() { unsetenv("QALG_CI"); }
};

}  // namespace

TEST(VertexSelector, Forms)
{
    EXPECT_EQ(cli::parse_vertex_selector("3..5", 6), (std::vector<quiver::VertexId>{2, 3, 4}));
    EXPECT_EQ(cli::parse_vertex_selector("4,1,4", 6), (std::vector<quiver::VertexId>{0, 3}));
    EXPECT_EQ(cli::parse_vertex_selector("1,3..4", 6), (std::vector<quiver::VertexId>{0, 2, 3}));
    EXPECT_EQ(cli::parse_vertex_selector("all", 3), (std::vector<quiver::VertexId>{0, 1, 2}));
    EXPECT_TRUE(cli::parse_vertex_selector("none", 3).empty());
    EXPECT_ANY_THROW(cli::parse_vertex_selector("0", 3));
    EXPECT_ANY_THROW(cli::parse_vertex_selector("2..9", 3));
    EXPECT_ANY_THROW(cli::parse_vertex_selector("x", 3));
    EXPECT_ANY_THROW(cli::parse_vertex_selector("3..1", 3));
}

TEST(Cli, ExitCodes)
{
    EXPECT_EQ(qalg_run({"info", ex("ex1_m10")}).code, 0);
    EXPECT_EQ(qalg_run({}).code, 2);
    EXPECT_EQ(qalg_run({"frobnicate"}).code, 2);
    EXPECT_EQ(qalg_run({"info", "/nonexistent.qalg"}).code, 2);
    EXPECT_EQ(qalg_run({"bounds", ex("ex1_m10"), "--V", "1..3"}).code, 2);
    EXPECT_EQ(qalg_run({"bounds", ex("ex1_m10"), "--V", "13"}).code, 2);
    EXPECT_EQ(qalg_run({"pd", ex("ex2_n6"), "--cutoff", "2"}).code, 3);
    EXPECT_EQ(qalg_run({"syzcheck", ex("ex2_n6"), "--V", "none", "--seed", "1", "--samples", "1"}).code, 3);
    EXPECT_EQ(qalg_run({"pd", ex("ex2_n6"), "--module", "Q(1)"}).code, 2);
    EXPECT_EQ(qalg_run({"info", ex("ex2_n6"), "--format", "yaml"}).code, 2);
}

TEST(Cli, CiModeRequiresSeed)
{
    CiEnv ci("1");
    EXPECT_EQ(qalg_run({"syzcheck", ex("ex1_m10"), "--V", "3..9"}).code, 2);
    EXPECT_EQ(qalg_run({"fuzz", "--algebras", "1", "--count", "1"}).code, 2);
    EXPECT_EQ(qalg_run({"syzcheck", ex("ex1_m10"), "--V", "3..9", "--seed", "4", "--samples", "2"}).code, 0);
}

TEST(Cli, BoundsJsonSchema)
{
    auto r = qalg_run({"bounds", ex("ex1_m10"), "--V", "3..9", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = json::parse(r.out);
    EXPECT_EQ(keys(j), (std::vector<std::string>{"algebra", "best_bound", "bounds", "ll_tv", "pd_table", "v_set"}));
    EXPECT_EQ(j["best_bound"], 4);
    EXPECT_EQ(j["v_set"], json({3, 4, 5, 6, 7, 8, 9}));
    EXPECT_EQ(j["pd_table"].size(), 12u);
    EXPECT_EQ(j["bounds"]["pd_v"], 1);
}

TEST(Cli, PdJson)
{
    auto r = qalg_run({"pd", ex("ex2_n6"), "--format", "json", "--module", "S(1)+P(2)"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = json::parse(r.out);
    EXPECT_EQ(j["gldim"]["pd"], 5);
    EXPECT_EQ(j["pd_table"][0]["pd"], 5);
}

TEST(Cli, SearchReportsStrategy)
{
    auto r = qalg_run({"bounds", ex("ex2_n6"), "--search", "--strategy", "greedy", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    auto j = json::parse(r.out);
    EXPECT_EQ(j["bounds"]["search"]["strategy"], "greedy");
    EXPECT_LE(j["best_bound"].get<int>(), 5);
}

TEST(Cli, JsonByteDeterminism)
{
    const std::vector<std::vector<std::string>> commands = {
        {"info", ex("ex1_m10"), "--format", "json"},
        {"pd", ex("ex1_m10"), "--format", "json"},
        {"llt", ex("ex2_n6"), "--V", "2..6", "--format", "json"},
        {"bounds", ex("ex2_n6"), "--V", "2..6", "--format", "json"},
        {"bounds", ex("ex1_m10"), "--search", "--format", "json"},
        {"syzcheck", ex("ex1_m10"), "--V", "3..9", "--seed", "8", "--samples", "5", "--format", "json"},
        {"fuzz", "--seed", "3", "--algebras", "2", "--count", "2", "--format", "json"},
    };
    for (const auto& c : commands) {
        auto a = qalg_run(c), b = qalg_run(c);
        EXPECT_EQ(a.code, 0) << c[0] << ": " << a.err;
        EXPECT_EQ(a.out, b.out) << c[0];
        EXPECT_TRUE(json::accept(a.out)) << c[0];
    }
}
