#include <gtest/gtest.h>

#include <filesystem>
#include <regex>
#include <sstream>

#include "qalg/cli.hpp"
#include "qalg/dsl.hpp"
#include "test_util.hpp"

using namespace qalg;
namespace fs = std::filesystem;

namespace {

std::vector<fs::path> files_in(const std::string& rel)
{
    std::vector<fs::path> out;
    for (const auto& e : fs::directory_iterator(testutil::source_path(rel)))
        if (e.path().extension() == ".qalg")
            out.push_back(e.path());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<fs::path> round_trip_corpus()
{
    auto out = files_in("tests/data/parser/valid");
    out.push_back(testutil::source_path("algebras/ex1_m10.qalg"));
    out.push_back(testutil::source_path("algebras/ex2_n6.qalg"));
    return out;
}

struct Expected {
    int line = 0, col = 0;
    std::string kind;
};

Expected expected_of(const std::string& text)
{
    static const std::regex re(R"(^# expect (\d+):(\d+) (\w+))");
    std::smatch m;
    if (!std::regex_search(text, m, re))
        return {};
    return {std::stoi(m[1]), std::stoi(m[2]), m[3]};
}

}  // namespace

TEST(Parser, CorpusSizes)
{
    EXPECT_EQ(files_in("tests/data/parser/valid").size(), 20u);
    EXPECT_EQ(files_in("tests/data/parser/malformed").size(), 10u);
}

TEST(Parser, RoundTripFixpoint)
{
    for (const auto& f : round_trip_corpus()) {
        SCOPED_TRACE(f.filename().string());
        auto ast = dsl::parse_presentation(testutil::slurp(f));
        const std::string once = dsl::pretty_print(ast);
        auto again = dsl::parse_presentation(once);
        EXPECT_EQ(ast, again);
        EXPECT_EQ(dsl::pretty_print(again), once);
    }
}

TEST(Parser, CompiledRoundTripKeepsAlgebra)
{
    for (const auto& f : round_trip_corpus()) {
        SCOPED_TRACE(f.filename().string());
        auto a = dsl::load_algebra(testutil::slurp(f));
        const std::string text = dsl::pretty_print(dsl::to_ast(*a));
        auto b = dsl::load_algebra(text);
        EXPECT_EQ(a->dim(), b->dim());
        EXPECT_EQ(a->basis(), b->basis());
        EXPECT_EQ(a->field(), b->field());
        EXPECT_EQ(dsl::pretty_print(dsl::to_ast(*b)), text);
    }
}

TEST(Parser, MalformedFilesGivePositionedDiagnostics)
{
    for (const auto& f : files_in("tests/data/parser/malformed")) {
        SCOPED_TRACE(f.filename().string());
        const std::string text = testutil::slurp(f);
        const Expected want = expected_of(text);
        ASSERT_GT(want.line, 0) << "missing '# expect' header";
        try {
            dsl::load_algebra(text);
            ADD_FAILURE() << "accepted";
        } catch (const dsl::ParseError& e) {
            EXPECT_EQ(e.pos().line, want.line);
            EXPECT_EQ(e.pos().col, want.col);
            EXPECT_EQ(std::string(dsl::kind_name(e.kind())), want.kind);
        }
        std::ostringstream out, err;
        EXPECT_EQ(cli::run({"info", f.string()}, out, err), cli::kUsage);
        const std::string pos = ":" + std::to_string(want.line) + ":" + std::to_string(want.col) + ": " + want.kind;
        EXPECT_NE(err.str().find(pos), std::string::npos) << err.str();
    }
}

TEST(Parser, ExpectedTokensListed)
{
    try {
        dsl::parse_presentation("algebra x { field = 5 }");
        FAIL();
    } catch (const dsl::ParseError& e) {
        EXPECT_EQ(e.kind(), dsl::ParseError::Kind::SyntaxError);
        EXPECT_EQ(e.expected(), "';'");
        EXPECT_EQ(e.pos().col, 23);
    }
}

TEST(Parser, ModulusOverride)
{
    auto a = dsl::load_algebra(testutil::slurp(testutil::source_path("algebras/a2.qalg")), 7u);
    EXPECT_EQ(a->field().modulus(), 7u);
    EXPECT_THROW(dsl::load_algebra("algebra x { vertices = 1; }", 8u), dsl::ParseError);
}

TEST(Parser, DefaultFieldIs101)
{
    auto a = dsl::load_algebra("algebra x { vertices = 2; arrows { a: 1 -> 2; } }");
    EXPECT_EQ(a->field().modulus(), 101u);
}

TEST(Parser, OversizedInputRejected)
{
    EXPECT_THROW(dsl::parse_presentation("algebra x { vertices = 2000000000; }"), dsl::ParseError);
    EXPECT_THROW(dsl::load_algebra("algebra x { vertices = 1; arrows { a: 1 -> 1; b: 1 -> 1; } relations { a*a*a*a*a*a*a*a*a*a*a*a*a*a*a*a*a*a*a*a; } }"),
                 quiver::CompileError);
}

// Byte-level mutations of valid inputs: the loader either accepts or raises
// one of its documented errors, and the CLI answers 0 or 2.
TEST(Parser, MutationFuzz)
{
    Rng rng(31);
    const std::string alphabet = "{};:=*+-># \n\tabcxyz0123456789";
    auto corpus = round_trip_corpus();
    int accepted = 0, rejected = 0;
    for (int t = 0; t < 600; ++t) {
        std::string text = testutil::slurp(corpus[rng.below(corpus.size())]);
        const int edits = static_cast<int>(rng.range(1, 4));
        for (int e = 0; e < edits && !text.empty(); ++e) {
            const auto pos = rng.below(text.size());
            switch (rng.below(3)) {
            case 0:
                text.erase(pos, 1);
                break;
            case 1:
                text.insert(text.begin() + static_cast<std::ptrdiff_t>(pos), alphabet[rng.below(alphabet.size())]);
                break;
            default:
                text[pos] = alphabet[rng.below(alphabet.size())];
            }
        }
        try {
            dsl::load_algebra(text);
            ++accepted;
        } catch (const dsl::ParseError& e) {
            EXPECT_GE(e.pos().line, 1);
            EXPECT_GE(e.pos().col, 1);
            ++rejected;
        } catch (const quiver::CompileError&) {
            ++rejected;
        } catch (const std::exception& e) {
            ADD_FAILURE() << "unexpected " << e.what() << " on:\n" << text;
        }
    }
    EXPECT_GT(accepted, 0);
    EXPECT_GT(rejected, 0);
}
