#include <gtest/gtest.h>

#include "oracles/path_enumerator.hpp"
#include "qalg/algebra.hpp"
#include "qalg/harness.hpp"
#include "test_util.hpp"

using namespace qalg;
using quiver::AlgebraElement;

namespace {

// The example quivers written out by hand from their descriptions, 0-based.
struct RawExample {
    int vertices;
    std::vector<oracle::RawArrow> arrows;
    std::vector<std::vector<int>> zero_paths;
};

RawExample raw_ex1()
{
    // loop a1 at 1, chain a2..a10 from 1 to 10, a11: 1 -> 11, a12: 1 -> 12
    RawExample r{12, {}, {}};
    r.arrows.push_back({0, 0});
    for (int v = 0; v < 9; ++v)
        r.arrows.push_back({v, v + 1});
    r.arrows.push_back({0, 10});
    r.arrows.push_back({0, 11});
    r.zero_paths = {{0, 0}, {0, 10}, {0, 11}, {0, 1}, {1, 2, 3, 4, 5, 6, 7, 8, 9}};
    return r;
}

RawExample raw_ex2()
{
    RawExample r{13, {}, {}};
    for (int v = 0; v < 5; ++v)
        r.arrows.push_back({v, v + 1});  // a1..a5
    r.arrows.push_back({0, 6});          // a7
    for (int v = 6; v < 10; ++v)
        r.arrows.push_back({v, v + 1});  // a8..a11
    r.arrows.push_back({0, 11});         // a12
    r.arrows.push_back({0, 12});         // a13
    r.zero_paths = {{5, 6}, {6, 7}, {7, 8}, {8, 9}};
    return r;
}

AlgebraElement random_element(const quiver::Algebra& a, Rng& rng)
{
    AlgebraElement x = a.zero();
    for (auto& c : x)
        c = static_cast<linalg::Scalar>(rng.below(a.field().modulus()));
    return x;
}

std::vector<oracle::RawRelation> raw_relations(const dsl::Presentation& p)
{
    std::vector<oracle::RawRelation> out;
    for (const auto& r : p.relations) {
        oracle::RawRelation rr;
        for (const auto& t : r.terms)
            rr.push_back({static_cast<std::int64_t>(t.coeff), t.path.arrows});
        out.push_back(std::move(rr));
    }
    return out;
}

std::vector<oracle::RawArrow> raw_arrows(const quiver::Quiver& q)
{
    std::vector<oracle::RawArrow> out;
    for (const auto& a : q.arrows())
        out.push_back({a.source, a.target});
    return out;
}

}  // namespace

TEST(AlgebraOracle, ExampleOneDimension)
{
    auto r = raw_ex1();
    const long expected = oracle::monomial_dim(r.vertices, r.arrows, r.zero_paths);
    EXPECT_EQ(expected, 59);
    auto a = testutil::example("ex1_m10");
    EXPECT_EQ(static_cast<long>(a->dim()), expected);
    EXPECT_EQ(quiver::loewy_length_of_algebra(*a), 9);
}

TEST(AlgebraOracle, ExampleTwoDimension)
{
    auto r = raw_ex2();
    const long expected = oracle::monomial_dim(r.vertices, r.arrows, r.zero_paths);
    EXPECT_EQ(expected, 35);
    auto a = testutil::example("ex2_n6");
    EXPECT_EQ(static_cast<long>(a->dim()), expected);
    EXPECT_EQ(quiver::loewy_length_of_algebra(*a), 6);
}

TEST(AlgebraOracle, PathAlgebraOfA2)
{
    auto a = testutil::example("a2");
    EXPECT_EQ(oracle::monomial_dim(2, {{0, 1}}, {}), 3);
    EXPECT_EQ(a->dim(), 3u);
    EXPECT_EQ(quiver::loewy_length_of_algebra(*a), 2);
}

TEST(AlgebraOracle, TruncatedEnumeratorAgreesOnExamples)
{
    auto r1 = raw_ex1();
    std::vector<oracle::RawRelation> rel1;
    for (const auto& z : r1.zero_paths)
        rel1.push_back({{1, z}});
    // Rad^10 lies in the ideal (Loewy length 9), so truncating at 12 is exact.
    EXPECT_EQ(oracle::truncated_dim(r1.vertices, r1.arrows, rel1, 12, 101), 59);
}

TEST(AlgebraOracle, RandomAlgebrasMatchEnumerator)
{
    harness::GenParams params;
    params.max_algebra_dim = 60;
    for (std::uint64_t k = 0; k < 25; ++k) {
        auto p = harness::random_presentation(params, derive_seed(7, k));
        auto a = dsl::compile_presentation(p);
        // every path of the forced length is a relation, so R^L lies in I
        const long expected = oracle::truncated_dim(p.quiver.num_vertices(), raw_arrows(p.quiver), raw_relations(p),
                                                    params.forced_length, p.field.modulus());
        EXPECT_EQ(static_cast<long>(a->dim()), expected) << "algebra seed index " << k;
    }
}

TEST(AlgebraOracle, NonMonomialRelation)
{
    // commutative square 1 -> 2 -> 4, 1 -> 3 -> 4 with ab = cd: dim 4 + 4 + 1
    auto a = dsl::load_algebra(R"(algebra sq { field = 7; vertices = 4;
        arrows { a: 1 -> 2; b: 2 -> 4; c: 1 -> 3; d: 3 -> 4; }
        relations { a*b - c*d; } })");
    EXPECT_FALSE(a->monomial());
    EXPECT_EQ(a->dim(), 9u);
    EXPECT_EQ(oracle::truncated_dim(4, {{0, 1}, {1, 3}, {0, 2}, {2, 3}}, {{{1, {0, 1}}, {-1, {2, 3}}}}, 4, 7), 9);
}

TEST(AlgebraStructure, AssociativityAndUnit)
{
    Rng rng(23);
    for (const char* name : {"a2", "ex1_m10", "ex2_n6"}) {
        auto a = testutil::example(name);
        const auto one = a->unit();
        for (int t = 0; t < 10; ++t) {
            auto x = random_element(*a, rng), y = random_element(*a, rng), z = random_element(*a, rng);
            EXPECT_EQ(a->multiply(a->multiply(x, y), z), a->multiply(x, a->multiply(y, z))) << name;
            EXPECT_EQ(a->multiply(one, x), x) << name;
            EXPECT_EQ(a->multiply(x, one), x) << name;
        }
    }
}

TEST(AlgebraStructure, RandomAlgebrasAssociative)
{
    harness::GenParams params;
    Rng rng(29);
    for (std::uint64_t k = 0; k < 10; ++k) {
        auto a = harness::random_algebra(params, derive_seed(3, k));
        for (int t = 0; t < 5; ++t) {
            auto x = random_element(*a, rng), y = random_element(*a, rng), z = random_element(*a, rng);
            EXPECT_EQ(a->multiply(a->multiply(x, y), z), a->multiply(x, a->multiply(y, z)));
            EXPECT_EQ(a->multiply(a->unit(), x), x);
        }
    }
}

TEST(AlgebraStructure, BasisClosedUnderPrefixesAndSorted)
{
    for (const char* name : {"ex1_m10", "ex2_n6"}) {
        auto a = testutil::example(name);
        const auto& b = a->basis();
        for (std::size_t i = 1; i < b.size(); ++i) {
            auto key = [](const quiver::Path& p) { return std::tuple(p.source, p.target, p.length()); };
            EXPECT_LE(key(b[i - 1]), key(b[i]));
        }
        for (const auto& p : b) {
            if (p.length() < 2)
                continue;
            auto prefix = quiver::make_path(a->quiver(), {p.arrows.begin(), p.arrows.end() - 1});
            ASSERT_TRUE(prefix);
            EXPECT_TRUE(a->basis_index(*prefix)) << name;
        }
    }
}

TEST(AlgebraStructure, RadicalIsTwoSided)
{
    auto a = testutil::example("ex1_m10");
    auto rad = quiver::radical_ideal(*a);
    EXPECT_TRUE(rad.two_sided);
    EXPECT_EQ(rad.dim(), a->dim() - 12);
    EXPECT_TRUE(quiver::is_two_sided_ideal(*a, rad.basis));
}

TEST(AlgebraCompile, RejectsNonAdmissible)
{
    // a free loop never dies
    EXPECT_THROW(dsl::load_algebra("algebra l { field = 5; vertices = 1; arrows { x: 1 -> 1; } }"),
                 quiver::CompileError);
}
