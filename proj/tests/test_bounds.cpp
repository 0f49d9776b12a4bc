#include <gtest/gtest.h>

#include "qalg/bounds.hpp"
#include "qalg/harness.hpp"
#include "test_util.hpp"

using namespace qalg;
using torsion::make_vertex_set;

namespace {

std::vector<quiver::VertexId> range(int lo, int hi)
{
    std::vector<quiver::VertexId> out;
    for (int v = lo; v <= hi; ++v)
        out.push_back(v - 1);
    return out;
}

std::optional<int> value(const bounds::BoundReport& r, const std::string& key)
{
    const auto* e = r.entry(key);
    return e ? e->value : std::nullopt;
}

}  // namespace

TEST(Bounds, ExampleOne)
{
    auto a = testutil::example("ex1_m10");
    auto r = bounds::derived_dim_bounds(a, make_vertex_set(12, range(3, 9)), torsion::default_cutoff(*a));
    EXPECT_EQ(r.pd_v.value, 1);
    EXPECT_EQ(r.ll_tv.value, 2);
    EXPECT_EQ(value(r, "loewy"), 8);
    EXPECT_EQ(value(r, "gldim"), std::nullopt);
    EXPECT_FALSE(r.entry("gldim")->note.empty());
    EXPECT_EQ(value(r, "layer_product"), 7);
    EXPECT_EQ(value(r, "layer_sum"), 7);
    EXPECT_EQ(value(r, "layer_two"), 4);
    EXPECT_EQ(r.best, 4);
    EXPECT_EQ(r.flags.syzygy_finite_k, 3);
    EXPECT_TRUE(r.flags.big_findim_finite);
    EXPECT_TRUE(r.flags.psi_dim_finite);
}

TEST(Bounds, ExampleTwo)
{
    auto a = testutil::example("ex2_n6");
    auto r = bounds::derived_dim_bounds(a, make_vertex_set(13, range(2, 6)), torsion::default_cutoff(*a));
    EXPECT_EQ(value(r, "loewy"), 5);
    EXPECT_EQ(value(r, "gldim"), 5);
    EXPECT_EQ(value(r, "layer_product"), 7);
    EXPECT_EQ(value(r, "layer_sum"), 7);
    EXPECT_EQ(value(r, "layer_two"), 4);
    EXPECT_EQ(r.best, 4);
}

TEST(Bounds, EmptyVReducesToLoewyBounds)
{
    auto a = testutil::example("ex2_n6");
    auto r = bounds::derived_dim_bounds(a, torsion::VertexSet(13, false), torsion::default_cutoff(*a));
    // pd of the empty set is -1 by convention, ll = LL = 6
    EXPECT_EQ(r.ll_tv.value, 6);
    EXPECT_EQ(value(r, "layer_two"), std::nullopt);
    EXPECT_EQ(r.best, 5);
}

TEST(Bounds, InfiniteVertexRejected)
{
    auto a = testutil::example("ex1_m10");
    try {
        bounds::derived_dim_bounds(a, make_vertex_set(12, range(1, 3)), torsion::default_cutoff(*a));
        FAIL();
    } catch (const bounds::VNotInFiniteProjDim& e) {
        EXPECT_EQ(e.offending(), std::vector<quiver::VertexId>{0});
    }
}

TEST(Bounds, SearchFindsBestFour)
{
    for (const char* name : {"ex1_m10", "ex2_n6"}) {
        auto a = testutil::example(name);
        auto c = torsion::classify_simples(a, torsion::default_cutoff(*a));
        auto ex = bounds::best_v_search(a, c, bounds::Strategy::Exhaustive);
        auto gr = bounds::best_v_search(a, c, bounds::Strategy::Greedy);
        EXPECT_EQ(ex.report.best, 4) << name;
        EXPECT_LE(ex.report.best, gr.report.best) << name;
        EXPECT_GT(ex.evaluated, gr.evaluated) << name;
    }
}

TEST(Bounds, SearchCapEnforced)
{
    auto a = testutil::example("ex2_n6");
    auto c = torsion::classify_simples(a, torsion::default_cutoff(*a));
    EXPECT_THROW(bounds::best_v_search(a, c, bounds::Strategy::Exhaustive, 5), bounds::SearchSpaceTooLarge);
}

TEST(Bounds, BestNeverExceedsLoewyMinusOneOrGldim)
{
    harness::GenParams params;
    for (std::uint64_t k = 0; k < 15; ++k) {
        auto a = harness::random_algebra(params, derive_seed(67, k));
        auto c = torsion::classify_simples(a, std::min(torsion::default_cutoff(*a), 32));
        if (!c.determined())
            continue;
        Rng rng(k);
        auto v = c.finite;
        for (std::size_t i = 0; i < v.size(); ++i)
            v[i] = v[i] && rng.chance(1, 2);
        auto r = bounds::derived_dim_bounds(a, v, c);
        EXPECT_LE(r.best, quiver::loewy_length_of_algebra(*a) - 1);
        if (c.gldim.finite()) {
            EXPECT_LE(r.best, c.gldim.value);
        }
        for (const auto& e : r.entries) {
            if (e.value) {
                EXPECT_LE(r.best, *e.value);
            }
        }
    }
}

TEST(Certificate, ExamplesPassAtDeltaPlusTwo)
{
    struct Case {
        const char* name;
        std::vector<quiver::VertexId> v;
        int n;
    };
    for (const auto& cs : {Case{"ex1_m10", range(3, 9), 12}, Case{"ex2_n6", range(2, 6), 13}}) {
        auto a = testutil::example(cs.name);
        auto r = bounds::syzygy_finiteness_certificate(a, make_vertex_set(cs.n, cs.v), 25, 2024,
                                                       torsion::default_cutoff(*a));
        EXPECT_EQ(r.delta, 1);
        EXPECT_EQ(r.k, 3);
        EXPECT_EQ(r.failures(), 0u) << cs.name;
        EXPECT_GE(r.cases.size(), 25u + static_cast<std::size_t>(cs.n));
    }
}

TEST(Certificate, HypothesisChecked)
{
    auto a = testutil::example("ex2_n6");
    // V empty: ll = LL = 6 > 2
    EXPECT_THROW(bounds::syzygy_finiteness_certificate(a, torsion::VertexSet(13, false), 3, 1,
                                                       torsion::default_cutoff(*a)),
                 bounds::HypothesisFailed);
}

TEST(ExactSequences, ExamplesSatisfyBounds)
{
    auto a = testutil::example("ex1_m10");
    auto v = make_vertex_set(12, range(3, 9));
    for (std::uint64_t s = 0; s < 30; ++s) {
        auto m = harness::random_module(a, derive_seed(71, s), 20);
        auto ses = harness::random_ses(m, derive_seed(73, s));
        auto r = bounds::exact_sequence_bound_check(ses.l, ses.m, ses.n, v);
        EXPECT_TRUE(r.pass) << r.detail;
        EXPECT_LE(std::max(r.ll_l, r.ll_n), r.ll_m);
        EXPECT_LE(r.ll_m, r.ll_l + r.ll_n);
    }
}
