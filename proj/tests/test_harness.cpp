#include <gtest/gtest.h>

#include <filesystem>

#include "qalg/dsl.hpp"
#include "qalg/harness.hpp"
#include "test_util.hpp"

using namespace qalg;

TEST(Rng, SeedsAreReproducible)
{
    Rng a(99), b(99), c(100);
    for (int i = 0; i < 10; ++i) {
        auto x = a.next();
        EXPECT_EQ(x, b.next());
        EXPECT_NE(x, c.next());
    }
    EXPECT_NE(derive_seed(1, 2), derive_seed(2, 1));
}

TEST(Generator, SameSeedSameAlgebra)
{
    harness::GenParams params;
    for (std::uint64_t s = 0; s < 10; ++s) {
        auto p = harness::random_presentation(params, s);
        auto q = harness::random_presentation(params, s);
        auto a = dsl::compile_presentation(p);
        EXPECT_EQ(dsl::pretty_print(dsl::to_ast(*a)), dsl::pretty_print(dsl::to_ast(*dsl::compile_presentation(q))));
        EXPECT_LE(a->dim(), params.max_algebra_dim);
        EXPECT_LE(a->num_vertices(), params.max_vertices);
        EXPECT_LE(static_cast<int>(a->quiver().num_arrows()), params.max_arrows);
        EXPECT_LE(quiver::loewy_length_of_algebra(*a), params.forced_length);
    }
}

TEST(Generator, ModulesValidAndWithinBudget)
{
    harness::GenParams params;
    for (std::uint64_t s = 0; s < 10; ++s) {
        auto a = harness::random_algebra(params, derive_seed(79, s));
        auto m = harness::random_module(a, s, 24);
        auto n = harness::random_module(a, s, 24);
        EXPECT_TRUE(m.satisfies_relations());
        EXPECT_EQ(m, n);
        auto ses = harness::random_ses(m, s);
        EXPECT_EQ(ses.l.total_dim() + ses.n.total_dim(), m.total_dim());
        EXPECT_TRUE(repr::is_injective(ses.inclusion));
        EXPECT_TRUE(repr::is_surjective(ses.projection, ses.n));
    }
}

TEST(Campaign, DeterministicAndPassing)
{
    harness::CampaignOptions opt;
    opt.params.seed = 5;
    opt.algebras = 4;
    opt.count = 3;
    auto r1 = harness::run_campaign(opt);
    auto r2 = harness::run_campaign(opt);
    EXPECT_TRUE(r1.pass());
    ASSERT_EQ(r1.tally.size(), harness::check_names().size());
    for (const auto& [name, t] : r1.tally) {
        EXPECT_EQ(t.passed, r2.tally.at(name).passed) << name;
        EXPECT_EQ(t.skipped, r2.tally.at(name).skipped) << name;
        EXPECT_EQ(t.passed + t.failed + t.skipped, 12u) << name;
    }
}

TEST(Campaign, FixedAlgebraAndCheckFilter)
{
    harness::CampaignOptions opt;
    opt.params.seed = 6;
    opt.algebras = 2;
    opt.count = 4;
    opt.checks = {"idempotence", "omega-lemma"};
    opt.fixed = dsl::build_presentation(
        dsl::parse_presentation(testutil::slurp(testutil::source_path("algebras/ex2_n6.qalg"))));
    auto r = harness::run_campaign(opt);
    EXPECT_TRUE(r.pass());
    EXPECT_EQ(r.tally.size(), 2u);
    EXPECT_EQ(r.tally.at("idempotence").passed, 8u);
}

TEST(Campaign, UnknownCheckRejected)
{
    harness::CampaignOptions opt;
    opt.checks = {"no-such-check"};
    EXPECT_THROW(harness::run_campaign(opt), std::invalid_argument);
}

TEST(Campaign, FailuresWrittenAsReproducers)
{
    harness::CampaignResult r;
    r.seed = 3;
    harness::Failure f;
    f.check = "idempotence";
    f.algebra_seed = 11;
    f.draw_seed = 12;
    f.detail = "synthetic";
    f.reproduction = testutil::slurp(testutil::source_path("algebras/a2.qalg"));
    f.command = "qalg fuzz";
    r.failures.push_back(f);
    auto dir = std::filesystem::temp_directory_path() / "qalg_failures_test";
    std::filesystem::remove_all(dir);
    harness::write_failures(r, dir.string());
    auto file = dir / "idempotence" / "12.qalg";
    ASSERT_TRUE(std::filesystem::exists(file));
    EXPECT_NO_THROW(dsl::load_algebra(testutil::slurp(file.string())));
    EXPECT_TRUE(std::filesystem::exists(dir / "summary.json"));
    std::filesystem::remove_all(dir);
}
