#pragma once
// Seeded generators and the property campaign.

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qalg/dsl.hpp"
#include "qalg/module.hpp"
#include "qalg/rng.hpp"
#include "qalg/torsion.hpp"

namespace qalg::harness {

using quiver::AlgebraPtr;
using repr::Module;

struct GenParams {
    std::uint64_t seed = 42;
    int min_vertices = 1;
    int max_vertices = 8;
    int max_arrows = 12;
    int max_relations = 6;
    /// Every path of this length is a relation, which forces admissibility.
    int forced_length = 5;
    std::size_t module_budget = 24;
    std::uint32_t modulus = 101;
    /// Redraw algebras above this dimension so campaigns stay fast.
    std::size_t max_algebra_dim = 80;
};

/// Quiver and monomial relations only; compile() happens in random_algebra.
dsl::Presentation random_presentation(const GenParams& params, std::uint64_t seed);
AlgebraPtr random_algebra(const GenParams& params, std::uint64_t seed);

/// P / U with P a sum of projectives of total dimension <= budget (at least
/// one summand) and U generated by random elements of rad P.
Module random_module(const AlgebraPtr& a, std::uint64_t seed, std::size_t budget);

struct ShortExactSequence {
    Module l;
    Module m;
    Module n;
    repr::ModuleHom inclusion;
    repr::ModuleHom projection;
    repr::Submodule sub;  // L inside M
};
ShortExactSequence random_ses(const Module& m, std::uint64_t seed);
/// Random subset of the vertices; each vertex kept with probability 1/2.
torsion::VertexSet random_vertex_set(int num_vertices, Rng& rng);
/// Random submodule generated by 0..3 random elements.
repr::Submodule random_submodule(const Module& m, Rng& rng);

/// Builds a module from a parsed specifier; rand(seed, size) uses random_module.
Module resolve_module(const AlgebraPtr& a, const dsl::ModuleSpec& spec);

// ---- campaign ------------------------------------------------------------------

struct Draw {
    AlgebraPtr algebra;
    std::uint64_t algebra_seed = 0;
    std::uint64_t seed = 0;
    std::size_t module_budget = 24;
    int cutoff = 0;
    /// Memoized pd classification of the simples, shared by checks that need S^{<oo}.
    std::function<const torsion::SimpleClassification&()> classification;
};

/// Outcome of a single draw. `skipped` covers draws whose hypotheses do not
/// hold (e.g. the certificate on an algebra with ll > 2).
struct Outcome {
    bool pass = true;
    bool skipped = false;
    std::string detail;
};

using CheckFn = std::function<Outcome(const Draw&)>;
const std::vector<std::pair<std::string, CheckFn>>& checks();
std::vector<std::string> check_names();

struct Failure {
    std::string check;
    std::uint64_t algebra_seed = 0;
    std::uint64_t draw_seed = 0;
    std::string detail;
    std::string reproduction;  // .qalg text of the minimized algebra
    std::string command;
};

struct CheckTally {
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::size_t skipped = 0;
};

struct CampaignResult {
    std::uint64_t seed = 0;
    std::size_t algebras = 0;
    std::size_t draws_per_check = 0;
    std::map<std::string, CheckTally> tally;
    std::vector<Failure> failures;
    bool pass() const { return failures.empty(); }
};

struct CampaignOptions {
    GenParams params;
    std::size_t algebras = 50;
    std::size_t count = 20;  // draws per check per algebra
    std::vector<std::string> checks;  // empty = all
    bool shrink = true;
    int cutoff = 0;  // 0 = default per algebra
    /// Run every draw on this algebra instead of random ones.
    std::optional<dsl::Presentation> fixed;
};

CampaignResult run_campaign(const CampaignOptions& options);

/// Drops arrows and relations while `fails` keeps returning true.
dsl::Presentation shrink(const dsl::Presentation& p, const std::function<bool(const AlgebraPtr&)>& fails);

/// Writes failures/<check>/<seed>.qalg plus summary.json under `dir`.
void write_failures(const CampaignResult& r, const std::filesystem::path& dir);

}  // namespace qalg::harness
