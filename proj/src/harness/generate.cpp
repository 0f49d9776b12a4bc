#include <algorithm>

#include "qalg/harness.hpp"
#include "qalg/linalg.hpp"

namespace qalg::harness {

using linalg::Matrix;
using linalg::Scalar;
using quiver::Arrow;
using quiver::ArrowId;
using quiver::Path;
using quiver::Quiver;
using quiver::Relation;
using quiver::VertexId;

namespace {

bool contains_subpath(const std::vector<ArrowId>& path, const std::vector<std::vector<ArrowId>>& rels)
{
    for (const auto& r : rels)
        if (std::search(path.begin(), path.end(), r.begin(), r.end()) != path.end())
            return true;
    return false;
}

/// One attempt; nullopt when the truncated algebra is too big.
std::optional<dsl::Presentation> try_presentation(const GenParams& params, std::uint64_t seed)
{
    Rng rng(seed);
    const int nv = static_cast<int>(rng.range(std::max(1, params.min_vertices),
                                              std::max(params.min_vertices, params.max_vertices)));
    const int na = static_cast<int>(rng.range(0, std::max(0, params.max_arrows)));
    std::vector<Arrow> arrows;
    for (int k = 0; k < na; ++k)
        arrows.push_back({"a" + std::to_string(k + 1), static_cast<VertexId>(rng.below(static_cast<std::uint64_t>(nv))),
                          static_cast<VertexId>(rng.below(static_cast<std::uint64_t>(nv)))});
    Quiver q(nv, arrows);
    const int L = std::max(2, params.forced_length);

    // Random monomial relations: random walks of length 2..L-1.
    std::vector<std::vector<ArrowId>> rels;
    const int nr = L > 2 ? static_cast<int>(rng.range(0, std::max(0, params.max_relations))) : 0;
    for (int k = 0; k < nr && na > 0; ++k) {
        const int len = static_cast<int>(rng.range(2, L - 1));
        std::vector<ArrowId> walk{static_cast<ArrowId>(rng.below(static_cast<std::uint64_t>(na)))};
        while (static_cast<int>(walk.size()) < len) {
            const auto& out = q.out_arrows(q.arrow(walk.back()).target);
            if (out.empty())
                break;
            walk.push_back(out[rng.below(out.size())]);
        }
        if (static_cast<int>(walk.size()) == len && !contains_subpath(walk, rels))
            rels.push_back(std::move(walk));
    }

    // Surviving paths level by level; those of length L become relations.
    std::size_t surviving = static_cast<std::size_t>(nv);
    std::vector<std::vector<ArrowId>> level;
    for (ArrowId a = 0; a < na; ++a)
        level.push_back({a});
    for (int len = 1; len < L && !level.empty(); ++len) {
        surviving += level.size();
        if (surviving > params.max_algebra_dim)
            return std::nullopt;
        std::vector<std::vector<ArrowId>> next;
        for (const auto& p : level)
            for (ArrowId a : q.out_arrows(q.arrow(p.back()).target)) {
                auto ext = p;
                ext.push_back(a);
                if (!contains_subpath(ext, rels))
                    next.push_back(std::move(ext));
            }
        level = std::move(next);
    }
    if (L == 1)
        level.clear();
    for (auto& p : level)
        rels.push_back(std::move(p));

    dsl::Presentation pres;
    pres.name = "rand_" + std::to_string(seed);
    pres.quiver = q;
    pres.field = linalg::Field(params.modulus);
    pres.max_length = std::max(quiver::kDefaultMaxLength, L + 1);
    for (const auto& r : rels) {
        Path p{q.arrow(r.front()).source, q.arrow(r.back()).target, r};
        pres.relations.push_back(Relation{{quiver::Term{1, p}}});
    }
    return pres;
}

}  // namespace

dsl::Presentation random_presentation(const GenParams& params, std::uint64_t seed)
{
    for (std::uint64_t attempt = 0;; ++attempt) {
        GenParams p = params;
        // After many oversized draws, thin the quiver out.
        if (attempt >= 64)
            p.max_arrows = std::max(0, params.max_arrows - static_cast<int>((attempt - 56) / 8));
        if (auto pres = try_presentation(p, derive_seed(seed, attempt)))
            return *pres;
    }
}

AlgebraPtr random_algebra(const GenParams& params, std::uint64_t seed)
{
    return dsl::compile_presentation(random_presentation(params, seed));
}

namespace {

std::vector<Scalar> random_vector(std::size_t n, const linalg::Field& f, Rng& rng)
{
    std::vector<Scalar> v(n);
    for (auto& x : v)
        x = static_cast<Scalar>(rng.below(f.modulus()));
    return v;
}

/// Random nonzero element of the subspace spanned by the rows of b.
std::vector<Scalar> random_in_span(const Matrix& b, Rng& rng)
{
    const auto& f = b.field();
    std::vector<Scalar> out(b.cols(), 0);
    while (true) {
        auto c = random_vector(b.rows(), f, rng);
        for (std::size_t r = 0; r < b.rows(); ++r)
            for (std::size_t j = 0; j < b.cols(); ++j)
                out[j] = f.add(out[j], f.mul(c[r], b(r, j)));
        if (std::any_of(out.begin(), out.end(), [](Scalar x) { return x != 0; }))
            return out;
        std::fill(out.begin(), out.end(), 0);
    }
}

repr::Submodule generated_by_random(const Module& m, const repr::Submodule& within, int count, Rng& rng)
{
    std::vector<VertexId> support;
    for (VertexId v = 0; v < m.num_vertices(); ++v)
        if (within.dim(v) > 0)
            support.push_back(v);
    std::vector<std::vector<std::vector<Scalar>>> rows(static_cast<std::size_t>(m.num_vertices()));
    for (int k = 0; k < count && !support.empty(); ++k) {
        VertexId v = support[rng.below(support.size())];
        rows[static_cast<std::size_t>(v)].push_back(
            random_in_span(within.basis[static_cast<std::size_t>(v)], rng));
    }
    std::vector<Matrix> gens;
    for (VertexId v = 0; v < m.num_vertices(); ++v)
        gens.push_back(Matrix::from_row_vectors(rows[static_cast<std::size_t>(v)], m.dim(v), m.field()));
    return repr::submodule_generated(m, gens);
}

}  // namespace

Module random_module(const AlgebraPtr& a, std::uint64_t seed, std::size_t budget)
{
    Rng rng(seed);
    const int n = a->num_vertices();
    std::vector<std::size_t> pdim;
    for (VertexId i = 0; i < n; ++i) {
        std::size_t d = 0;
        for (VertexId j = 0; j < n; ++j)
            d += a->paths_between(i, j).size();
        pdim.push_back(d);
    }
    std::vector<Module> parts;
    std::size_t used = 0;
    while (true) {
        std::vector<VertexId> fits;
        for (VertexId i = 0; i < n; ++i)
            if (used + pdim[static_cast<std::size_t>(i)] <= budget)
                fits.push_back(i);
        if (fits.empty()) {
            if (parts.empty()) {
                auto smallest = std::min_element(pdim.begin(), pdim.end()) - pdim.begin();
                parts.push_back(repr::projective(a, static_cast<VertexId>(smallest)));
            }
            break;
        }
        VertexId i = fits[rng.below(fits.size())];
        parts.push_back(repr::projective(a, i));
        used += pdim[static_cast<std::size_t>(i)];
        if (rng.chance(1, 6))
            break;
    }
    Module p = parts.size() == 1 ? parts.front() : repr::direct_sum(parts);
    const auto mode = rng.below(6);
    repr::Submodule u = repr::zero_submodule(p);
    if (mode == 1)
        u = repr::radical(p);
    else if (mode >= 2)
        u = generated_by_random(p, repr::radical(p), static_cast<int>(rng.range(1, 3)), rng);
    return repr::quotient(p, u).module;
}

repr::Submodule random_submodule(const Module& m, Rng& rng)
{
    return generated_by_random(m, repr::full_submodule(m), static_cast<int>(rng.range(0, 3)), rng);
}

ShortExactSequence random_ses(const Module& m, std::uint64_t seed)
{
    Rng rng(seed);
    const auto mode = rng.below(8);
    repr::Submodule u = mode == 0   ? repr::zero_submodule(m)
                        : mode == 1 ? repr::full_submodule(m)
                                    : random_submodule(m, rng);
    auto q = repr::quotient(m, u);
    return {repr::as_module(m, u), m, std::move(q.module), repr::inclusion(m, u), std::move(q.projection), u};
}

torsion::VertexSet random_vertex_set(int num_vertices, Rng& rng)
{
    torsion::VertexSet v(static_cast<std::size_t>(num_vertices));
    for (std::size_t i = 0; i < v.size(); ++i)
        v[i] = rng.chance(1, 2);
    return v;
}

Module resolve_module(const AlgebraPtr& a, const dsl::ModuleSpec& spec)
{
    using Kind = dsl::ModuleSpec::Kind;
    switch (spec.kind) {
    case Kind::Projective:
        return repr::projective(a, spec.vertex);
    case Kind::Simple:
        return repr::simple(a, spec.vertex);
    case Kind::Regular:
        return repr::regular(a);
    case Kind::Random:
        return random_module(a, spec.seed, spec.budget);
    case Kind::Sum:
        break;
    }
    std::vector<Module> parts;
    for (const auto& s : spec.summands)
        parts.push_back(resolve_module(a, s));
    return repr::direct_sum(parts);
}

}  // namespace qalg::harness
