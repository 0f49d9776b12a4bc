// Hom spaces, covers and syzygies.
//
// Hom(M, N) is computed from a projective presentation of M: a map out of
// P0 = (+)_g P(v_g) is a choice of y_g in N_{v_g} per top generator, and it
// factors through M = P0 / K iff it kills the generators of K.

#include <algorithm>

#include "qalg/linalg.hpp"
#include "qalg/module.hpp"
#include "qalg/rng.hpp"

namespace qalg::repr {

using linalg::EchelonBasis;
using linalg::row_basis;

namespace {

std::vector<std::size_t> leading_columns(const Matrix& b)
{
    std::vector<std::size_t> piv;
    for (std::size_t r = 0; r < b.rows(); ++r) {
        auto row = b.row(r);
        std::size_t c = 0;
        while (c < row.size() && row[c] == 0)
            ++c;
        piv.push_back(c);
    }
    return piv;
}

struct Generator {
    VertexId vertex;
    std::size_t coord;  // basis vector e_coord of M_vertex
};

ProjectiveCover cover_with_generators(const Module& m, std::vector<Generator>& gens)
{
    const auto& alg = m.algebra_ptr();
    const auto& a = *alg;
    const int nv = m.num_vertices();
    auto rad = radical(m);
    gens.clear();
    for (VertexId v = 0; v < nv; ++v) {
        std::vector<bool> pivot(m.dim(v), false);
        for (auto c : leading_columns(rad.basis[static_cast<std::size_t>(v)]))
            pivot[c] = true;
        for (std::size_t c = 0; c < m.dim(v); ++c)
            if (!pivot[c])
                gens.push_back({v, c});
    }
    ProjectiveCover pc{Module::zero(alg), {}, {}};
    if (gens.empty()) {
        pc.epi = zero_hom(pc.projective, m);
        return pc;
    }
    std::vector<Module> parts;
    for (const auto& g : gens) {
        parts.push_back(projective(alg, g.vertex));
        pc.summands.push_back(g.vertex);
    }
    pc.projective = direct_sum(parts);
    auto act = m.path_actions();
    for (VertexId i = 0; i < nv; ++i) {
        Matrix e(pc.projective.dim(i), m.dim(i), m.field());
        std::size_t r = 0;
        for (const auto& g : gens)
            for (std::size_t b : a.paths_between(g.vertex, i)) {
                auto src = act[b].row(g.coord);
                std::copy(src.begin(), src.end(), e.row(r).begin());
                ++r;
            }
        pc.epi.maps.push_back(std::move(e));
    }
    return pc;
}

/// Rows of `sub` (a submodule of m) that together with rad(sub) span sub.
std::vector<Matrix> top_generators(const Module& m, const Submodule& sub)
{
    const auto& q = m.algebra().quiver();
    std::vector<Matrix> out;
    for (VertexId v = 0; v < q.num_vertices(); ++v) {
        const auto vi = static_cast<std::size_t>(v);
        EchelonBasis span(m.dim(v), m.field());
        for (ArrowId a : q.in_arrows(v)) {
            Matrix img = sub.basis[static_cast<std::size_t>(q.arrow(a).source)] * m.action(a);
            for (std::size_t r = 0; r < img.rows(); ++r)
                span.insert(img.row(r));
        }
        std::vector<std::vector<Scalar>> chosen;
        for (std::size_t r = 0; r < sub.basis[vi].rows(); ++r) {
            auto row = sub.basis[vi].row(r);
            std::vector<Scalar> vec(row.begin(), row.end());
            if (span.insert(vec))
                chosen.push_back(std::move(vec));
        }
        out.push_back(Matrix::from_row_vectors(chosen, m.dim(v), m.field()));
    }
    return out;
}

}  // namespace

ProjectiveCover projective_cover(const Module& m)
{
    std::vector<Generator> gens;
    return cover_with_generators(m, gens);
}

Module syzygy(const Module& m, int steps)
{
    Module cur = m;
    for (int s = 0; s < steps; ++s) {
        if (cur.is_zero())
            break;
        auto pc = projective_cover(cur);
        cur = as_module(pc.projective, kernel(pc.projective, pc.epi));
    }
    return cur;
}

bool is_projective(const Module& m)
{
    return projective_cover(m).projective.total_dim() == m.total_dim();
}

std::vector<ModuleHom> hom_space(const Module& m, const Module& n)
{
    if (m.algebra_ptr() != n.algebra_ptr())
        throw ModuleError("hom_space: modules over different algebras");
    const auto& a = m.algebra();
    const auto& f = m.field();
    const int nv = m.num_vertices();
    if (m.is_zero() || n.is_zero())
        return {};

    std::vector<Generator> gens;
    auto pc = cover_with_generators(m, gens);
    const Module& p0 = pc.projective;
    auto rel = top_generators(p0, kernel(p0, pc.epi));
    auto act = n.path_actions();

    std::vector<std::size_t> offset;
    std::size_t unknowns = 0;
    for (const auto& g : gens) {
        offset.push_back(unknowns);
        unknowns += n.dim(g.vertex);
    }
    if (unknowns == 0)
        return {};

    // Each relation row k at vertex i gives y |-> sum_{g,b} k_{g,b} y_g act(b),
    // a linear map N-coordinates^unknowns -> N_i; stack them as columns.
    std::size_t ncols = 0;
    for (VertexId i = 0; i < nv; ++i)
        ncols += rel[static_cast<std::size_t>(i)].rows() * n.dim(i);
    Matrix eq(unknowns, ncols, f);
    std::size_t col = 0;
    for (VertexId i = 0; i < nv; ++i) {
        const auto& ri = rel[static_cast<std::size_t>(i)];
        const std::size_t ni = n.dim(i);
        for (std::size_t k = 0; k < ri.rows(); ++k) {
            auto row = ri.row(k);
            std::size_t pos = 0;
            for (std::size_t gi = 0; gi < gens.size(); ++gi)
                for (std::size_t b : a.paths_between(gens[gi].vertex, i)) {
                    Scalar c = row[pos++];
                    if (!c)
                        continue;
                    const Matrix& ab = act[b];
                    for (std::size_t r = 0; r < ab.rows(); ++r)
                        for (std::size_t j = 0; j < ni; ++j)
                            if (ab(r, j))
                                eq.set(offset[gi] + r, col + j,
                                       f.add(eq(offset[gi] + r, col + j), f.mul(c, ab(r, j))));
                }
            col += ni;
        }
    }
    Matrix sol = ncols == 0 ? Matrix::identity(unknowns, f) : linalg::left_kernel_basis(eq);

    // A section of the epi at every vertex turns maps on P0 into maps on M.
    std::vector<Matrix> section;
    for (VertexId i = 0; i < nv; ++i) {
        const auto& e = pc.epi.maps[static_cast<std::size_t>(i)];
        if (m.dim(i) == 0) {
            section.emplace_back(0, p0.dim(i), f);
            continue;
        }
        auto x = linalg::solve(e.transpose(), Matrix::identity(m.dim(i), f));
        if (!x)
            throw ModuleError("hom_space: cover is not surjective");
        section.push_back(x->transpose());
    }

    std::vector<ModuleHom> out;
    for (std::size_t s = 0; s < sol.rows(); ++s) {
        auto y = sol.row(s);
        ModuleHom h;
        for (VertexId i = 0; i < nv; ++i) {
            Matrix phi(p0.dim(i), n.dim(i), f);
            std::size_t r = 0;
            for (std::size_t gi = 0; gi < gens.size(); ++gi) {
                const std::size_t dg = n.dim(gens[gi].vertex);
                for (std::size_t b : a.paths_between(gens[gi].vertex, i)) {
                    const Matrix& ab = act[b];
                    auto dst = phi.row(r);
                    for (std::size_t t = 0; t < dg; ++t) {
                        Scalar c = y[offset[gi] + t];
                        if (!c)
                            continue;
                        auto src = ab.row(t);
                        for (std::size_t j = 0; j < dst.size(); ++j)
                            dst[j] = f.add(dst[j], f.mul(c, src[j]));
                    }
                    ++r;
                }
            }
            h.maps.push_back(section[static_cast<std::size_t>(i)] * phi);
        }
        out.push_back(std::move(h));
    }
    return out;
}

bool is_iso(const Module& m, const Module& n, int trials, std::uint64_t seed)
{
    if (m.dims() != n.dims())
        return false;
    if (m.is_zero())
        return true;
    auto homs = hom_space(m, n);
    if (homs.empty())
        return false;
    const auto& f = m.field();
    Rng rng(seed);
    for (int t = 0; t < trials; ++t) {
        std::vector<Scalar> c(homs.size());
        for (auto& x : c)
            x = static_cast<Scalar>(rng.below(f.modulus()));
        auto h = linear_combination(homs, c, f);
        if (is_injective(h))
            return true;
    }
    return false;
}

bool in_add(const Module& m, const Module& n)
{
    if (m.is_zero())
        return true;
    if (n.is_zero())
        return false;
    auto to = hom_space(m, n);
    if (to.empty())
        return false;
    auto back = hom_space(n, m);
    if (back.empty())
        return false;
    const auto& f = m.field();
    std::size_t width = 0;
    for (std::size_t d : m.dims())
        width += d * d;
    auto flatten = [&](const ModuleHom& h) {
        std::vector<Scalar> v;
        v.reserve(width);
        for (const auto& mv : h.maps)
            v.insert(v.end(), mv.data().begin(), mv.data().end());
        return v;
    };
    const auto id = flatten(identity_hom(m));
    // M is in add N iff id_M is a sum of maps factoring through N.
    EchelonBasis span(width, f);
    for (const auto& g : to) {
        bool grew = false;
        for (const auto& h : back)
            grew = span.insert(flatten(compose(g, h))) || grew;
        if (grew && span.contains(id))
            return true;
        if (span.dim() == width)
            return true;
    }
    return false;
}

Stripped strip_projective_summands(const Module& m)
{
    Stripped out{m, {}};
    const auto& alg = m.algebra_ptr();
    const auto& f = m.field();
    // By Krull-Schmidt one pass over the vertices suffices. The multiplicity
    // of P(i) is the rank of x |-> (x g_i)(e_i) over a basis of Hom(M, P(i)),
    // and homs with independent e_i-coordinates give a split epi onto P(i)^r.
    for (VertexId i = 0; i < alg->num_vertices() && !out.core.is_zero(); ++i) {
        const auto vi = static_cast<std::size_t>(i);
        if (top_dims(out.core)[vi] == 0)
            continue;
        Module p = projective(alg, i);
        if (p.total_dim() > out.core.total_dim())
            continue;
        linalg::EchelonBasis hit(out.core.dim(i), f);
        std::vector<ModuleHom> chosen;
        for (const auto& g : hom_space(out.core, p)) {
            const Matrix& gi = g.maps[vi];
            std::vector<Scalar> col(gi.rows());
            for (std::size_t r = 0; r < gi.rows(); ++r)
                col[r] = gi(r, 0);
            if (hit.insert(std::move(col)))
                chosen.push_back(g);
        }
        if (chosen.empty())
            continue;
        ModuleHom split;
        for (std::size_t v = 0; v < out.core.dims().size(); ++v) {
            Matrix cat = chosen.front().maps[v];
            for (std::size_t k = 1; k < chosen.size(); ++k)
                cat = Matrix::hstack(cat, chosen[k].maps[v]);
            split.maps.push_back(std::move(cat));
        }
        out.core = as_module(out.core, kernel(out.core, split));
        out.stripped.insert(out.stripped.end(), chosen.size(), i);
    }
    return out;
}

}  // namespace qalg::repr
