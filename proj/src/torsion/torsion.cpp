#include "qalg/torsion.hpp"

#include <algorithm>

#include "qalg/linalg.hpp"

namespace qalg::torsion {

using linalg::Matrix;
using linalg::row_basis;

VertexSet make_vertex_set(int num_vertices, const std::vector<VertexId>& members)
{
    VertexSet s(static_cast<std::size_t>(num_vertices), false);
    for (VertexId v : members) {
        if (v < 0 || v >= num_vertices)
            throw std::out_of_range("vertex set: vertex out of range");
        s[static_cast<std::size_t>(v)] = true;
    }
    return s;
}

std::vector<VertexId> members(const VertexSet& v)
{
    std::vector<VertexId> out;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i])
            out.push_back(static_cast<VertexId>(i));
    return out;
}

VertexSet complement(const VertexSet& v)
{
    VertexSet c(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
        c[i] = !v[i];
    return c;
}

namespace {

/// Submodule of m generated by the parts of u lying at vertices outside V.
Submodule torsion_part(const Module& m, const Submodule& u, const VertexSet& v)
{
    std::vector<Matrix> gens;
    for (VertexId i = 0; i < m.num_vertices(); ++i) {
        const auto ii = static_cast<std::size_t>(i);
        if (ii < v.size() && v[ii])
            gens.emplace_back(0, m.dim(i), m.field());
        else
            gens.push_back(u.basis[ii]);
    }
    return repr::submodule_generated(m, gens);
}

/// rad U computed inside m: images of U under the arrows.
Submodule radical_in(const Module& m, const Submodule& u)
{
    const auto& q = m.algebra().quiver();
    Submodule r;
    for (VertexId j = 0; j < q.num_vertices(); ++j) {
        Matrix acc(0, m.dim(j), m.field());
        for (auto a : q.in_arrows(j))
            acc = Matrix::vstack(acc, u.basis[static_cast<std::size_t>(q.arrow(a).source)] * m.action(a));
        r.basis.push_back(row_basis(acc));
    }
    return r;
}

}  // namespace

Submodule torsion_radical(const Module& m, const VertexSet& v)
{
    return torsion_part(m, repr::full_submodule(m), v);
}

repr::Quotient torsion_free_quotient(const Module& m, const VertexSet& v)
{
    return repr::quotient(m, torsion_radical(m, v));
}

Submodule layer_power(const Module& m, const VertexSet& v, int i)
{
    Submodule u = repr::full_submodule(m);
    for (int k = 0; k < i && !u.is_zero(); ++k)
        u = radical_in(m, torsion_part(m, u, v));
    return u;
}

Submodule torsion_layer(const Module& m, const VertexSet& v, int i)
{
    return torsion_part(m, layer_power(m, v, i), v);
}

Module layer_functor(const Module& m, const VertexSet& v)
{
    return repr::as_module(m, layer_power(m, v, 1));
}

LayerLengthTrace layer_length(const Module& m, const VertexSet& v)
{
    LayerLengthTrace tr;
    Submodule u = repr::full_submodule(m);
    for (int i = 0;; ++i) {
        tr.chain.push_back(u.dims());
        Submodule t = torsion_part(m, u, v);
        tr.chain.push_back(t.dims());
        if (t.is_zero()) {
            tr.value = i;
            return tr;
        }
        u = radical_in(m, t);
    }
}

int loewy_length(const Module& m)
{
    Submodule u = repr::full_submodule(m);
    int n = 0;
    while (!u.is_zero()) {
        u = radical_in(m, u);
        ++n;
    }
    return n;
}

Submodule module_times_ideal(const Module& m, const quiver::IdealBasis& j)
{
    const auto& a = m.algebra();
    const auto& f = m.field();
    const int nv = m.num_vertices();
    auto act = m.path_actions();
    std::vector<Matrix> span;
    for (VertexId t = 0; t < nv; ++t)
        span.emplace_back(0, m.dim(t), f);
    for (std::size_t r = 0; r < j.basis.rows(); ++r) {
        auto x = j.basis.row(r);
        // m * x splits as the sum over (s, t) of m e_s x e_t.
        for (VertexId s = 0; s < nv; ++s) {
            if (m.dim(s) == 0)
                continue;
            for (VertexId t = 0; t < nv; ++t) {
                Matrix part(m.dim(s), m.dim(t), f);
                bool any = false;
                for (std::size_t b : a.paths_between(s, t))
                    if (x[b]) {
                        part.add_scaled(act[b], x[b]);
                        any = true;
                    }
                if (any && !part.is_zero())
                    span[static_cast<std::size_t>(t)] =
                        row_basis(Matrix::vstack(span[static_cast<std::size_t>(t)], part));
            }
        }
    }
    return Submodule{std::move(span)};
}

quiver::IdealBasis as_ideal(const Algebra& a, const Submodule& u)
{
    Matrix rows(0, a.dim(), a.field());
    for (VertexId j = 0; j < a.num_vertices(); ++j) {
        const auto& into = a.paths_into(j);
        const auto& b = u.basis[static_cast<std::size_t>(j)];
        Matrix lifted(b.rows(), a.dim(), a.field());
        for (std::size_t r = 0; r < b.rows(); ++r)
            for (std::size_t k = 0; k < into.size(); ++k)
                lifted.set(r, into[k], b(r, k));
        rows = Matrix::vstack(rows, lifted);
    }
    quiver::IdealBasis out{row_basis(rows), false};
    out.two_sided = quiver::is_two_sided_ideal(a, out.basis);
    return out;
}

// ---- projective dimension ---------------------------------------------------

int default_cutoff(const Algebra& a)
{
    return std::max<int>(1, 4 * static_cast<int>(a.dim()));
}

namespace {

bool support_within(const Module& x, const Module& y)
{
    for (VertexId v = 0; v < x.num_vertices(); ++v)
        if (x.dim(v) > 0 && y.dim(v) == 0)
            return false;
    return true;
}

}  // namespace

PdResult pd(const Module& m, int cutoff, std::size_t max_dim)
{
    if (m.is_zero())
        return PdResult::of(-1);
    std::vector<Module> syz;
    std::vector<Module> cores;
    // An add witness settles pd = inf, but a period is the nicer certificate;
    // keep looking for one a few more steps before settling for the witness.
    std::optional<PdResult> add_witness;
    int give_up = cutoff;
    Module cur = m;
    for (int n = 0; n <= give_up; ++n) {
        auto pc = repr::projective_cover(cur);
        if (pc.projective.total_dim() == cur.total_dim())
            return PdResult::of(n);
        // cur is not projective. Minimal resolutions make an isomorphism
        // Omega^a = Omega^n a period; more generally Omega^a in add Omega^n
        // forces pd Omega^a <= pd Omega^a - (n - a), so pd M is infinite.
        for (int a = 0; a < n; ++a)
            if (syz[static_cast<std::size_t>(a)].dims() == cur.dims() &&
                repr::is_iso(syz[static_cast<std::size_t>(a)], cur, repr::kDefaultIsoTrials,
                             static_cast<std::uint64_t>(a * 7919 + n)))
                return PdResult{PdResult::Kind::Infinite, 0, a, n, true, {}};
        Module core = Module::zero(m.algebra_ptr());
        if (cur.total_dim() <= kStableCheckDim) {
            core = repr::strip_projective_summands(cur).core;
            for (int a = 0; a < n; ++a) {
                const Module& ca = cores[static_cast<std::size_t>(a)];
                if (ca.is_zero() || !support_within(ca, core))
                    continue;
                // Stable period: equal cores up to projective summands.
                if (ca.dims() == core.dims() &&
                    repr::is_iso(ca, core, repr::kDefaultIsoTrials, static_cast<std::uint64_t>(a * 7919 + n)))
                    return PdResult{PdResult::Kind::Infinite, 0, a, n, true, "stable"};
                if (!add_witness && repr::in_add(ca, core)) {
                    add_witness = PdResult{PdResult::Kind::Infinite, 0, a, n, false, {}};
                    give_up = std::min(cutoff, n + kPeriodGrace);
                }
            }
        }
        syz.push_back(cur);
        cores.push_back(std::move(core));
        if (n == give_up)
            break;
        // dim Omega = dim P - dim M; check before building it.
        if (pc.projective.total_dim() - cur.total_dim() > max_dim)
            break;
        Module next = repr::as_module(pc.projective, repr::kernel(pc.projective, pc.epi));
        cur = std::move(next);
    }
    if (add_witness)
        return *add_witness;
    if (static_cast<int>(syz.size()) <= cutoff)
        return PdResult{PdResult::Kind::Undetermined, static_cast<int>(syz.size()), 0, 0, false, "size"};
    return PdResult{PdResult::Kind::Undetermined, cutoff, 0, 0, false, "cutoff"};
}

std::string to_string(const PdResult& r)
{
    switch (r.kind) {
    case PdResult::Kind::Finite:
        return std::to_string(r.value);
    case PdResult::Kind::Infinite:
        return "inf";
    case PdResult::Kind::Undetermined:
        break;
    }
    return "undetermined";
}

bool SimpleClassification::determined() const
{
    return std::none_of(pd.begin(), pd.end(), [](const PdResult& r) { return r.undetermined(); });
}

SimpleClassification classify_simples(const AlgebraPtr& a, int cutoff)
{
    SimpleClassification c;
    const auto n = static_cast<std::size_t>(a->num_vertices());
    c.finite.assign(n, false);
    c.infinite.assign(n, false);
    for (VertexId i = 0; i < a->num_vertices(); ++i) {
        auto r = pd(repr::simple(a, i), cutoff);
        c.finite[static_cast<std::size_t>(i)] = r.finite();
        c.infinite[static_cast<std::size_t>(i)] = r.infinite();
        c.pd.push_back(std::move(r));
    }
    c.gldim = pd_of_set(c, VertexSet(n, true));
    if (n == 0)
        c.gldim = PdResult::of(0);
    return c;
}

PdResult pd_of_set(const SimpleClassification& c, const VertexSet& v)
{
    PdResult best = PdResult::of(-1);
    std::optional<PdResult> undetermined;
    for (std::size_t i = 0; i < v.size() && i < c.pd.size(); ++i) {
        if (!v[i])
            continue;
        const auto& r = c.pd[i];
        if (r.infinite())
            return r;
        if (r.undetermined())
            undetermined = r;
        else if (r.value > best.value)
            best = r;
    }
    return undetermined ? *undetermined : best;
}

PdResult pd_of_set(const AlgebraPtr& a, const VertexSet& v, int cutoff)
{
    SimpleClassification c;
    for (VertexId i = 0; i < a->num_vertices(); ++i)
        c.pd.push_back(static_cast<std::size_t>(i) < v.size() && v[static_cast<std::size_t>(i)]
                           ? pd(repr::simple(a, i), cutoff)
                           : PdResult::of(-1));
    return pd_of_set(c, v);
}

int ell_infinity(const Module& m, const SimpleClassification& c)
{
    if (!c.determined())
        throw UndeterminedClassification("ell_infinity: some simple has undetermined pd");
    return layer_length(m, c.finite).value;
}

}  // namespace qalg::torsion
