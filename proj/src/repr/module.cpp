#include "qalg/module.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "qalg/linalg.hpp"

namespace qalg::repr {

using linalg::EchelonBasis;
using linalg::row_basis;
using quiver::Path;

Module::Module(AlgebraPtr algebra, std::vector<std::size_t> dims, std::vector<Matrix> action)
    : algebra_(std::move(algebra)), dims_(std::move(dims)), action_(std::move(action))
{
    check_shapes();
    if (!satisfies_relations())
        throw ModuleError("module: relations do not act as zero");
}

Module Module::trusted(AlgebraPtr algebra, std::vector<std::size_t> dims,
                       std::vector<Matrix> action)
{
    Module m;
    m.algebra_ = std::move(algebra);
    m.dims_ = std::move(dims);
    m.action_ = std::move(action);
    return m;
}

Module Module::zero(AlgebraPtr algebra)
{
    const auto& q = algebra->quiver();
    std::vector<Matrix> action;
    for (std::size_t a = 0; a < q.num_arrows(); ++a)
        action.emplace_back(0, 0, algebra->field());
    std::vector<std::size_t> dims(static_cast<std::size_t>(q.num_vertices()), 0);
    return trusted(std::move(algebra), std::move(dims), std::move(action));
}

void Module::check_shapes() const
{
    if (!algebra_)
        throw ModuleError("module: no algebra");
    const auto& q = algebra_->quiver();
    if (dims_.size() != static_cast<std::size_t>(q.num_vertices()))
        throw ModuleError("module: expected one dimension per vertex");
    if (action_.size() != q.num_arrows())
        throw ModuleError("module: expected one matrix per arrow");
    for (std::size_t a = 0; a < q.num_arrows(); ++a) {
        const auto& arrow = q.arrow(static_cast<ArrowId>(a));
        const auto& m = action_[a];
        if (m.rows() != dim(arrow.source) || m.cols() != dim(arrow.target)) {
            std::ostringstream os;
            os << "module: matrix for arrow " << arrow.name << " is " << m.rows() << "x"
               << m.cols() << ", expected " << dim(arrow.source) << "x" << dim(arrow.target);
            throw ModuleError(os.str());
        }
        if (m.field() != field())
            throw ModuleError("module: matrix over a different field");
    }
}

std::size_t Module::total_dim() const
{
    return std::accumulate(dims_.begin(), dims_.end(), std::size_t{0});
}

Matrix Module::path_action(const Path& p) const
{
    Matrix m = Matrix::identity(dim(p.source), field());
    for (ArrowId a : p.arrows)
        m = m * action(a);
    return m;
}

bool Module::satisfies_relations() const
{
    for (const auto& rel : algebra_->relations()) {
        const auto& first = rel.terms.front().path;
        Matrix acc(dim(first.source), dim(first.target), field());
        for (const auto& t : rel.terms)
            acc.add_scaled(path_action(t.path), t.coeff);
        if (!acc.is_zero())
            return false;
    }
    return true;
}

std::vector<Matrix> Module::path_actions() const
{
    // Basis paths are sorted by length and closed under prefixes, so each
    // action is its prefix's action times one arrow matrix.
    const auto& a = *algebra_;
    std::vector<Matrix> out(a.dim());
    std::vector<std::size_t> order(a.dim());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        return a.basis_path(x).length() < a.basis_path(y).length();
    });
    for (std::size_t i : order) {
        const Path& p = a.basis_path(i);
        if (p.is_trivial()) {
            out[i] = Matrix::identity(dim(p.source), field());
            continue;
        }
        Path prefix{p.source, a.quiver().arrow(p.arrows.back()).source,
                    {p.arrows.begin(), p.arrows.end() - 1}};
        auto idx = a.basis_index(prefix);
        if (idx)
            out[i] = out[*idx] * action(p.arrows.back());
        else
            out[i] = path_action(p);
    }
    return out;
}

// ---- homomorphisms ----------------------------------------------------------

bool is_hom(const Module& m, const Module& n, const ModuleHom& f)
{
    const auto& q = m.algebra().quiver();
    if (f.maps.size() != static_cast<std::size_t>(q.num_vertices()))
        return false;
    for (VertexId v = 0; v < q.num_vertices(); ++v) {
        const auto& fv = f.maps[static_cast<std::size_t>(v)];
        if (fv.rows() != m.dim(v) || fv.cols() != n.dim(v))
            return false;
    }
    for (std::size_t a = 0; a < q.num_arrows(); ++a) {
        const auto& arrow = q.arrow(static_cast<ArrowId>(a));
        const auto& fs = f.maps[static_cast<std::size_t>(arrow.source)];
        const auto& ft = f.maps[static_cast<std::size_t>(arrow.target)];
        if (!(m.action(static_cast<ArrowId>(a)) * ft == fs * n.action(static_cast<ArrowId>(a))))
            return false;
    }
    return true;
}

ModuleHom compose(const ModuleHom& f, const ModuleHom& g)
{
    ModuleHom h;
    for (std::size_t v = 0; v < f.maps.size(); ++v)
        h.maps.push_back(f.maps[v] * g.maps[v]);
    return h;
}

ModuleHom identity_hom(const Module& m)
{
    ModuleHom h;
    for (std::size_t d : m.dims())
        h.maps.push_back(Matrix::identity(d, m.field()));
    return h;
}

ModuleHom zero_hom(const Module& m, const Module& n)
{
    ModuleHom h;
    for (VertexId v = 0; v < m.num_vertices(); ++v)
        h.maps.emplace_back(m.dim(v), n.dim(v), m.field());
    return h;
}

ModuleHom linear_combination(const std::vector<ModuleHom>& homs, const std::vector<Scalar>& coeffs,
                             const Field& field)
{
    (void)field;
    ModuleHom h = homs.at(0);
    for (auto& m : h.maps)
        m = m.scaled(coeffs.at(0));
    for (std::size_t k = 1; k < homs.size(); ++k)
        for (std::size_t v = 0; v < h.maps.size(); ++v)
            h.maps[v].add_scaled(homs[k].maps[v], coeffs.at(k));
    return h;
}

bool is_injective(const ModuleHom& f)
{
    for (const auto& m : f.maps)
        if (linalg::rank(m) != m.rows())
            return false;
    return true;
}

bool is_surjective(const ModuleHom& f, const Module& n)
{
    for (std::size_t v = 0; v < f.maps.size(); ++v)
        if (linalg::rank(f.maps[v]) != n.dim(static_cast<VertexId>(v)))
            return false;
    return true;
}

// ---- submodules -------------------------------------------------------------

std::size_t Submodule::total_dim() const
{
    std::size_t t = 0;
    for (const auto& b : basis)
        t += b.rows();
    return t;
}

std::vector<std::size_t> Submodule::dims() const
{
    std::vector<std::size_t> d;
    for (const auto& b : basis)
        d.push_back(b.rows());
    return d;
}

Submodule zero_submodule(const Module& m)
{
    Submodule u;
    for (std::size_t d : m.dims())
        u.basis.emplace_back(0, d, m.field());
    return u;
}

Submodule full_submodule(const Module& m)
{
    Submodule u;
    for (std::size_t d : m.dims())
        u.basis.push_back(Matrix::identity(d, m.field()));
    return u;
}

namespace {

std::vector<Scalar> times(std::span<const Scalar> v, const Matrix& m)
{
    std::vector<Scalar> out(m.cols(), 0);
    const auto& f = m.field();
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (!v[k])
            continue;
        auto row = m.row(k);
        for (std::size_t j = 0; j < out.size(); ++j)
            out[j] = f.add(out[j], f.mul(v[k], row[j]));
    }
    return out;
}

}  // namespace

Submodule submodule_generated(const Module& m, const std::vector<Matrix>& elements)
{
    const auto& q = m.algebra().quiver();
    const auto nv = static_cast<std::size_t>(q.num_vertices());
    std::vector<EchelonBasis> span;
    for (std::size_t v = 0; v < nv; ++v)
        span.emplace_back(m.dims()[v], m.field());
    std::vector<std::pair<VertexId, std::vector<Scalar>>> work;
    for (std::size_t v = 0; v < nv && v < elements.size(); ++v)
        for (std::size_t r = 0; r < elements[v].rows(); ++r) {
            auto row = elements[v].row(r);
            work.emplace_back(static_cast<VertexId>(v), std::vector<Scalar>(row.begin(), row.end()));
        }
    while (!work.empty()) {
        auto [v, vec] = std::move(work.back());
        work.pop_back();
        if (!span[static_cast<std::size_t>(v)].insert(vec))
            continue;
        for (ArrowId a : q.out_arrows(v))
            work.emplace_back(q.arrow(a).target, times(vec, m.action(a)));
    }
    Submodule u;
    for (auto& s : span)
        u.basis.push_back(s.to_matrix());
    return u;
}

Submodule generated_at_vertices(const Module& m, const std::vector<bool>& vertices)
{
    std::vector<Matrix> gens;
    for (VertexId v = 0; v < m.num_vertices(); ++v) {
        if (static_cast<std::size_t>(v) < vertices.size() && vertices[static_cast<std::size_t>(v)])
            gens.push_back(Matrix::identity(m.dim(v), m.field()));
        else
            gens.emplace_back(0, m.dim(v), m.field());
    }
    return submodule_generated(m, gens);
}

Submodule submodule_sum(const Submodule& u, const Submodule& w)
{
    Submodule s;
    for (std::size_t v = 0; v < u.basis.size(); ++v)
        s.basis.push_back(linalg::sum_subspaces(u.basis[v], w.basis[v]));
    return s;
}

Submodule submodule_intersection(const Submodule& u, const Submodule& w)
{
    Submodule s;
    for (std::size_t v = 0; v < u.basis.size(); ++v)
        s.basis.push_back(linalg::intersect_subspaces(u.basis[v], w.basis[v]));
    return s;
}

bool submodule_contains(const Submodule& outer, const Submodule& inner)
{
    for (std::size_t v = 0; v < outer.basis.size(); ++v)
        if (!linalg::subspace_contains(outer.basis[v], inner.basis[v]))
            return false;
    return true;
}

bool is_submodule(const Module& m, const Submodule& u)
{
    const auto& q = m.algebra().quiver();
    for (std::size_t a = 0; a < q.num_arrows(); ++a) {
        const auto& arrow = q.arrow(static_cast<ArrowId>(a));
        Matrix img = u.basis[static_cast<std::size_t>(arrow.source)] * m.action(static_cast<ArrowId>(a));
        if (!linalg::subspace_contains(u.basis[static_cast<std::size_t>(arrow.target)], img))
            return false;
    }
    return true;
}

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

}  // namespace

Module as_module(const Module& m, const Submodule& u)
{
    const auto& q = m.algebra().quiver();
    std::vector<std::vector<std::size_t>> piv;
    for (const auto& b : u.basis)
        piv.push_back(leading_columns(b));
    std::vector<Matrix> action;
    for (std::size_t a = 0; a < q.num_arrows(); ++a) {
        const auto& arrow = q.arrow(static_cast<ArrowId>(a));
        const auto s = static_cast<std::size_t>(arrow.source), t = static_cast<std::size_t>(arrow.target);
        Matrix img = u.basis[s] * m.action(static_cast<ArrowId>(a));
        // Coordinates in an RREF basis are read off at the pivot columns.
        action.push_back(img.select_cols(piv[t]));
    }
    return Module::trusted(m.algebra_ptr(), u.dims(), std::move(action));
}

ModuleHom inclusion(const Module& m, const Submodule& u)
{
    (void)m;
    return ModuleHom{u.basis};
}

Quotient quotient(const Module& m, const Submodule& u)
{
    const auto& q = m.algebra().quiver();
    const auto& f = m.field();
    const auto nv = static_cast<std::size_t>(q.num_vertices());
    std::vector<std::vector<std::size_t>> keep(nv);
    ModuleHom proj;
    for (std::size_t v = 0; v < nv; ++v) {
        const auto& b = u.basis[v];
        auto piv = leading_columns(b);
        std::vector<int> pivot_row(m.dims()[v], -1);
        for (std::size_t r = 0; r < piv.size(); ++r)
            pivot_row[piv[r]] = static_cast<int>(r);
        for (std::size_t c = 0; c < m.dims()[v]; ++c)
            if (pivot_row[c] < 0)
                keep[v].push_back(c);
        Matrix pv(m.dims()[v], keep[v].size(), f);
        for (std::size_t c = 0; c < m.dims()[v]; ++c) {
            if (pivot_row[c] < 0)
                continue;
            // e_c = row - (row - e_c); modulo U it is -(non-pivot part of row).
            auto row = b.row(static_cast<std::size_t>(pivot_row[c]));
            for (std::size_t k = 0; k < keep[v].size(); ++k)
                pv.set(c, k, f.neg(row[keep[v][k]]));
        }
        for (std::size_t k = 0; k < keep[v].size(); ++k)
            pv.set(keep[v][k], k, 1);
        proj.maps.push_back(std::move(pv));
    }
    std::vector<Matrix> action;
    std::vector<std::size_t> dims;
    for (std::size_t v = 0; v < nv; ++v)
        dims.push_back(keep[v].size());
    for (std::size_t a = 0; a < q.num_arrows(); ++a) {
        const auto& arrow = q.arrow(static_cast<ArrowId>(a));
        const auto s = static_cast<std::size_t>(arrow.source), t = static_cast<std::size_t>(arrow.target);
        action.push_back(m.action(static_cast<ArrowId>(a)).select_rows(keep[s]) * proj.maps[t]);
    }
    return {Module::trusted(m.algebra_ptr(), std::move(dims), std::move(action)), std::move(proj)};
}

Submodule kernel(const Module& m, const ModuleHom& f)
{
    Submodule u;
    for (VertexId v = 0; v < m.num_vertices(); ++v)
        u.basis.push_back(row_basis(linalg::left_kernel_basis(f.maps[static_cast<std::size_t>(v)])));
    return u;
}

Submodule image(const Module& n, const ModuleHom& f)
{
    (void)n;
    Submodule u;
    for (const auto& fv : f.maps)
        u.basis.push_back(row_basis(fv));
    return u;
}

Submodule image_of(const ModuleHom& f, const Submodule& u)
{
    Submodule w;
    for (std::size_t v = 0; v < f.maps.size(); ++v)
        w.basis.push_back(row_basis(u.basis[v] * f.maps[v]));
    return w;
}

// ---- standard modules ---------------------------------------------------------

Module simple(const AlgebraPtr& a, VertexId i)
{
    const auto& q = a->quiver();
    if (i < 0 || i >= q.num_vertices())
        throw ModuleError("simple: vertex out of range");
    std::vector<std::size_t> dims(static_cast<std::size_t>(q.num_vertices()), 0);
    dims[static_cast<std::size_t>(i)] = 1;
    std::vector<Matrix> action;
    for (const auto& arrow : q.arrows())
        action.emplace_back(dims[static_cast<std::size_t>(arrow.source)],
                            dims[static_cast<std::size_t>(arrow.target)], a->field());
    return Module::trusted(a, std::move(dims), std::move(action));
}

namespace {

/// Module whose space at vertex j is spanned by the basis paths in groups[j],
/// with arrows acting by right multiplication.
Module path_module(const AlgebraPtr& a, const std::vector<const std::vector<std::size_t>*>& groups)
{
    const auto& q = a->quiver();
    std::vector<std::size_t> local(a->dim(), 0);
    std::vector<std::size_t> dims;
    for (const auto* g : groups) {
        for (std::size_t k = 0; k < g->size(); ++k)
            local[(*g)[k]] = k;
        dims.push_back(g->size());
    }
    std::vector<Matrix> action;
    for (std::size_t ai = 0; ai < q.num_arrows(); ++ai) {
        const auto& arrow = q.arrow(static_cast<ArrowId>(ai));
        const auto& src = *groups[static_cast<std::size_t>(arrow.source)];
        Matrix m(src.size(), dims[static_cast<std::size_t>(arrow.target)], a->field());
        for (std::size_t r = 0; r < src.size(); ++r)
            for (auto [idx, c] : a->right_arrow(src[r], static_cast<ArrowId>(ai)))
                m.set(r, local[idx], c);
        action.push_back(std::move(m));
    }
    return Module::trusted(a, std::move(dims), std::move(action));
}

}  // namespace

Module projective(const AlgebraPtr& a, VertexId i)
{
    if (i < 0 || i >= a->num_vertices())
        throw ModuleError("projective: vertex out of range");
    std::vector<const std::vector<std::size_t>*> groups;
    for (VertexId j = 0; j < a->num_vertices(); ++j)
        groups.push_back(&a->paths_between(i, j));
    return path_module(a, groups);
}

Module regular(const AlgebraPtr& a)
{
    std::vector<const std::vector<std::size_t>*> groups;
    for (VertexId j = 0; j < a->num_vertices(); ++j)
        groups.push_back(&a->paths_into(j));
    return path_module(a, groups);
}

Module direct_sum(const std::vector<Module>& parts)
{
    if (parts.empty())
        throw ModuleError("direct_sum: no summands");
    const auto& alg = parts.front().algebra_ptr();
    const auto& q = alg->quiver();
    const auto nv = static_cast<std::size_t>(q.num_vertices());
    std::vector<std::size_t> dims(nv, 0);
    for (const auto& p : parts) {
        if (p.algebra_ptr() != alg)
            throw ModuleError("direct_sum: summands over different algebras");
        for (std::size_t v = 0; v < nv; ++v)
            dims[v] += p.dims()[v];
    }
    std::vector<Matrix> action;
    for (std::size_t ai = 0; ai < q.num_arrows(); ++ai) {
        const auto& arrow = q.arrow(static_cast<ArrowId>(ai));
        Matrix m(dims[static_cast<std::size_t>(arrow.source)], dims[static_cast<std::size_t>(arrow.target)],
                 alg->field());
        std::size_t r0 = 0, c0 = 0;
        for (const auto& p : parts) {
            m.set_block(r0, c0, p.action(static_cast<ArrowId>(ai)));
            r0 += p.dim(arrow.source);
            c0 += p.dim(arrow.target);
        }
        action.push_back(std::move(m));
    }
    return Module::trusted(alg, std::move(dims), std::move(action));
}

Module direct_sum(const Module& a, const Module& b)
{
    return direct_sum(std::vector<Module>{a, b});
}

Submodule radical(const Module& m)
{
    const auto& q = m.algebra().quiver();
    Submodule u;
    for (VertexId v = 0; v < q.num_vertices(); ++v) {
        Matrix acc(0, m.dim(v), m.field());
        for (ArrowId a : q.in_arrows(v))
            acc = Matrix::vstack(acc, m.action(a));
        u.basis.push_back(row_basis(acc));
    }
    return u;
}

std::vector<std::size_t> top_dims(const Module& m)
{
    auto r = radical(m);
    std::vector<std::size_t> t;
    for (VertexId v = 0; v < m.num_vertices(); ++v)
        t.push_back(m.dim(v) - r.dim(v));
    return t;
}

}  // namespace qalg::repr
