#include "qalg/algebra.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <set>

namespace qalg::quiver {

namespace {

struct NormRelation {
    std::vector<Term> terms;
    VertexId source = 0;
    VertexId target = 0;
    std::size_t min_len = 0;
};

std::vector<NormRelation> normalize(const Quiver& q, const std::vector<Relation>& rels,
                                    const Field& f)
{
    std::vector<NormRelation> out;
    for (std::size_t k = 0; k < rels.size(); ++k) {
        const std::string where = "relation " + std::to_string(k + 1);
        std::map<Path, Scalar> acc;
        std::optional<std::pair<VertexId, VertexId>> ends;
        for (const auto& t : rels[k].terms) {
            for (auto a : t.path.arrows)
                if (a < 0 || static_cast<std::size_t>(a) >= q.num_arrows())
                    throw CompileError(CompileError::Kind::UnknownArrow,
                                       where + ": unknown arrow id " + std::to_string(a));
            if (t.path.length() < 2)
                throw CompileError(CompileError::Kind::NotAdmissible,
                                   where + ": paths in relations must have length >= 2");
            auto path = make_path(q, t.path.arrows);
            if (!path)
                throw CompileError(CompileError::Kind::NonComposablePath,
                                   where + ": arrows do not compose");
            if (ends && (ends->first != path->source || ends->second != path->target))
                throw CompileError(CompileError::Kind::NonParallelRelation,
                                   where + ": paths are not parallel");
            ends = std::pair{path->source, path->target};
            auto& c = acc[*path];
            c = f.add(c, t.coeff % f.modulus());
        }
        NormRelation nr;
        for (auto& [p, c] : acc)
            if (c)
                nr.terms.push_back({c, p});
        if (nr.terms.empty())
            continue;
        nr.source = ends->first;
        nr.target = ends->second;
        nr.min_len = nr.terms.front().path.length();
        for (const auto& t : nr.terms)
            nr.min_len = std::min(nr.min_len, t.path.length());
        out.push_back(std::move(nr));
    }
    return out;
}

class MonomialFilter {
public:
    void add(const std::vector<ArrowId>& w)
    {
        words_.insert(w);
        max_len_ = std::max(max_len_, w.size());
    }
    /// Some suffix of w is a monomial relation.
    bool suffix_killed(const std::vector<ArrowId>& w) const
    {
        std::size_t top = std::min(max_len_, w.size());
        for (std::size_t len = 2; len <= top; ++len)
            if (words_.count(std::vector<ArrowId>(w.end() - static_cast<std::ptrdiff_t>(len), w.end())))
                return true;
        return false;
    }
    /// Some subpath of w is a monomial relation.
    bool killed(const std::vector<ArrowId>& w) const
    {
        if (words_.empty())
            return false;
        for (std::size_t end = 2; end <= w.size(); ++end)
            if (suffix_killed(std::vector<ArrowId>(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(end))))
                return true;
        return false;
    }

private:
    std::set<std::vector<ArrowId>> words_;
    std::size_t max_len_ = 0;
};

std::vector<Path> extend_level(const Quiver& q, const std::vector<Path>& level,
                               const MonomialFilter& filter)
{
    std::vector<Path> next;
    for (const auto& p : level) {
        for (auto a : q.out_arrows(p.target)) {
            Path w{p.source, q.arrow(a).target, p.arrows};
            w.arrows.push_back(a);
            if (!filter.suffix_killed(w.arrows))
                next.push_back(std::move(w));
        }
    }
    return next;
}

// Descending path order: leading terms become pivots.
std::map<Path, std::size_t> descending_columns(const std::vector<std::vector<Path>>& levels,
                                               std::size_t min_len, std::size_t max_len)
{
    std::vector<Path> all;
    for (std::size_t l = min_len; l <= max_len && l < levels.size(); ++l)
        all.insert(all.end(), levels[l].begin(), levels[l].end());
    std::sort(all.begin(), all.end(), [](const Path& a, const Path& b) { return b < a; });
    std::map<Path, std::size_t> cols;
    for (std::size_t i = 0; i < all.size(); ++i)
        cols.emplace(all[i], i);
    return cols;
}

// Inserts every surviving u*r*v whose terms stay in the column set. Terms of
// length >= truncate are dropped (they lie in R^truncate); with truncate == 0
// a generator is skipped when a surviving term falls outside the columns.
void insert_generators(const std::vector<NormRelation>& poly,
                       const std::vector<std::vector<Path>>& levels,
                       const std::map<Path, std::size_t>& cols, const MonomialFilter& filter,
                       std::size_t max_len, std::size_t truncate, linalg::EchelonBasis& span)
{
    std::vector<const Path*> surviving;
    for (const auto& lvl : levels)
        for (const auto& p : lvl)
            surviving.push_back(&p);
    for (const auto& r : poly) {
        if (r.min_len > max_len)
            continue;
        for (const Path* u : surviving) {
            if (u->target != r.source || u->length() + r.min_len > max_len)
                continue;
            for (const Path* v : surviving) {
                if (v->source != r.target || u->length() + v->length() + r.min_len > max_len)
                    continue;
                std::vector<Scalar> row(cols.size(), 0);
                bool skip = false;
                for (const auto& t : r.terms) {
                    Path w = *concat(*concat(*u, t.path), *v);
                    if (truncate && w.length() >= truncate)
                        continue;
                    auto it = cols.find(w);
                    if (it != cols.end()) {
                        row[it->second] = span.field().add(row[it->second], t.coeff);
                        continue;
                    }
                    if (w.length() <= max_len || filter.killed(w.arrows))
                        continue;  // killed by a monomial relation
                    skip = true;
                    break;
                }
                if (!skip)
                    span.insert(std::move(row));
            }
        }
    }
}

}  // namespace

std::shared_ptr<const Algebra> Algebra::compile(Quiver quiver, std::vector<Relation> relations,
                                                Field field, int max_length, std::string name)
{
    if (max_length < 1)
        throw std::invalid_argument("max_length must be >= 1");
    auto norm = normalize(quiver, relations, field);

    MonomialFilter filter;
    std::vector<NormRelation> poly;
    for (auto& r : norm) {
        if (r.terms.size() == 1)
            filter.add(r.terms.front().path.arrows);
        else
            poly.push_back(r);
    }

    std::vector<std::vector<Path>> levels(1);
    for (VertexId v = 0; v < quiver.num_vertices(); ++v)
        levels[0].push_back(Path::trivial(v));

    // Certify some N with every length-N path in I.
    std::size_t cert = 0;
    std::size_t enumerated = 0;
    for (std::size_t d = 1; d <= static_cast<std::size_t>(max_length); ++d) {
        levels.push_back(extend_level(quiver, levels.back(), filter));
        enumerated += levels[d].size();
        if (enumerated > kMaxEnumeratedPaths)
            throw CompileError(CompileError::Kind::TooLarge,
                               "more than " + std::to_string(kMaxEnumeratedPaths) + " paths survive the zero relations");
        if (levels[d].empty()) {
            cert = d;
            break;
        }
        if (poly.empty())
            continue;
        auto cols = descending_columns(levels, 0, d);
        linalg::EchelonBasis span(cols.size(), field);
        insert_generators(poly, levels, cols, filter, d, 0, span);
        for (std::size_t n = 2; n <= d && !cert; ++n) {
            bool all_in = true;
            for (const auto& w : levels[n]) {
                std::vector<Scalar> e(cols.size(), 0);
                e[cols.at(w)] = 1;
                if (!span.contains(std::move(e))) {
                    all_in = false;
                    break;
                }
            }
            if (all_in)
                cert = n;
        }
        if (cert)
            break;
    }
    if (!cert)
        throw CompileError(CompileError::Kind::NotAdmissible,
                           "no power of the arrow ideal lies in the ideal up to length " +
                               std::to_string(max_length));
    levels.resize(cert);

    std::shared_ptr<Algebra> alg(new Algebra());
    alg->name_ = std::move(name);
    alg->quiver_ = std::move(quiver);
    alg->field_ = field;
    alg->max_length_ = max_length;
    alg->monomial_ = poly.empty();
    for (auto& r : norm) {
        Relation rel;
        rel.terms = r.terms;
        alg->relations_.push_back(std::move(rel));
    }

    // Reduce I / R^cert and read off leading terms.
    auto cols = descending_columns(levels, 0, cert - 1);
    std::vector<Path> by_col(cols.size());
    for (const auto& [p, c] : cols)
        by_col[c] = p;
    linalg::EchelonBasis span(cols.size(), field);
    if (!poly.empty())
        insert_generators(poly, levels, cols, filter, cert - 1, cert, span);
    Matrix red = span.to_matrix();
    auto pivots = span.pivots();
    std::vector<long> pivot_row(cols.size(), -1);
    for (std::size_t r = 0; r < pivots.size(); ++r)
        pivot_row[pivots[r]] = static_cast<long>(r);

    // nf(w) for a pivot w is minus its row off the pivot; check which lengths vanish.
    auto pivot_is_zero = [&](std::size_t c) {
        auto row = red.row(static_cast<std::size_t>(pivot_row[c]));
        for (std::size_t k = 0; k < row.size(); ++k)
            if (k != c && row[k])
                return false;
        return true;
    };
    std::size_t nil = cert;
    for (std::size_t n = 1; n < cert; ++n) {
        bool vanish = true;
        for (const auto& w : levels[n]) {
            std::size_t c = cols.at(w);
            if (pivot_row[c] < 0 || !pivot_is_zero(c)) {
                vanish = false;
                break;
            }
        }
        if (vanish) {
            nil = n;
            break;
        }
    }
    alg->nilpotency_ = static_cast<int>(nil);

    for (std::size_t c = 0; c < by_col.size(); ++c)
        if (pivot_row[c] < 0)
            alg->basis_.push_back(by_col[c]);
    alg->index_basis();

    const auto& f = alg->field_;
    for (std::size_t c = 0; c < by_col.size(); ++c) {
        const Path& w = by_col[c];
        if (w.length() >= nil)
            continue;
        SparseVec nf;
        if (pivot_row[c] < 0) {
            nf.emplace_back(alg->index_.at(w), 1);
        } else {
            auto row = red.row(static_cast<std::size_t>(pivot_row[c]));
            for (std::size_t k = 0; k < row.size(); ++k)
                if (k != c && row[k])
                    nf.emplace_back(alg->index_.at(by_col[k]), f.neg(row[k]));
            std::sort(nf.begin(), nf.end());
        }
        alg->nf_.emplace(w, std::move(nf));
    }

    const std::size_t na = alg->quiver_.num_arrows();
    alg->right_.assign(alg->dim() * na, {});
    alg->left_.assign(alg->dim() * na, {});
    for (std::size_t b = 0; b < alg->dim(); ++b) {
        const Path& bp = alg->basis_[b];
        for (std::size_t a = 0; a < na; ++a) {
            Path arrow = Path::of_arrow(alg->quiver_, static_cast<ArrowId>(a));
            if (auto w = concat(bp, arrow))
                alg->right_[b * na + a] = alg->normal_form(*w);
            if (auto w = concat(arrow, bp))
                alg->left_[b * na + a] = alg->normal_form(*w);
        }
    }
    return alg;
}

void Algebra::index_basis()
{
    std::sort(basis_.begin(), basis_.end(), [](const Path& a, const Path& b) {
        if (a.source != b.source)
            return a.source < b.source;
        if (a.target != b.target)
            return a.target < b.target;
        return a < b;
    });
    const auto n = static_cast<std::size_t>(num_vertices());
    idempotent_.assign(n, 0);
    between_.assign(n * n, {});
    into_.assign(n, {});
    from_.assign(n, {});
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        const auto& p = basis_[i];
        index_.emplace(p, i);
        if (p.is_trivial())
            idempotent_[static_cast<std::size_t>(p.source)] = i;
        between_[static_cast<std::size_t>(p.source) * n + static_cast<std::size_t>(p.target)].push_back(i);
        into_[static_cast<std::size_t>(p.target)].push_back(i);
        from_[static_cast<std::size_t>(p.source)].push_back(i);
    }
}

std::optional<std::size_t> Algebra::basis_index(const Path& p) const
{
    auto it = index_.find(p);
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

const std::vector<std::size_t>& Algebra::paths_between(VertexId source, VertexId target) const
{
    const auto n = static_cast<std::size_t>(num_vertices());
    return between_.at(static_cast<std::size_t>(source) * n + static_cast<std::size_t>(target));
}

SparseVec Algebra::normal_form(const Path& p) const
{
    auto it = nf_.find(p);
    return it == nf_.end() ? SparseVec{} : it->second;
}

SparseVec Algebra::normal_form(const std::vector<Term>& combination) const
{
    AlgebraElement acc = zero();
    for (const auto& t : combination)
        for (auto [i, c] : normal_form(t.path))
            acc[i] = field_.add(acc[i], field_.mul(c, t.coeff % field_.modulus()));
    SparseVec out;
    for (std::size_t i = 0; i < acc.size(); ++i)
        if (acc[i])
            out.emplace_back(i, acc[i]);
    return out;
}

const SparseVec& Algebra::right_arrow(std::size_t b, ArrowId a) const
{
    return right_.at(b * quiver_.num_arrows() + static_cast<std::size_t>(a));
}

const SparseVec& Algebra::left_arrow(ArrowId a, std::size_t b) const
{
    return left_.at(b * quiver_.num_arrows() + static_cast<std::size_t>(a));
}

SparseVec Algebra::basis_product(std::size_t i, std::size_t j) const
{
    auto w = concat(basis_.at(i), basis_.at(j));
    return w ? normal_form(*w) : SparseVec{};
}

AlgebraElement Algebra::unit() const
{
    AlgebraElement u = zero();
    for (auto i : idempotent_)
        u[i] = 1;
    return u;
}

AlgebraElement Algebra::element(const SparseVec& v) const
{
    AlgebraElement x = zero();
    for (auto [i, c] : v)
        x[i] = field_.add(x[i], c);
    return x;
}

AlgebraElement Algebra::multiply(const AlgebraElement& x, const AlgebraElement& y) const
{
    AlgebraElement out = zero();
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!x[i])
            continue;
        for (std::size_t j = 0; j < y.size(); ++j) {
            if (!y[j] || basis_[i].target != basis_[j].source)
                continue;
            Scalar c = field_.mul(x[i], y[j]);
            for (auto [k, v] : basis_product(i, j))
                out[k] = field_.add(out[k], field_.mul(c, v));
        }
    }
    return out;
}

namespace {

AlgebraElement apply_sparse(const Algebra& a, const AlgebraElement& x,
                            const std::function<const SparseVec&(std::size_t)>& image)
{
    const auto& f = a.field();
    AlgebraElement out = a.zero();
    for (std::size_t b = 0; b < x.size(); ++b) {
        if (!x[b])
            continue;
        for (auto [k, v] : image(b))
            out[k] = f.add(out[k], f.mul(x[b], v));
    }
    return out;
}

// Images of x under e_v*, *e_v, *a, a* for every vertex and arrow.
std::vector<AlgebraElement> neighbours(const Algebra& a, const AlgebraElement& x)
{
    std::vector<AlgebraElement> out;
    for (VertexId v = 0; v < a.num_vertices(); ++v) {
        AlgebraElement left = a.zero(), right = a.zero();
        for (std::size_t b = 0; b < x.size(); ++b) {
            if (!x[b])
                continue;
            if (a.basis_path(b).source == v)
                left[b] = x[b];
            if (a.basis_path(b).target == v)
                right[b] = x[b];
        }
        out.push_back(std::move(left));
        out.push_back(std::move(right));
    }
    for (std::size_t arr = 0; arr < a.quiver().num_arrows(); ++arr) {
        auto id = static_cast<ArrowId>(arr);
        out.push_back(apply_sparse(a, x, [&](std::size_t b) -> const SparseVec& { return a.right_arrow(b, id); }));
        out.push_back(apply_sparse(a, x, [&](std::size_t b) -> const SparseVec& { return a.left_arrow(id, b); }));
    }
    return out;
}

}  // namespace

IdealBasis radical_ideal(const Algebra& a)
{
    std::vector<std::vector<Scalar>> rows;
    for (std::size_t b = 0; b < a.dim(); ++b) {
        if (a.basis_path(b).is_trivial())
            continue;
        std::vector<Scalar> e(a.dim(), 0);
        e[b] = 1;
        rows.push_back(std::move(e));
    }
    return {Matrix::from_row_vectors(rows, a.dim(), a.field()), true};
}

Matrix product_of_subspaces(const Algebra& a, const Matrix& j, const Matrix& k)
{
    linalg::EchelonBasis span(a.dim(), a.field());
    for (std::size_t r = 0; r < j.rows(); ++r) {
        AlgebraElement x(j.row(r).begin(), j.row(r).end());
        for (std::size_t s = 0; s < k.rows(); ++s) {
            AlgebraElement y(k.row(s).begin(), k.row(s).end());
            span.insert(a.multiply(x, y));
        }
    }
    return span.to_matrix();
}

int loewy_length_of_algebra(const Algebra& a)
{
    Matrix rad = radical_ideal(a).basis;
    Matrix power = linalg::row_basis(Matrix::identity(a.dim(), a.field()));
    int n = 0;
    while (power.rows() > 0) {
        power = product_of_subspaces(a, power, rad);
        ++n;
    }
    return n;
}

IdealBasis two_sided_closure(const Algebra& a, const std::vector<AlgebraElement>& gens)
{
    linalg::EchelonBasis span(a.dim(), a.field());
    std::deque<AlgebraElement> queue;
    for (const auto& g : gens)
        if (span.insert(g))
            queue.push_back(g);
    while (!queue.empty()) {
        AlgebraElement x = std::move(queue.front());
        queue.pop_front();
        for (auto& y : neighbours(a, x))
            if (span.insert(y))
                queue.push_back(std::move(y));
    }
    return {span.to_matrix(), true};
}

bool is_two_sided_ideal(const Algebra& a, const Matrix& basis)
{
    linalg::EchelonBasis span(a.dim(), a.field());
    for (std::size_t r = 0; r < basis.rows(); ++r)
        span.insert(basis.row(r));
    for (std::size_t r = 0; r < basis.rows(); ++r) {
        AlgebraElement x(basis.row(r).begin(), basis.row(r).end());
        for (auto& y : neighbours(a, x))
            if (!span.contains(std::move(y)))
                return false;
    }
    return true;
}

}  // namespace qalg::quiver
