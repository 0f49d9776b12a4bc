#pragma once
// Bound quiver algebras A = kQ/I over GF(p).
//
// compile() decides admissibility and picks a normal-form basis by exact
// linear algebra on the truncated path space: I/R^N is spanned by the
// truncations of u*r*v for paths u, v and relations r. Paths are ordered
// length-then-lex and the span is row reduced with the largest paths first,
// so pivots are leading terms and the surviving (non-pivot) paths form the
// basis. That basis is closed under taking subpaths.

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "qalg/linalg.hpp"
#include "qalg/quiver.hpp"

namespace qalg::quiver {

using linalg::Field;
using linalg::Matrix;
using linalg::Scalar;

/// Sparse coordinate vector over the algebra basis, sorted by index.
using SparseVec = std::vector<std::pair<std::size_t, Scalar>>;
/// Dense coefficient vector over the algebra basis.
using AlgebraElement = std::vector<Scalar>;

class CompileError : public std::runtime_error {
public:
    enum class Kind { NotAdmissible, NonParallelRelation, UnknownArrow, NonComposablePath, TooLarge };
    CompileError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

inline constexpr int kDefaultMaxLength = 64;
/// Compilation gives up once this many surviving paths have been enumerated.
inline constexpr std::size_t kMaxEnumeratedPaths = 20000;

struct IdealBasis {
    /// Rows are algebra elements; canonical RREF basis.
    Matrix basis;
    bool two_sided = false;
    std::size_t dim() const { return basis.rows(); }
};

class Algebra {
public:
    static std::shared_ptr<const Algebra> compile(Quiver quiver, std::vector<Relation> relations,
                                                  Field field,
                                                  int max_length = kDefaultMaxLength,
                                                  std::string name = "algebra");

    const std::string& name() const { return name_; }
    const Quiver& quiver() const { return quiver_; }
    const Field& field() const { return field_; }
    const std::vector<Relation>& relations() const { return relations_; }
    int num_vertices() const { return quiver_.num_vertices(); }
    int max_length() const { return max_length_; }

    std::size_t dim() const { return basis_.size(); }
    /// Least N with every path of length N in I; equals LL(A).
    int nilpotency_index() const { return nilpotency_; }
    bool monomial() const { return monomial_; }

    const std::vector<Path>& basis() const { return basis_; }
    const Path& basis_path(std::size_t i) const { return basis_.at(i); }
    std::optional<std::size_t> basis_index(const Path& p) const;
    std::size_t idempotent_index(VertexId v) const { return idempotent_.at(static_cast<std::size_t>(v)); }
    /// Basis indices of paths source -> target, in basis order.
    const std::vector<std::size_t>& paths_between(VertexId source, VertexId target) const;
    /// Basis indices of paths with the given target (any source), in basis order.
    const std::vector<std::size_t>& paths_into(VertexId target) const { return into_.at(static_cast<std::size_t>(target)); }
    /// Basis indices of paths with the given source, in basis order.
    const std::vector<std::size_t>& paths_from(VertexId source) const { return from_.at(static_cast<std::size_t>(source)); }

    SparseVec normal_form(const Path& p) const;
    SparseVec normal_form(const std::vector<Term>& combination) const;
    /// nf(b * a) for basis element b and arrow a; empty when they do not compose.
    const SparseVec& right_arrow(std::size_t b, ArrowId a) const;
    /// nf(a * b).
    const SparseVec& left_arrow(ArrowId a, std::size_t b) const;
    /// Structure constants: nf(basis[i] * basis[j]).
    SparseVec basis_product(std::size_t i, std::size_t j) const;

    AlgebraElement zero() const { return AlgebraElement(dim(), 0); }
    AlgebraElement unit() const;
    AlgebraElement element(const SparseVec& v) const;
    AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y) const;

private:
    Algebra() = default;
    void index_basis();

    std::string name_;
    Quiver quiver_;
    std::vector<Relation> relations_;
    Field field_;
    int max_length_ = kDefaultMaxLength;
    int nilpotency_ = 1;
    bool monomial_ = true;
    std::vector<Path> basis_;
    std::map<Path, std::size_t> index_;
    /// Normal forms of every path that can be nonzero (length below the
    /// certified truncation, no monomial relation as a subpath).
    std::map<Path, SparseVec> nf_;
    std::vector<std::size_t> idempotent_;
    std::vector<std::vector<std::size_t>> between_;
    std::vector<std::vector<std::size_t>> into_;
    std::vector<std::vector<std::size_t>> from_;
    std::vector<SparseVec> right_;
    std::vector<SparseVec> left_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

/// rad A: span of the basis paths of length >= 1.
IdealBasis radical_ideal(const Algebra& a);
/// Least n with rad^n A = 0.
int loewy_length_of_algebra(const Algebra& a);
/// Smallest two-sided ideal containing gens.
IdealBasis two_sided_closure(const Algebra& a, const std::vector<AlgebraElement>& gens);
/// Whether the row span of `basis` is closed under multiplication by arrows
/// and idempotents on both sides.
bool is_two_sided_ideal(const Algebra& a, const Matrix& basis);
/// Product of two subspaces J*K = span{x*y}.
Matrix product_of_subspaces(const Algebra& a, const Matrix& j, const Matrix& k);

}  // namespace qalg::quiver
