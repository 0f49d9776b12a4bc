#pragma once
// Right modules over a bound quiver algebra, stored as representations.
//
// Convention: for an arrow a: i -> j the module carries a dim(i) x dim(j)
// matrix acting on ROW vectors, v |-> v * M_a, because e_i a e_j = a in
// kQ. A path a1*a2*...*ak acts by M_a1 * M_a2 * ... * M_ak. For example in
// P(1) over 1 --a--> 2 the space at vertex 1 is spanned by e1, the space at
// vertex 2 by a, and M_a = [1] sends e1 to e1*a = a.

#include <cstdint>
#include <memory>
#include <vector>

#include "qalg/algebra.hpp"

namespace qalg::repr {

using linalg::Field;
using linalg::Matrix;
using linalg::Scalar;
using quiver::Algebra;
using quiver::AlgebraPtr;
using quiver::ArrowId;
using quiver::VertexId;

class ModuleError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class Module {
public:
    /// Checks matrix shapes and that every relation acts as zero.
    Module(AlgebraPtr algebra, std::vector<std::size_t> dims, std::vector<Matrix> action);

    /// Skips the relation check. For constructions that preserve the relations
    /// by design (sums, sub- and quotient modules, projectives).
    static Module trusted(AlgebraPtr algebra, std::vector<std::size_t> dims,
                          std::vector<Matrix> action);
    static Module zero(AlgebraPtr algebra);

    const Algebra& algebra() const { return *algebra_; }
    const AlgebraPtr& algebra_ptr() const { return algebra_; }
    const Field& field() const { return algebra_->field(); }
    int num_vertices() const { return algebra_->num_vertices(); }

    const std::vector<std::size_t>& dims() const { return dims_; }
    std::size_t dim(VertexId v) const { return dims_.at(static_cast<std::size_t>(v)); }
    std::size_t total_dim() const;
    bool is_zero() const { return total_dim() == 0; }
    const Matrix& action(ArrowId a) const { return action_.at(static_cast<std::size_t>(a)); }
    const std::vector<Matrix>& actions() const { return action_; }

    bool satisfies_relations() const;
    /// Action matrix of every algebra basis path, indexed like Algebra::basis().
    std::vector<Matrix> path_actions() const;
    Matrix path_action(const quiver::Path& p) const;

    bool operator==(const Module& o) const
    {
        return algebra_ == o.algebra_ && dims_ == o.dims_ && action_ == o.action_;
    }

private:
    Module() = default;
    void check_shapes() const;

    AlgebraPtr algebra_;
    std::vector<std::size_t> dims_;
    std::vector<Matrix> action_;
};

/// Vertex-graded family f_v : M_v -> N_v (row-vector convention, v |-> v f_v).
struct ModuleHom {
    std::vector<Matrix> maps;
};

bool is_hom(const Module& m, const Module& n, const ModuleHom& f);
/// f then g.
ModuleHom compose(const ModuleHom& f, const ModuleHom& g);
ModuleHom identity_hom(const Module& m);
ModuleHom zero_hom(const Module& m, const Module& n);
ModuleHom linear_combination(const std::vector<ModuleHom>& homs, const std::vector<Scalar>& coeffs,
                             const Field& field);
bool is_injective(const ModuleHom& f);
bool is_surjective(const ModuleHom& f, const Module& n);

/// Per-vertex subspaces (canonical RREF row bases) of a parent module.
struct Submodule {
    std::vector<Matrix> basis;
    std::size_t dim(VertexId v) const { return basis.at(static_cast<std::size_t>(v)).rows(); }
    std::size_t total_dim() const;
    std::vector<std::size_t> dims() const;
    bool is_zero() const { return total_dim() == 0; }
    bool operator==(const Submodule&) const = default;
};

Submodule zero_submodule(const Module& m);
Submodule full_submodule(const Module& m);
/// Smallest submodule containing the given rows (elements[v] has dim(v) columns).
Submodule submodule_generated(const Module& m, const std::vector<Matrix>& elements);
/// Submodule generated by the whole spaces at the given vertices.
Submodule generated_at_vertices(const Module& m, const std::vector<bool>& vertices);
Submodule submodule_sum(const Submodule& u, const Submodule& w);
Submodule submodule_intersection(const Submodule& u, const Submodule& w);
bool submodule_contains(const Submodule& outer, const Submodule& inner);
bool is_submodule(const Module& m, const Submodule& u);

/// U as a module in the coordinates of its canonical basis.
Module as_module(const Module& m, const Submodule& u);
ModuleHom inclusion(const Module& m, const Submodule& u);

struct Quotient {
    Module module;
    ModuleHom projection;
};
/// Quotient coordinates are the non-pivot columns of U's canonical basis.
Quotient quotient(const Module& m, const Submodule& u);

Submodule kernel(const Module& m, const ModuleHom& f);
Submodule image(const Module& n, const ModuleHom& f);
/// f(U) as a submodule of the codomain.
Submodule image_of(const ModuleHom& f, const Submodule& u);

Module simple(const AlgebraPtr& a, VertexId i);
/// e_i A: basis paths from i grouped by target, arrows act by right multiplication.
Module projective(const AlgebraPtr& a, VertexId i);
/// A_A: the space at j is spanned by all basis paths ending at j, so its
/// coordinates are algebra coordinates.
Module regular(const AlgebraPtr& a);
Module direct_sum(const std::vector<Module>& parts);
Module direct_sum(const Module& a, const Module& b);

Submodule radical(const Module& m);
std::vector<std::size_t> top_dims(const Module& m);

/// Basis of Hom_A(M, N).
std::vector<ModuleHom> hom_space(const Module& m, const Module& n);

inline constexpr int kDefaultIsoTrials = 64;
/// Random element of Hom(M, N) invertible at every vertex. A true answer is
/// certain; a false answer on isomorphic modules happens with probability at
/// most (max_v dim M_v / p)^trials.
bool is_iso(const Module& m, const Module& n, int trials = kDefaultIsoTrials,
            std::uint64_t seed = 0);

struct ProjectiveCover {
    Module projective;
    ModuleHom epi;
    /// Vertex of each indecomposable summand P(v), in summand order.
    std::vector<VertexId> summands;
};
/// Minimal cover: one P(v) per top basis vector at v.
ProjectiveCover projective_cover(const Module& m);
Module syzygy(const Module& m, int steps = 1);
bool is_projective(const Module& m);

/// M is a direct summand of some N^s.
bool in_add(const Module& m, const Module& n);

struct Stripped {
    Module core;
    std::vector<VertexId> stripped;  // sorted
};
Stripped strip_projective_summands(const Module& m);

}  // namespace qalg::repr
