#pragma once
// The torsion radical t_V, radical layer lengths and projective dimensions.
//
// For a set V of simples (given by vertex) with complement V', t_V(M) is the
// largest submodule whose top lies in add V'. It is the submodule generated
// by the spaces M_v at the V' vertices. The layer functor is F = rad o t_V,
// and ll^{t_V}(M) is the least i with t_V(F^i M) = 0; V = {} gives the
// Loewy length.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qalg/module.hpp"

namespace qalg::torsion {

using quiver::Algebra;
using quiver::AlgebraPtr;
using quiver::VertexId;
using repr::Module;
using repr::Submodule;

/// Membership flags indexed by vertex.
using VertexSet = std::vector<bool>;

VertexSet make_vertex_set(int num_vertices, const std::vector<VertexId>& members);
std::vector<VertexId> members(const VertexSet& v);
VertexSet complement(const VertexSet& v);

Submodule torsion_radical(const Module& m, const VertexSet& v);
/// q_{t_V}(M) = M / t_V(M).
repr::Quotient torsion_free_quotient(const Module& m, const VertexSet& v);
/// F(M) = rad t_V(M) as a module.
Module layer_functor(const Module& m, const VertexSet& v);
/// F^i(M) and t_V F^i(M) as submodules of M.
Submodule layer_power(const Module& m, const VertexSet& v, int i);
Submodule torsion_layer(const Module& m, const VertexSet& v, int i);

struct LayerLengthTrace {
    int value = 0;
    /// Dimension vectors of M, t M, F M, t F M, ... down to the first zero t F^i M.
    std::vector<std::vector<std::size_t>> chain;
};
LayerLengthTrace layer_length(const Module& m, const VertexSet& v);
int loewy_length(const Module& m);

/// span{m * x : x in J}, a submodule of M.
Submodule module_times_ideal(const Module& m, const quiver::IdealBasis& j);
/// A submodule of the regular module read as a subspace of A.
quiver::IdealBasis as_ideal(const Algebra& a, const Submodule& u);

struct PdResult {
    enum class Kind { Finite, Infinite, Undetermined };
    Kind kind = Kind::Finite;
    int value = -1;  // Finite: pd; Undetermined: the step reached
    /// Infinite: Omega^a(M) is a summand of some Omega^b(M)^s with a < b
    /// and Omega^a(M) not projective. periodic = the two are isomorphic,
    /// or isomorphic after removing projective summands (reason "stable").
    int cycle_a = 0;
    int cycle_b = 0;
    bool periodic = false;
    std::string reason;  // Undetermined: "cutoff" or "size"

    bool finite() const { return kind == Kind::Finite; }
    bool infinite() const { return kind == Kind::Infinite; }
    bool undetermined() const { return kind == Kind::Undetermined; }
    static PdResult of(int n) { return PdResult{Kind::Finite, n, 0, 0, false, {}}; }
};

/// Syzygies larger than this end the computation as Undetermined("size").
inline constexpr std::size_t kMaxSyzygyDim = 500;
/// The summand test between stable cores only runs below this size.
inline constexpr std::size_t kStableCheckDim = 48;
inline constexpr int kPeriodGrace = 6;

int default_cutoff(const Algebra& a);
PdResult pd(const Module& m, int cutoff, std::size_t max_dim = kMaxSyzygyDim);
std::string to_string(const PdResult& r);

struct SimpleClassification {
    std::vector<PdResult> pd;  // by vertex
    VertexSet finite;          // S^{<oo}
    VertexSet infinite;        // S^{oo}
    PdResult gldim;
    bool determined() const;
};
SimpleClassification classify_simples(const AlgebraPtr& a, int cutoff);
/// Max of pd S over S in V; Finite(-1) for V empty.
PdResult pd_of_set(const SimpleClassification& c, const VertexSet& v);
PdResult pd_of_set(const AlgebraPtr& a, const VertexSet& v, int cutoff);

class UndeterminedClassification : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};
/// ll^{t_V}(M) with V = S^{<oo}.
int ell_infinity(const Module& m, const SimpleClassification& c);

}  // namespace qalg::torsion
