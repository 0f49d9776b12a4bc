#pragma once
// Upper bounds for the dimension of the bounded derived category, and the
// syzygy-finiteness certificate that comes with the ll^{t_V}(A) <= 2 bound.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qalg/torsion.hpp"

namespace qalg::bounds {

using torsion::LayerLengthTrace;
using torsion::PdResult;
using torsion::SimpleClassification;
using torsion::VertexSet;

class VNotInFiniteProjDim : public std::invalid_argument {
public:
    VNotInFiniteProjDim(std::vector<quiver::VertexId> offending);
    const std::vector<quiver::VertexId>& offending() const { return offending_; }

private:
    std::vector<quiver::VertexId> offending_;
};

class UndeterminedPd : public std::runtime_error {
public:
    UndeterminedPd(std::vector<quiver::VertexId> vertices, int cutoff);
    const std::vector<quiver::VertexId>& vertices() const { return vertices_; }
    int cutoff() const { return cutoff_; }

private:
    std::vector<quiver::VertexId> vertices_;
    int cutoff_;
};

class HypothesisFailed : public std::runtime_error {
public:
    explicit HypothesisFailed(int ll);
    int ll() const { return ll_; }

private:
    int ll_;
};

class SearchSpaceTooLarge : public std::runtime_error {
public:
    SearchSpaceTooLarge(std::size_t size, std::size_t cap);
};

struct BoundEntry {
    std::string key;      // loewy, gldim, layer_product, layer_sum, layer_two
    std::string formula;  // human-readable formula
    std::optional<int> value;
    std::string note;  // why the entry is inapplicable, if it is
};

struct Implications {
    std::optional<int> syzygy_finite_k;
    bool big_findim_finite = false;
    bool psi_dim_finite = false;
};

struct BoundReport {
    std::string algebra;
    VertexSet v;
    PdResult pd_v;
    LayerLengthTrace ll_tv;
    int loewy_length = 0;
    SimpleClassification classification;
    std::vector<BoundEntry> entries;
    int best = 0;
    Implications flags;

    const BoundEntry* entry(const std::string& key) const;
};

/// Throws VNotInFiniteProjDim when V meets S^{oo}, UndeterminedPd when some
/// simple in V has undetermined pd.
BoundReport derived_dim_bounds(const quiver::AlgebraPtr& a, const VertexSet& v,
                               const SimpleClassification& c);
BoundReport derived_dim_bounds(const quiver::AlgebraPtr& a, const VertexSet& v, int cutoff);

enum class Strategy { Exhaustive, Greedy };
inline constexpr std::size_t kDefaultSearchCap = 20;

struct SearchResult {
    BoundReport report;
    std::size_t evaluated = 0;
};
/// Minimizes the best bound over V within S^{<oo}; ties go to smaller |V|,
/// then to the lexicographically smaller vertex list.
SearchResult best_v_search(const quiver::AlgebraPtr& a, const SimpleClassification& c,
                           Strategy strategy, std::size_t cap = kDefaultSearchCap);

struct CertificateCase {
    std::string label;
    std::vector<std::size_t> dims;
    std::vector<std::size_t> syzygy_dims;
    bool pass = false;
    /// Only computed on failure: membership in add(Omega^{k-1}(A/rad A) + A).
    std::optional<bool> pass_one_step_earlier;
};

struct CertificateReport {
    std::string algebra;
    VertexSet v;
    int delta = 0;
    int k = 0;
    int ll_tv = 0;
    std::uint64_t seed = 0;
    std::vector<std::size_t> generator_dims;
    std::vector<CertificateCase> cases;
    std::size_t failures() const;
    bool pass() const { return failures() == 0; }
};

/// For each module M of the smoke set and `samples` random modules checks
/// Omega^k(M) in add(Omega^k(A/rad A) + A) with k = pd V + 2.
CertificateReport syzygy_finiteness_certificate(const quiver::AlgebraPtr& a, const VertexSet& v,
                                                std::size_t samples, std::uint64_t seed,
                                                const SimpleClassification& c);
CertificateReport syzygy_finiteness_certificate(const quiver::AlgebraPtr& a, const VertexSet& v,
                                                std::size_t samples, std::uint64_t seed,
                                                int cutoff);
/// Simples, radicals of projectives and P(i) modulo its last radical layer.
std::vector<std::pair<std::string, repr::Module>> smoke_set(const quiver::AlgebraPtr& a);

struct CheckResult {
    bool pass = false;
    int ll_l = 0;
    int ll_m = 0;
    int ll_n = 0;
    std::string detail;
};
/// max{ll L, ll N} <= ll M <= ll L + ll N, with ll M = ll N when ll L = 0
/// and ll M = ll L when ll N = 0.
CheckResult exact_sequence_bound_check(const repr::Module& l, const repr::Module& m,
                                       const repr::Module& n, const VertexSet& v);

}  // namespace qalg::bounds
