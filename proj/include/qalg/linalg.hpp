#pragma once
// Exact elimination over GF(p).
//
// Subspaces are represented by matrices whose ROWS span them. Canonical
// bases are the nonzero rows of the reduced row echelon form, so two
// subspaces are equal iff their canonical bases compare equal.

#include <optional>
#include <vector>

#include "qalg/matrix.hpp"

namespace qalg::linalg {

class DimensionMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct RrefResult {
    Matrix form;
    std::vector<std::size_t> pivots;
    std::size_t rank() const { return pivots.size(); }
};

RrefResult rref(Matrix m);
std::size_t rank(const Matrix& m);

/// Columns span {k : m k = 0}; column count = cols - rank.
Matrix kernel_basis(const Matrix& m);
/// Rows span {x : x m = 0}.
Matrix left_kernel_basis(const Matrix& m);

/// Some x with m x = rhs, or nullopt when rhs is outside the column space.
std::optional<Matrix> solve(const Matrix& m, const Matrix& rhs);

/// Canonical (RREF, zero rows dropped) basis of the row space.
Matrix row_basis(const Matrix& m);
Matrix sum_subspaces(const Matrix& a, const Matrix& b);
Matrix intersect_subspaces(const Matrix& a, const Matrix& b);
/// Every row of v lies in the row space of a.
bool subspace_contains(const Matrix& a, const Matrix& v);
bool same_subspace(const Matrix& a, const Matrix& b);

/// Incrementally maintained reduced echelon basis of a row space.
class EchelonBasis {
public:
    EchelonBasis(std::size_t ncols, Field field) : ncols_(ncols), field_(field) {}

    std::size_t dim() const { return rows_.size(); }
    std::size_t ncols() const { return ncols_; }
    const Field& field() const { return field_; }

    /// Reduce v in place against the basis; afterwards v has zeros in every
    /// pivot column.
    void reduce(std::vector<Scalar>& v) const;
    bool contains(std::vector<Scalar> v) const;
    /// Returns true if v was independent and got added.
    bool insert(std::vector<Scalar> v);
    bool insert(std::span<const Scalar> v) { return insert(std::vector<Scalar>(v.begin(), v.end())); }

    /// Rows sorted by pivot column: the canonical basis.
    Matrix to_matrix() const;
    std::vector<std::size_t> pivots() const;

private:
    std::size_t ncols_;
    Field field_;
    std::vector<std::vector<Scalar>> rows_;
    std::vector<std::size_t> pivot_;
};

}  // namespace qalg::linalg
