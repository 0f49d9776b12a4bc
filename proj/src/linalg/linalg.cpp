#include "qalg/linalg.hpp"

#include <algorithm>

#include "qalg/kernels.hpp"

namespace qalg::linalg {

RrefResult rref(Matrix m)
{
    const auto& f = m.field();
    const auto p = f.modulus();
    const std::size_t nr = m.rows(), nc = m.cols();
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < nc && r < nr; ++c) {
        std::size_t sel = r;
        while (sel < nr && m(sel, c) == 0)
            ++sel;
        if (sel == nr)
            continue;
        if (sel != r)
            std::swap_ranges(m.row(sel).begin(), m.row(sel).end(), m.row(r).begin());
        auto prow = m.row(r);
        simd::scale_mod(prow.data() + c, f.inv(prow[c]), p, nc - c);
        for (std::size_t i = 0; i < nr; ++i) {
            if (i == r)
                continue;
            Scalar a = m(i, c);
            if (a)
                simd::axpy_mod(m.row(i).data() + c, prow.data() + c, f.neg(a), p, nc - c);
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(m), std::move(pivots)};
}

std::size_t rank(const Matrix& m)
{
    return rref(m).rank();
}

Matrix kernel_basis(const Matrix& m)
{
    auto [form, pivots] = rref(m);
    const auto& f = m.field();
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : pivots)
        is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (!is_pivot[c])
            free_cols.push_back(c);
    Matrix k(m.cols(), free_cols.size(), f);
    for (std::size_t j = 0; j < free_cols.size(); ++j) {
        std::size_t fc = free_cols[j];
        k.set(fc, j, 1);
        for (std::size_t r = 0; r < pivots.size(); ++r)
            k.set(pivots[r], j, f.neg(form(r, fc)));
    }
    return k;
}

Matrix left_kernel_basis(const Matrix& m)
{
    return kernel_basis(m.transpose()).transpose();
}

std::optional<Matrix> solve(const Matrix& m, const Matrix& rhs)
{
    if (m.rows() != rhs.rows())
        throw DimensionMismatch("solve: row counts differ");
    auto [form, pivots] = rref(Matrix::hstack(m, rhs));
    const std::size_t n = m.cols();
    Matrix x(n, rhs.cols(), m.field());
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] >= n)
            return std::nullopt;
        for (std::size_t j = 0; j < rhs.cols(); ++j)
            x.set(pivots[r], j, form(r, n + j));
    }
    return x;
}

Matrix row_basis(const Matrix& m)
{
    auto res = rref(m);
    return res.form.block(0, 0, res.rank(), m.cols());
}

Matrix sum_subspaces(const Matrix& a, const Matrix& b)
{
    if (a.cols() != b.cols())
        throw DimensionMismatch("sum_subspaces: ambient dimensions differ");
    return row_basis(Matrix::vstack(a, b));
}

Matrix intersect_subspaces(const Matrix& a, const Matrix& b)
{
    if (a.cols() != b.cols())
        throw DimensionMismatch("intersect_subspaces: ambient dimensions differ");
    Matrix ba = row_basis(a), bb = row_basis(b);
    if (ba.rows() == 0 || bb.rows() == 0)
        return Matrix(0, a.cols(), a.field());
    // x A + y B = 0  =>  x A spans the intersection (A has independent rows).
    Matrix lk = left_kernel_basis(Matrix::vstack(ba, bb));
    Matrix x = lk.block(0, 0, lk.rows(), ba.rows());
    return row_basis(x * ba);
}

bool subspace_contains(const Matrix& a, const Matrix& v)
{
    if (a.cols() != v.cols())
        throw DimensionMismatch("subspace_contains: ambient dimensions differ");
    return rank(Matrix::vstack(a, v)) == rank(a);
}

bool same_subspace(const Matrix& a, const Matrix& b)
{
    if (a.cols() != b.cols())
        throw DimensionMismatch("same_subspace: ambient dimensions differ");
    return row_basis(a) == row_basis(b);
}

void EchelonBasis::reduce(std::vector<Scalar>& v) const
{
    const auto p = field_.modulus();
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        Scalar a = v[pivot_[i]];
        if (a)
            simd::axpy_mod(v.data(), rows_[i].data(), field_.neg(a), p, ncols_);
    }
}

bool EchelonBasis::contains(std::vector<Scalar> v) const
{
    reduce(v);
    return std::all_of(v.begin(), v.end(), [](Scalar s) { return s == 0; });
}

bool EchelonBasis::insert(std::vector<Scalar> v)
{
    if (v.size() != ncols_)
        throw DimensionMismatch("EchelonBasis::insert: wrong vector length");
    reduce(v);
    auto it = std::find_if(v.begin(), v.end(), [](Scalar s) { return s != 0; });
    if (it == v.end())
        return false;
    const std::size_t c = static_cast<std::size_t>(it - v.begin());
    const auto p = field_.modulus();
    simd::scale_mod(v.data(), field_.inv(v[c]), p, ncols_);
    for (auto& row : rows_) {
        Scalar a = row[c];
        if (a)
            simd::axpy_mod(row.data(), v.data(), field_.neg(a), p, ncols_);
    }
    auto pos = std::upper_bound(pivot_.begin(), pivot_.end(), c) - pivot_.begin();
    pivot_.insert(pivot_.begin() + pos, c);
    rows_.insert(rows_.begin() + pos, std::move(v));
    return true;
}

Matrix EchelonBasis::to_matrix() const
{
    return Matrix::from_row_vectors(rows_, ncols_, field_);
}

std::vector<std::size_t> EchelonBasis::pivots() const
{
    return pivot_;
}

}  // namespace qalg::linalg
