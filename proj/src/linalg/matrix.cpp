#include "qalg/matrix.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

#include "qalg/kernels.hpp"

namespace qalg::linalg {

Matrix::Matrix(std::size_t rows, std::size_t cols, Field field)
    : rows_(rows), cols_(cols), field_(field), data_(rows * cols, 0)
{
}

Matrix Matrix::identity(std::size_t n, Field field)
{
    Matrix m(n, n, field);
    for (std::size_t i = 0; i < n; ++i)
        m.data_[i * n + i] = 1;
    return m;
}

Matrix Matrix::from_rows(std::initializer_list<std::initializer_list<std::int64_t>> rows,
                         Field field)
{
    std::size_t ncols = rows.size() ? rows.begin()->size() : 0;
    Matrix m(rows.size(), ncols, field);
    std::size_t r = 0;
    for (const auto& row : rows) {
        if (row.size() != ncols)
            throw std::invalid_argument("ragged matrix literal");
        std::size_t c = 0;
        for (auto v : row)
            m.set(r, c++, v);
        ++r;
    }
    return m;
}

Matrix Matrix::from_row_vectors(const std::vector<std::vector<Scalar>>& rows, std::size_t cols,
                                Field field)
{
    Matrix m(rows.size(), cols, field);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols)
            throw std::invalid_argument("row length mismatch");
        std::copy(rows[r].begin(), rows[r].end(), m.data_.begin() + r * cols);
    }
    return m;
}

bool Matrix::is_zero() const
{
    for (auto v : data_)
        if (v)
            return false;
    return true;
}

Matrix Matrix::transpose() const
{
    Matrix t(cols_, rows_, field_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t.data_[c * rows_ + r] = data_[r * cols_ + c];
    return t;
}

Matrix Matrix::operator*(const Matrix& rhs) const
{
    if (cols_ != rhs.rows_)
        throw std::invalid_argument("matrix product shape mismatch");
    Matrix out(rows_, rhs.cols_, field_);
    if (rhs.cols_ == 0)
        return out;
    const auto p = modulus();
    for (std::size_t i = 0; i < rows_; ++i) {
        Scalar* dst = out.data_.data() + i * rhs.cols_;
        for (std::size_t k = 0; k < cols_; ++k) {
            Scalar a = data_[i * cols_ + k];
            if (a)
                simd::axpy_mod(dst, rhs.data_.data() + k * rhs.cols_, a, p, rhs.cols_);
        }
    }
    return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const
{
    Matrix out = *this;
    out.add_scaled(rhs, 1);
    return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const
{
    Matrix out = *this;
    out.add_scaled(rhs, field_.neg(1));
    return out;
}

Matrix Matrix::scaled(Scalar c) const
{
    Matrix out = *this;
    simd::scale_mod(out.data_.data(), c % modulus(), modulus(), out.data_.size());
    return out;
}

void Matrix::add_scaled(const Matrix& rhs, Scalar c)
{
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw std::invalid_argument("matrix sum shape mismatch");
    simd::axpy_mod(data_.data(), rhs.data_.data(), c % modulus(), modulus(), data_.size());
}

Matrix Matrix::select_rows(const std::vector<std::size_t>& idx) const
{
    Matrix out(idx.size(), cols_, field_);
    for (std::size_t r = 0; r < idx.size(); ++r)
        std::copy_n(data_.begin() + idx[r] * cols_, cols_, out.data_.begin() + r * cols_);
    return out;
}

Matrix Matrix::select_cols(const std::vector<std::size_t>& idx) const
{
    Matrix out(rows_, idx.size(), field_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < idx.size(); ++c)
            out.data_[r * idx.size() + c] = data_[r * cols_ + idx[c]];
    return out;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t n, std::size_t m) const
{
    if (r0 + n > rows_ || c0 + m > cols_)
        throw std::out_of_range("matrix block out of range");
    Matrix out(n, m, field_);
    for (std::size_t r = 0; r < n; ++r)
        std::copy_n(data_.begin() + (r0 + r) * cols_ + c0, m, out.data_.begin() + r * m);
    return out;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b)
{
    if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_)
        throw std::out_of_range("matrix block out of range");
    for (std::size_t r = 0; r < b.rows_; ++r)
        std::copy_n(b.data_.begin() + r * b.cols_, b.cols_, data_.begin() + (r0 + r) * cols_ + c0);
}

Matrix Matrix::vstack(const Matrix& top, const Matrix& bottom)
{
    if (top.cols_ != bottom.cols_)
        throw std::invalid_argument("vstack column mismatch");
    Matrix out(top.rows_ + bottom.rows_, top.cols_, top.field_);
    std::copy(top.data_.begin(), top.data_.end(), out.data_.begin());
    std::copy(bottom.data_.begin(), bottom.data_.end(), out.data_.begin() + top.data_.size());
    return out;
}

Matrix Matrix::hstack(const Matrix& left, const Matrix& right)
{
    if (left.rows_ != right.rows_)
        throw std::invalid_argument("hstack row mismatch");
    Matrix out(left.rows_, left.cols_ + right.cols_, left.field_);
    out.set_block(0, 0, left);
    out.set_block(0, left.cols_, right);
    return out;
}

std::ostream& operator<<(std::ostream& os, const Matrix& m)
{
    os << "[";
    for (std::size_t r = 0; r < m.rows(); ++r) {
        os << (r ? "; " : "");
        for (std::size_t c = 0; c < m.cols(); ++c)
            os << (c ? " " : "") << m(r, c);
    }
    return os << "]";
}

}  // namespace qalg::linalg
