#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <vector>

#include "qalg/field.hpp"

namespace qalg::linalg {

/// Dense row-major matrix over GF(p). Entries are always reduced.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, Field field);

    static Matrix identity(std::size_t n, Field field);
    /// Entries are reduced mod p, so negative literals are fine.
    static Matrix from_rows(std::initializer_list<std::initializer_list<std::int64_t>> rows,
                            Field field);
    static Matrix from_row_vectors(const std::vector<std::vector<Scalar>>& rows, std::size_t cols,
                                   Field field);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const Field& field() const { return field_; }
    std::uint32_t modulus() const { return field_.modulus(); }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Scalar operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, std::int64_t v) { data_[r * cols_ + c] = field_.reduce(v); }

    std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    std::span<Scalar> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    const std::vector<Scalar>& data() const { return data_; }

    bool is_zero() const;
    Matrix transpose() const;
    Matrix operator*(const Matrix& rhs) const;
    Matrix operator+(const Matrix& rhs) const;
    Matrix operator-(const Matrix& rhs) const;
    Matrix scaled(Scalar c) const;
    /// this += c * rhs
    void add_scaled(const Matrix& rhs, Scalar c);

    Matrix select_rows(const std::vector<std::size_t>& idx) const;
    Matrix select_cols(const std::vector<std::size_t>& idx) const;
    /// Rows [r0, r0+n) and columns [c0, c0+m).
    Matrix block(std::size_t r0, std::size_t c0, std::size_t n, std::size_t m) const;
    void set_block(std::size_t r0, std::size_t c0, const Matrix& b);

    static Matrix vstack(const Matrix& top, const Matrix& bottom);
    static Matrix hstack(const Matrix& left, const Matrix& right);

    bool operator==(const Matrix& other) const
    {
        return rows_ == other.rows_ && cols_ == other.cols_ && field_ == other.field_ &&
               data_ == other.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    Field field_{};
    std::vector<Scalar> data_;
};

std::ostream& operator<<(std::ostream& os, const Matrix& m);

}  // namespace qalg::linalg
