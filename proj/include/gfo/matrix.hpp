#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gfo/field.hpp"

namespace gfo {

/// Dense row-major matrix over a Field. Entries are stored as canonical
/// element indices; the referenced Field must outlive the matrix.
class Matrix {
public:
    /// Zero matrix of the given shape.
    Matrix(const Field& f, std::int64_t rows, std::int64_t cols);

    std::int64_t rows() const { return rows_; }
    std::int64_t cols() const { return cols_; }
    const Field& field() const { return *field_; }

    Elem operator()(std::int64_t r, std::int64_t c) const {
        return field_->elem(e_[r * cols_ + c]);
    }
    std::int64_t index_at(std::int64_t r, std::int64_t c) const { return e_[r * cols_ + c]; }

    void set(std::int64_t r, std::int64_t c, const Elem& v);
    void set_index(std::int64_t r, std::int64_t c, std::int64_t index);

    friend bool operator==(const Matrix& a, const Matrix& b);
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    /// Text form: header "rows cols", then one line of element indices per row.
    std::string to_text() const;
    static Matrix from_text(const Field& f, std::string_view text);

private:
    const Field* field_;
    std::int64_t rows_;
    std::int64_t cols_;
    std::vector<std::int64_t> e_;
};

Matrix identity(const Field& f, std::int64_t n);
Matrix zero_matrix(const Field& f, std::int64_t rows, std::int64_t cols);

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix transpose(const Matrix& a);
Matrix scalar_mul(const Elem& c, const Matrix& a);

/// (A @ B)[i*rb + k][j*cb + l] = A[i][j] * B[k][l].
Matrix kronecker(const Matrix& a, const Matrix& b);

/// A * A^T; requires a square matrix.
Matrix gram(const Matrix& a);

/// The weight k with A * A^T == k * I, if the Gram matrix is scalar.
std::optional<Elem> weight_of(const Matrix& a);

/// Matrix times column vector.
std::vector<Elem> operator*(const Matrix& a, const std::vector<Elem>& v);

}  // namespace gfo
