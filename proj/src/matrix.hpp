#pragma once

#include <optional>
#include <vector>

#include "field.hpp"

namespace ts {

// Dense exact matrix over a fixed field. Row-major.
class Matrix {
public:
    Matrix() : rows_(0), cols_(0), field_(Field::rationals()) {}
    Matrix(size_t rows, size_t cols, const Field& f)
        : rows_(rows), cols_(cols), field_(f), data_(rows * cols, Scalar::zero(f)) {}

    static Matrix identity(size_t n, const Field& f);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    const Field& field() const { return field_; }

    Scalar& at(size_t i, size_t j) { return data_[i * cols_ + j]; }
    const Scalar& at(size_t i, size_t j) const { return data_[i * cols_ + j]; }

    bool is_zero() const;
    bool operator==(const Matrix& o) const;

    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix operator*(const Matrix& o) const;
    Matrix scaled(const Scalar& c) const;
    Matrix transposed() const;

    // In-place reduced row echelon form. Pivoting is deterministic (first
    // nonzero entry top-down per column), so results are reproducible.
    // Returns the pivot column of each pivot row, in order.
    std::vector<size_t> rref();

    size_t rank() const;

    // Basis of { x : A x = 0 } as columns of the returned matrix.
    Matrix kernel_basis() const;

    // One solution of A x = b, if any. b has rows() entries.
    std::optional<std::vector<Scalar>> solve(const std::vector<Scalar>& b) const;

private:
    size_t rows_, cols_;
    Field field_;
    std::vector<Scalar> data_;
};

}  // namespace ts
