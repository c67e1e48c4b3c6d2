#pragma once

// Dense exact linear algebra over Q. Sizes in this toolkit stay in the low
// thousands of rows and tens of columns, so plain Gauss-Jordan is enough.

#include <optional>
#include <vector>

#include "htk/symalg.hpp"

namespace htk {

class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    void append_row(const std::vector<Rational>& row);
    std::vector<Rational> row(std::size_t r) const;

    /// In-place reduced row echelon form; returns pivot columns. Zero rows
    /// are dropped.
    std::vector<std::size_t> rref();

    friend bool operator==(const Matrix&, const Matrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

std::size_t rank(Matrix m);

/// Basis of {v : M v = 0}. One vector per free column, with a 1 in that
/// column, in increasing free-column order.
std::vector<std::vector<Rational>> nullspace(Matrix m);

/// Unique solution of M v = rhs, or nullopt when the system is inconsistent.
/// Throws SymalgError if the solution is not unique.
std::optional<std::vector<Rational>> solve_unique(const Matrix& m, const std::vector<Rational>& rhs);

Rational determinant(Matrix m);

}  // namespace htk
