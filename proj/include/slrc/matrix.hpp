#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "slrc/field.hpp"

namespace slrc {

struct RrefResult;

/// Dense row-major matrix over a Field. Immutable value semantics in practice:
/// every operation returns a fresh matrix.
class Matrix {
public:
    Matrix(FieldPtr field, std::size_t rows, std::size_t cols);
    Matrix(FieldPtr field, std::size_t rows, std::size_t cols, std::vector<Elt> entries);
    Matrix(FieldPtr field, std::initializer_list<std::initializer_list<int>> rows);

    static Matrix identity(FieldPtr field, std::size_t n);

    const FieldPtr& field() const { return f_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Elt& at(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
    Elt at(std::size_t r, std::size_t c) const { return e_[r * cols_ + c]; }
    const std::vector<Elt>& entries() const { return e_; }

    std::vector<Elt> row(std::size_t r) const;
    std::vector<Elt> col(std::size_t c) const;

    Matrix mul(const Matrix& rhs) const;
    Matrix transpose() const;
    Matrix kronecker(const Matrix& rhs) const;

    /// msg * M (row vector times matrix).
    std::vector<Elt> left_mul(const std::vector<Elt>& msg) const;
    /// M * v^T (matrix times column vector).
    std::vector<Elt> right_mul(const std::vector<Elt>& v) const;

    RrefResult rref() const;
    std::size_t rank() const;

    /// Basis (as rows, RREF-canonical) of { x : M x^T = 0 }.
    Matrix kernel() const;

    struct Solution {
        bool solvable = false;
        std::vector<Elt> x;            // a particular solution when solvable
        std::size_t kernel_dim = 0;
    };
    Solution solve(const std::vector<Elt>& rhs) const;

    Matrix select_columns(const std::vector<std::size_t>& keep) const;
    Matrix drop_columns(const std::vector<std::size_t>& drop) const;
    Matrix vstack(const Matrix& below) const;

    bool operator==(const Matrix& other) const;
    bool row_space_equals(const Matrix& other) const;

private:
    void check_same_field(const Matrix& other) const;

    FieldPtr f_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Elt> e_;
};

struct RrefResult {
    Matrix mat;
    std::vector<std::size_t> pivots;
};

/// a (x) b for vectors (used by recovery-vector lifting).
std::vector<Elt> kron_vec(const Field& f, const std::vector<Elt>& a, const std::vector<Elt>& b);

} // namespace slrc
