#pragma once

#include "grl/scalar.hpp"

#include <cstddef>
#include <vector>

namespace grl {

// Dense matrix over a single exact field.
class Matrix {
  public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const FieldDesc& f);

    static Matrix identity(std::size_t n, const FieldDesc& f);
    static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows,
                            std::size_t cols, const FieldDesc& f);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const FieldDesc& field() const { return field_; }

    Scalar& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& at(std::size_t r, std::size_t c) const {
        return data_[r * cols_ + c];
    }

    std::vector<Scalar> row(std::size_t r) const;
    void append_row(const std::vector<Scalar>& row);

    Matrix transpose() const;
    Matrix operator*(const Matrix& o) const;
    bool operator==(const Matrix& o) const;

    // Stacks o below this matrix (column counts must agree).
    Matrix vstack(const Matrix& o) const;
    // Places o to the right of this matrix (row counts must agree).
    Matrix hstack(const Matrix& o) const;

    bool is_zero() const;

  private:
    std::size_t rows_ = 0, cols_ = 0;
    FieldDesc field_;
    std::vector<Scalar> data_;
};

struct RrefResult {
    Matrix reduced;
    std::vector<std::size_t> pivots;
    std::size_t rank = 0;
};

// Reduced row echelon form with deterministic first-nonzero pivoting.
RrefResult rref(const Matrix& m);

// Rows form a basis of the right kernel {x : m x^T = 0}, one row per free
// column of rref(m), in column order.
Matrix nullspace(const Matrix& m);

// Basis (in rref) of rowspace(a) ∩ rowspace(b), via the stacked-nullspace
// method.
Matrix rowspace_intersect(const Matrix& a, const Matrix& b);

// Rref with zero rows dropped; canonical representative of a rowspace.
Matrix row_space(const Matrix& m);

// Whether v lies in the rowspace of the rref basis rs (zero-row-free rref).
bool in_row_space(const Matrix& rs, const std::vector<Scalar>& v);

// Residual of v after reducing against the rref basis rs.
std::vector<Scalar> reduce_against(const Matrix& rs, std::vector<Scalar> v);

}  // namespace grl
