#include "grl/matrix.hpp"

#include <stdexcept>

namespace grl {

Matrix::Matrix(std::size_t rows, std::size_t cols, const FieldDesc& f)
    : rows_(rows), cols_(cols), field_(f),
      data_(rows * cols, Scalar::zero(f)) {}

Matrix Matrix::identity(std::size_t n, const FieldDesc& f) {
    Matrix m(n, n, f);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
    return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Scalar>>& rows,
                         std::size_t cols, const FieldDesc& f) {
    Matrix m(rows.size(), cols, f);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols)
            throw std::invalid_argument("ragged row in from_rows");
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

std::vector<Scalar> Matrix::row(std::size_t r) const {
    return {data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_};
}

void Matrix::append_row(const std::vector<Scalar>& row) {
    if (row.size() != cols_)
        throw std::invalid_argument("row length mismatch");
    data_.insert(data_.end(), row.begin(), row.end());
    ++rows_;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_, field_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_ || field_ != o.field_)
        throw std::invalid_argument("matrix product shape/field mismatch");
    Matrix r(rows_, o.cols_, field_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            if (at(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                r.at(i, j) += at(i, k) * o.at(k, j);
        }
    return r;
}

bool Matrix::operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && field_ == o.field_ &&
           data_ == o.data_;
}

Matrix Matrix::vstack(const Matrix& o) const {
    if (cols_ != o.cols_ || field_ != o.field_)
        throw std::invalid_argument("vstack column/field mismatch");
    Matrix r(rows_ + o.rows_, cols_, field_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
    for (std::size_t i = 0; i < o.rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(rows_ + i, j) = o.at(i, j);
    return r;
}

Matrix Matrix::hstack(const Matrix& o) const {
    if (rows_ != o.rows_ || field_ != o.field_)
        throw std::invalid_argument("hstack row/field mismatch");
    Matrix r(rows_, cols_ + o.cols_, field_);
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
        for (std::size_t j = 0; j < o.cols_; ++j)
            r.at(i, cols_ + j) = o.at(i, j);
    }
    return r;
}

bool Matrix::is_zero() const {
    for (const auto& s : data_)
        if (!s.is_zero()) return false;
    return true;
}

RrefResult rref(const Matrix& m) {
    RrefResult res;
    res.reduced = m;
    Matrix& a = res.reduced;
    std::size_t lead = 0;
    for (std::size_t col = 0; col < a.cols() && lead < a.rows(); ++col) {
        // first nonzero entry in this column at or below `lead`
        std::size_t piv = lead;
        while (piv < a.rows() && a.at(piv, col).is_zero()) ++piv;
        if (piv == a.rows()) continue;
        if (piv != lead)
            for (std::size_t j = 0; j < a.cols(); ++j)
                std::swap(a.at(piv, j), a.at(lead, j));
        Scalar inv = a.at(lead, col).inverse();
        for (std::size_t j = col; j < a.cols(); ++j)
            a.at(lead, j) *= inv;
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i == lead || a.at(i, col).is_zero()) continue;
            Scalar f = a.at(i, col);
            for (std::size_t j = col; j < a.cols(); ++j)
                a.at(i, j) -= f * a.at(lead, j);
        }
        res.pivots.push_back(col);
        ++lead;
    }
    res.rank = res.pivots.size();
    return res;
}

Matrix nullspace(const Matrix& m) {
    RrefResult r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : r.pivots) is_pivot[p] = true;
    Matrix basis(m.cols() - r.rank, m.cols(), m.field());
    std::size_t row = 0;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        basis.at(row, free) = Scalar::one(m.field());
        for (std::size_t k = 0; k < r.rank; ++k)
            basis.at(row, r.pivots[k]) = -r.reduced.at(k, free);
        ++row;
    }
    return basis;
}

Matrix rowspace_intersect(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.cols())
        throw std::invalid_argument("rowspace_intersect column mismatch");
    if (a.field() != b.field()) throw FieldMismatch();
    // u a = v b  <=>  (u, v) in the kernel of [a^T | -b^T]
    Matrix negbt = b.transpose();
    for (std::size_t i = 0; i < negbt.rows(); ++i)
        for (std::size_t j = 0; j < negbt.cols(); ++j)
            negbt.at(i, j) = -negbt.at(i, j);
    Matrix ker = nullspace(a.transpose().hstack(negbt));
    Matrix out(0, a.cols(), a.field());
    for (std::size_t i = 0; i < ker.rows(); ++i) {
        std::vector<Scalar> y(a.cols(), Scalar::zero(a.field()));
        for (std::size_t k = 0; k < a.rows(); ++k)
            for (std::size_t j = 0; j < a.cols(); ++j)
                y[j] += ker.at(i, k) * a.at(k, j);
        out.append_row(y);
    }
    return row_space(out);
}

Matrix row_space(const Matrix& m) {
    RrefResult r = rref(m);
    Matrix out(0, m.cols(), m.field());
    for (std::size_t i = 0; i < r.rank; ++i) out.append_row(r.reduced.row(i));
    return out;
}

std::vector<Scalar> reduce_against(const Matrix& rs, std::vector<Scalar> v) {
    for (std::size_t i = 0; i < rs.rows(); ++i) {
        std::size_t pc = 0;  // pivot column: first nonzero entry of the row
        while (pc < rs.cols() && rs.at(i, pc).is_zero()) ++pc;
        if (pc == rs.cols() || v[pc].is_zero()) continue;
        Scalar f = v[pc] / rs.at(i, pc);
        for (std::size_t j = pc; j < rs.cols(); ++j)
            v[j] -= f * rs.at(i, j);
    }
    return v;
}

bool in_row_space(const Matrix& rs, const std::vector<Scalar>& v) {
    auto r = reduce_against(rs, v);
    for (const auto& s : r)
        if (!s.is_zero()) return false;
    return true;
}

}  // namespace grl
