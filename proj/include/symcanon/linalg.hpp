#pragma once

#include <optional>
#include <vector>

#include "symcanon/field.hpp"
#include "symcanon/poly.hpp"

namespace symcanon {

/// Dense matrix over a FieldSpec; entries are reduced field elements.
class Matrix {
public:
    Matrix() = default;
    Matrix(FieldSpec field, std::size_t rows, std::size_t cols)
        : field_(field), rows_(rows), cols_(cols), data_(rows * cols, mpq_class(0)) {}
    static Matrix identity(FieldSpec field, std::size_t n);
    /// Entries are reduced into the field.
    static Matrix from_rows(FieldSpec field, const std::vector<std::vector<mpq_class>>& rows);

    const FieldSpec& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    mpq_class& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const mpq_class& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    void set(std::size_t i, std::size_t j, const mpq_class& v) { at(i, j) = field_.reduce(v); }
    std::vector<mpq_class> row(std::size_t i) const;
    std::vector<mpq_class> col(std::size_t j) const;

    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix transpose() const;
    Matrix submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;
    bool operator==(const Matrix& o) const;
    bool operator!=(const Matrix& o) const { return !(*this == o); }
    bool is_zero() const;

private:
    FieldSpec field_;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<mpq_class> data_;
};

struct RrefResult {
    Matrix reduced;
    std::vector<std::size_t> pivots;
};

/// Reduced row echelon form. Over Q the elimination is fraction-free
/// (integer Gauss-Jordan), with a single normalization at the end.
RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);
/// Basis of the right kernel {x : m x = 0}; one vector per free column.
std::vector<std::vector<mpq_class>> kernel(const Matrix& m);
/// Solution of m x = b with free variables set to zero.
std::optional<std::vector<mpq_class>> solve(const Matrix& m, const std::vector<mpq_class>& b);
mpq_class determinant(const Matrix& m);
std::optional<Matrix> inverse(const Matrix& m);

/// Rows indexed by polys, columns by graded_basis(nvars, d).
Matrix coeff_matrix(const std::vector<Polynomial>& polys, int d);
/// Inverse of coeff_matrix for a single row.
Polynomial poly_from_coeffs(const RingPtr& ring, int d, const std::vector<mpq_class>& coeffs, std::size_t offset = 0);

}  // namespace symcanon
