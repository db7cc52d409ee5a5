#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <utility>
#include <vector>

#include "sosgap/rational.hpp"

namespace sosgap {

/// Dense rational matrix, row-major.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), e_(rows * cols) {}
    Matrix(std::initializer_list<std::initializer_list<long>> rows);

    static Matrix identity(std::size_t n);
    static Matrix from_rows(const std::vector<std::vector<Rational>>& rows);
    static Matrix from_columns(const std::vector<std::vector<Rational>>& cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    std::vector<Rational> row(std::size_t i) const;
    std::vector<Rational> column(std::size_t j) const;

    Matrix transpose() const;
    bool is_symmetric() const;
    bool is_zero() const;

    Matrix operator*(const Matrix& o) const;
    Matrix operator+(const Matrix& o) const;
    Matrix operator-(const Matrix& o) const;
    Matrix scaled(const Rational& c) const;
    std::vector<Rational> apply(const std::vector<Rational>& x) const;

    bool operator==(const Matrix& o) const = default;

    /// Leading k x k principal submatrix.
    Matrix leading_minor(std::size_t k) const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> e_;
};

/// Reduced row echelon form and rank.
std::pair<Matrix, std::size_t> rref(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Columns form a basis of the right null space {x : m x = 0}.
Matrix kernel_basis(const Matrix& m);

Rational determinant(const Matrix& m);

std::optional<Matrix> inverse(const Matrix& m);

/// One solution of a x = b, if consistent.
std::optional<std::vector<Rational>> solve(const Matrix& a, const std::vector<Rational>& b);

/// True iff basis^T h basis has all leading principal minors strictly positive
/// (Sylvester). h must be symmetric; basis columns span the subspace.
bool is_positive_definite_on_subspace(const Matrix& h, const Matrix& basis);

std::vector<Rational> operator*(const Rational& c, const std::vector<Rational>& v);
Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b);

}  // namespace sosgap
