#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <vector>

#include "wst/rational.hpp"

namespace wst {

// Dense matrix over the rationals. Zero-row and zero-column shapes are legal
// and behave as the corresponding empty linear maps.
class RationalMatrix {
public:
    RationalMatrix() : rows_(0), cols_(0) {}
    RationalMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}
    RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

    static RationalMatrix identity(std::size_t n);
    static RationalMatrix diagonal(const std::vector<Rational>& entries);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    bool operator==(const RationalMatrix& other) const = default;

    RationalMatrix transpose() const;
    RationalMatrix operator*(const RationalMatrix& other) const;
    RationalMatrix operator+(const RationalMatrix& other) const;
    RationalMatrix operator-(const RationalMatrix& other) const;
    RationalMatrix scaled(const Rational& factor) const;

    Rational trace() const;
    bool is_zero() const;
    bool is_symmetric() const;

    // New matrix made of the selected columns, in the given order.
    RationalMatrix select_columns(const std::vector<std::size_t>& indices) const;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Rational> data_;
};

RationalMatrix hcat(const RationalMatrix& left, const RationalMatrix& right);
RationalMatrix vcat(const RationalMatrix& top, const RationalMatrix& bottom);

// Row reduction result. Pivots are chosen deterministically: scanning columns
// left to right, the first nonzero entry on or below the current row wins, so
// pivot columns, kernel bases and solutions are canonical for a given input.
struct Echelon {
    RationalMatrix rref;
    std::vector<std::size_t> pivot_columns;
    std::size_t rank = 0;
};

Echelon reduced_row_echelon(const RationalMatrix& a);

std::size_t rank(const RationalMatrix& a);

// Columns form the canonical basis of ker(a): one vector per free column,
// with a 1 in the free coordinate and pivot coordinates filled from the RREF.
RationalMatrix kernel_basis(const RationalMatrix& a);

// Solves a * x = b column by column; free variables are set to zero.
// Returns std::nullopt when any column is inconsistent.
std::optional<RationalMatrix> solve(const RationalMatrix& a, const RationalMatrix& b);

// Exact determinant of a square matrix (fraction-aware Gaussian elimination).
Rational determinant(const RationalMatrix& a);

// Coefficients of det(t*I - a) by the Faddeev-LeVerrier recurrence:
// result[k] is the coefficient of t^(n-k), result[0] == 1.
std::vector<Rational> char_poly(const RationalMatrix& a);

// Product of the nonzero eigenvalues of a symmetric matrix, read off the
// characteristic polynomial as |lowest nonzero coefficient|. The number of
// vanishing trailing coefficients is cross-checked against dim - rank.
Rational pseudo_det(const RationalMatrix& s);

// Exact positive-semidefiniteness certificate for a symmetric matrix,
// via LDL^T elimination with symmetric diagonal pivoting.
bool is_psd(const RationalMatrix& s);

}  // namespace wst
