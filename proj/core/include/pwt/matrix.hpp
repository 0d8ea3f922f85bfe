#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "pwt/field.hpp"

namespace pwt {

// Dense row-major matrix over an exact field. Dimensions in this library are
// tiny (tens), so there is no sparsity or blocking anywhere.
class Matrix {
public:
    // Empty placeholder over the rationals; only assign into.
    Matrix() : Matrix(Field::rationals(), 0, 0) {}

    Matrix(const Field& f, std::size_t rows, std::size_t cols)
        : field_(f), rows_(rows), cols_(cols), a_(rows * cols, Scalar::zero(f)) {}

    static Matrix identity(const Field& f, std::size_t n);
    static Matrix from_rows(const Field& f, const std::vector<std::vector<long long>>& rows);

    const Field& field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_empty() const { return rows_ == 0 || cols_ == 0; }
    bool is_zero() const;
    bool is_square() const { return rows_ == cols_; }

    Scalar& at(std::size_t r, std::size_t c);
    const Scalar& at(std::size_t r, std::size_t c) const;
    Scalar& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    Matrix transpose() const;
    Matrix col(std::size_t c) const;
    Matrix cols_slice(std::size_t first, std::size_t count) const;
    Matrix drop_col(std::size_t c) const;

    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Scalar& s, const Matrix& a);
    Matrix operator-() const;

    friend bool operator==(const Matrix& a, const Matrix& b);
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    std::uint64_t hash() const;
    std::string to_string() const;

private:
    Field field_;
    std::size_t rows_, cols_;
    std::vector<Scalar> a_;
};

Matrix hcat(const Matrix& a, const Matrix& b);
Matrix vcat(const Matrix& a, const Matrix& b);
Matrix block_diag(const Field& f, std::span<const Matrix> blocks);

// Flattens row-major into a (rows*cols) x 1 column.
Matrix vec(const Matrix& m);

struct Rref {
    Matrix r;
    std::vector<std::size_t> pivots;  // pivot column per pivot row
    std::size_t rank;
};

Rref rref(const Matrix& m);
std::size_t rank(const Matrix& m);

// Columns form a basis of the right kernel; cols() == nullity.
Matrix kernel_basis(const Matrix& m);

// Some x with a*x == b, or nullopt when inconsistent.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);

std::optional<Matrix> inverse(const Matrix& m);
bool is_invertible(const Matrix& m);

// Independent subset of m's columns spanning its column space.
Matrix column_space_basis(const Matrix& m);

// Basis completion data for the column span of s inside the ambient space
// k^n (n = s.rows()). `sub` is an independent subset of s's columns,
// `complement` standard basis vectors completing it, `projection` the
// quotient map k^n -> k^q written in the complement coordinates, and
// `section` satisfies projection * section == identity.
struct SplitBasis {
    Matrix sub;
    Matrix complement;
    Matrix projection;
    Matrix section;
};

SplitBasis split_complement(const Matrix& s);

}  // namespace pwt
