#ifndef KKTCO_MATRIX_HPP
#define KKTCO_MATRIX_HPP

#include <optional>
#include <vector>

#include "kktco/scalar.hpp"

namespace kktco {

/// Dense row-major matrix over an exact field.
///
/// Operators act on row vectors from the right: the row i of an operator
/// matrix holds the image of the i-th basis vector, so x -> x * M and
/// "apply M, then N" is the product M * N.
class Matrix {
public:
    Matrix() = default;
    Matrix(Field f, std::size_t rows, std::size_t cols);

    static Matrix identity(Field f, std::size_t n);
    static Matrix from_rows(Field f, std::size_t cols, const std::vector<Vector>& rows);
    static Matrix from_ints(Field f, std::initializer_list<std::initializer_list<long long>> rows);
    /// Inverse of flatten(): n*n entries, row-major.
    static Matrix unflatten(Field f, std::size_t n, const Vector& flat);

    Field field() const { return field_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Vector row(std::size_t r) const;
    Vector col(std::size_t c) const;
    void set_row(std::size_t r, const Vector& v);
    std::vector<Vector> row_list() const;
    Vector flatten() const { return data_; }

    Matrix transpose() const;
    bool is_zero() const;

    /// x * M
    Vector apply_left(const Vector& x) const;
    /// M * x
    Vector apply_right(const Vector& x) const;

    Matrix& operator+=(const Matrix& o);
    Matrix& operator-=(const Matrix& o);
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Scalar& s, const Matrix& m);
    friend bool operator==(const Matrix& a, const Matrix& b);

private:
    Field field_;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

/// Stacks the rows of a on top of the rows of b.
Matrix vstack(const Matrix& a, const Matrix& b);
/// a * b - b * a
Matrix commutator(const Matrix& a, const Matrix& b);

/// Reduced row-echelon form with zero rows dropped. Pivots are chosen as the
/// first nonzero entry scanning columns left to right.
Matrix rref(const Matrix& m);
std::size_t rank(const Matrix& m);
/// Any solution of m * x = b with free variables set to zero, or nullopt.
std::optional<Vector> solve(const Matrix& m, const Vector& b);
std::optional<Matrix> inverse(const Matrix& m);

/// Expresses vectors in the span of a fixed list of linearly independent
/// rows. Built once, queried many times.
class SpanSolver {
public:
    SpanSolver() = default;
    /// Throws std::invalid_argument if the rows are dependent.
    explicit SpanSolver(const Matrix& rows);

    std::size_t size() const { return count_; }
    std::size_t ambient_dim() const { return reduced_.cols(); }
    /// Coefficients c with sum c_i * row_i = x, or nullopt if x is outside the span.
    std::optional<Vector> coordinates(const Vector& x) const;
    /// Like coordinates(), but throws std::domain_error when x is outside the span.
    Vector require(const Vector& x, const char* what) const;

private:
    Field field_;
    std::size_t count_ = 0;
    Matrix reduced_;    // rref of the rows
    Matrix transform_;  // transform_ * rows == reduced_
    std::vector<std::size_t> pivots_;
};

}  // namespace kktco

#endif  // KKTCO_MATRIX_HPP
