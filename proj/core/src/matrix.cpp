#include "kktco/matrix.hpp"

#include <stdexcept>

namespace kktco {

namespace {

struct Echelon {
    Matrix reduced;  // full height, zero rows at the bottom
    Matrix transform;
    std::vector<std::size_t> pivots;
};

// Gauss-Jordan elimination. When track is set, transform accumulates the row
// operations so that transform * m == reduced.
Echelon eliminate(const Matrix& m, bool track)
{
    const Field f = m.field();
    Echelon e{m, track ? Matrix::identity(f, m.rows()) : Matrix(), {}};
    Matrix& a = e.reduced;
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        std::size_t pivot = row;
        while (pivot < a.rows() && a(pivot, col).is_zero()) ++pivot;
        if (pivot == a.rows()) continue;
        if (pivot != row) {
            for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(pivot, c), a(row, c));
            if (track)
                for (std::size_t c = 0; c < e.transform.cols(); ++c)
                    std::swap(e.transform(pivot, c), e.transform(row, c));
        }
        const Scalar inv = a(row, col).inverse();
        if (!inv.is_one()) {
            for (std::size_t c = col; c < a.cols(); ++c) a(row, c) *= inv;
            if (track)
                for (std::size_t c = 0; c < e.transform.cols(); ++c) e.transform(row, c) *= inv;
        }
        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (r == row || a(r, col).is_zero()) continue;
            const Scalar factor = a(r, col);
            for (std::size_t c = col; c < a.cols(); ++c)
                if (!a(row, c).is_zero()) a(r, c) -= factor * a(row, c);
            if (track)
                for (std::size_t c = 0; c < e.transform.cols(); ++c)
                    if (!e.transform(row, c).is_zero())
                        e.transform(r, c) -= factor * e.transform(row, c);
        }
        e.pivots.push_back(col);
        ++row;
    }
    return e;
}

}  // namespace

Matrix::Matrix(Field f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(f))
{
}

Matrix Matrix::identity(Field f, std::size_t n)
{
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(f);
    return m;
}

Matrix Matrix::from_rows(Field f, std::size_t cols, const std::vector<Vector>& rows)
{
    Matrix m(f, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) m.set_row(r, rows[r]);
    return m;
}

Matrix Matrix::from_ints(Field f, std::initializer_list<std::initializer_list<long long>> rows)
{
    std::vector<Vector> vs;
    for (auto r : rows) vs.push_back(vector_from_ints(f, r));
    return from_rows(f, vs.empty() ? 0 : vs.front().size(), vs);
}

Matrix Matrix::unflatten(Field f, std::size_t n, const Vector& flat)
{
    if (flat.size() != n * n) throw DimensionMismatch("flattened operator has wrong length");
    Matrix m(f, n, n);
    m.data_ = flat;
    return m;
}

Vector Matrix::row(std::size_t r) const
{
    return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::col(std::size_t c) const
{
    Vector v;
    v.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
    return v;
}

void Matrix::set_row(std::size_t r, const Vector& v)
{
    if (v.size() != cols_) throw DimensionMismatch("row length mismatch");
    for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = v[c];
}

std::vector<Vector> Matrix::row_list() const
{
    std::vector<Vector> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
    return out;
}

Matrix Matrix::transpose() const
{
    Matrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

bool Matrix::is_zero() const { return kktco::is_zero(data_); }

Vector Matrix::apply_left(const Vector& x) const
{
    if (x.size() != rows_) throw DimensionMismatch("vector-matrix shape mismatch");
    Vector out = zero_vector(field_, cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        if (x[r].is_zero()) continue;
        for (std::size_t c = 0; c < cols_; ++c)
            if (!(*this)(r, c).is_zero()) out[c] += x[r] * (*this)(r, c);
    }
    return out;
}

Vector Matrix::apply_right(const Vector& x) const
{
    if (x.size() != cols_) throw DimensionMismatch("matrix-vector shape mismatch");
    Vector out = zero_vector(field_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (!x[c].is_zero() && !(*this)(r, c).is_zero()) out[r] += (*this)(r, c) * x[c];
    return out;
}

Matrix& Matrix::operator+=(const Matrix& o)
{
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix shapes differ");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
}

Matrix& Matrix::operator-=(const Matrix& o)
{
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix shapes differ");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b)
{
    if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shape mismatch");
    Matrix out(a.field_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Scalar& aik = a(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                if (!b(k, j).is_zero()) out(i, j) += aik * b(k, j);
        }
    return out;
}

Matrix operator*(const Scalar& s, const Matrix& m)
{
    Matrix out = m;
    for (auto& x : out.data_) x *= s;
    return out;
}

bool operator==(const Matrix& a, const Matrix& b)
{
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Matrix vstack(const Matrix& a, const Matrix& b)
{
    if (a.cols() != b.cols()) throw DimensionMismatch("vstack column mismatch");
    Matrix out(a.field(), a.rows() + b.rows(), a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) out.set_row(r, a.row(r));
    for (std::size_t r = 0; r < b.rows(); ++r) out.set_row(a.rows() + r, b.row(r));
    return out;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

Matrix rref(const Matrix& m)
{
    Echelon e = eliminate(m, false);
    Matrix out(m.field(), e.pivots.size(), m.cols());
    for (std::size_t r = 0; r < e.pivots.size(); ++r) out.set_row(r, e.reduced.row(r));
    return out;
}

std::size_t rank(const Matrix& m) { return eliminate(m, false).pivots.size(); }

std::optional<Vector> solve(const Matrix& m, const Vector& b)
{
    if (b.size() != m.rows()) throw DimensionMismatch("right-hand side length mismatch");
    Matrix aug(m.field(), m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
        aug(r, m.cols()) = b[r];
    }
    Echelon e = eliminate(aug, false);
    Vector x = zero_vector(m.field(), m.cols());
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
        if (e.pivots[r] == m.cols()) return std::nullopt;
        x[e.pivots[r]] = e.reduced(r, m.cols());
    }
    return x;
}

std::optional<Matrix> inverse(const Matrix& m)
{
    if (m.rows() != m.cols()) throw DimensionMismatch("inverse of a non-square matrix");
    Echelon e = eliminate(m, true);
    if (e.pivots.size() != m.rows()) return std::nullopt;
    return e.transform;
}

SpanSolver::SpanSolver(const Matrix& rows)
    : field_(rows.field()), count_(rows.rows())
{
    Echelon e = eliminate(rows, true);
    if (e.pivots.size() != rows.rows())
        throw std::invalid_argument("SpanSolver needs linearly independent rows");
    reduced_ = std::move(e.reduced);
    transform_ = std::move(e.transform);
    pivots_ = std::move(e.pivots);
}

std::optional<Vector> SpanSolver::coordinates(const Vector& x) const
{
    if (x.size() != reduced_.cols()) throw DimensionMismatch("SpanSolver query length mismatch");
    // x = sum_r x[pivot_r] * reduced_r, then map back through the transform.
    Vector residual = x;
    Vector in_reduced = zero_vector(field_, count_);
    for (std::size_t r = 0; r < count_; ++r) {
        const Scalar coeff = residual[pivots_[r]];
        if (coeff.is_zero()) continue;
        in_reduced[r] = coeff;
        for (std::size_t c = 0; c < residual.size(); ++c)
            if (!reduced_(r, c).is_zero()) residual[c] -= coeff * reduced_(r, c);
    }
    if (!is_zero(residual)) return std::nullopt;
    return transform_.apply_left(in_reduced);
}

Vector SpanSolver::require(const Vector& x, const char* what) const
{
    auto c = coordinates(x);
    if (!c) throw std::domain_error(std::string("vector outside expected span: ") + what);
    return *c;
}

}  // namespace kktco
