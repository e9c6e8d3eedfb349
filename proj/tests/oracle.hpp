#ifndef KKTCO_TESTS_ORACLE_HPP
#define KKTCO_TESTS_ORACLE_HPP

// Brute-force reference computations over Q on plain GMP rationals. Nothing
// here calls into the library except to read structure constants out of it.

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

#include "kktco/tensor.hpp"

namespace oracle {

using Q = mpq_class;
using Vec = std::vector<Q>;
using Mat = std::vector<Vec>;

/// e_i e_j = sum_k at(i, j, k) e_k
struct Table {
    std::size_t n = 0;
    std::vector<Q> c;

    explicit Table(std::size_t dim = 0) : n(dim), c(dim * dim * dim) {}
    Q& at(std::size_t i, std::size_t j, std::size_t k) { return c[(i * n + j) * n + k]; }
    const Q& at(std::size_t i, std::size_t j, std::size_t k) const { return c[(i * n + j) * n + k]; }
};

inline Table from_tensor(const kktco::Tensor3& t)
{
    Table out(t.dims()[0]);
    for (std::size_t i = 0; i < out.n; ++i)
        for (std::size_t j = 0; j < out.n; ++j)
            for (std::size_t k = 0; k < out.n; ++k) out.at(i, j, k) = Q(t(i, j, k).to_string());
    return out;
}

inline bool same(const Table& a, const kktco::Tensor3& t)
{
    const Table b = from_tensor(t);
    return a.n == b.n && a.c == b.c;
}

inline std::size_t rank(Mat m)
{
    std::size_t r = 0;
    const std::size_t cols = m.empty() ? 0 : m[0].size();
    for (std::size_t col = 0; col < cols && r < m.size(); ++col) {
        std::size_t p = r;
        while (p < m.size() && m[p][col] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[r]);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r || m[i][col] == 0) continue;
            const Q f = m[i][col] / m[r][col];
            for (std::size_t j = col; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return r;
}

inline Vec unit(std::size_t n, std::size_t i)
{
    Vec v(n);
    v[i] = 1;
    return v;
}

inline Vec mul(const Table& t, const Vec& x, const Vec& y)
{
    Vec out(t.n);
    for (std::size_t i = 0; i < t.n; ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < t.n; ++j) {
            if (y[j] == 0) continue;
            for (std::size_t k = 0; k < t.n; ++k) out[k] += x[i] * y[j] * t.at(i, j, k);
        }
    }
    return out;
}

inline Vec add(Vec a, const Vec& b, const Q& s = 1)
{
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += s * b[i];
    return a;
}

inline bool is_zero(const Vec& v)
{
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

/// Matrix of x -> x a, rows are images of basis vectors.
inline Mat right_mult(const Table& t, const Vec& a)
{
    Mat m;
    for (std::size_t i = 0; i < t.n; ++i) m.push_back(mul(t, unit(t.n, i), a));
    return m;
}

inline Mat matmul(const Mat& a, const Mat& b)
{
    const std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    Mat out(n, Vec(m));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < k; ++l) {
            if (a[i][l] == 0) continue;
            for (std::size_t j = 0; j < m; ++j) out[i][j] += a[i][l] * b[l][j];
        }
    return out;
}

inline Mat bracket_op(const Table& t, std::size_t a, std::size_t b)
{
    const Mat ra = right_mult(t, unit(t.n, a)), rb = right_mult(t, unit(t.n, b));
    Mat x = matmul(ra, rb);
    const Mat y = matmul(rb, ra);
    for (std::size_t i = 0; i < t.n; ++i)
        for (std::size_t j = 0; j < t.n; ++j) x[i][j] -= y[i][j];
    return x;
}

inline Vec act(const Vec& x, const Mat& m)
{
    Vec out(m.empty() ? 0 : m[0].size());
    for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < out.size(); ++j) out[j] += x[i] * m[i][j];
    return out;
}

inline bool commutative(const Table& t)
{
    for (std::size_t i = 0; i < t.n; ++i)
        for (std::size_t j = 0; j < t.n; ++j)
            for (std::size_t k = 0; k < t.n; ++k)
                if (t.at(i, j, k) != t.at(j, i, k)) return false;
    return true;
}

/// Commutative and ((xz)y)w + ((zw)y)x + ((wx)y)z = (xz)(yw) + (zw)(yx) + (wx)(yz).
inline bool jordan(const Table& t)
{
    if (!commutative(t)) return false;
    const std::size_t n = t.n;
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t z = 0; z < n; ++z)
                for (std::size_t w = 0; w < n; ++w) {
                    const Vec X = unit(n, x), Y = unit(n, y), Z = unit(n, z), W = unit(n, w);
                    Vec lhs = mul(t, mul(t, mul(t, X, Z), Y), W);
                    lhs = add(lhs, mul(t, mul(t, mul(t, Z, W), Y), X));
                    lhs = add(lhs, mul(t, mul(t, mul(t, W, X), Y), Z));
                    Vec rhs = mul(t, mul(t, X, Z), mul(t, Y, W));
                    rhs = add(rhs, mul(t, mul(t, Z, W), mul(t, Y, X)));
                    rhs = add(rhs, mul(t, mul(t, W, X), mul(t, Y, Z)));
                    if (lhs != rhs) return false;
                }
    return true;
}

inline bool lie(const Table& t)
{
    const std::size_t n = t.n;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (t.at(i, j, k) != -t.at(j, i, k)) return false;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const Vec a = unit(n, i), b = unit(n, j), c = unit(n, k);
                Vec s = mul(t, mul(t, a, b), c);
                s = add(s, mul(t, mul(t, b, c), a));
                s = add(s, mul(t, mul(t, c, a), b));
                if (!is_zero(s)) return false;
            }
    return true;
}

/// [ab,c] + [ac,b] + [bc,a] = 0 as operators, a, b, c basis elements.
inline bool eq1(const Table& t)
{
    const std::size_t n = t.n;
    auto op = [&](const Vec& x, const Vec& y) {
        const Mat rx = right_mult(t, x), ry = right_mult(t, y);
        Mat m = matmul(rx, ry);
        const Mat o = matmul(ry, rx);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m[i][j] -= o[i][j];
        return m;
    };
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c) {
                const Vec A = unit(n, a), B = unit(n, b), C = unit(n, c);
                const Mat m1 = op(mul(t, A, B), C), m2 = op(mul(t, A, C), B), m3 = op(mul(t, B, C), A);
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = 0; j < n; ++j)
                        if (m1[i][j] + m2[i][j] + m3[i][j] != 0) return false;
            }
    return true;
}

/// (cd)[a,b] = (c[a,b])d + (d[a,b])c on basis quadruples.
inline bool eq2(const Table& t)
{
    const std::size_t n = t.n;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            const Mat d = bracket_op(t, a, b);
            for (std::size_t c = 0; c < n; ++c)
                for (std::size_t e = 0; e < n; ++e) {
                    const Vec C = unit(n, c), E = unit(n, e);
                    const Vec lhs = act(mul(t, C, E), d);
                    const Vec rhs = add(mul(t, act(C, d), E), mul(t, act(E, d), C));
                    if (lhs != rhs) return false;
                }
        }
    return true;
}

/// dim of { D : (xy)D = (xD)y + x(yD) } by solving for the n^2 entries.
inline std::size_t derivation_dim(const Table& t)
{
    const std::size_t n = t.n;
    Mat rows;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Vec row(n * n);
                for (std::size_t m = 0; m < n; ++m) {
                    row[m * n + k] += t.at(i, j, m);
                    row[i * n + m] -= t.at(m, j, k);
                    row[j * n + m] -= t.at(i, m, k);
                }
                rows.push_back(std::move(row));
            }
    return n * n - rank(rows);
}

/// dim span{ [R_a, R_b] }.
inline std::size_t intder_dim(const Table& t)
{
    Mat rows;
    for (std::size_t a = 0; a < t.n; ++a)
        for (std::size_t b = a + 1; b < t.n; ++b) {
            Vec flat;
            for (const auto& r : bracket_op(t, a, b)) flat.insert(flat.end(), r.begin(), r.end());
            rows.push_back(std::move(flat));
        }
    return rows.empty() ? 0 : rank(rows);
}

/// Rank of tr(ad x ad y) with ad_x the matrix of y -> x y.
inline std::size_t killing_rank(const Table& t)
{
    const std::size_t n = t.n;
    std::vector<Mat> ad(n, Mat(n, Vec(n)));
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
            for (std::size_t k = 0; k < n; ++k) ad[x][y][k] = t.at(x, y, k);
    Mat kf(n, Vec(n));
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y) {
            const Mat p = matmul(ad[x], ad[y]);
            for (std::size_t i = 0; i < n; ++i) kf[x][y] += p[i][i];
        }
    return rank(kf);
}

/// dim { x : [x, y] = 0 for all y }.
inline std::size_t center_dim(const Table& t)
{
    const std::size_t n = t.n;
    Mat rows;  // unknown x, equation per (y, k)
    for (std::size_t y = 0; y < n; ++y)
        for (std::size_t k = 0; k < n; ++k) {
            Vec row(n);
            for (std::size_t x = 0; x < n; ++x) row[x] = t.at(x, y, k);
            rows.push_back(std::move(row));
        }
    return n - rank(rows);
}

// Reference tables, built from their definitions.

inline Table field() { Table t(1); t.at(0, 0, 0) = 1; return t; }

inline Table dual_numbers()
{
    Table t(2);  // u, x
    t.at(0, 0, 0) = 1;
    t.at(0, 1, 1) = 1;
    t.at(1, 0, 1) = 1;
    return t;
}

/// 1, v1..vn with vi vj = delta_ij 1.
inline Table spin_factor(std::size_t n)
{
    Table t(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        t.at(0, i, i) = 1;
        t.at(i, 0, i) = 1;
    }
    for (std::size_t i = 1; i <= n; ++i) t.at(i, i, 0) = 1;
    return t;
}

/// Jordan product (ab + ba)/2 on a space of n x n matrices with the given basis.
inline Table jordan_of(std::size_t n, const std::vector<Mat>& basis, const std::vector<std::pair<std::size_t, std::size_t>>& coord)
{
    const std::size_t d = basis.size();
    Table t(d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Mat p = matmul(basis[i], basis[j]);
            const Mat q = matmul(basis[j], basis[i]);
            for (std::size_t r = 0; r < n; ++r)
                for (std::size_t c = 0; c < n; ++c) p[r][c] = (p[r][c] + q[r][c]) / 2;
            for (std::size_t k = 0; k < d; ++k) t.at(i, j, k) = p[coord[k].first][coord[k].second];
        }
    return t;
}

/// E11..Enn, then E_ij + E_ji for i < j.
inline Table symmetric_matrices(std::size_t n)
{
    std::vector<Mat> basis;
    std::vector<std::pair<std::size_t, std::size_t>> coord;
    for (std::size_t i = 0; i < n; ++i) {
        Mat m(n, Vec(n));
        m[i][i] = 1;
        basis.push_back(m);
        coord.emplace_back(i, i);
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Mat m(n, Vec(n));
            m[i][j] = m[j][i] = 1;
            basis.push_back(m);
            coord.emplace_back(i, j);
        }
    return jordan_of(n, basis, coord);
}

/// E_ij in row-major order.
inline Table matrix_jordan(std::size_t n)
{
    std::vector<Mat> basis;
    std::vector<std::pair<std::size_t, std::size_t>> coord;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Mat m(n, Vec(n));
            m[i][j] = 1;
            basis.push_back(m);
            coord.emplace_back(i, j);
        }
    return jordan_of(n, basis, coord);
}

}  // namespace oracle

#endif  // KKTCO_TESTS_ORACLE_HPP
