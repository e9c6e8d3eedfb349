#include "kktco/subspace.hpp"

#include <stdexcept>

namespace kktco {

Subspace::Subspace(Matrix canonical) : basis_(std::move(canonical))
{
    for (std::size_t r = 0; r < basis_.rows(); ++r) {
        std::size_t c = 0;
        while (basis_(r, c).is_zero()) ++c;
        pivots_.push_back(c);
    }
}

Subspace Subspace::zero(Field f, std::size_t ambient_dim) { return Subspace(Matrix(f, 0, ambient_dim)); }

Subspace Subspace::full(Field f, std::size_t ambient_dim)
{
    return Subspace(Matrix::identity(f, ambient_dim));
}

Subspace Subspace::span(Field f, std::size_t ambient_dim, const std::vector<Vector>& vectors)
{
    return row_space(Matrix::from_rows(f, ambient_dim, vectors));
}

Subspace Subspace::row_space(const Matrix& m) { return Subspace(rref(m)); }

bool Subspace::contains(const Vector& v) const
{
    if (v.size() != ambient_dim()) throw DimensionMismatch("vector length differs from ambient dimension");
    Vector residual = v;
    for (std::size_t r = 0; r < dim(); ++r) {
        const Scalar coeff = residual[pivots_[r]];
        if (coeff.is_zero()) continue;
        for (std::size_t c = pivots_[r]; c < residual.size(); ++c)
            if (!basis_(r, c).is_zero()) residual[c] -= coeff * basis_(r, c);
    }
    return is_zero(residual);
}

bool Subspace::contains(const Subspace& other) const
{
    if (other.ambient_dim() != ambient_dim()) throw DimensionMismatch("subspaces in different ambient spaces");
    for (std::size_t r = 0; r < other.dim(); ++r)
        if (!contains(other.basis_vector(r))) return false;
    return true;
}

Subspace Subspace::annihilator() const { return kernel(basis_); }

Subspace kernel(const Matrix& m)
{
    const Field f = m.field();
    const Matrix reduced = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    std::vector<std::size_t> pivots;
    for (std::size_t r = 0; r < reduced.rows(); ++r) {
        std::size_t c = 0;
        while (reduced(r, c).is_zero()) ++c;
        is_pivot[c] = true;
        pivots.push_back(c);
    }
    std::vector<Vector> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        Vector v = zero_vector(f, m.cols());
        v[free] = Scalar::one(f);
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -reduced(r, free);
        basis.push_back(std::move(v));
    }
    return Subspace::span(f, m.cols(), basis);
}

Subspace subspace_sum(const Subspace& u, const Subspace& v)
{
    if (u.ambient_dim() != v.ambient_dim()) throw DimensionMismatch("subspace_sum: ambient dimensions differ");
    return Subspace::row_space(vstack(u.basis(), v.basis()));
}

Subspace subspace_intersect(const Subspace& u, const Subspace& v)
{
    if (u.ambient_dim() != v.ambient_dim())
        throw DimensionMismatch("subspace_intersect: ambient dimensions differ");
    // (U^0 + V^0)^0 under the standard dot product.
    return kernel(vstack(u.annihilator().basis(), v.annihilator().basis()));
}

bool contains(const Subspace& u, const Subspace& v) { return u.contains(v); }

Subspace ortho_complement(const Subspace& s, const Matrix& pairing, PairingSide side)
{
    const Matrix& p = side == PairingSide::Left ? pairing : pairing.transpose();
    if (s.ambient_dim() != p.rows()) throw DimensionMismatch("ortho_complement: pairing shape mismatch");
    // y is orthogonal to s iff (S * P) y = 0.
    if (s.dim() == 0) return Subspace::full(s.field(), p.cols());
    return kernel(s.basis() * p);
}

Subspace image(const Subspace& s, const Matrix& m)
{
    if (s.ambient_dim() != m.rows()) throw DimensionMismatch("image: shape mismatch");
    if (s.dim() == 0) return Subspace::zero(m.field(), m.cols());
    return Subspace::row_space(s.basis() * m);
}

void for_each_subspace(Field f, std::size_t n, std::size_t min_dim, std::size_t max_dim,
                       const std::function<void(const Subspace&)>& visit)
{
    if (f.is_rational()) throw std::invalid_argument("subspace enumeration needs a prime field");
    const std::uint32_t p = f.characteristic();
    for (std::size_t k = min_dim; k <= std::min(max_dim, n); ++k) {
        // Pivot sets as increasing index tuples.
        std::vector<std::size_t> piv(k);
        for (std::size_t i = 0; i < k; ++i) piv[i] = i;
        while (true) {
            std::vector<bool> is_pivot(n, false);
            for (auto c : piv) is_pivot[c] = true;
            std::vector<std::pair<std::size_t, std::size_t>> free_slots;
            for (std::size_t r = 0; r < k; ++r)
                for (std::size_t c = piv[r] + 1; c < n; ++c)
                    if (!is_pivot[c]) free_slots.emplace_back(r, c);
            std::vector<std::uint32_t> digits(free_slots.size(), 0);
            while (true) {
                Matrix m(f, k, n);
                for (std::size_t r = 0; r < k; ++r) m(r, piv[r]) = Scalar::one(f);
                for (std::size_t s = 0; s < free_slots.size(); ++s)
                    m(free_slots[s].first, free_slots[s].second) = Scalar::from_int(f, digits[s]);
                visit(Subspace::row_space(m));
                std::size_t s = 0;
                while (s < digits.size() && ++digits[s] == p) digits[s++] = 0;
                if (s == digits.size()) break;
            }
            // Next pivot combination.
            std::size_t i = k;
            while (i > 0 && piv[i - 1] == n - k + i - 1) --i;
            if (i == 0) break;
            ++piv[i - 1];
            for (std::size_t j = i; j < k; ++j) piv[j] = piv[j - 1] + 1;
        }
    }
}

std::uint64_t gaussian_binomial(std::uint64_t q, std::size_t n, std::size_t k)
{
    if (k > n) return 0;
    std::uint64_t num = 1, den = 1;
    auto pow = [](std::uint64_t b, std::size_t e) {
        std::uint64_t r = 1;
        while (e--) r *= b;
        return r;
    };
    for (std::size_t i = 0; i < k; ++i) {
        num *= pow(q, n - i) - 1;
        den *= pow(q, i + 1) - 1;
    }
    return num / den;
}

}  // namespace kktco
