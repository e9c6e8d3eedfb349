#include "kktco/coalgebra.hpp"

#include <cassert>

namespace kktco {

namespace {

Vector tensor(Field f, const Vector& x, const Vector& y)
{
    Vector out = zero_vector(f, x.size() * y.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < y.size(); ++j)
            if (!y[j].is_zero()) out[i * y.size() + j] = x[i] * y[j];
    }
    return out;
}

void require_dim(const FiniteCoalgebra& c, std::size_t len, const char* what)
{
    if (len != c.dim()) throw DimensionMismatch(std::string(what) + ": length differs from coalgebra dimension");
}

// Span of V (x) A + A (x) V, or of B (x) B when square is set.
Subspace tensor_subspace(const FiniteCoalgebra& c, const Subspace& s, bool square)
{
    const Field f = c.field();
    const std::size_t n = c.dim();
    std::vector<Vector> gens;
    const auto basis = s.basis_vectors();
    for (const auto& x : basis) {
        if (square) {
            for (const auto& y : basis) gens.push_back(tensor(f, x, y));
        } else {
            for (std::size_t j = 0; j < n; ++j) {
                gens.push_back(tensor(f, x, c.basis_vector(j)));
                gens.push_back(tensor(f, c.basis_vector(j), x));
            }
        }
    }
    return Subspace::span(f, n * n, gens);
}

}  // namespace

FiniteCoalgebra::FiniteCoalgebra(Field f, std::vector<std::string> basis_names, Tensor3 delta)
    : field_(f), names_(std::move(basis_names)), delta_(std::move(delta))
{
    const std::size_t n = names_.size();
    if (delta_.dims() != std::array<std::size_t, 3>{n, n, n})
        throw DimensionMismatch("comultiplication tensor must be n x n x n");
}

Vector FiniteCoalgebra::comultiply(const Vector& x) const
{
    require_dim(*this, x.size(), "comultiply");
    const std::size_t n = dim();
    Vector out = zero_vector(field_, n * n);
    for (std::size_t a = 0; a < n; ++a) {
        if (x[a].is_zero()) continue;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (!delta_(a, i, j).is_zero()) out[i * n + j] += x[a] * delta_(a, i, j);
    }
    return out;
}

FiniteAlgebra dual_algebra(const FiniteCoalgebra& c)
{
    const std::size_t n = c.dim();
    Tensor3 product(c.field(), n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) product(i, j, k) = c.delta()(k, i, j);
    return FiniteAlgebra(c.field(), c.basis_names(), std::move(product));
}

FiniteCoalgebra dualize_algebra(const FiniteAlgebra& a)
{
    const std::size_t n = a.dim();
    Tensor3 delta(a.field(), n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) delta(k, i, j) = a.product()(i, j, k);
    return FiniteCoalgebra(a.field(), a.basis_names(), std::move(delta));
}

std::optional<Vector> counit(const FiniteCoalgebra& c) { return find_unity(dual_algebra(c)); }

Vector act_left(const FiniteCoalgebra& c, const Vector& f, const Vector& a)
{
    require_dim(c, f.size(), "act_left");
    require_dim(c, a.size(), "act_left");
    const std::size_t n = c.dim();
    Vector out = zero_vector(c.field(), n);
    for (std::size_t x = 0; x < n; ++x) {
        if (a[x].is_zero()) continue;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (!f[j].is_zero() && !c.delta()(x, i, j).is_zero()) out[i] += a[x] * c.delta()(x, i, j) * f[j];
    }
    return out;
}

Vector act_right(const FiniteCoalgebra& c, const Vector& a, const Vector& f)
{
    require_dim(c, f.size(), "act_right");
    require_dim(c, a.size(), "act_right");
    const std::size_t n = c.dim();
    Vector out = zero_vector(c.field(), n);
    for (std::size_t x = 0; x < n; ++x) {
        if (a[x].is_zero()) continue;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (!f[i].is_zero() && !c.delta()(x, i, j).is_zero()) out[j] += a[x] * c.delta()(x, i, j) * f[i];
    }
    return out;
}

Subspace annihilator(const FiniteCoalgebra& c, const Subspace& s)
{
    require_dim(c, s.ambient_dim(), "annihilator");
    const std::size_t n = c.dim();
    if (s.dim() == 0) return Subspace::full(c.field(), n);
    // Row (b, i), column j: coefficient of e_i in e^j . b.
    Matrix m(c.field(), s.dim() * n, n);
    for (std::size_t b = 0; b < s.dim(); ++b) {
        const Vector bv = s.basis_vector(b);
        for (std::size_t j = 0; j < n; ++j) {
            const Vector img = act_left(c, c.basis_vector(j), bv);
            for (std::size_t i = 0; i < n; ++i) m(b * n + i, j) = img[i];
        }
    }
    return kernel(m);
}

Subspace perp(const Subspace& s) { return s.annihilator(); }

Subspace generated_subcoalgebra(const FiniteCoalgebra& c, const Subspace& seed)
{
    require_dim(c, seed.ambient_dim(), "generated_subcoalgebra");
    const std::size_t n = c.dim();
    Subspace current = seed;
    for (std::size_t round = 0; round <= n; ++round) {
        std::vector<Vector> gens = current.basis_vectors();
        for (const auto& b : current.basis_vectors())
            for (std::size_t i = 0; i < n; ++i) {
                gens.push_back(act_left(c, c.basis_vector(i), b));
                gens.push_back(act_right(c, b, c.basis_vector(i)));
            }
        Subspace next = Subspace::span(c.field(), n, gens);
        if (next == current) return current;
        current = std::move(next);
    }
    // Each round strictly grows the dimension, so n + 1 rounds always suffice.
    assert(false && "generated_subcoalgebra did not stabilise");
    return current;
}

bool is_subcoalgebra(const FiniteCoalgebra& c, const Subspace& b)
{
    require_dim(c, b.ambient_dim(), "is_subcoalgebra");
    const Subspace square = tensor_subspace(c, b, true);
    for (const auto& x : b.basis_vectors())
        if (!square.contains(c.comultiply(x))) return false;
    return true;
}

bool is_coideal(const FiniteCoalgebra& c, const Subspace& v)
{
    require_dim(c, v.ambient_dim(), "is_coideal");
    if (auto eta = counit(c)) {
        for (const auto& x : v.basis_vectors())
            if (!dot(c.field(), *eta, x).is_zero()) return false;
    }
    const Subspace sides = tensor_subspace(c, v, false);
    for (const auto& x : v.basis_vectors())
        if (!sides.contains(c.comultiply(x))) return false;
    return true;
}

Report duality_check(const FiniteCoalgebra& c, const Subspace& s)
{
    const FiniteAlgebra dual = dual_algebra(c);
    const Subspace orth = perp(s);
    Report r;
    const bool sub = is_subcoalgebra(c, s);
    const bool ideal = is_ideal(dual, orth);
    r.add("subcoalgebra_iff_perp_ideal", sub == ideal,
          "subcoalgebra=" + std::to_string(sub) + " perp_ideal=" + std::to_string(ideal));
    const bool co = is_coideal(c, s);
    bool unital_sub = is_subalgebra(dual, orth);
    if (auto u = find_unity(dual)) unital_sub = unital_sub && orth.contains(*u);
    r.add("coideal_iff_perp_unital_subalgebra", co == unital_sub,
          "coideal=" + std::to_string(co) + " perp_unital_subalgebra=" + std::to_string(unital_sub));
    return r;
}

FiniteCoalgebra restrict_to_subcoalgebra(const FiniteCoalgebra& c, const Subspace& b)
{
    if (!is_subcoalgebra(c, b)) throw std::invalid_argument("restrict_to_subcoalgebra: not a subcoalgebra");
    const Field f = c.field();
    const std::size_t k = b.dim();
    const auto basis = b.basis_vectors();
    std::vector<Vector> rows;
    for (const auto& x : basis)
        for (const auto& y : basis) rows.push_back(tensor(f, x, y));
    const SpanSolver square(Matrix::from_rows(f, c.dim() * c.dim(), rows));
    Tensor3 delta(f, k);
    for (std::size_t q = 0; q < k; ++q) {
        const Vector coords = square.require(c.comultiply(basis[q]), "restricted comultiplication");
        for (std::size_t t = 0; t < k; ++t)
            for (std::size_t u = 0; u < k; ++u) delta(q, t, u) = coords[t * k + u];
    }
    return FiniteCoalgebra(f, default_names(k, "b"), std::move(delta));
}

}  // namespace kktco
