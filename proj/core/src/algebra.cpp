#include "kktco/algebra.hpp"

#include <array>

namespace kktco {

namespace {

void require_len(const FiniteAlgebra& alg, const Vector& v, const char* what)
{
    if (v.size() != alg.dim()) throw DimensionMismatch(std::string(what) + ": vector length differs from algebra dimension");
}

// Product of two basis vectors as a coordinate vector.
Vector basis_product(const FiniteAlgebra& alg, std::size_t i, std::size_t j)
{
    const std::size_t n = alg.dim();
    Vector out(n);
    for (std::size_t k = 0; k < n; ++k) out[k] = alg.product()(i, j, k);
    return out;
}


}  // namespace

FiniteAlgebra::FiniteAlgebra(Field f, std::vector<std::string> basis_names, Tensor3 product)
    : field_(f), names_(std::move(basis_names)), product_(std::move(product))
{
    const std::size_t n = names_.size();
    if (product_.dims() != std::array<std::size_t, 3>{n, n, n})
        throw DimensionMismatch("product tensor must be n x n x n");
    if (n > 0 && !(product_.field() == f)) throw DimensionMismatch("product tensor over a different field");
}

std::vector<std::string> default_names(std::size_t n, const std::string& stem)
{
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back(stem + std::to_string(i));
    return names;
}

Vector multiply(const FiniteAlgebra& alg, const Vector& x, const Vector& y)
{
    require_len(alg, x, "multiply");
    require_len(alg, y, "multiply");
    const std::size_t n = alg.dim();
    Vector out = zero_vector(alg.field(), n);
    for (std::size_t i = 0; i < n; ++i) {
        if (x[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (y[j].is_zero()) continue;
            const Scalar c = x[i] * y[j];
            for (std::size_t k = 0; k < n; ++k)
                if (!alg.product()(i, j, k).is_zero()) out[k] += c * alg.product()(i, j, k);
        }
    }
    return out;
}

Matrix right_mult(const FiniteAlgebra& alg, const Vector& a)
{
    require_len(alg, a, "right_mult");
    const std::size_t n = alg.dim();
    Matrix m(alg.field(), n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (a[j].is_zero()) continue;
            for (std::size_t k = 0; k < n; ++k)
                if (!alg.product()(i, j, k).is_zero()) m(i, k) += a[j] * alg.product()(i, j, k);
        }
    return m;
}

std::optional<Vector> find_unity(const FiniteAlgebra& alg)
{
    const std::size_t n = alg.dim();
    const Field f = alg.field();
    // Unknown u: sum_j u_j (e_j e_i)_k = delta_ik and sum_j u_j (e_i e_j)_k = delta_ik.
    Matrix sys(f, 2 * n * n, n);
    Vector rhs = zero_vector(f, 2 * n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            const std::size_t r = i * n + k;
            for (std::size_t j = 0; j < n; ++j) {
                sys(r, j) = alg.product()(j, i, k);
                sys(n * n + r, j) = alg.product()(i, j, k);
            }
            if (i == k) rhs[r] = rhs[n * n + r] = Scalar::one(f);
        }
    if (n == 0) return std::nullopt;
    return solve(sys, rhs);
}

Matrix commutator_bracket(const FiniteAlgebra& alg, const Vector& a, const Vector& b)
{
    return commutator(right_mult(alg, a), right_mult(alg, b));
}

Vector associator(const FiniteAlgebra& alg, const Vector& x, const Vector& y, const Vector& z)
{
    return multiply(alg, multiply(alg, x, y), z) - multiply(alg, x, multiply(alg, y, z));
}

bool is_commutative(const FiniteAlgebra& alg)
{
    const std::size_t n = alg.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (!(alg.product()(i, j, k) == alg.product()(j, i, k))) return false;
    return true;
}

std::optional<std::vector<std::size_t>> lie_violation(const FiniteAlgebra& alg)
{
    const std::size_t n = alg.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (!(alg.product()(i, j, k) == -alg.product()(j, i, k))) return std::vector{i, j};
    // With alternation in place Jacobi is alternating, so increasing triples suffice.
    std::vector<Vector> table(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) table[i * n + j] = basis_product(alg, i, j);
    auto bracket_with_basis = [&](const Vector& x, std::size_t k) {
        Vector out = zero_vector(alg.field(), n);
        for (std::size_t s = 0; s < n; ++s)
            if (!x[s].is_zero()) axpy(out, x[s], table[s * n + k]);
        return out;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k) {
                Vector sum = bracket_with_basis(table[i * n + j], k) + bracket_with_basis(table[j * n + k], i) +
                             bracket_with_basis(table[k * n + i], j);
                if (!is_zero(sum)) return std::vector{i, j, k};
            }
    return std::nullopt;
}

bool is_lie(const FiniteAlgebra& alg) { return !lie_violation(alg); }

std::optional<std::vector<std::size_t>> jordan_violation(const FiniteAlgebra& alg)
{
    const std::size_t n = alg.dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (!(alg.product()(i, j, k) == alg.product()(j, i, k))) return std::vector{i, j};
    std::vector<Vector> table(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) table[i * n + j] = basis_product(alg, i, j);
    static constexpr std::array<std::array<int, 3>, 6> perms{
        {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
    // Full linearization of (x^2 y) x - x^2 (y x) in x; the summand is symmetric
    // in the x's, so nondecreasing triples cover everything.
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a; b < n; ++b)
            for (std::size_t c = b; c < n; ++c)
                for (std::size_t y = 0; y < n; ++y) {
                    const std::array<std::size_t, 3> xs{a, b, c};
                    const Vector ey = alg.basis_vector(y);
                    Vector sum = zero_vector(alg.field(), n);
                    for (const auto& p : perms) {
                        const Vector& x12 = table[xs[p[0]] * n + xs[p[1]]];
                        const Vector x3 = alg.basis_vector(xs[p[2]]);
                        sum = sum + multiply(alg, multiply(alg, x12, ey), x3);
                        sum = sum - multiply(alg, x12, table[y * n + xs[p[2]]]);
                    }
                    if (!is_zero(sum)) return std::vector{a, b, c, y};
                }
    return std::nullopt;
}

bool is_jordan(const FiniteAlgebra& alg) { return !jordan_violation(alg); }

OperatorSpace::OperatorSpace(std::size_t n, Subspace span, std::vector<OperatorGenerator> generators)
    : n_(n), span_(std::move(span)), generators_(std::move(generators)), solver_(span_.basis())
{
    if (span_.ambient_dim() != n * n) throw DimensionMismatch("operator span must live in k^(n*n)");
    for (const auto& g : generators_)
        if (!span_.contains(g.matrix.flatten()))
            throw std::invalid_argument("operator generator outside its span: " + g.description);
}

Matrix OperatorSpace::basis_operator(std::size_t i) const
{
    return Matrix::unflatten(span_.field(), n_, span_.basis_vector(i));
}

std::vector<Matrix> OperatorSpace::basis_operators() const
{
    std::vector<Matrix> out;
    for (std::size_t i = 0; i < dim(); ++i) out.push_back(basis_operator(i));
    return out;
}

std::optional<Vector> OperatorSpace::coordinates(const Matrix& op) const
{
    return solver_.coordinates(op.flatten());
}

std::vector<GeneratorTerm> OperatorSpace::decompose(const Matrix& op) const
{
    const Field f = span_.field();
    Matrix cols(f, n_ * n_, generators_.size());
    for (std::size_t g = 0; g < generators_.size(); ++g) {
        const Vector flat = generators_[g].matrix.flatten();
        for (std::size_t r = 0; r < flat.size(); ++r) cols(r, g) = flat[r];
    }
    auto c = solve(cols, op.flatten());
    if (!c) throw std::domain_error("operator is not a combination of the recorded generators");
    std::vector<GeneratorTerm> terms;
    for (std::size_t g = 0; g < c->size(); ++g)
        if (!(*c)[g].is_zero()) terms.push_back({g, (*c)[g]});
    return terms;
}

OperatorSpace derivations(const FiniteAlgebra& alg)
{
    const std::size_t n = alg.dim();
    const Field f = alg.field();
    const Tensor3& p = alg.product();
    // Unknown D with e_i D = sum_k D[i][k] e_k, flattened at i*n + k.
    // Row (i, j, t): ((e_i e_j) D)_t - ((e_i D) e_j)_t - (e_i (e_j D))_t = 0.
    Matrix sys(f, n * n * n, n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t t = 0; t < n; ++t) {
                const std::size_t r = (i * n + j) * n + t;
                for (std::size_t s = 0; s < n; ++s) {
                    if (!p(i, j, s).is_zero()) sys(r, s * n + t) += p(i, j, s);
                    if (!p(s, j, t).is_zero()) sys(r, i * n + s) -= p(s, j, t);
                    if (!p(i, s, t).is_zero()) sys(r, j * n + s) -= p(i, s, t);
                }
            }
    Subspace span = kernel(sys);
    std::vector<OperatorGenerator> gens;
    for (std::size_t b = 0; b < span.dim(); ++b)
        gens.push_back({"basis" + std::to_string(b), Matrix::unflatten(f, n, span.basis_vector(b)), b, b});
    return OperatorSpace(n, std::move(span), std::move(gens));
}

OperatorSpace inner_derivations(const FiniteAlgebra& alg)
{
    const std::size_t n = alg.dim();
    const Field f = alg.field();
    std::vector<Matrix> rights;
    for (std::size_t i = 0; i < n; ++i) rights.push_back(right_mult(alg, alg.basis_vector(i)));
    std::vector<OperatorGenerator> gens;
    std::vector<Vector> flats;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Matrix c = commutator(rights[i], rights[j]);
            flats.push_back(c.flatten());
            gens.push_back({"[" + alg.basis_names()[i] + "," + alg.basis_names()[j] + "]", std::move(c), i, j});
        }
    return OperatorSpace(n, Subspace::span(f, n * n, flats), std::move(gens));
}

std::optional<std::vector<std::size_t>> eq1_violation(const FiniteAlgebra& alg)
{
    const std::size_t n = alg.dim();
    std::vector<Vector> table(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) table[i * n + j] = basis_product(alg, i, j);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c) {
                const Vector ea = alg.basis_vector(a), eb = alg.basis_vector(b), ec = alg.basis_vector(c);
                Matrix sum = commutator_bracket(alg, table[a * n + b], ec) +
                             commutator_bracket(alg, table[a * n + c], eb) +
                             commutator_bracket(alg, table[b * n + c], ea);
                if (!sum.is_zero()) return std::vector{a, b, c};
            }
    return std::nullopt;
}

std::optional<std::vector<std::size_t>> eq2_violation(const FiniteAlgebra& alg)
{
    const std::size_t n = alg.dim();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            const Matrix ab = commutator_bracket(alg, alg.basis_vector(a), alg.basis_vector(b));
            for (std::size_t c = 0; c < n; ++c)
                for (std::size_t d = 0; d < n; ++d) {
                    const Vector ec = alg.basis_vector(c), ed = alg.basis_vector(d);
                    const Vector lhs = ab.apply_left(multiply(alg, ec, ed));
                    const Vector rhs = multiply(alg, ab.apply_left(ec), ed) + multiply(alg, ab.apply_left(ed), ec);
                    if (!(lhs == rhs)) return std::vector{a, b, c, d};
                }
        }
    return std::nullopt;
}

bool eq1_check(const FiniteAlgebra& alg) { return !eq1_violation(alg); }
bool eq2_check(const FiniteAlgebra& alg) { return !eq2_violation(alg); }

bool is_ideal(const FiniteAlgebra& alg, const Subspace& s)
{
    if (s.ambient_dim() != alg.dim()) throw DimensionMismatch("is_ideal: subspace ambient mismatch");
    for (const auto& b : s.basis_vectors())
        for (std::size_t i = 0; i < alg.dim(); ++i) {
            const Vector e = alg.basis_vector(i);
            if (!s.contains(multiply(alg, b, e)) || !s.contains(multiply(alg, e, b))) return false;
        }
    return true;
}

bool is_subalgebra(const FiniteAlgebra& alg, const Subspace& s)
{
    if (s.ambient_dim() != alg.dim()) throw DimensionMismatch("is_subalgebra: subspace ambient mismatch");
    const auto basis = s.basis_vectors();
    for (const auto& x : basis)
        for (const auto& y : basis)
            if (!s.contains(multiply(alg, x, y))) return false;
    return true;
}

Subspace generated_subalgebra(const FiniteAlgebra& alg, const Subspace& seed, bool with_unity)
{
    Subspace current = seed;
    if (with_unity) {
        auto u = find_unity(alg);
        if (!u) throw UnityRequired("generated_subalgebra: algebra has no unity");
        current = subspace_sum(current, Subspace::span(alg.field(), alg.dim(), {*u}));
    }
    while (true) {
        std::vector<Vector> gens = current.basis_vectors();
        const auto basis = current.basis_vectors();
        for (const auto& x : basis)
            for (const auto& y : basis) gens.push_back(multiply(alg, x, y));
        Subspace next = Subspace::span(alg.field(), alg.dim(), gens);
        if (next == current) return current;
        current = std::move(next);
    }
}

FiniteAlgebra change_basis(const FiniteAlgebra& alg, const Matrix& change)
{
    const std::size_t n = alg.dim();
    auto inv = inverse(change);
    if (!inv) throw std::invalid_argument("change_basis: singular change of basis");
    Tensor3 out(alg.field(), n);
    const auto rows = change.row_list();
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t r = 0; r < n; ++r) {
            // Old coordinates of x_p x_r, then new coordinates via the inverse.
            const Vector prod = inv->apply_left(multiply(alg, rows[p], rows[r]));
            for (std::size_t s = 0; s < n; ++s) out(p, r, s) = prod[s];
        }
    return FiniteAlgebra(alg.field(), alg.basis_names(), std::move(out));
}

}  // namespace kktco
