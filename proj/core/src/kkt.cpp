#include "kktco/kkt.hpp"

namespace kktco {

namespace {

struct Parts {
    Vector a;
    Vector r;
    Vector b;
};

Vector slice(const Vector& v, std::size_t from, std::size_t len)
{
    return Vector(v.begin() + static_cast<std::ptrdiff_t>(from), v.begin() + static_cast<std::ptrdiff_t>(from + len));
}

Parts split(const KKTAlgebra& k, const Vector& l)
{
    if (l.size() != k.dim()) throw DimensionMismatch("KKT vector has wrong length");
    const std::size_t n = k.n();
    const std::size_t r = k.r_dim();
    return {slice(l, 0, n), slice(l, n, r), slice(l, n + r, n)};
}

// e(c' + d) = -c' + d on R coordinates.
Vector epsilon_r(const KKTAlgebra& k, Vector r)
{
    for (std::size_t i = 0; i < k.n(); ++i) r[i] = -r[i];
    return r;
}

}  // namespace

std::size_t KKTAlgebra::part_offset(KKTPart p) const
{
    switch (p) {
    case KKTPart::A: return 0;
    case KKTPart::JPrime: return n();
    case KKTPart::IntDer: return 2 * n();
    case KKTPart::ABar: return n() + r_dim();
    }
    return 0;
}

std::size_t KKTAlgebra::part_dim(KKTPart p) const
{
    return p == KKTPart::IntDer ? intder_.dim() : n();
}

Matrix KKTAlgebra::part_embedding(KKTPart p) const
{
    Matrix m(source_.field(), part_dim(p), dim());
    const std::size_t off = part_offset(p);
    for (std::size_t i = 0; i < part_dim(p); ++i) m(i, off + i) = Scalar::one(source_.field());
    return m;
}

Matrix KKTAlgebra::r_operator(const Vector& r_coords) const
{
    if (r_coords.size() != r_basis_.size()) throw DimensionMismatch("R coordinates have wrong length");
    Matrix op(source_.field(), n(), n());
    for (std::size_t t = 0; t < r_basis_.size(); ++t)
        if (!r_coords[t].is_zero()) op += r_coords[t] * r_basis_[t];
    return op;
}

Vector KKTAlgebra::r_coordinates(const Matrix& op) const { return r_solver_.require(op.flatten(), "R(J) coordinates"); }

Vector KKTAlgebra::bracket(const Vector& x, const Vector& y) const
{
    const Parts p = split(*this, x);
    const Parts q = split(*this, y);
    const Matrix d1 = r_operator(p.r);
    const Matrix d2 = r_operator(q.r);

    // a nabla b = (ab)' - [a, b]
    auto nabla = [&](const Vector& a, const Vector& b) {
        return right_mult(source_, multiply(source_, a, b)) - commutator_bracket(source_, a, b);
    };

    const Vector a_part = d2.apply_left(p.a) - d1.apply_left(q.a);
    const Matrix r_op = nabla(p.a, q.b) - nabla(q.a, p.b) + commutator(d1, d2);
    const Vector b_part = r_operator(epsilon_r(*this, q.r)).apply_left(p.b) -
                          r_operator(epsilon_r(*this, p.r)).apply_left(q.b);

    Vector out = a_part;
    const Vector rc = r_coordinates(r_op);
    out.insert(out.end(), rc.begin(), rc.end());
    out.insert(out.end(), b_part.begin(), b_part.end());
    return out;
}

KKTAlgebra build_kkt(const FiniteAlgebra& j)
{
    auto unity = find_unity(j);
    if (!unity) throw UnityRequired("KKT construction needs a unital Jordan algebra");
    if (auto w = jordan_violation(j)) throw IdentityViolation("input algebra is not Jordan", *w);

    KKTAlgebra k;
    const Field f = j.field();
    const std::size_t n = j.dim();
    k.source_ = j;
    k.unity_ = *unity;
    k.intder_ = inner_derivations(j);
    for (std::size_t i = 0; i < n; ++i) k.r_basis_.push_back(right_mult(j, j.basis_vector(i)));
    for (const auto& d : k.intder_.basis_operators()) k.r_basis_.push_back(d);
    std::vector<Vector> flats;
    for (const auto& m : k.r_basis_) flats.push_back(m.flatten());
    // Independent because derivations kill the unity while a' sends it to a.
    k.r_solver_ = SpanSolver(Matrix::from_rows(f, n * n, flats));

    std::vector<std::string> names;
    for (const auto& s : j.basis_names()) names.push_back(s);
    for (const auto& s : j.basis_names()) names.push_back(s + "'");
    for (std::size_t t = 0; t < k.intder_.dim(); ++t) names.push_back("D" + std::to_string(t));
    for (const auto& s : j.basis_names()) names.push_back(s + "~");

    const std::size_t m = names.size();
    Tensor3 table(f, m);
    for (std::size_t x = 0; x < m; ++x)
        for (std::size_t y = 0; y < m; ++y) {
            const Vector v = k.bracket(unit_vector(f, m, x), unit_vector(f, m, y));
            for (std::size_t z = 0; z < m; ++z) table(x, y, z) = v[z];
        }
    k.lie_ = FiniteAlgebra(f, std::move(names), std::move(table));
    if (auto w = lie_violation(k.lie_)) throw IdentityViolation("KKT bracket fails the Lie identities", *w);
    return k;
}

Vector epsilon(const KKTAlgebra& k, const Vector& l)
{
    const Parts p = split(k, l);
    Vector out = p.b;
    const Vector r = epsilon_r(k, p.r);
    out.insert(out.end(), r.begin(), r.end());
    out.insert(out.end(), p.a.begin(), p.a.end());
    return out;
}

Matrix epsilon_matrix(const KKTAlgebra& k)
{
    const Field f = k.source().field();
    Matrix m(f, k.dim(), k.dim());
    for (std::size_t i = 0; i < k.dim(); ++i) m.set_row(i, epsilon(k, unit_vector(f, k.dim(), i)));
    return m;
}

bool check_jacobi(const KKTAlgebra& k) { return is_lie(k.lie()); }

bool check_r_closure(const KKTAlgebra& k)
{
    const auto& j = k.source();
    const auto ders = k.intder().basis_operators();
    for (std::size_t a = 0; a < j.dim(); ++a) {
        const Vector av = j.basis_vector(a);
        const Matrix ra = right_mult(j, av);
        for (const auto& d : ders)
            if (!(commutator(ra, d) == right_mult(j, d.apply_left(av)))) return false;
    }
    for (const auto& d1 : ders)
        for (const auto& d2 : ders)
            if (!k.intder().contains(commutator(d1, d2))) return false;
    return true;
}

Matrix killing_form(const FiniteAlgebra& lie)
{
    const std::size_t m = lie.dim();
    const auto& c = lie.product();
    Matrix kf(lie.field(), m, m);
    for (std::size_t x = 0; x < m; ++x)
        for (std::size_t y = 0; y < m; ++y) {
            // ad_x[j][k] = c(x, j, k); trace(ad_x ad_y) = sum_{j,k} c(x,j,k) c(y,k,j)
            Scalar t = Scalar::zero(lie.field());
            for (std::size_t jj = 0; jj < m; ++jj)
                for (std::size_t kk = 0; kk < m; ++kk)
                    if (!c(x, jj, kk).is_zero() && !c(y, kk, jj).is_zero()) t += c(x, jj, kk) * c(y, kk, jj);
            kf(x, y) = t;
        }
    return kf;
}

std::size_t killing_rank(const FiniteAlgebra& lie) { return rank(killing_form(lie)); }

Subspace center(const FiniteAlgebra& lie)
{
    const std::size_t m = lie.dim();
    // Row (y, z), column x: coefficient of e_z in [e_x, e_y].
    Matrix sys(lie.field(), m * m, m);
    for (std::size_t x = 0; x < m; ++x)
        for (std::size_t y = 0; y < m; ++y)
            for (std::size_t z = 0; z < m; ++z) sys(y * m + z, x) = lie.product()(x, y, z);
    return kernel(sys);
}

Subspace generated_ideal(const FiniteAlgebra& lie, const Subspace& s)
{
    Subspace current = s;
    while (true) {
        std::vector<Vector> gens = current.basis_vectors();
        for (const auto& v : current.basis_vectors())
            for (std::size_t i = 0; i < lie.dim(); ++i) gens.push_back(multiply(lie, v, lie.basis_vector(i)));
        Subspace next = Subspace::span(lie.field(), lie.dim(), gens);
        if (next == current) return current;
        current = std::move(next);
    }
}

}  // namespace kktco
