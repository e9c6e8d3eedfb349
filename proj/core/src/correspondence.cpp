#include "kktco/correspondence.hpp"

#include <functional>

namespace kktco {

namespace {

// Vector of the given total length with v copied in at offset.
Vector placed(Field f, std::size_t length, std::size_t offset, const Vector& v)
{
    Vector out = zero_vector(f, length);
    for (std::size_t i = 0; i < v.size(); ++i) out[offset + i] = v[i];
    return out;
}

// Parts laid out as [X | X' | middle | X-bar] in an ambient of 2n + r coordinates.
Subspace assemble(Field f, std::size_t n, std::size_t r, const Subspace& x, const std::vector<Vector>& middle)
{
    const std::size_t m = 2 * n + r;
    std::vector<Vector> gens;
    for (const auto& v : x.basis_vectors()) {
        gens.push_back(placed(f, m, 0, v));
        gens.push_back(placed(f, m, n, v));
        gens.push_back(placed(f, m, n + r, v));
    }
    for (const auto& w : middle) gens.push_back(placed(f, m, 2 * n, w));
    return Subspace::span(f, m, gens);
}

// { x in k^count : image(sum x_t e_t, src) in target for every src }, where
// image is linear in its first argument and given on basis indices t.
Subspace constrained(Field f, std::size_t count, const std::vector<Vector>& sources, const Subspace& target,
                     const std::function<Vector(std::size_t, const Vector&)>& image)
{
    const auto tests = target.annihilator().basis_vectors();
    if (count == 0) return Subspace::zero(f, 0);
    if (tests.empty() || sources.empty()) return Subspace::full(f, count);
    Matrix sys(f, sources.size() * tests.size(), count);
    for (std::size_t t = 0; t < count; ++t)
        for (std::size_t s = 0; s < sources.size(); ++s) {
            const Vector img = image(t, sources[s]);
            for (std::size_t q = 0; q < tests.size(); ++q) sys(s * tests.size() + q, t) = dot(f, img, tests[q]);
        }
    return kernel(sys);
}

std::vector<Vector> basis_of(Field f, std::size_t n)
{
    std::vector<Vector> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(unit_vector(f, n, i));
    return out;
}

const FiniteCoalgebra& base(const LatticeContext& ctx) { return ctx.ls.base(); }
Field field_of(const LatticeContext& ctx) { return ctx.ls.base().field(); }

void require_ambient(const Subspace& s, std::size_t n, const char* what)
{
    if (s.ambient_dim() != n) throw DimensionMismatch(std::string(what) + ": subspace has wrong ambient dimension");
}

void require_unital_subalgebra(const LatticeContext& ctx, const Subspace& b)
{
    require_ambient(b, ctx.ls.n(), "unital subalgebra");
    const auto& j = ctx.ls.kkt().source();
    if (!is_subalgebra(j, b) || !b.contains(ctx.ls.kkt().unity()))
        throw std::invalid_argument("subspace is not a unital subalgebra of A*");
}

void require_ideal(const LatticeContext& ctx, const Subspace& b)
{
    require_ambient(b, ctx.ls.n(), "ideal");
    if (!is_ideal(ctx.ls.kkt().source(), b)) throw std::invalid_argument("subspace is not an ideal of A*");
}

void require_coideal(const LatticeContext& ctx, const Subspace& v)
{
    require_ambient(v, ctx.ls.n(), "coideal");
    if (!is_coideal(base(ctx), v)) throw std::invalid_argument("subspace is not a coideal of A");
}

void require_subcoalgebra(const LatticeContext& ctx, const Subspace& b)
{
    require_ambient(b, ctx.ls.n(), "subcoalgebra");
    if (!is_subcoalgebra(base(ctx), b)) throw std::invalid_argument("subspace is not a subcoalgebra of A");
}

// IntDer coordinates of an operator on A* known to be inner.
Vector intder_coords(const LatticeContext& ctx, const Matrix& op)
{
    const auto c = ctx.ls.kkt().intder().coordinates(op);
    if (!c) throw std::domain_error("operator is not an inner derivation");
    return *c;
}

Vector mixed_coords(const LatticeContext& ctx, const Matrix& block)
{
    const auto c = ctx.ls.mixed().coordinates(block);
    if (!c) throw std::domain_error("operator is not in [A*,A]");
    return *c;
}

bool pi_closed(const LatticeContext& ctx, const Subspace& l) { return image(l, ctx.ls.pi_matrix()) == l; }

}  // namespace

LatticeContext make_context(const FiniteCoalgebra& c)
{
    LatticeContext ctx{delta_L_global(c), {}, {}};
    ctx.u = build_U(ctx.ls);
    ctx.u_perp = perp_in_space(ctx, ctx.u);
    return ctx;
}

Subspace build_U(const LSpace& ls)
{
    const auto& k = ls.kkt();
    const Field f = ls.base().field();
    const std::size_t n = k.n();
    const Vector& one = k.unity();
    return Subspace::span(f, k.dim(),
                          {placed(f, k.dim(), 0, one), placed(f, k.dim(), n, one), placed(f, k.dim(), n + k.r_dim(), one)});
}

FiniteAlgebra u_algebra(const LatticeContext& ctx)
{
    const auto& k = ctx.ls.kkt();
    const Field f = field_of(ctx);
    const std::size_t n = k.n();
    const Vector& one = k.unity();
    const std::vector<Vector> basis{placed(f, k.dim(), 0, one), placed(f, k.dim(), n, one),
                                    placed(f, k.dim(), n + k.r_dim(), one)};
    const SpanSolver solver(Matrix::from_rows(f, k.dim(), basis));
    Tensor3 t(f, 3);
    for (std::size_t x = 0; x < 3; ++x)
        for (std::size_t y = 0; y < 3; ++y) {
            const Vector c = solver.require(multiply(k.lie(), basis[x], basis[y]), "bracket inside U");
            for (std::size_t z = 0; z < 3; ++z) t(x, y, z) = c[z];
        }
    return FiniteAlgebra(f, {"1", "1'", "1~"}, std::move(t));
}

Report u_report(const LatticeContext& ctx)
{
    Report r;
    r.add("U_dim_3", ctx.u.dim() == 3, "dim=" + std::to_string(ctx.u.dim()));
    const bool closed = is_lie_subalgebra(ctx.ls.kkt().lie(), ctx.u);
    r.add("U_closed", closed);
    if (!closed) return r;
    const FiniteAlgebra ua = u_algebra(ctx);
    const std::size_t kr = killing_rank(ua);
    const std::size_t cz = center(ua).dim();
    r.add("U_killing_rank_3", kr == 3, "rank=" + std::to_string(kr));
    r.add("U_center_zero", cz == 0, "dim=" + std::to_string(cz));
    return r;
}

bool is_lie_subalgebra(const FiniteAlgebra& lie, const Subspace& s) { return is_lie_ideal_in(lie, s, s); }

bool is_lie_ideal(const FiniteAlgebra& lie, const Subspace& inner)
{
    return is_lie_ideal_in(lie, inner, Subspace::full(lie.field(), lie.dim()));
}

bool is_lie_ideal_in(const FiniteAlgebra& lie, const Subspace& inner, const Subspace& outer)
{
    if (inner.ambient_dim() != lie.dim() || outer.ambient_dim() != lie.dim())
        throw DimensionMismatch("subspace has wrong ambient dimension");
    for (const auto& x : inner.basis_vectors())
        for (const auto& y : outer.basis_vectors())
            if (!inner.contains(multiply(lie, x, y))) return false;
    return true;
}

Subspace perp_in_dual(const LatticeContext& ctx, const Subspace& l)
{
    return ortho_complement(l, ctx.ls.gram(), PairingSide::Right);
}

Subspace perp_in_space(const LatticeContext& ctx, const Subspace& lstar)
{
    return ortho_complement(lstar, ctx.ls.gram(), PairingSide::Left);
}

Subspace d_of(const LatticeContext& ctx, const Subspace& b)
{
    require_ambient(b, ctx.ls.n(), "d(B)");
    const auto ders = ctx.ls.kkt().intder().basis_operators();
    return constrained(field_of(ctx), ders.size(), b.basis_vectors(), b,
                       [&](std::size_t t, const Vector& x) { return ders[t].apply_left(x); });
}

Subspace p_of(const LatticeContext& ctx, const Subspace& b)
{
    require_ambient(b, ctx.ls.n(), "p(B)");
    const auto ders = ctx.ls.kkt().intder().basis_operators();
    return constrained(field_of(ctx), ders.size(), basis_of(field_of(ctx), ctx.ls.n()), b,
                       [&](std::size_t t, const Vector& x) { return ders[t].apply_left(x); });
}

Subspace d_star_of(const LatticeContext& ctx, const Subspace& v)
{
    require_ambient(v, ctx.ls.n(), "d*(V)");
    const auto& mixed = ctx.ls.mixed();
    return constrained(field_of(ctx), mixed.dim(), perp(v).basis_vectors(), v,
                       [&](std::size_t t, const Vector& f) { return mixed.basis_block(t).apply_left(f); });
}

Subspace p_star_of(const LatticeContext& ctx, const Subspace& b)
{
    require_ambient(b, ctx.ls.n(), "p*(B)");
    const auto& mixed = ctx.ls.mixed();
    return constrained(field_of(ctx), mixed.dim(), basis_of(field_of(ctx), ctx.ls.n()), b,
                       [&](std::size_t t, const Vector& f) { return mixed.basis_block(t).apply_left(f); });
}

Subspace L1_alg(const LatticeContext& ctx, const Subspace& b)
{
    require_unital_subalgebra(ctx, b);
    const auto& j = ctx.ls.kkt().source();
    const auto basis = b.basis_vectors();
    std::vector<Vector> mid;
    for (std::size_t x = 0; x < basis.size(); ++x)
        for (std::size_t y = x + 1; y < basis.size(); ++y)
            mid.push_back(intder_coords(ctx, commutator_bracket(j, basis[x], basis[y])));
    return assemble(field_of(ctx), ctx.ls.n(), ctx.ls.kkt().r_dim(), b, mid);
}

Subspace L2_alg(const LatticeContext& ctx, const Subspace& b)
{
    require_unital_subalgebra(ctx, b);
    return assemble(field_of(ctx), ctx.ls.n(), ctx.ls.kkt().r_dim(), b, d_of(ctx, b).basis_vectors());
}

Subspace I1_alg(const LatticeContext& ctx, const Subspace& b)
{
    require_ideal(ctx, b);
    const auto& j = ctx.ls.kkt().source();
    std::vector<Vector> mid;
    for (std::size_t i = 0; i < j.dim(); ++i)
        for (const auto& x : b.basis_vectors())
            mid.push_back(intder_coords(ctx, commutator_bracket(j, j.basis_vector(i), x)));
    return assemble(field_of(ctx), ctx.ls.n(), ctx.ls.kkt().r_dim(), b, mid);
}

Subspace I2_alg(const LatticeContext& ctx, const Subspace& b)
{
    require_ideal(ctx, b);
    return assemble(field_of(ctx), ctx.ls.n(), ctx.ls.kkt().r_dim(), b, p_of(ctx, b).basis_vectors());
}

Subspace L1_star(const LatticeContext& ctx, const Subspace& v)
{
    require_coideal(ctx, v);
    std::vector<Vector> mid;
    for (const auto& f : perp(v).basis_vectors())
        for (const auto& x : v.basis_vectors()) mid.push_back(mixed_coords(ctx, mixed_block(base(ctx), f, x)));
    return assemble(field_of(ctx), ctx.ls.n(), ctx.ls.r_dim(), v, mid);
}

Subspace L2_star(const LatticeContext& ctx, const Subspace& v)
{
    require_coideal(ctx, v);
    return assemble(field_of(ctx), ctx.ls.n(), ctx.ls.r_dim(), v, d_star_of(ctx, v).basis_vectors());
}

Subspace I1_star(const LatticeContext& ctx, const Subspace& b)
{
    require_subcoalgebra(ctx, b);
    return l_of_subcoalgebra(ctx.ls, b);
}

Subspace I2_star(const LatticeContext& ctx, const Subspace& b)
{
    require_subcoalgebra(ctx, b);
    return assemble(field_of(ctx), ctx.ls.n(), ctx.ls.r_dim(), b, p_star_of(ctx, b).basis_vectors());
}

Lift parse_lift(const std::string& text)
{
    if (text == "L1*") return Lift::L1Star;
    if (text == "L2*") return Lift::L2Star;
    if (text == "I1*") return Lift::I1Star;
    if (text == "I2*") return Lift::I2Star;
    throw std::invalid_argument("unknown lift: " + text);
}

Subspace lift(const LatticeContext& ctx, Lift which, const Subspace& s)
{
    switch (which) {
    case Lift::L1Star: return L1_star(ctx, s);
    case Lift::L2Star: return L2_star(ctx, s);
    case Lift::I1Star: return I1_star(ctx, s);
    case Lift::I2Star: return I2_star(ctx, s);
    }
    throw std::invalid_argument("unknown lift");
}

Subspace a_part(const LatticeContext& ctx, const Subspace& l)
{
    const Field f = field_of(ctx);
    const std::size_t n = ctx.ls.n();
    const std::size_t m = ctx.ls.dim();
    require_ambient(l, m, "A-part");
    std::vector<Vector> a_axis;
    for (std::size_t i = 0; i < n; ++i) a_axis.push_back(unit_vector(f, m, i));
    const Subspace meet = subspace_intersect(l, Subspace::span(f, m, a_axis));
    std::vector<Vector> out;
    for (const auto& v : meet.basis_vectors()) out.emplace_back(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(n));
    return Subspace::span(f, n, out);
}

Report theorem2_verify(const LatticeContext& ctx, const Subspace& v)
{
    require_coideal(ctx, v);
    const auto& lc = ctx.ls.coalgebra();
    const auto& lie = ctx.ls.kkt().lie();
    const auto& j = ctx.ls.kkt().source();
    const Subspace vp = perp(v);
    const Subspace l1s = L1_star(ctx, v);
    const Subspace l2s = L2_star(ctx, v);
    const Subspace l1 = L1_alg(ctx, vp);
    const Subspace l2 = L2_alg(ctx, vp);
    Report r;

    std::string bad;
    for (const auto& f : vp.basis_vectors())
        for (const auto& x : v.basis_vectors())
            if (bad.empty() && !v.contains(act_left(base(ctx), f, x))) bad = "f=" + to_string(f) + " v=" + to_string(x);
    r.add("Vperp_V_in_V", bad.empty(), bad);
    bad.clear();
    for (const auto& f : vp.basis_vectors())
        for (const auto& g : vp.basis_vectors())
            for (const auto& x : v.basis_vectors())
                if (bad.empty() && !v.contains(mixed_block(base(ctx), g, x).apply_left(f)))
                    bad = "f=" + to_string(f) + " g=" + to_string(g) + " v=" + to_string(x);
    r.add("Vperp_commutator_in_V", bad.empty(), bad);

    r.add("L1_subalgebra", is_lie_subalgebra(lie, l1));
    r.add("L2_subalgebra", is_lie_subalgebra(lie, l2));
    r.add("L1_ideal_in_L2", l2.contains(l1) && is_lie_ideal_in(lie, l1, l2));
    r.add("d_is_subalgebra_of_derivations", [&] {
        const auto ders = ctx.ls.kkt().intder().basis_operators();
        const Subspace d = d_of(ctx, vp);
        for (const auto& x : d.basis_vectors())
            for (const auto& y : d.basis_vectors()) {
                Matrix dx(j.field(), j.dim(), j.dim()), dy(j.field(), j.dim(), j.dim());
                for (std::size_t t = 0; t < ders.size(); ++t) {
                    dx += x[t] * ders[t];
                    dy += y[t] * ders[t];
                }
                if (!d.contains(intder_coords(ctx, commutator(dx, dy)))) return false;
            }
        return true;
    }());

    r.add("L1*_coideal", is_coideal(lc, l1s));
    r.add("L2*_coideal", is_coideal(lc, l2s));
    r.add("L1*_pi_closed", pi_closed(ctx, l1s));
    r.add("L2*_pi_closed", pi_closed(ctx, l2s));
    r.add("L1*_in_Uperp", ctx.u_perp.contains(l1s));
    r.add("L2*_in_Uperp", ctx.u_perp.contains(l2s));
    r.add("L1*_in_L2*", l2s.contains(l1s));
    const Subspace p1 = perp_in_dual(ctx, l1s);
    const Subspace p2 = perp_in_dual(ctx, l2s);
    r.add("L1*_perp_eq_L2", p1 == l2, "dims=" + std::to_string(p1.dim()) + "," + std::to_string(l2.dim()));
    r.add("L2*_perp_eq_L1", p2 == l1, "dims=" + std::to_string(p2.dim()) + "," + std::to_string(l1.dim()));
    return r;
}

Report theorem3_verify(const LatticeContext& ctx, const Subspace& b)
{
    require_subcoalgebra(ctx, b);
    const auto& lc = ctx.ls.coalgebra();
    const auto& lie = ctx.ls.kkt().lie();
    const auto& j = ctx.ls.kkt().source();
    const Subspace bp = perp(b);
    const Subspace i1s = I1_star(ctx, b);
    const Subspace i2s = I2_star(ctx, b);
    const Subspace i1 = I1_alg(ctx, bp);
    const Subspace i2 = I2_alg(ctx, bp);
    Report r;

    r.add("I1_ideal", is_lie_ideal(lie, i1));
    r.add("I2_ideal", is_lie_ideal(lie, i2));
    r.add("p_ideal_in_intder", [&] {
        const auto ders = ctx.ls.kkt().intder().basis_operators();
        const Subspace p = p_of(ctx, bp);
        for (const auto& x : p.basis_vectors()) {
            Matrix dx(j.field(), j.dim(), j.dim());
            for (std::size_t t = 0; t < ders.size(); ++t) dx += x[t] * ders[t];
            for (const auto& d : ders)
                if (!p.contains(intder_coords(ctx, commutator(dx, d)))) return false;
        }
        return true;
    }());
    r.add("I1*_subcoalgebra", is_subcoalgebra(lc, i1s));
    r.add("I2*_subcoalgebra", is_subcoalgebra(lc, i2s));
    r.add("I1*_in_I2*", i2s.contains(i1s));
    const Subspace p1 = perp_in_dual(ctx, i1s);
    const Subspace p2 = perp_in_dual(ctx, i2s);
    r.add("I1*_perp_eq_I2", p1 == i2, "dims=" + std::to_string(p1.dim()) + "," + std::to_string(i2.dim()));
    r.add("I2*_perp_eq_I1", p2 == i1, "dims=" + std::to_string(p2.dim()) + "," + std::to_string(i1.dim()));
    return r;
}

Report theorem2_reverse(const LatticeContext& ctx, const Subspace& l)
{
    require_ambient(l, ctx.ls.dim(), "theorem2_reverse");
    Report r;
    const bool co = is_coideal(ctx.ls.coalgebra(), l);
    const bool pc = pi_closed(ctx, l);
    const bool inu = ctx.u_perp.contains(l);
    r.add("precondition_coideal", co);
    r.add("precondition_pi_closed", pc);
    r.add("precondition_in_Uperp", inu);
    if (!(co && pc && inu)) return r;
    const Subspace v = a_part(ctx, l);
    const bool vco = is_coideal(base(ctx), v);
    r.add("V_coideal", vco, "V=" + to_string(v.basis().flatten()));
    if (!vco) return r;
    r.add("L1*_in_L", l.contains(L1_star(ctx, v)));
    r.add("L_in_L2*", L2_star(ctx, v).contains(l));
    return r;
}

Report theorem3_reverse(const LatticeContext& ctx, const Subspace& l)
{
    require_ambient(l, ctx.ls.dim(), "theorem3_reverse");
    Report r;
    const bool sub = is_subcoalgebra(ctx.ls.coalgebra(), l);
    r.add("precondition_subcoalgebra", sub);
    if (!sub) return r;
    const Subspace b = a_part(ctx, l);
    const bool bsub = is_subcoalgebra(base(ctx), b);
    r.add("B_subcoalgebra", bsub, "B=" + to_string(b.basis().flatten()));
    if (!bsub) return r;
    const bool lower = l.contains(I1_star(ctx, b));
    const bool upper = I2_star(ctx, b).contains(l);
    if (lower && upper) {
        r.add("I1*_in_L", true);
        r.add("L_in_I2*", true);
    } else if (!pi_closed(ctx, l)) {
        r.flag("sandwich", std::string("fails without pi-closure: lower=") + (lower ? "1" : "0") +
                               " upper=" + (upper ? "1" : "0"));
    } else {
        r.add("I1*_in_L", lower);
        r.add("L_in_I2*", upper);
    }
    return r;
}

Vector sparse_sample(ScalarSampler& s, std::size_t n)
{
    Vector v = zero_vector(s.field(), n);
    for (auto& x : v)
        if (s.below(2) == 1) x = s.next();
    return v;
}

Subspace random_subcoalgebra(const FiniteCoalgebra& c, ScalarSampler& s)
{
    const Vector v = sparse_sample(s, c.dim());
    return generated_subcoalgebra(c, Subspace::span(c.field(), c.dim(), {v}));
}

Subspace random_coideal(const FiniteCoalgebra& c, ScalarSampler& s)
{
    const Vector f = sparse_sample(s, c.dim());
    return perp(generated_subalgebra(dual_algebra(c), Subspace::span(c.field(), c.dim(), {f}), true));
}

}  // namespace kktco
