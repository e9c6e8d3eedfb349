#include "kktco/liecoalg.hpp"

namespace kktco {

namespace {

Vector slice(const Vector& v, std::size_t from, std::size_t len)
{
    return Vector(v.begin() + static_cast<std::ptrdiff_t>(from), v.begin() + static_cast<std::ptrdiff_t>(from + len));
}

void append(Vector& out, const Vector& v) { out.insert(out.end(), v.begin(), v.end()); }

Matrix block_of(const Matrix& op, std::size_t n)
{
    Matrix b(op.field(), n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) b(i, j) = op(i, n + j);
    return b;
}

FiniteAlgebra null_algebra(const FiniteCoalgebra& c)
{
    const std::size_t n = c.dim();
    const Field f = c.field();
    const auto& d = c.delta();
    Tensor3 product(f, 2 * n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const Scalar& s = d(a, i, j);
                if (s.is_zero()) continue;
                product(i, j, a) = s;          // e^i e^j
                product(j, n + a, n + i) = s;  // e^j . e_a
                product(n + a, i, n + j) = s;  // e_a . e^i
            }
    std::vector<std::string> names;
    for (const auto& s : c.basis_names()) names.push_back(s + "*");
    for (const auto& s : c.basis_names()) names.push_back(s);
    return FiniteAlgebra(f, std::move(names), std::move(product));
}

// x [g, a] = (x g) a - (x a) g for x in A*, using a precomputed dual.
Matrix mixed_block_with(const FiniteCoalgebra& c, const FiniteAlgebra& dual, const Vector& g, const Vector& a)
{
    const std::size_t n = c.dim();
    Matrix b(c.field(), n, n);
    for (std::size_t i = 0; i < n; ++i) {
        const Vector ei = c.basis_vector(i);
        b.set_row(i, act_left(c, multiply(dual, ei, g), a) - act_right(c, act_left(c, ei, a), g));
    }
    return b;
}

void require_jordan_dual(const FiniteCoalgebra& c, const FiniteAlgebra& dual)
{
    if (!counit(c)) throw UnityRequired("coalgebra has no counit");
    if (auto w = jordan_violation(dual)) throw IdentityViolation("dual algebra is not Jordan", *w);
}

std::string index_list(const std::vector<std::size_t>& v)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return "(" + s + ")";
}

// Coordinate vectors e_i added greedily while independent of base + chosen.
std::vector<Vector> coordinate_complement(const Subspace& base)
{
    std::vector<Vector> chosen;
    std::vector<Vector> all = base.basis_vectors();
    Subspace current = base;
    for (std::size_t i = 0; i < base.ambient_dim() && current.dim() < base.ambient_dim(); ++i) {
        const Vector e = unit_vector(base.field(), base.ambient_dim(), i);
        if (current.contains(e)) continue;
        chosen.push_back(e);
        all.push_back(e);
        current = Subspace::span(base.field(), base.ambient_dim(), all);
    }
    return chosen;
}

// D[q] = Hinv C_q Hinv^T where C_q[p][r] = sum_s m(p, r, s) H[s][q].
Tensor3 transpose_product(const Tensor3& m, const Matrix& h)
{
    const Field f = h.field();
    const std::size_t k = h.rows();
    auto hinv = inverse(h);
    if (!hinv) throw std::domain_error("pairing matrix is singular");
    const Matrix hinv_t = hinv->transpose();
    Tensor3 delta(f, k);
    for (std::size_t q = 0; q < k; ++q) {
        Matrix cq(f, k, k);
        for (std::size_t p = 0; p < k; ++p)
            for (std::size_t r = 0; r < k; ++r) {
                Scalar acc = Scalar::zero(f);
                for (std::size_t s = 0; s < k; ++s)
                    if (!m(p, r, s).is_zero() && !h(s, q).is_zero()) acc += m(p, r, s) * h(s, q);
                cq(p, r) = acc;
            }
        const Matrix dq = *hinv * cq * hinv_t;
        for (std::size_t x = 0; x < k; ++x)
            for (std::size_t y = 0; y < k; ++y) delta(q, x, y) = dq(x, y);
    }
    return delta;
}

Vector tensor(const Vector& x, const Vector& y, Field f)
{
    Vector out = zero_vector(f, x.size() * y.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        if (!x[i].is_zero())
            for (std::size_t j = 0; j < y.size(); ++j) out[i * y.size() + j] = x[i] * y[j];
    return out;
}

}  // namespace

NullExtension null_extension(const FiniteCoalgebra& c)
{
    require_jordan_dual(c, dual_algebra(c));
    return {c, null_algebra(c)};
}

Matrix mixed_block(const FiniteCoalgebra& c, const Vector& g, const Vector& a)
{
    return mixed_block_with(c, dual_algebra(c), g, a);
}

MixedCommutatorSpace::MixedCommutatorSpace(const FiniteCoalgebra& c) : n_(c.dim())
{
    const Field f = c.field();
    const std::size_t n = n_;
    const FiniteAlgebra cc = null_algebra(c);
    std::vector<Matrix> rights;
    for (std::size_t x = 0; x < 2 * n; ++x) rights.push_back(right_mult(cc, cc.basis_vector(x)));

    std::vector<OperatorGenerator> gens;
    std::vector<Vector> flats;
    std::vector<Vector> block_rows;
    std::vector<Vector> chosen_flats;
    Subspace chosen_span = Subspace::zero(f, n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Matrix op = commutator(rights[i], rights[n + j]);
            Matrix blk = block_of(op, n);
            const Vector flat = blk.flatten();
            block_rows.push_back(flat);
            if (!chosen_span.contains(flat)) {
                chosen_.push_back({i, j});
                blocks_.push_back(blk);
                chosen_flats.push_back(flat);
                chosen_span = Subspace::span(f, n * n, chosen_flats);
            }
            flats.push_back(op.flatten());
            gens.push_back({"[" + c.basis_names()[i] + "*," + c.basis_names()[j] + "]", std::move(op), i, n + j});
        }
    span_ = OperatorSpace(2 * n, Subspace::span(f, 4 * n * n, flats), std::move(gens));
    solver_ = SpanSolver(Matrix::from_rows(f, n * n, chosen_flats));
    generator_blocks_ = Matrix::from_rows(f, n * n, block_rows);
}

std::optional<Vector> MixedCommutatorSpace::coordinates(const Matrix& block) const
{
    return solver_.coordinates(block.flatten());
}

std::vector<Vector> MixedCommutatorSpace::generator_relations() const
{
    if (n_ == 0) return {};
    return kernel(generator_blocks_.transpose()).basis_vectors();
}

Vector intder_action_on_A(const FiniteCoalgebra& c, const std::vector<CommutatorTerm>& i, const Vector& a)
{
    Vector out = zero_vector(c.field(), c.dim());
    for (const auto& t : i) {
        const Vector assoc = act_right(c, act_left(c, t.f, a), t.g) - act_left(c, t.f, act_right(c, a, t.g));
        axpy(out, t.coefficient, assoc);
    }
    return out;
}

std::size_t LSpace::part_offset(LPart p) const
{
    switch (p) {
    case LPart::A: return 0;
    case LPart::APrime: return n();
    case LPart::Mixed: return 2 * n();
    case LPart::ABar: return n() + r_dim();
    }
    return 0;
}

std::size_t LSpace::part_dim(LPart p) const { return p == LPart::Mixed ? mixed_.dim() : n(); }

std::vector<std::string> LSpace::basis_names() const
{
    std::vector<std::string> names;
    const auto& b = base_.basis_names();
    for (const auto& s : b) names.push_back(s);
    for (const auto& s : b) names.push_back(s + "'");
    for (std::size_t k = 0; k < mixed_.dim(); ++k) {
        auto [i, j] = mixed_.basis_pair(k);
        names.push_back("[" + b[i] + "*," + b[j] + "]");
    }
    for (const auto& s : b) names.push_back(s + "~");
    return names;
}

Scalar LSpace::pairing(const Vector& lstar, const Vector& l) const
{
    if (lstar.size() != dim() || l.size() != dim()) throw DimensionMismatch("pairing: wrong vector length");
    return dot(base_.field(), lstar, gram_.apply_right(l));
}

Matrix LSpace::r_star_on_A(const Vector& u) const
{
    if (u.size() != kkt_.r_dim()) throw DimensionMismatch("R(A*) coordinates have wrong length");
    const Field f = base_.field();
    const std::size_t n = this->n();
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (u[i].is_zero()) continue;
        const Vector ei = base_.basis_vector(i);
        for (std::size_t a = 0; a < n; ++a) {
            const Vector img = act_right(base_, base_.basis_vector(a), ei);
            for (std::size_t j = 0; j < n; ++j) m(a, j) += u[i] * img[j];
        }
    }
    for (std::size_t t = 0; t < intder_on_a_.size(); ++t)
        if (!u[n + t].is_zero()) m += u[n + t] * intder_on_a_[t];
    return m;
}

Matrix LSpace::r_block(const Vector& w) const
{
    if (w.size() != r_dim()) throw DimensionMismatch("R(A) coordinates have wrong length");
    Matrix m(base_.field(), n(), n());
    for (std::size_t t = 0; t < r_blocks_.size(); ++t)
        if (!w[t].is_zero()) m += w[t] * r_blocks_[t];
    return m;
}

Vector LSpace::r_coordinates(const Matrix& block) const { return r_solver_.require(block.flatten(), "R(A) coordinates"); }

Vector LSpace::module_action(const Vector& l, const Vector& lstar) const
{
    if (l.size() != dim() || lstar.size() != kkt_.dim()) throw DimensionMismatch("module action: wrong vector length");
    const std::size_t n = this->n();
    const FiniteAlgebra& dual = kkt_.source();
    const Vector a = slice(l, 0, n);
    const Vector w = slice(l, n, r_dim());
    const Vector b = slice(l, n + r_dim(), n);
    const Vector f = slice(lstar, 0, n);
    const Vector u = slice(lstar, n, kkt_.r_dim());
    const Vector g = slice(lstar, n + kkt_.r_dim(), n);

    Vector eps_u = u;
    for (std::size_t i = 0; i < n; ++i) eps_u[i] = -eps_u[i];
    Vector pi_w = w;
    for (std::size_t i = 0; i < n; ++i) pi_w[i] = -pi_w[i];

    const Matrix u_on_a = r_star_on_A(u);
    const Matrix u_on_astar = kkt_.r_operator(u);
    const Matrix w_blk = r_block(w);

    // x nabla y = (xy)' - [x, y]; in C, [a, g] = -[g, a].
    const Vector ag = act_right(base_, a, g);
    const Vector fb = act_left(base_, f, b);
    Matrix r_part = r_block([&] {
        Vector coords = zero_vector(base_.field(), r_dim());
        for (std::size_t i = 0; i < n; ++i) coords[i] = ag[i] - fb[i];
        return coords;
    }());
    r_part += mixed_block_with(base_, dual, g, a);
    r_part += mixed_block_with(base_, dual, f, b);
    r_part += w_blk * u_on_a - u_on_astar * w_blk;

    Vector out = u_on_a.apply_left(a) - w_blk.apply_left(f);
    append(out, r_coordinates(r_part));
    append(out, r_star_on_A(eps_u).apply_left(b) - r_block(pi_w).apply_left(g));
    return out;
}

Matrix LSpace::action_matrix(const Vector& lstar) const
{
    const Field f = base_.field();
    Matrix m(f, dim(), dim());
    for (std::size_t i = 0; i < dim(); ++i) m.set_row(i, module_action(unit_vector(f, dim(), i), lstar));
    return m;
}

Vector LSpace::pi(const Vector& l) const
{
    if (l.size() != dim()) throw DimensionMismatch("pi: wrong vector length");
    const std::size_t n = this->n();
    Vector out = slice(l, n + r_dim(), n);
    Vector w = slice(l, n, r_dim());
    for (std::size_t i = 0; i < n; ++i) w[i] = -w[i];
    append(out, w);
    append(out, slice(l, 0, n));
    return out;
}

Matrix LSpace::pi_matrix() const
{
    const Field f = base_.field();
    Matrix m(f, dim(), dim());
    for (std::size_t i = 0; i < dim(); ++i) m.set_row(i, pi(unit_vector(f, dim(), i)));
    return m;
}

const FiniteCoalgebra& LSpace::coalgebra() const
{
    if (!delta_) throw std::logic_error("comultiplication of L(A) not built");
    return *delta_;
}

LSpace build_lspace(const FiniteCoalgebra& c)
{
    LSpace ls;
    const Field f = c.field();
    const std::size_t n = c.dim();
    ls.base_ = c;
    ls.null_ = null_extension(c);
    ls.kkt_ = build_kkt(dual_algebra(c));
    ls.mixed_ = MixedCommutatorSpace(c);
    const auto& intder = ls.kkt_.intder();
    if (ls.mixed_.dim() != intder.dim())
        throw IdentityViolation("dim [A*,A] differs from dim IntDer(A*)", {ls.mixed_.dim(), intder.dim()});

    const auto ders = intder.basis_operators();
    for (const auto& d : ders) {
        std::vector<CommutatorTerm> terms;
        for (const auto& t : intder.decompose(d)) {
            const auto& gen = intder.generators()[t.generator];
            terms.push_back({t.coefficient, c.basis_vector(gen.left), c.basis_vector(gen.right)});
        }
        Matrix m(f, n, n);
        for (std::size_t a = 0; a < n; ++a) m.set_row(a, intder_action_on_A(c, terms, c.basis_vector(a)));
        ls.intder_on_a_.push_back(std::move(m));
    }

    for (std::size_t b = 0; b < n; ++b) {
        Matrix blk(f, n, n);
        for (std::size_t i = 0; i < n; ++i) blk.set_row(i, act_left(c, c.basis_vector(i), c.basis_vector(b)));
        ls.r_blocks_.push_back(std::move(blk));
    }
    for (std::size_t k = 0; k < ls.mixed_.dim(); ++k) ls.r_blocks_.push_back(ls.mixed_.basis_block(k));
    std::vector<Vector> flats;
    for (const auto& m : ls.r_blocks_) flats.push_back(m.flatten());
    ls.r_solver_ = SpanSolver(Matrix::from_rows(f, n * n, flats));

    const std::size_t m = ls.dim();
    ls.gram_ = Matrix::identity(f, m);
    const std::size_t off = 2 * n;
    for (std::size_t t = 0; t < ders.size(); ++t)
        for (std::size_t k = 0; k < ls.mixed_.dim(); ++k) {
            auto [i, j] = ls.mixed_.basis_pair(k);
            ls.gram_(off + t, off + k) = ders[t](i, j);
        }
    return ls;
}

LSpace delta_L_global(const FiniteCoalgebra& c)
{
    LSpace ls = build_lspace(c);
    Tensor3 delta = transpose_product(ls.kkt_.lie().product(), ls.gram_);
    ls.delta_ = FiniteCoalgebra(c.field(), ls.basis_names(), std::move(delta));
    return ls;
}

FiniteAlgebra transported_dual(const LSpace& ls) { return change_basis(dual_algebra(ls.coalgebra()), ls.gram()); }

Subspace l_of_subcoalgebra(const LSpace& ls, const Subspace& b)
{
    const auto& c = ls.base();
    if (b.ambient_dim() != c.dim()) throw DimensionMismatch("subspace of A expected");
    const Field f = c.field();
    const std::size_t n = c.dim();
    const std::size_t m = ls.dim();
    const FiniteAlgebra dual = dual_algebra(c);
    std::vector<Vector> gens;
    auto embed = [&](LPart p, const Vector& v) {
        Vector out = zero_vector(f, m);
        for (std::size_t i = 0; i < v.size(); ++i) out[ls.part_offset(p) + i] = v[i];
        return out;
    };
    for (const auto& x : b.basis_vectors()) {
        gens.push_back(embed(LPart::A, x));
        gens.push_back(embed(LPart::APrime, x));
        gens.push_back(embed(LPart::ABar, x));
        for (std::size_t i = 0; i < n; ++i) {
            auto w = ls.mixed().coordinates(mixed_block_with(c, dual, c.basis_vector(i), x));
            if (!w) throw std::domain_error("[A*,B] generator outside [A*,A]");
            gens.push_back(embed(LPart::Mixed, *w));
        }
    }
    return Subspace::span(f, m, gens);
}

Vector LocalDelta::comultiply_ambient(const Vector& l) const
{
    const Field f = support.field();
    const SpanSolver solver(support.basis());
    const Vector coords = solver.require(l, "local comultiplication argument");
    const Vector local = coalgebra.comultiply(coords);
    const std::size_t k = support.dim();
    const std::size_t m = support.ambient_dim();
    Vector out = zero_vector(f, m * m);
    for (std::size_t x = 0; x < k; ++x)
        for (std::size_t y = 0; y < k; ++y)
            if (!local[x * k + y].is_zero())
                axpy(out, local[x * k + y], tensor(support.basis_vector(x), support.basis_vector(y), f));
    return out;
}

LocalDelta delta_B_local(const LSpace& ls, const Subspace& b)
{
    const auto& c = ls.base();
    if (!is_subcoalgebra(c, b)) throw std::invalid_argument("delta_B_local: not a subcoalgebra");
    const Field f = c.field();
    const std::size_t n = c.dim();
    const std::size_t m = ls.dim();
    const auto& kkt = ls.kkt();

    const Subspace lb = l_of_subcoalgebra(ls, b);
    const Subspace lperp = ortho_complement(lb, ls.gram(), PairingSide::Right);

    // Candidates V + V' + [V, V] + V-bar first, then coordinate vectors.
    const std::vector<Vector> v = coordinate_complement(perp(b));
    std::vector<Vector> candidates;
    auto embed = [&](KKTPart p, const Vector& x) {
        Vector out = zero_vector(f, m);
        for (std::size_t i = 0; i < x.size(); ++i) out[kkt.part_offset(p) + i] = x[i];
        return out;
    };
    for (const auto& x : v) candidates.push_back(embed(KKTPart::A, x));
    for (const auto& x : v) candidates.push_back(embed(KKTPart::JPrime, x));
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j) {
            const Vector r = kkt.r_coordinates(commutator_bracket(kkt.source(), v[i], v[j]));
            Vector out = zero_vector(f, m);
            for (std::size_t t = 0; t < r.size(); ++t) out[n + t] = r[t];
            candidates.push_back(out);
        }
    for (const auto& x : v) candidates.push_back(embed(KKTPart::ABar, x));
    for (std::size_t i = 0; i < m; ++i) candidates.push_back(unit_vector(f, m, i));

    std::vector<Vector> lstar;
    std::vector<Vector> spanning = lperp.basis_vectors();
    Subspace current = lperp;
    for (const auto& x : candidates) {
        if (current.dim() == m) break;
        if (current.contains(x)) continue;
        lstar.push_back(x);
        spanning.push_back(x);
        current = Subspace::span(f, m, spanning);
    }
    const std::size_t k = lstar.size();
    if (k != lb.dim()) throw std::logic_error("complement of the annihilator has the wrong dimension");

    Matrix h(f, k, k);
    for (std::size_t p = 0; p < k; ++p)
        for (std::size_t q = 0; q < k; ++q) h(p, q) = ls.pairing(lstar[p], lb.basis_vector(q));

    // Brackets of L* projected onto L* along the annihilator.
    std::vector<Vector> rows = lstar;
    for (const auto& x : lperp.basis_vectors()) rows.push_back(x);
    const SpanSolver split(Matrix::from_rows(f, m, rows));
    Tensor3 mt(f, k);
    for (std::size_t p = 0; p < k; ++p)
        for (std::size_t r = 0; r < k; ++r) {
            const Vector coords = split.require(multiply(kkt.lie(), lstar[p], lstar[r]), "bracket in L(A*)");
            for (std::size_t s = 0; s < k; ++s) mt(p, r, s) = coords[s];
        }
    std::vector<std::string> names;
    for (std::size_t i = 0; i < k; ++i) names.push_back("l" + std::to_string(i));
    return {lb, FiniteCoalgebra(f, std::move(names), transpose_product(mt, h))};
}

LocalDelta delta_B_restricted(const LSpace& ls, const Subspace& b)
{
    const Subspace lb = l_of_subcoalgebra(ls, b);
    FiniteCoalgebra r = restrict_to_subcoalgebra(ls.coalgebra(), lb);
    std::vector<std::string> names;
    for (std::size_t i = 0; i < lb.dim(); ++i) names.push_back("l" + std::to_string(i));
    return {lb, FiniteCoalgebra(r.field(), std::move(names), r.delta())};
}

Report lie_coalgebra_axioms(const FiniteCoalgebra& lc)
{
    const std::size_t n = lc.dim();
    const Field f = lc.field();
    const auto& d = lc.delta();
    Report r;

    std::string anti;
    for (std::size_t a = 0; a < n && anti.empty(); ++a)
        for (std::size_t i = 0; i < n && anti.empty(); ++i)
            for (std::size_t j = 0; j < n && anti.empty(); ++j)
                if (!(d(a, i, j) == -d(a, j, i))) anti = "basis=" + index_list({a, i, j});
    r.add("anti_cocommutative", anti.empty(), anti);

    std::string cojac;
    for (std::size_t a = 0; a < n && cojac.empty(); ++a) {
        // T[i][k][l] = coefficient of e_i (x) e_k (x) e_l in (id (x) Delta) Delta(e_a)
        std::vector<Scalar> t(n * n * n, Scalar::zero(f));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (d(a, i, j).is_zero()) continue;
                for (std::size_t k = 0; k < n; ++k)
                    for (std::size_t l = 0; l < n; ++l)
                        if (!d(j, k, l).is_zero()) t[(i * n + k) * n + l] += d(a, i, j) * d(j, k, l);
            }
        auto at = [&](std::size_t x, std::size_t y, std::size_t z) { return t[(x * n + y) * n + z]; };
        for (std::size_t x = 0; x < n && cojac.empty(); ++x)
            for (std::size_t y = 0; y < n && cojac.empty(); ++y)
                for (std::size_t z = 0; z < n && cojac.empty(); ++z) {
                    const Scalar s = at(x, y, z) + at(z, x, y) + at(y, z, x);
                    if (!s.is_zero()) cojac = "basis=" + index_list({a, x, y, z}) + " value=" + s.to_string();
                }
    }
    r.add("co_jacobi", cojac.empty(), cojac);

    auto lie = lie_violation(dual_algebra(lc));
    r.add("dual_is_lie", !lie, lie ? "basis=" + index_list(*lie) : std::string());
    return r;
}

Report pairing_report(const LSpace& ls)
{
    Report r;
    const std::size_t dm = MixedCommutatorSpace(ls.base()).dim();
    const std::size_t di = inner_derivations(dual_algebra(ls.base())).dim();
    r.add("dim_mixed_equals_dim_intder", dm == di,
          "dim_mixed=" + std::to_string(dm) + " dim_intder=" + std::to_string(di));

    const std::size_t n = ls.n();
    const Field f = ls.base().field();
    const auto ders = ls.kkt().intder().basis_operators();
    std::string bad;
    const auto relations = ls.mixed().generator_relations();
    for (std::size_t q = 0; q < relations.size() && bad.empty(); ++q)
        for (std::size_t t = 0; t < ders.size() && bad.empty(); ++t) {
            Scalar s = Scalar::zero(f);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) s += relations[q][i * n + j] * ders[t](i, j);
            if (!s.is_zero()) bad = "relation=" + std::to_string(q) + " intder=" + std::to_string(t);
        }
    r.add("pairing_well_defined", bad.empty(), bad);
    r.add("gram_invertible", inverse(ls.gram()).has_value(), "singular gram");
    return r;
}

Report intder_duality_report(const LSpace& ls)
{
    Report r;
    const std::size_t n = ls.n();
    const auto ders = ls.kkt().intder().basis_operators();
    std::string bad;
    for (std::size_t t = 0; t < ders.size() && bad.empty(); ++t)
        for (std::size_t i = 0; i < n && bad.empty(); ++i)
            for (std::size_t j = 0; j < n && bad.empty(); ++j)
                if (!(ders[t](i, j) == -ls.intder_on_A(t)(j, i)))
                    bad = "intder=" + std::to_string(t) + " f=" + std::to_string(i) + " a=" + std::to_string(j);
    r.add("intder_action_dual", bad.empty(), bad);
    return r;
}

std::optional<std::vector<std::size_t>> invariance_violation(const LSpace& ls)
{
    const Field f = ls.base().field();
    const std::size_t m = ls.dim();
    const auto& kkt = ls.kkt();
    const auto& c = kkt.lie().product();
    const Matrix& g = ls.gram();
    std::vector<Matrix> actions;
    for (std::size_t s = 0; s < m; ++s) actions.push_back(ls.action_matrix(unit_vector(f, m, s)));

    for (std::size_t l1 = 0; l1 < m; ++l1) {
        const Vector eps = epsilon(kkt, unit_vector(f, m, l1));
        Matrix act(f, m, m);
        for (std::size_t s = 0; s < m; ++s)
            if (!eps[s].is_zero()) act += eps[s] * actions[s];
        const Matrix rhs = g * act.transpose();
        for (std::size_t l2 = 0; l2 < m; ++l2)
            for (std::size_t l = 0; l < m; ++l) {
                Scalar lhs = Scalar::zero(f);
                for (std::size_t s = 0; s < m; ++s)
                    if (!c(l1, l2, s).is_zero()) lhs += c(l1, l2, s) * g(s, l);
                if (!(lhs == rhs(l2, l))) return std::vector<std::size_t>{l1, l2, l};
            }
    }
    return std::nullopt;
}

Report annihilator_report(const FiniteCoalgebra& c, const Subspace& b)
{
    Report r;
    const Subspace orth = perp(b);
    r.add("annihilator_equals_perp", annihilator(c, b) == orth);
    const FiniteAlgebra cc = null_algebra(c);
    const std::size_t n = c.dim();
    std::string bad;
    for (const auto& fv : orth.basis_vectors()) {
        Vector fe = fv;
        fe.resize(2 * n, Scalar::zero(c.field()));
        for (const auto& bv : b.basis_vectors()) {
            Vector be = zero_vector(c.field(), n);
            be.insert(be.end(), bv.begin(), bv.end());
            if (!commutator(right_mult(cc, fe), right_mult(cc, be)).is_zero()) {
                bad = "f=" + to_string(fv) + " b=" + to_string(bv);
                break;
            }
        }
        if (!bad.empty()) break;
    }
    r.add("perp_commutes_with_B", bad.empty(), bad);
    return r;
}

Report local_product_report(const FiniteCoalgebra& c, const Subspace& b)
{
    Report r;
    const Field f = c.field();
    const std::size_t n = c.dim();
    const FiniteAlgebra dual = dual_algebra(c);
    const Subspace orth = perp(b);
    const std::vector<Vector> v = coordinate_complement(orth);
    std::vector<Vector> rows = v;
    for (const auto& x : orth.basis_vectors()) rows.push_back(x);
    const SpanSolver split(Matrix::from_rows(f, n, rows));
    auto star = [&](const Vector& x, const Vector& y) {
        const Vector coords = split.require(multiply(dual, x, y), "product in A*");
        Vector out = zero_vector(f, n);
        for (std::size_t i = 0; i < v.size(); ++i) axpy(out, coords[i], v[i]);
        return out;
    };

    const auto bb = b.basis_vectors();
    std::string bad;
    for (std::size_t p = 0; p < v.size() && bad.empty(); ++p)
        for (std::size_t q = 0; q < v.size() && bad.empty(); ++q)
            for (std::size_t s = 0; s < bb.size() && bad.empty(); ++s)
                if (!(dot(f, star(v[p], v[q]), bb[s]) == dot(f, multiply(dual, v[p], v[q]), bb[s])))
                    bad = "f=" + std::to_string(p) + " g=" + std::to_string(q) + " b=" + std::to_string(s);
    r.add("local_product_pairs_like_product", bad.empty(), bad);

    const FiniteCoalgebra restricted = restrict_to_subcoalgebra(c, b);
    const std::size_t k = bb.size();
    Matrix h(f, k, k);
    for (std::size_t p = 0; p < k; ++p)
        for (std::size_t q = 0; q < k; ++q) h(p, q) = dot(f, v[p], bb[q]);
    bad.clear();
    for (std::size_t p = 0; p < k && bad.empty(); ++p)
        for (std::size_t q = 0; q < k && bad.empty(); ++q) {
            const Vector prod = star(v[p], v[q]);
            for (std::size_t s = 0; s < k && bad.empty(); ++s) {
                Scalar rhs = Scalar::zero(f);
                for (std::size_t x = 0; x < k; ++x)
                    for (std::size_t y = 0; y < k; ++y)
                        if (!restricted.delta()(s, x, y).is_zero()) rhs += restricted.delta()(s, x, y) * h(p, x) * h(q, y);
                if (!(dot(f, prod, bb[s]) == rhs))
                    bad = "f=" + std::to_string(p) + " g=" + std::to_string(q) + " b=" + std::to_string(s);
            }
        }
    r.add("local_product_dual_to_restriction", bad.empty(), bad);
    return r;
}

bool submodule_check(const LSpace& ls, const Subspace& b)
{
    const Subspace lb = l_of_subcoalgebra(ls, b);
    const Field f = ls.base().field();
    for (std::size_t s = 0; s < ls.kkt().dim(); ++s) {
        const Vector e = unit_vector(f, ls.kkt().dim(), s);
        for (const auto& l : lb.basis_vectors())
            if (!lb.contains(ls.module_action(l, e))) return false;
    }
    return true;
}

}  // namespace kktco
