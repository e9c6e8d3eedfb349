#include <doctest.h>

#include "common.hpp"
#include "kktco/correspondence.hpp"

using namespace kktco;
using testing::span_of;
using testing::zoo_dual;

namespace {
const Field Q = Field::rational();
}  // namespace

TEST_CASE("U")
{
    const LatticeContext f = make_context(zoo_dual("field"));
    CHECK(f.u == Subspace::full(Q, 3));
    CHECK(f.u_perp == Subspace::zero(Q, 3));
    CHECK(u_report(f).passed());
    const LatticeContext d = make_context(zoo_dual("dual-numbers"));
    CHECK(d.u == span_of(Q, 6, {{1, 0, 0, 0, 0, 0}, {0, 0, 1, 0, 0, 0}, {0, 0, 0, 0, 1, 0}}));
    CHECK(d.u_perp.dim() == 3);
    CHECK(u_report(d).passed());
    for (const auto& zc : testing::small_zoo()) {
        CAPTURE(zc.spec);
        const LatticeContext c = make_context(zoo_dual(zc.spec));
        CHECK(u_report(c).passed());
        CHECK(perp_in_space(c, c.u) == c.u_perp);
        CHECK(perp_in_dual(c, c.u_perp) == c.u);
    }
    CHECK_THROWS_AS(make_context(FiniteCoalgebra(Q, default_names(1), Tensor3(Q, 1))), UnityRequired);
}

TEST_CASE("lifts of subalgebras and ideals of A*")
{
    const LatticeContext d = make_context(zoo_dual("dual-numbers"));
    const Subspace unit = span_of(Q, 2, {{1, 0}});
    const Subspace l1 = L1_alg(d, unit);
    CHECK(l1.dim() == 3);
    CHECK(l1 == L2_alg(d, unit));
    CHECK(L2_alg(d, Subspace::full(Q, 2)) == Subspace::full(Q, 6));
    CHECK(is_lie_subalgebra(d.ls.kkt().lie(), l1));
    const Subspace rad = span_of(Q, 2, {{0, 1}});
    CHECK(I1_alg(d, rad).dim() == 3);
    CHECK(is_lie_ideal(d.ls.kkt().lie(), I1_alg(d, rad)));
    CHECK(I1_alg(d, rad) == I2_alg(d, rad));
    CHECK_THROWS_AS(L1_alg(d, rad), std::invalid_argument);
    CHECK_THROWS_AS(I1_alg(d, unit), std::invalid_argument);

    const LatticeContext s = make_context(zoo_dual("spin-factor:2"));
    const Subspace full = Subspace::full(Q, 3);
    CHECK(L1_alg(s, full) == Subspace::full(Q, 10));
    CHECK(d_of(s, full).dim() == 1);
    CHECK(p_of(s, Subspace::zero(Q, 3)).dim() == 0);
}

TEST_CASE("lifts of coideals and subcoalgebras of A")
{
    const LatticeContext d = make_context(zoo_dual("dual-numbers"));
    const Subspace v = span_of(Q, 2, {{0, 1}});
    CHECK(L1_star(d, v).dim() == 3);
    CHECK(L1_star(d, v) == L2_star(d, v));
    CHECK(L1_star(d, Subspace::zero(Q, 2)) == Subspace::zero(Q, 6));
    CHECK(a_part(d, L1_star(d, v)) == v);
    const Subspace b = span_of(Q, 2, {{1, 0}});
    CHECK(I1_star(d, b).dim() == 3);
    CHECK(I1_star(d, Subspace::full(Q, 2)) == Subspace::full(Q, 6));
    CHECK(I1_star(d, Subspace::zero(Q, 2)) == Subspace::zero(Q, 6));
    CHECK(lift(d, parse_lift("I1*"), b) == I1_star(d, b));
    CHECK(lift(d, parse_lift("L2*"), v) == L2_star(d, v));
    CHECK_THROWS_AS(parse_lift("L3*"), std::invalid_argument);
    CHECK_THROWS_AS(L1_star(d, b), std::invalid_argument);
    CHECK_THROWS_AS(I1_star(d, v), std::invalid_argument);
    CHECK_THROWS_AS(I1_star(d, Subspace::zero(Q, 3)), DimensionMismatch);

    const LatticeContext s = make_context(zoo_dual("spin-factor:2"));
    CHECK(d_star_of(s, Subspace::zero(Q, 3)).dim() == 0);
    CHECK(d_star_of(s, Subspace::full(Q, 3)).dim() == 1);
    CHECK(p_star_of(s, Subspace::full(Q, 3)).dim() == 1);
    CHECK(I2_star(s, Subspace::full(Q, 3)) == Subspace::full(Q, 10));
}

TEST_CASE("forward correspondence")
{
    const LatticeContext d = make_context(zoo_dual("dual-numbers"));
    const Subspace v = span_of(Q, 2, {{0, 1}});
    const Subspace b = span_of(Q, 2, {{1, 0}});
    const Report r2 = theorem2_verify(d, v);
    CHECK_MESSAGE(r2.passed(), r2.to_text());
    const Report r3 = theorem3_verify(d, b);
    CHECK_MESSAGE(r3.passed(), r3.to_text());
    CHECK(perp_in_dual(d, L1_star(d, v)) == L2_alg(d, perp(v)));
    CHECK(perp_in_dual(d, I1_star(d, b)) == I2_alg(d, perp(b)));

    const LatticeContext s = make_context(zoo_dual("spin-factor:2"));
    CHECK(theorem2_verify(s, Subspace::zero(Q, 3)).passed());
    CHECK(theorem3_verify(s, Subspace::full(Q, 3)).passed());
}

TEST_CASE("converse correspondence")
{
    const LatticeContext d = make_context(zoo_dual("dual-numbers"));
    const Subspace v = span_of(Q, 2, {{0, 1}});
    CHECK(theorem2_reverse(d, L1_star(d, v)).passed());
    CHECK(theorem2_reverse(d, L2_star(d, v)).passed());
    const Subspace b = span_of(Q, 2, {{1, 0}});
    CHECK(theorem3_reverse(d, I1_star(d, b)).passed());
    CHECK(theorem3_reverse(d, I2_star(d, b)).passed());
    // not a coideal of L(A): preconditions fail, nothing else is claimed
    const Report bad = theorem2_reverse(d, span_of(Q, 6, {{1, 0, 0, 0, 0, 0}}));
    CHECK_FALSE(bad.passed());
    CHECK(bad.find("V_coideal") == nullptr);
}

TEST_CASE("every coideal of a spin factor over F5")
{
    const Field f = Field::prime(5);
    const LatticeContext s = make_context(zoo_dual("spin-factor:1", f));
    std::size_t coideals = 0, subcoalgebras = 0;
    for_each_subspace(f, 2, 0, 2, [&](const Subspace& v) {
        if (is_coideal(s.ls.base(), v)) {
            ++coideals;
            CHECK(L2_star(s, v).contains(L1_star(s, v)));
            CHECK(theorem2_verify(s, v).passed());
        }
        if (is_subcoalgebra(s.ls.base(), v)) {
            ++subcoalgebras;
            CHECK(I2_star(s, v).contains(I1_star(s, v)));
            CHECK(theorem3_verify(s, v).passed());
        }
    });
    CHECK(coideals == 2);
    CHECK(subcoalgebras == 4);
}

TEST_CASE("random samples")
{
    const FiniteCoalgebra s = zoo_dual("spin-factor:2");
    ScalarSampler a(11, Q), b(11, Q);
    for (int i = 0; i < 10; ++i) {
        const Subspace x = random_subcoalgebra(s, a);
        CHECK(is_subcoalgebra(s, x));
        CHECK(x == random_subcoalgebra(s, b));
        CHECK(is_coideal(s, random_coideal(s, a)));
        random_coideal(s, b);
    }
}
