#include <doctest.h>

#include "common.hpp"
#include "kktco/kkt.hpp"

using namespace kktco;
using testing::ints;
using testing::zoo;

namespace {
const Field Q = Field::rational();
}

TEST_CASE("KKT of the field is sl2")
{
    const KKTAlgebra k = build_kkt(zoo("field"));
    REQUIRE(k.dim() == 3);
    CHECK(k.lie().basis_names() == std::vector<std::string>{"e", "e'", "e~"});
    // e = 1, h = 1', f = 1-bar
    oracle::Table t(3);
    t.at(0, 1, 0) = 1;
    t.at(1, 0, 0) = -1;
    t.at(2, 1, 2) = -1;
    t.at(1, 2, 2) = 1;
    t.at(0, 2, 1) = 1;
    t.at(2, 0, 1) = -1;
    CHECK(oracle::same(t, k.lie().product()));
}

TEST_CASE("KKT dimensions and Jacobi")
{
    const KKTAlgebra d = build_kkt(zoo("dual-numbers"));
    CHECK(d.dim() == 6);
    CHECK(d.part_dim(KKTPart::IntDer) == 0);
    CHECK(oracle::lie(oracle::from_tensor(d.lie().product())));
    const KKTAlgebra s = build_kkt(zoo("spin-factor:2"));
    CHECK(s.dim() == 10);
    CHECK(s.part_dim(KKTPart::IntDer) == 1);
    CHECK(oracle::lie(oracle::from_tensor(s.lie().product())));
    for (const auto& zc : testing::small_zoo()) {
        CAPTURE(zc.spec);
        const KKTAlgebra k = build_kkt(zoo(zc.spec));
        CHECK(check_jacobi(k));
        CHECK(check_r_closure(k));
        CHECK(k.part_offset(KKTPart::ABar) == k.n() + k.r_dim());
    }
}

TEST_CASE("stored table agrees with the bracket formula")
{
    const KKTAlgebra k = build_kkt(zoo("spin-factor:2"));
    for (std::size_t i = 0; i < k.dim(); ++i)
        for (std::size_t j = 0; j < k.dim(); ++j)
            CHECK(multiply(k.lie(), k.lie().basis_vector(i), k.lie().basis_vector(j)) ==
                  k.bracket(k.lie().basis_vector(i), k.lie().basis_vector(j)));
}

TEST_CASE("R part")
{
    const FiniteAlgebra j = zoo("spin-factor:2");
    const KKTAlgebra k = build_kkt(j);
    // a' acts as right multiplication; J' meets IntDer trivially
    const Vector v1p = unit_vector(Q, k.r_dim(), 1);
    CHECK(k.r_operator(v1p) == right_mult(j, ints(Q, {0, 1, 0})));
    const Vector d = unit_vector(Q, k.r_dim(), 3);
    CHECK(k.r_operator(d)(0, 0).is_zero());
    CHECK(k.r_coordinates(k.r_operator(d)) == d);
    CHECK_THROWS_AS(k.r_coordinates(Matrix::from_ints(Q, {{0, 1, 0}, {0, 0, 0}, {0, 0, 0}})), std::domain_error);
}

TEST_CASE("epsilon")
{
    const KKTAlgebra f = build_kkt(zoo("field"));
    CHECK(epsilon(f, ints(Q, {0, 1, 0})) == ints(Q, {0, -1, 0}));
    CHECK(epsilon(f, ints(Q, {1, 0, 1})) == ints(Q, {1, 0, 1}));
    const KKTAlgebra s = build_kkt(zoo("spin-factor:2"));
    const Matrix e = epsilon_matrix(s);
    CHECK(e * e == Matrix::identity(Q, s.dim()));
    for (std::size_t i = 0; i < s.dim(); ++i) CHECK(epsilon(s, epsilon(s, s.lie().basis_vector(i))) == s.lie().basis_vector(i));
}

TEST_CASE("Killing form and center")
{
    const KKTAlgebra f = build_kkt(zoo("field"));
    CHECK(killing_rank(f.lie()) == 3);
    CHECK(center(f.lie()).dim() == 0);
    const FiniteAlgebra abelian(Q, default_names(2), Tensor3(Q, 2));
    CHECK(killing_rank(abelian) == 0);
    CHECK(center(abelian) == Subspace::full(Q, 2));
    const KKTAlgebra s = build_kkt(zoo("spin-factor:2"));
    CHECK(center(s.lie()).dim() == 0);
    for (const auto& zc : testing::small_zoo()) {
        CAPTURE(zc.spec);
        const KKTAlgebra k = build_kkt(zoo(zc.spec));
        const auto t = oracle::from_tensor(k.lie().product());
        CHECK(killing_rank(k.lie()) == oracle::killing_rank(t));
        CHECK(center(k.lie()).dim() == oracle::center_dim(t));
    }
}

TEST_CASE("ideal generation")
{
    const KKTAlgebra f = build_kkt(zoo("field"));
    CHECK(generated_ideal(f.lie(), testing::span_of(Q, 3, {{1, 0, 0}})) == Subspace::full(Q, 3));
    CHECK(generated_ideal(f.lie(), Subspace::zero(Q, 3)) == Subspace::zero(Q, 3));
}

TEST_CASE("preconditions")
{
    CHECK_THROWS_AS(build_kkt(FiniteAlgebra(Q, default_names(1), Tensor3(Q, 1))), UnityRequired);
    Tensor3 t(Q, 2);
    t(0, 0, 0) = Scalar::one(Q);
    t(0, 1, 1) = Scalar::one(Q);
    t(1, 0, 1) = Scalar::one(Q);
    t(1, 1, 1) = Scalar::one(Q);  // x^2 = x: unital, associative, commutative
    CHECK_NOTHROW(build_kkt(FiniteAlgebra(Q, default_names(2), t)));
    t(0, 1, 1) = Scalar::from_int(Q, 2);  // no longer commutative
    CHECK_THROWS_AS(build_kkt(FiniteAlgebra(Q, default_names(2), t)), std::domain_error);
}
