#include <doctest.h>

#include "common.hpp"

using namespace kktco;
using testing::ints;
using testing::zoo;

namespace {
const Field Q = Field::rational();

FiniteAlgebra anticommuting_pair()
{
    Tensor3 t(Q, 2);
    t(0, 1, 0) = Scalar::one(Q);
    t(1, 0, 0) = -Scalar::one(Q);
    return FiniteAlgebra(Q, default_names(2), t);
}
}  // namespace

TEST_CASE("multiplication tables")
{
    const auto k = zoo("field"), d = zoo("dual-numbers"), s = zoo("spin-factor:2");
    CHECK(multiply(k, ints(Q, {1}), ints(Q, {1})) == ints(Q, {1}));
    CHECK(multiply(d, ints(Q, {0, 1}), ints(Q, {0, 1})) == ints(Q, {0, 0}));
    CHECK(multiply(s, ints(Q, {0, 1, 0}), ints(Q, {0, 0, 1})) == ints(Q, {0, 0, 0}));
    CHECK(multiply(s, ints(Q, {0, 1, 0}), ints(Q, {0, 1, 0})) == ints(Q, {1, 0, 0}));
    CHECK(s.basis_names() == std::vector<std::string>{"1", "v1", "v2"});
}

TEST_CASE("right multiplication")
{
    const auto d = zoo("dual-numbers");
    CHECK(right_mult(d, ints(Q, {1, 0})) == Matrix::identity(Q, 2));
    CHECK(right_mult(d, ints(Q, {0, 0})).is_zero());
    CHECK(right_mult(d, ints(Q, {0, 1})) == Matrix::from_ints(Q, {{0, 1}, {0, 0}}));
}

TEST_CASE("unity")
{
    CHECK(find_unity(zoo("dual-numbers")) == ints(Q, {1, 0}));
    CHECK(find_unity(zoo("spin-factor:2")) == ints(Q, {1, 0, 0}));
    CHECK_FALSE(find_unity(FiniteAlgebra(Q, default_names(1), Tensor3(Q, 1))).has_value());
    CHECK(find_unity(zoo("symmetric-matrices:2")) == ints(Q, {1, 1, 0}));
}

TEST_CASE("commutator operators")
{
    const auto s = zoo("spin-factor:2"), d = zoo("dual-numbers");
    CHECK(commutator_bracket(s, ints(Q, {0, 1, 0}), ints(Q, {0, 1, 0})).is_zero());
    CHECK(commutator_bracket(d, ints(Q, {1, 0}), ints(Q, {0, 1})).is_zero());
    const Matrix m = commutator_bracket(s, ints(Q, {0, 1, 0}), ints(Q, {0, 0, 1}));
    CHECK(m == Matrix::from_ints(Q, {{0, 0, 0}, {0, 0, 1}, {0, -1, 0}}));
    CHECK((m + m.transpose()).is_zero());
}

TEST_CASE("classification")
{
    CHECK(is_jordan(zoo("field")));
    CHECK(is_jordan(zoo("dual-numbers")));
    CHECK_FALSE(is_commutative(anticommuting_pair()));
    CHECK_FALSE(is_jordan(anticommuting_pair()));
    CHECK(is_lie(anticommuting_pair()) == oracle::lie(oracle::from_tensor(anticommuting_pair().product())));
    for (const auto& zc : testing::small_zoo()) {
        CAPTURE(zc.spec);
        const auto j = zoo(zc.spec);
        CHECK(is_jordan(j));
        CHECK(is_commutative(j));
        CHECK(find_unity(j).has_value());
    }
    // a commutative non-Jordan algebra: e*e = f, e*f = f*e = e, f*f = 0
    Tensor3 t(Q, 2);
    t(0, 0, 1) = Scalar::one(Q);
    t(0, 1, 0) = t(1, 0, 0) = Scalar::one(Q);
    const FiniteAlgebra bad(Q, default_names(2), t);
    CHECK(is_commutative(bad));
    CHECK(is_jordan(bad) == oracle::jordan(oracle::from_tensor(t)));
}

TEST_CASE("associator")
{
    const auto d = zoo("dual-numbers"), s = zoo("spin-factor:2");
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t k = 0; k < 2; ++k)
                CHECK(is_zero(associator(d, d.basis_vector(i), d.basis_vector(j), d.basis_vector(k))));
    CHECK(is_zero(associator(s, ints(Q, {0, 0, 0}), ints(Q, {0, 1, 0}), ints(Q, {0, 0, 1}))));
    CHECK(associator(s, ints(Q, {0, 1, 0}), ints(Q, {0, 1, 0}), ints(Q, {0, 0, 1})) == ints(Q, {0, 0, 1}));
}

TEST_CASE("derivations")
{
    CHECK(derivations(zoo("field")).dim() == 0);
    const auto dd = derivations(zoo("dual-numbers"));
    REQUIRE(dd.dim() == 1);
    CHECK(dd.basis_operator(0) == Matrix::from_ints(Q, {{0, 0}, {0, 1}}));
    const auto ds = derivations(zoo("spin-factor:2"));
    REQUIRE(ds.dim() == 1);
    CHECK(ds.contains(Matrix::from_ints(Q, {{0, 0, 0}, {0, 0, 1}, {0, -1, 0}})));
    for (const auto& zc : testing::small_zoo()) {
        CAPTURE(zc.spec);
        CHECK(derivations(zoo(zc.spec)).dim() == oracle::derivation_dim(zc.reference()));
    }
}

TEST_CASE("inner derivations")
{
    CHECK(inner_derivations(zoo("field")).dim() == 0);
    CHECK(inner_derivations(zoo("dual-numbers")).dim() == 0);
    const auto s = zoo("spin-factor:2");
    const auto is = inner_derivations(s);
    CHECK(is.dim() == 1);
    CHECK(derivations(s).contains(is));
    REQUIRE(is.generators().size() == 3);
    CHECK(is.generators()[2].left == 1);
    CHECK(is.generators()[2].right == 2);
    for (const auto& zc : testing::small_zoo()) {
        CAPTURE(zc.spec);
        CHECK(inner_derivations(zoo(zc.spec)).dim() == oracle::intder_dim(zc.reference()));
    }
    const auto terms = is.decompose(commutator_bracket(s, ints(Q, {0, 1, 0}), ints(Q, {0, 0, 1})));
    Matrix sum(Q, 3, 3);
    for (const auto& t : terms) sum += t.coefficient * is.generators()[t.generator].matrix;
    CHECK(sum == commutator_bracket(s, ints(Q, {0, 1, 0}), ints(Q, {0, 0, 1})));
}

TEST_CASE("identities one and two")
{
    for (const char* spec : {"field", "dual-numbers", "spin-factor:2"}) {
        CAPTURE(spec);
        CHECK(eq1_check(zoo(spec)));
        CHECK(eq2_check(zoo(spec)));
    }
    // both fail on a non-Jordan commutative algebra, with witnesses
    Tensor3 t(Q, 2);
    t(0, 0, 1) = Scalar::one(Q);
    t(0, 1, 0) = t(1, 0, 0) = Scalar::one(Q);
    const FiniteAlgebra bad(Q, default_names(2), t);
    const auto ref = oracle::from_tensor(t);
    CHECK(eq1_check(bad) == oracle::eq1(ref));
    CHECK(eq2_check(bad) == oracle::eq2(ref));
}

TEST_CASE("ideals and subalgebras")
{
    const auto d = zoo("dual-numbers");
    CHECK(is_ideal(d, testing::span_of(Q, 2, {{0, 1}})));
    CHECK(is_subalgebra(d, testing::span_of(Q, 2, {{1, 0}})));
    CHECK_FALSE(is_ideal(d, testing::span_of(Q, 2, {{1, 0}})));
    CHECK(is_ideal(d, Subspace::zero(Q, 2)));
    CHECK(is_subalgebra(d, Subspace::zero(Q, 2)));
    CHECK(generated_subalgebra(d, Subspace::zero(Q, 2), true) == testing::span_of(Q, 2, {{1, 0}}));
    CHECK(generated_subalgebra(zoo("spin-factor:2"), testing::span_of(Q, 3, {{0, 1, 0}}), false) ==
          testing::span_of(Q, 3, {{1, 0, 0}, {0, 1, 0}}));
}

TEST_CASE("change of basis")
{
    const auto d = zoo("dual-numbers");
    // basis u, 2x
    const FiniteAlgebra c = change_basis(d, Matrix::from_ints(Q, {{1, 0}, {0, 2}}));
    CHECK(multiply(c, ints(Q, {1, 0}), ints(Q, {0, 1})) == ints(Q, {0, 1}));
    CHECK(change_basis(d, Matrix::identity(Q, 2)).product() == d.product());
}
