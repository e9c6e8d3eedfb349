#include <doctest.h>

#include "common.hpp"
#include "kktco/io.hpp"

using namespace kktco;
using testing::span_of;
using testing::zoo;
using testing::zoo_dual;

namespace {
const Field Q = Field::rational();

const char* dual_numbers_coalgebra = R"({
  "kind": "coalgebra",
  "field": "rational",
  "dim": 2,
  "basis_names": ["u","x"],
  "delta": [[[0,0,"1"]],[[0,1,"1"],[1,0,"1"]]]
}
)";

std::string replace(std::string text, const std::string& from, const std::string& to)
{
    const auto pos = text.find(from);
    REQUIRE(pos != std::string::npos);
    return text.replace(pos, from.size(), to);
}
}  // namespace

TEST_CASE("algebras round trip")
{
    for (const auto& zc : testing::small_zoo()) {
        CAPTURE(zc.spec);
        const FiniteAlgebra a = zoo(zc.spec);
        const std::string text = write_algebra(a);
        CHECK(read_algebra(text) == a);
        CHECK(write_algebra(read_algebra(text)) == text);
    }
    const FiniteAlgebra p = zoo("spin-factor:2", Field::prime(7));
    CHECK(read_algebra(write_algebra(p)) == p);
}

TEST_CASE("coalgebras round trip")
{
    CHECK(write_coalgebra(zoo_dual("dual-numbers")) == dual_numbers_coalgebra);
    CHECK(read_coalgebra(dual_numbers_coalgebra) == zoo_dual("dual-numbers"));
    const FiniteCoalgebra r(Q, default_names(3), random_tensor(2, 3, Q));
    CHECK(write_coalgebra(read_coalgebra(write_coalgebra(r))) == write_coalgebra(r));
    CHECK(std::holds_alternative<FiniteCoalgebra>(read_structure(dual_numbers_coalgebra)));
}

TEST_CASE("KKT algebras and Lie coalgebras")
{
    const KKTAlgebra k = build_kkt(zoo("spin-factor:2"));
    const std::string kt = write_kkt(k);
    CHECK(kt.find("\"metadata\"") != std::string::npos);
    const FiniteAlgebra back = read_algebra(kt);
    CHECK(back.product() == k.lie().product());
    CHECK(back.basis_names() == k.lie().basis_names());

    const LSpace ls = delta_L_global(zoo_dual("dual-numbers"));
    const std::string lt = write_lspace(ls);
    CHECK(lt.find("\"lie-coalgebra\"") != std::string::npos);
    CHECK(read_coalgebra(lt) == ls.coalgebra());
    CHECK_THROWS_AS(read_algebra(lt), ParseError);
}

TEST_CASE("subspaces")
{
    const Subspace s = span_of(Q, 3, {{1, 2, 0}, {0, 0, 1}});
    const std::string t = write_subspace(s);
    CHECK(read_subspace(t) == s);
    CHECK(write_subspace(read_subspace(t)) == t);
    CHECK(write_subspace(Subspace::zero(Q, 2)).find("\"basis\": []") != std::string::npos);
    CHECK(read_subspace(write_subspace(Subspace::zero(Q, 2))) == Subspace::zero(Q, 2));
    CHECK(parse_subspace_rows(R"([["2","4","0"]])", Q) == span_of(Q, 3, {{1, 2, 0}}));
    CHECK(parse_subspace_rows("[]", Q, 4) == Subspace::zero(Q, 4));
    CHECK_THROWS_AS(parse_subspace_rows(R"([["1","0"]])", Q, 3), ParseError);
    CHECK_THROWS_AS(parse_subspace_rows(R"([["1","0"],["1"]])", Q), ParseError);
    CHECK_THROWS_AS(parse_subspace_rows(R"([[1,0]])", Q), ParseError);
    // not in canonical form
    CHECK_THROWS_AS(read_subspace(replace(t, R"(["1","2","0"])", R"(["2","4","0"])")), ParseError);
}

TEST_CASE("rejections")
{
    const std::string c = dual_numbers_coalgebra;
    CHECK_THROWS_AS(read_coalgebra("{"), ParseError);
    CHECK_THROWS_AS(read_coalgebra("[]"), ParseError);
    CHECK_THROWS_AS(read_coalgebra(replace(c, "\"dim\": 2", "\"dim\": 2, \"extra\": 1")), ParseError);
    CHECK_THROWS_AS(read_coalgebra(replace(c, "\"dim\": 2", "\"dim\": 3")), ParseError);
    CHECK_THROWS_AS(read_coalgebra(replace(c, "[0,0,\"1\"]", "[0,0,\"2/2\"]")), ParseError);
    CHECK_THROWS_AS(read_coalgebra(replace(c, "[0,0,\"1\"]", "[0,0,\"0\"]")), ParseError);
    CHECK_THROWS_AS(read_coalgebra(replace(c, "[0,0,\"1\"]", "[0,0,\"1/0\"]")), ParseError);
    CHECK_THROWS_AS(read_coalgebra(replace(c, "[1,0,\"1\"]", "[0,1,\"1\"]")), ParseError);
    CHECK_THROWS_AS(read_coalgebra(replace(c, "[1,0,\"1\"]", "[1,2,\"1\"]")), ParseError);
    CHECK_THROWS_AS(read_coalgebra(replace(c, "\"rational\"", "\"prime:4\"")), ParseError);
    CHECK_THROWS_AS(read_coalgebra(replace(c, "\"coalgebra\"", "\"algebra\"")), ParseError);
    CHECK_THROWS_AS(read_coalgebra(replace(c, "[\"u\",\"x\"]", "[\"u\"]")), ParseError);
    CHECK_THROWS_AS(read_algebra(c), ParseError);

    const std::string a = write_algebra(zoo("field", Field::prime(5)));
    CHECK_NOTHROW(read_algebra(a));
    CHECK_THROWS_AS(read_algebra(replace(a, "[[[\"1\"]]]", "[[[\"5\"]]]")), ParseError);
    CHECK_THROWS_AS(read_algebra(replace(a, "[[[\"1\"]]]", "[[[\"-1\"]]]")), ParseError);
    CHECK_THROWS_AS(read_algebra(replace(a, "[[[\"1\"]]]", "[[\"1\"]]")), ParseError);
}
