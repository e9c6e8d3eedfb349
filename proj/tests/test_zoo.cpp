#include <doctest.h>

#include <map>
#include <set>

#include "common.hpp"

using namespace kktco;
using testing::zoo;

namespace {
const Field Q = Field::rational();
}  // namespace

TEST_CASE("generated tables match the reference tables")
{
    for (const auto& zc : testing::small_zoo()) {
        CAPTURE(zc.spec);
        CHECK(oracle::same(zc.reference(), zoo(zc.spec).product()));
    }
    CHECK(zoo("spin-factor").dim() == 3);
    CHECK(zoo("symmetric-matrices").dim() == 3);
    CHECK(zoo("matrix-jordan").dim() == 4);
    CHECK(zoo("spin-factor:3", Field::prime(7)).field() == Field::prime(7));
    CHECK(is_jordan(zoo("matrix-jordan:2", Field::prime(5))));
}

TEST_CASE("zoo specs")
{
    const ZooSpec s = parse_zoo_spec("spin-factor");
    CHECK(s.params == std::vector<std::size_t>{2});
    CHECK(to_string(s) == "spin-factor:2");
    CHECK(to_string(parse_zoo_spec("field")) == "field");
    CHECK(zoo_names().size() == 5);
    CHECK_THROWS_AS(zoo("quaternions"), std::invalid_argument);
    CHECK_THROWS_AS(zoo("spin-factor:0"), std::invalid_argument);
    CHECK_THROWS_AS(zoo("spin-factor:x"), std::invalid_argument);
    CHECK_THROWS_AS(zoo("spin-factor:"), std::invalid_argument);
    CHECK_THROWS_AS(zoo("field:2"), std::invalid_argument);
}

TEST_CASE("random subspaces")
{
    const Field f5 = Field::prime(5);
    CHECK(random_subspace(3, 5, 2, Q) == random_subspace(3, 5, 2, Q));
    for (std::size_t d = 0; d <= 4; ++d) CHECK(random_subspace(9, 4, d, f5).dim() == d);
    CHECK_THROWS_AS(random_subspace(0, 2, 3, Q), std::invalid_argument);

    std::set<std::string> seen;
    for (std::uint64_t seed = 0; seed < 1000; ++seed) seen.insert(to_string(random_subspace(seed, 4, 2, f5).basis().flatten()));
    CHECK(seen.size() > 1);
    CHECK(seen.size() <= gaussian_binomial(5, 4, 2));

    // six lines in F5^2, 6000 draws
    ScalarSampler sampler(1, f5);
    std::map<std::string, int> counts;
    for (int i = 0; i < 6000; ++i) ++counts[to_string(random_subspace(sampler, 2, 1).basis().flatten())];
    CHECK(counts.size() == 6);
    for (const auto& [line, c] : counts) {
        CAPTURE(line);
        CHECK(c > 850);
        CHECK(c < 1150);
    }
}

TEST_CASE("sampler")
{
    ScalarSampler a(5, Q), b(5, Q);
    for (int i = 0; i < 50; ++i) {
        const Scalar x = a.next();
        CHECK(x == b.next());
        CHECK(x.to_string().find('/') == std::string::npos);
    }
    ScalarSampler c(5, Field::prime(7));
    for (int i = 0; i < 50; ++i) CHECK(c.below(3) < 3);
    CHECK_THROWS_AS(c.below(0), std::invalid_argument);
}

TEST_CASE("random tensors")
{
    CHECK(random_tensor(4, 3, Q) == random_tensor(4, 3, Q));
    CHECK_FALSE(random_tensor(4, 3, Q) == random_tensor(5, 3, Q));
    CHECK(random_tensor(4, 3, Field::prime(11)).field() == Field::prime(11));
}
