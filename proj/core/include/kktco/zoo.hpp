#ifndef KKTCO_ZOO_HPP
#define KKTCO_ZOO_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "kktco/algebra.hpp"

namespace kktco {

/// Names a generated test algebra: field, dual-numbers, spin-factor(n),
/// symmetric-matrices(n), matrix-jordan(n).
struct ZooSpec {
    std::string name;
    std::vector<std::size_t> params;
    Field field = Field::rational();
};

/// Parses "<name>" or "<name>:<param>". Parameterised families default to 2.
ZooSpec parse_zoo_spec(const std::string& text, Field f = Field::rational());
std::string to_string(const ZooSpec& spec);

/// Throws std::invalid_argument for unknown names or bad parameters.
FiniteAlgebra generate(const ZooSpec& spec);

/// Names accepted by generate().
const std::vector<std::string>& zoo_names();

/// Seeded source of field elements. Draws are reproducible across platforms:
/// mt19937_64 output is fixed by the standard and reduction is done here.
class ScalarSampler {
public:
    ScalarSampler(std::uint64_t seed, Field f, long long rational_range = 4);

    Field field() const { return field_; }
    /// Uniform in [0, bound).
    std::uint64_t below(std::uint64_t bound);
    /// Uniform residue over F_p; over Q an integer in [-range, range].
    Scalar next();
    Vector vector(std::size_t n);

private:
    std::mt19937_64 rng_;
    Field field_;
    long long range_;
};

/// A dim-dimensional subspace of k^ambient_dim, fixed by the seed. Over a
/// prime field every subspace of that dimension is equally likely.
Subspace random_subspace(std::uint64_t seed, std::size_t ambient_dim, std::size_t dim, Field f);
/// Same, drawing from an existing sampler.
Subspace random_subspace(ScalarSampler& sampler, std::size_t ambient_dim, std::size_t dim);

/// An n x n x n tensor of sampled entries.
Tensor3 random_tensor(std::uint64_t seed, std::size_t n, Field f);

}  // namespace kktco

#endif  // KKTCO_ZOO_HPP
