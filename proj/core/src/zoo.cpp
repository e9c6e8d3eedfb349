#include "kktco/zoo.hpp"

#include <charconv>
#include <limits>
#include <functional>

namespace kktco {

namespace {

constexpr std::size_t max_param = 9;

using MatrixUnit = std::vector<std::vector<long long>>;

// Builds the Jordan product (xy + yx)/2 on a basis of n x n integer matrices,
// reading coordinates back with coord().
FiniteAlgebra symmetrized(Field f, std::size_t n, const std::vector<MatrixUnit>& basis, std::vector<std::string> names,
                          const std::function<std::vector<long long>(const MatrixUnit&)>& coord)
{
    const std::size_t d = basis.size();
    const Scalar half = Scalar::from_fraction(f, 1, 2);
    Tensor3 product(f, d);
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) {
            MatrixUnit m(n, std::vector<long long>(n, 0));
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    for (std::size_t k = 0; k < n; ++k)
                        m[i][j] += basis[a][i][k] * basis[b][k][j] + basis[b][i][k] * basis[a][k][j];
            const auto c = coord(m);
            for (std::size_t k = 0; k < d; ++k)
                if (c[k] != 0) product(a, b, k) = half * Scalar::from_int(f, c[k]);
        }
    return FiniteAlgebra(f, std::move(names), std::move(product));
}

MatrixUnit unit(std::size_t n, std::size_t i, std::size_t j)
{
    MatrixUnit m(n, std::vector<long long>(n, 0));
    m[i][j] = 1;
    return m;
}

std::string index_name(const char* stem, std::size_t i, std::size_t j)
{
    return stem + std::to_string(i + 1) + std::to_string(j + 1);
}

FiniteAlgebra symmetric_matrices(Field f, std::size_t n)
{
    std::vector<MatrixUnit> basis;
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) {
        basis.push_back(unit(n, i, i));
        names.push_back(index_name("E", i, i));
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            MatrixUnit m = unit(n, i, j);
            m[j][i] = 1;
            basis.push_back(m);
            names.push_back(index_name("S", i, j));
        }
    return symmetrized(f, n, basis, std::move(names), [n](const MatrixUnit& m) {
        std::vector<long long> c;
        for (std::size_t i = 0; i < n; ++i) c.push_back(m[i][i]);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) c.push_back(m[i][j]);
        return c;
    });
}

FiniteAlgebra matrix_jordan(Field f, std::size_t n)
{
    std::vector<MatrixUnit> basis;
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            basis.push_back(unit(n, i, j));
            names.push_back(index_name("E", i, j));
        }
    return symmetrized(f, n, basis, std::move(names), [](const MatrixUnit& m) {
        std::vector<long long> c;
        for (const auto& row : m) c.insert(c.end(), row.begin(), row.end());
        return c;
    });
}

FiniteAlgebra spin_factor(Field f, std::size_t n)
{
    std::vector<std::string> names{"1"};
    for (std::size_t i = 1; i <= n; ++i) names.push_back("v" + std::to_string(i));
    Tensor3 product(f, n + 1);
    const Scalar one = Scalar::one(f);
    for (std::size_t i = 0; i <= n; ++i) {
        product(0, i, i) = one;
        product(i, 0, i) = one;
    }
    for (std::size_t i = 1; i <= n; ++i) product(i, i, 0) = one;
    return FiniteAlgebra(f, std::move(names), std::move(product));
}

std::size_t single_param(const ZooSpec& spec)
{
    if (spec.params.size() != 1) throw std::invalid_argument(spec.name + " takes exactly one parameter");
    const std::size_t n = spec.params[0];
    if (n < 1 || n > max_param)
        throw std::invalid_argument(spec.name + ": parameter must be between 1 and " + std::to_string(max_param));
    return n;
}

}  // namespace

const std::vector<std::string>& zoo_names()
{
    static const std::vector<std::string> names{"field", "dual-numbers", "spin-factor", "symmetric-matrices",
                                                "matrix-jordan"};
    return names;
}

ZooSpec parse_zoo_spec(const std::string& text, Field f)
{
    ZooSpec spec;
    spec.field = f;
    const auto colon = text.find(':');
    spec.name = text.substr(0, colon);
    if (colon != std::string::npos) {
        const std::string p = text.substr(colon + 1);
        std::size_t value = 0;
        auto [ptr, ec] = std::from_chars(p.data(), p.data() + p.size(), value);
        if (p.empty() || ec != std::errc() || ptr != p.data() + p.size())
            throw std::invalid_argument("bad zoo parameter: " + p);
        spec.params.push_back(value);
    } else if (spec.name == "spin-factor" || spec.name == "symmetric-matrices" || spec.name == "matrix-jordan") {
        spec.params.push_back(2);
    }
    return spec;
}

std::string to_string(const ZooSpec& spec)
{
    std::string out = spec.name;
    for (auto p : spec.params) out += ":" + std::to_string(p);
    return out;
}

FiniteAlgebra generate(const ZooSpec& spec)
{
    const Field f = spec.field;
    if (spec.name == "field" || spec.name == "dual-numbers") {
        if (!spec.params.empty()) throw std::invalid_argument(spec.name + " takes no parameter");
        if (spec.name == "field") {
            Tensor3 product(f, 1);
            product(0, 0, 0) = Scalar::one(f);
            return FiniteAlgebra(f, {"e"}, std::move(product));
        }
        Tensor3 product(f, 2);
        product(0, 0, 0) = Scalar::one(f);
        product(0, 1, 1) = Scalar::one(f);
        product(1, 0, 1) = Scalar::one(f);
        return FiniteAlgebra(f, {"u", "x"}, std::move(product));
    }
    if (spec.name == "spin-factor") return spin_factor(f, single_param(spec));
    if (spec.name == "symmetric-matrices") return symmetric_matrices(f, single_param(spec));
    if (spec.name == "matrix-jordan") return matrix_jordan(f, single_param(spec));
    throw std::invalid_argument("unknown zoo algebra: " + spec.name);
}

ScalarSampler::ScalarSampler(std::uint64_t seed, Field f, long long rational_range)
    : rng_(seed), field_(f), range_(rational_range)
{
}

std::uint64_t ScalarSampler::below(std::uint64_t bound)
{
    if (bound == 0) throw std::invalid_argument("empty sampling range");
    // Rejection keeps the draw exactly uniform.
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do x = rng_();
    while (x >= limit);
    return x % bound;
}

Scalar ScalarSampler::next()
{
    if (field_.is_rational())
        return Scalar::from_int(field_, static_cast<long long>(below(2 * range_ + 1)) - range_);
    return Scalar::from_int(field_, static_cast<long long>(below(field_.characteristic())));
}

Vector ScalarSampler::vector(std::size_t n)
{
    Vector v;
    v.reserve(n);
    for (std::size_t i = 0; i < n; ++i) v.push_back(next());
    return v;
}

Subspace random_subspace(ScalarSampler& sampler, std::size_t ambient_dim, std::size_t dim)
{
    if (dim > ambient_dim) throw std::invalid_argument("random_subspace: dim exceeds ambient dimension");
    while (true) {
        std::vector<Vector> rows;
        for (std::size_t i = 0; i < dim; ++i) rows.push_back(sampler.vector(ambient_dim));
        Subspace s = Subspace::span(sampler.field(), ambient_dim, rows);
        if (s.dim() == dim) return s;
    }
}

Subspace random_subspace(std::uint64_t seed, std::size_t ambient_dim, std::size_t dim, Field f)
{
    ScalarSampler sampler(seed, f);
    return random_subspace(sampler, ambient_dim, dim);
}

Tensor3 random_tensor(std::uint64_t seed, std::size_t n, Field f)
{
    ScalarSampler sampler(seed, f);
    Tensor3 t(f, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) t(i, j, k) = sampler.next();
    return t;
}

}  // namespace kktco
