#ifndef KKTCO_TESTS_COMMON_HPP
#define KKTCO_TESTS_COMMON_HPP

#include <string>
#include <vector>

#include "kktco/coalgebra.hpp"
#include "kktco/zoo.hpp"
#include "oracle.hpp"

namespace testing {

struct ZooCase {
    std::string spec;
    oracle::Table (*reference)();
};

/// Every zoo algebra of dimension at most 6, with its reference table.
inline const std::vector<ZooCase>& small_zoo()
{
    static const std::vector<ZooCase> cases = {
        {"field", [] { return oracle::field(); }},
        {"dual-numbers", [] { return oracle::dual_numbers(); }},
        {"spin-factor:1", [] { return oracle::spin_factor(1); }},
        {"spin-factor:2", [] { return oracle::spin_factor(2); }},
        {"spin-factor:3", [] { return oracle::spin_factor(3); }},
        {"spin-factor:4", [] { return oracle::spin_factor(4); }},
        {"spin-factor:5", [] { return oracle::spin_factor(5); }},
        {"symmetric-matrices:2", [] { return oracle::symmetric_matrices(2); }},
        {"symmetric-matrices:3", [] { return oracle::symmetric_matrices(3); }},
        {"matrix-jordan:2", [] { return oracle::matrix_jordan(2); }},
    };
    return cases;
}

inline kktco::FiniteAlgebra zoo(const std::string& spec, kktco::Field f = kktco::Field::rational())
{
    return kktco::generate(kktco::parse_zoo_spec(spec, f));
}

/// A = J* as a coalgebra.
inline kktco::FiniteCoalgebra zoo_dual(const std::string& spec, kktco::Field f = kktco::Field::rational())
{
    return kktco::dualize_algebra(zoo(spec, f));
}

inline kktco::Vector ints(kktco::Field f, std::initializer_list<long long> v) { return kktco::vector_from_ints(f, v); }

inline kktco::Subspace span_of(kktco::Field f, std::size_t n, std::vector<std::initializer_list<long long>> rows)
{
    std::vector<kktco::Vector> vs;
    for (auto r : rows) vs.push_back(kktco::vector_from_ints(f, r));
    return kktco::Subspace::span(f, n, vs);
}

}  // namespace testing

#endif  // KKTCO_TESTS_COMMON_HPP
