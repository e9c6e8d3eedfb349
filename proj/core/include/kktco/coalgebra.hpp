#ifndef KKTCO_COALGEBRA_HPP
#define KKTCO_COALGEBRA_HPP

#include "kktco/algebra.hpp"
#include "kktco/report.hpp"

namespace kktco {

/// Coalgebra with Delta(e_a) = sum_{i,j} delta(a, i, j) e_i (x) e_j.
///
/// Functionals on A are coordinate vectors in the dual basis e^i, so that
/// <f, a> = dot(f, a).
class FiniteCoalgebra {
public:
    FiniteCoalgebra() = default;
    FiniteCoalgebra(Field f, std::vector<std::string> basis_names, Tensor3 delta);

    Field field() const { return field_; }
    std::size_t dim() const { return names_.size(); }
    const std::vector<std::string>& basis_names() const { return names_; }
    const Tensor3& delta() const { return delta_; }
    Vector basis_vector(std::size_t i) const { return unit_vector(field_, dim(), i); }

    /// Delta(x) flattened to n*n coordinates at i*n + j.
    Vector comultiply(const Vector& x) const;

    friend bool operator==(const FiniteCoalgebra&, const FiniteCoalgebra&) = default;

private:
    Field field_;
    std::vector<std::string> names_;
    Tensor3 delta_;
};

/// A* with e^i e^j = sum_k delta(k, i, j) e^k.
FiniteAlgebra dual_algebra(const FiniteCoalgebra& c);
/// Inverse transpose: delta(k, i, j) = product(i, j, k).
FiniteCoalgebra dualize_algebra(const FiniteAlgebra& a);

/// The counit as a functional, i.e. the unity of the dual algebra.
std::optional<Vector> counit(const FiniteCoalgebra& c);

/// f . a = sum a_(1) <f, a_(2)>
Vector act_left(const FiniteCoalgebra& c, const Vector& f, const Vector& a);
/// a . f = sum <f, a_(1)> a_(2)
Vector act_right(const FiniteCoalgebra& c, const Vector& a, const Vector& f);

/// { f in A* : f . s = 0 }
Subspace annihilator(const FiniteCoalgebra& c, const Subspace& s);
/// s-perp in A* under the canonical pairing.
Subspace perp(const Subspace& s);

/// Least subspace containing seed and stable under both dual-basis actions.
Subspace generated_subcoalgebra(const FiniteCoalgebra& c, const Subspace& seed);

bool is_subcoalgebra(const FiniteCoalgebra& c, const Subspace& b);
/// Delta(v) in V(x)A + A(x)V, plus the counit vanishing on v when a counit exists.
bool is_coideal(const FiniteCoalgebra& c, const Subspace& v);

/// Checks subcoalgebra <=> perp is an ideal, and coideal <=> perp is a
/// subalgebra containing the unity.
Report duality_check(const FiniteCoalgebra& c, const Subspace& s);

/// <B, Delta|_B> in the coordinates of the canonical basis of b.
FiniteCoalgebra restrict_to_subcoalgebra(const FiniteCoalgebra& c, const Subspace& b);

}  // namespace kktco

#endif  // KKTCO_COALGEBRA_HPP
