#ifndef KKTCO_KKT_HPP
#define KKTCO_KKT_HPP

#include "kktco/algebra.hpp"

namespace kktco {

enum class KKTPart { A, JPrime, IntDer, ABar };

/// L(J) = J + (J' + IntDer(J)) + J-bar for a unital Jordan algebra J.
///
/// Lie coordinates are laid out as [J | J' | IntDer | J-bar]; the R-part
/// (J' then the canonical IntDer basis) is indexed from 0 to r - 1 where r is
/// n + dim IntDer.
class KKTAlgebra {
public:
    const FiniteAlgebra& source() const { return source_; }
    const FiniteAlgebra& lie() const { return lie_; }
    const OperatorSpace& intder() const { return intder_; }
    const Vector& unity() const { return unity_; }

    std::size_t n() const { return source_.dim(); }
    std::size_t r_dim() const { return n() + intder_.dim(); }
    std::size_t dim() const { return 2 * n() + r_dim(); }
    std::size_t part_offset(KKTPart p) const;
    std::size_t part_dim(KKTPart p) const;
    /// part_dim x dim matrix whose rows are the images of the part basis.
    Matrix part_embedding(KKTPart p) const;

    /// Operator on J of the R-part element with the given R coordinates.
    Matrix r_operator(const Vector& r_coords) const;
    /// R coordinates of an operator; throws std::domain_error outside R(J).
    Vector r_coordinates(const Matrix& op) const;

    /// Bracket evaluated from the defining formula (not the stored table).
    Vector bracket(const Vector& x, const Vector& y) const;

    friend KKTAlgebra build_kkt(const FiniteAlgebra& j);

private:
    FiniteAlgebra source_;
    FiniteAlgebra lie_;
    OperatorSpace intder_;
    Vector unity_;
    std::vector<Matrix> r_basis_;
    SpanSolver r_solver_;
};

/// Throws UnityRequired when j has no unity and IdentityViolation (with the
/// offending basis tuple) when j is not Jordan or the bracket is not Lie.
KKTAlgebra build_kkt(const FiniteAlgebra& j);

/// a + c' + d + b-bar -> b - c' + d + a-bar
Vector epsilon(const KKTAlgebra& k, const Vector& l);
Matrix epsilon_matrix(const KKTAlgebra& k);

bool check_jacobi(const KKTAlgebra& k);
/// [a', d] = (ad)' for basis a and IntDer basis d, and [IntDer, IntDer] in IntDer.
bool check_r_closure(const KKTAlgebra& k);

/// K(x, y) = trace(ad x ad y) on basis vectors.
Matrix killing_form(const FiniteAlgebra& lie);
std::size_t killing_rank(const FiniteAlgebra& lie);
/// { x : [x, y] = 0 for all y }
Subspace center(const FiniteAlgebra& lie);
/// Smallest subspace containing s and closed under the bracket with all of lie.
Subspace generated_ideal(const FiniteAlgebra& lie, const Subspace& s);

}  // namespace kktco

#endif  // KKTCO_KKT_HPP
