#ifndef KKTCO_LIECOALG_HPP
#define KKTCO_LIECOALG_HPP

#include <optional>

#include "kktco/coalgebra.hpp"
#include "kktco/kkt.hpp"
#include "kktco/report.hpp"

namespace kktco {

/// C = A* + A with A*A* the dual product, the bimodule actions between A*
/// and A, and AA = 0. Coordinates: A* first (0..n-1), then A (n..2n-1).
struct NullExtension {
    FiniteCoalgebra base;
    FiniteAlgebra algebra;
};

/// Throws UnityRequired without a counit, IdentityViolation if A* is not Jordan.
NullExtension null_extension(const FiniteCoalgebra& c);

/// The A* -> A block of the C-operator [g, a] = g'a' - a'g', as an n x n
/// matrix acting on row vectors of A*.
Matrix mixed_block(const FiniteCoalgebra& c, const Vector& g, const Vector& a);

/// [A*, A] as operators on C, spanned by the generators [e^i, e_j].
class MixedCommutatorSpace {
public:
    MixedCommutatorSpace() = default;
    explicit MixedCommutatorSpace(const FiniteCoalgebra& c);

    std::size_t n() const { return n_; }
    std::size_t dim() const { return chosen_.size(); }
    /// Every generator [e^i, e_j] as a 2n x 2n operator, in (i, j) order.
    const OperatorSpace& span() const { return span_; }
    /// Generator pair (i, j) of the k-th basis element.
    std::pair<std::size_t, std::size_t> basis_pair(std::size_t k) const { return chosen_[k]; }
    Matrix basis_block(std::size_t k) const { return blocks_[k]; }
    /// Coordinates of an A* -> A block in the chosen basis, or nullopt.
    std::optional<Vector> coordinates(const Matrix& block) const;
    /// Coordinate vectors c with sum c_(i,j) [e^i, e_j] = 0, one per relation
    /// in a basis of all relations among the n^2 generators.
    std::vector<Vector> generator_relations() const;

private:
    std::size_t n_ = 0;
    OperatorSpace span_;
    std::vector<std::pair<std::size_t, std::size_t>> chosen_;
    std::vector<Matrix> blocks_;
    SpanSolver solver_;
    Matrix generator_blocks_;  // n^2 rows, each a flattened block
};

/// One term c [f, g] of an element of IntDer(A*).
struct CommutatorTerm {
    Scalar coefficient;
    Vector f;
    Vector g;
};

/// a i = sum c (f, a, g) = sum c ((f a) g - f (a g)) for i = sum c [f, g].
Vector intder_action_on_A(const FiniteCoalgebra& c, const std::vector<CommutatorTerm>& i, const Vector& a);

enum class LPart { A, APrime, Mixed, ABar };

/// L(A) = A + A' + [A*, A] + A-bar paired with L(A*) = build_kkt(A*).
///
/// Coordinates mirror those of the KKT algebra: [A | A' | [A*,A] | A-bar].
class LSpace {
public:
    const FiniteCoalgebra& base() const { return base_; }
    const KKTAlgebra& kkt() const { return kkt_; }
    const NullExtension& null_ext() const { return null_; }
    const MixedCommutatorSpace& mixed() const { return mixed_; }

    std::size_t n() const { return base_.dim(); }
    std::size_t r_dim() const { return n() + mixed_.dim(); }
    std::size_t dim() const { return 2 * n() + r_dim(); }
    std::size_t part_offset(LPart p) const;
    std::size_t part_dim(LPart p) const;
    std::vector<std::string> basis_names() const;

    /// Rows index L(A*), columns L(A).
    const Matrix& gram() const { return gram_; }
    Scalar pairing(const Vector& lstar, const Vector& l) const;

    /// Action on A of an R(A*) element given by KKT R-coordinates.
    Matrix r_star_on_A(const Vector& u) const;
    /// A* -> A block of an R(A) element given by R(A) coordinates.
    Matrix r_block(const Vector& w) const;
    /// R(A) coordinates of an A* -> A block; throws std::domain_error outside.
    Vector r_coordinates(const Matrix& block) const;
    /// Action on A of the k-th IntDer basis element.
    const Matrix& intder_on_A(std::size_t k) const { return intder_on_a_[k]; }

    /// [l, lstar] in L(A).
    Vector module_action(const Vector& l, const Vector& lstar) const;
    /// Matrix of l -> [l, lstar].
    Matrix action_matrix(const Vector& lstar) const;
    /// a + b' + v + c-bar -> c - b' + v + a-bar
    Vector pi(const Vector& l) const;
    Matrix pi_matrix() const;

    bool has_delta() const { return delta_.has_value(); }
    /// Throws std::logic_error before delta_L_global().
    const FiniteCoalgebra& coalgebra() const;

    friend LSpace build_lspace(const FiniteCoalgebra& c);
    friend LSpace delta_L_global(const FiniteCoalgebra& c);

private:
    FiniteCoalgebra base_;
    KKTAlgebra kkt_;
    NullExtension null_;
    MixedCommutatorSpace mixed_;
    Matrix gram_;
    std::vector<Matrix> intder_on_a_;
    std::vector<Matrix> r_blocks_;  // A' blocks then mixed basis blocks
    SpanSolver r_solver_;
    std::optional<FiniteCoalgebra> delta_;
};

/// Everything except the comultiplication.
LSpace build_lspace(const FiniteCoalgebra& c);
/// Delta_L fixed by <[f, g], l> = <f (x) g, Delta_L(l)>; throws
/// std::domain_error if the gram matrix is singular.
LSpace delta_L_global(const FiniteCoalgebra& c);

/// The pairing matrix transports L(A*) onto the algebra dual to Delta_L:
/// change_basis(dual_algebra(ls.coalgebra()), ls.gram()) has the same
/// structure constants as the KKT algebra.
FiniteAlgebra transported_dual(const LSpace& ls);

/// L_B = B + B' + [A*, B] + B-bar inside L(A).
Subspace l_of_subcoalgebra(const LSpace& ls, const Subspace& b);

/// A comultiplication on a subspace of L(A), expressed in its canonical basis.
struct LocalDelta {
    Subspace support;
    FiniteCoalgebra coalgebra;
    /// Delta(l) in ambient L(A) (x) L(A) coordinates, l in support.
    Vector comultiply_ambient(const Vector& l) const;
};

/// Delta on L_B computed from a complement L* of the annihilator of L_B in
/// L(A*), without using the global transpose. Throws std::invalid_argument
/// if b is not a subcoalgebra.
LocalDelta delta_B_local(const LSpace& ls, const Subspace& b);
/// The global Delta_L restricted to L_B.
LocalDelta delta_B_restricted(const LSpace& ls, const Subspace& b);

/// Anti-cocommutativity, co-Jacobi, and the Lie property of the dual.
Report lie_coalgebra_axioms(const FiniteCoalgebra& lc);

/// dim [A*, A] = dim IntDer(A*), the pairing vanishing on generator
/// relations, and gram invertibility.
Report pairing_report(const LSpace& ls);
/// <f i, a> = -<f, a i> on basis f, a and IntDer basis i.
Report intder_duality_report(const LSpace& ls);
/// First basis triple (l1*, l2*, l) with <[l1*, l2*], l> != <l2*, [l, e(l1*)]>.
std::optional<std::vector<std::size_t>> invariance_violation(const LSpace& ls);
/// Ann(B) = B-perp and [B-perp, B] = 0 in C, for a subcoalgebra B.
Report annihilator_report(const FiniteCoalgebra& c, const Subspace& b);
/// With V a complement of B-perp and f * g the projection of fg onto V along
/// B-perp: <f * g, b> = <fg, b>, and the product on V is dual to Delta|_B.
Report local_product_report(const FiniteCoalgebra& c, const Subspace& b);
/// L_B is carried into itself by the action of every element of L(A*).
bool submodule_check(const LSpace& ls, const Subspace& b);

}  // namespace kktco

#endif  // KKTCO_LIECOALG_HPP
