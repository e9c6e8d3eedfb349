#ifndef KKTCO_CORRESPONDENCE_HPP
#define KKTCO_CORRESPONDENCE_HPP

#include "kktco/liecoalg.hpp"
#include "kktco/zoo.hpp"

namespace kktco {

/// L(A) with its comultiplication, the KKT algebra L(A*), and the
/// subalgebra U spanned by 1, 1' and 1-bar.
struct LatticeContext {
    LSpace ls;
    Subspace u;       // in L(A*)
    Subspace u_perp;  // in L(A)
};

/// Throws UnityRequired when A has no counit.
LatticeContext make_context(const FiniteCoalgebra& c);

/// span{1, 1', 1-bar} in L(A*).
Subspace build_U(const LSpace& ls);
/// U with basis (1, 1', 1-bar) as a three-dimensional Lie algebra.
FiniteAlgebra u_algebra(const LatticeContext& ctx);
/// Closure, dimension 3, Killing rank 3, and zero center.
Report u_report(const LatticeContext& ctx);

bool is_lie_subalgebra(const FiniteAlgebra& lie, const Subspace& s);
/// [inner, outer] lies in inner; outer defaults to the whole algebra.
bool is_lie_ideal(const FiniteAlgebra& lie, const Subspace& inner);
bool is_lie_ideal_in(const FiniteAlgebra& lie, const Subspace& inner, const Subspace& outer);

/// Orthogonal of a subspace of L(A) inside L(A*), and conversely.
Subspace perp_in_dual(const LatticeContext& ctx, const Subspace& l);
Subspace perp_in_space(const LatticeContext& ctx, const Subspace& lstar);

/// Subspaces of IntDer(A*) in the canonical IntDer coordinates.
/// d(B) = { d : B d in B }, p(B) = { d : A* d in B }.
Subspace d_of(const LatticeContext& ctx, const Subspace& b);
Subspace p_of(const LatticeContext& ctx, const Subspace& b);
/// Subspaces of [A*, A] in its chosen coordinates.
/// d*(V) = { v : V-perp v in V }, p*(B) = { v : A* v in B }.
Subspace d_star_of(const LatticeContext& ctx, const Subspace& v);
Subspace p_star_of(const LatticeContext& ctx, const Subspace& b);

/// For a unital subalgebra B of A*: B + B' + [B, B] + B-bar and B + B' + d(B) + B-bar.
Subspace L1_alg(const LatticeContext& ctx, const Subspace& b);
Subspace L2_alg(const LatticeContext& ctx, const Subspace& b);
/// For an ideal B of A*: B + B' + [A*, B] + B-bar and B + B' + p(B) + B-bar.
Subspace I1_alg(const LatticeContext& ctx, const Subspace& b);
Subspace I2_alg(const LatticeContext& ctx, const Subspace& b);

/// For a coideal V of A: V + V' + [V-perp, V] + V-bar and V + V' + d*(V) + V-bar.
Subspace L1_star(const LatticeContext& ctx, const Subspace& v);
Subspace L2_star(const LatticeContext& ctx, const Subspace& v);
/// For a subcoalgebra B of A: B + B' + [A*, B] + B-bar and B + B' + p*(B) + B-bar.
Subspace I1_star(const LatticeContext& ctx, const Subspace& b);
Subspace I2_star(const LatticeContext& ctx, const Subspace& b);

enum class Lift { L1Star, L2Star, I1Star, I2Star };
/// Accepts "L1*", "L2*", "I1*", "I2*".
Lift parse_lift(const std::string& text);
Subspace lift(const LatticeContext& ctx, Lift which, const Subspace& s);

/// A intersected with a subspace of L(A), as a subspace of A.
Subspace a_part(const LatticeContext& ctx, const Subspace& l);

/// Forward correspondence for a coideal V: the starred spaces are π-closed
/// coideals inside U-perp, and L1*(V)-perp = L2(V-perp), L2*(V)-perp = L1(V-perp).
Report theorem2_verify(const LatticeContext& ctx, const Subspace& v);
/// Forward correspondence for a subcoalgebra B: I1*(B), I2*(B) are
/// subcoalgebras and I1*(B)-perp = I2(B-perp), I2*(B)-perp = I1(B-perp).
Report theorem3_verify(const LatticeContext& ctx, const Subspace& b);
/// Converse for a π-closed coideal L inside U-perp: V = A ∩ L is a coideal
/// and L1*(V) ⊆ L ⊆ L2*(V).
Report theorem2_reverse(const LatticeContext& ctx, const Subspace& l);
/// Converse for a subcoalgebra L: B = A ∩ L is a subcoalgebra and
/// I1*(B) ⊆ L ⊆ I2*(B). A failed sandwich on a subspace that is not π-closed
/// is flagged rather than failed.
Report theorem3_reverse(const LatticeContext& ctx, const Subspace& l);

/// Seeded sparse vector: each coordinate is zero with probability 1/2.
Vector sparse_sample(ScalarSampler& s, std::size_t n);
/// Subcoalgebra generated by a sparse sample of A.
Subspace random_subcoalgebra(const FiniteCoalgebra& c, ScalarSampler& s);
/// Perp of the unital subalgebra of A* generated by a sparse sample.
Subspace random_coideal(const FiniteCoalgebra& c, ScalarSampler& s);

}  // namespace kktco

#endif  // KKTCO_CORRESPONDENCE_HPP
