#ifndef KKTCO_SUBSPACE_HPP
#define KKTCO_SUBSPACE_HPP

#include <cstdint>
#include <functional>

#include "kktco/matrix.hpp"

namespace kktco {

/// Subspace of a coordinate space k^n, stored by its canonical basis: the
/// reduced row-echelon form of any spanning set. Equal subspaces have equal
/// basis matrices, so comparison is structural.
class Subspace {
public:
    Subspace() = default;

    static Subspace zero(Field f, std::size_t ambient_dim);
    static Subspace full(Field f, std::size_t ambient_dim);
    static Subspace span(Field f, std::size_t ambient_dim, const std::vector<Vector>& vectors);
    static Subspace row_space(const Matrix& m);

    Field field() const { return basis_.field(); }
    std::size_t ambient_dim() const { return basis_.cols(); }
    std::size_t dim() const { return basis_.rows(); }
    const Matrix& basis() const { return basis_; }
    Vector basis_vector(std::size_t i) const { return basis_.row(i); }
    std::vector<Vector> basis_vectors() const { return basis_.row_list(); }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    bool contains(const Vector& v) const;
    bool contains(const Subspace& other) const;
    /// { y : <x, y> = 0 for all x in this } under the standard dot product.
    Subspace annihilator() const;

    friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }

private:
    explicit Subspace(Matrix canonical);
    Matrix basis_;
    std::vector<std::size_t> pivots_;
};

/// {v : m * v = 0}, returned canonically.
Subspace kernel(const Matrix& m);

Subspace subspace_sum(const Subspace& u, const Subspace& v);
Subspace subspace_intersect(const Subspace& u, const Subspace& v);
bool contains(const Subspace& u, const Subspace& v);

enum class PairingSide { Left, Right };

/// Orthogonal complement across a bilinear pairing <x, y> = x^T P y.
/// With side == Left, s lives in the row space of P and the result in the
/// column space; with side == Right the roles are swapped.
Subspace ortho_complement(const Subspace& s, const Matrix& pairing, PairingSide side = PairingSide::Left);

/// Image of a subspace under the linear map x -> x * m.
Subspace image(const Subspace& s, const Matrix& m);

/// Visits every subspace of F_p^n (in canonical form) of dimension in
/// [min_dim, max_dim]. Only defined for prime fields.
void for_each_subspace(Field f, std::size_t n, std::size_t min_dim, std::size_t max_dim,
                       const std::function<void(const Subspace&)>& visit);

/// Number of subspaces of F_q^n of dimension k (Gaussian binomial).
std::uint64_t gaussian_binomial(std::uint64_t q, std::size_t n, std::size_t k);

}  // namespace kktco

#endif  // KKTCO_SUBSPACE_HPP
