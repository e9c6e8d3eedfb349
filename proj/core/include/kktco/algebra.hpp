#ifndef KKTCO_ALGEBRA_HPP
#define KKTCO_ALGEBRA_HPP

#include <optional>
#include <string>
#include <vector>

#include "kktco/subspace.hpp"
#include "kktco/tensor.hpp"

namespace kktco {

/// A defining identity failed; indices name the offending basis tuple.
class IdentityViolation : public std::domain_error {
public:
    IdentityViolation(const std::string& what, std::vector<std::size_t> witness)
        : std::domain_error(what), witness_(std::move(witness))
    {
    }
    const std::vector<std::size_t>& witness() const { return witness_; }

private:
    std::vector<std::size_t> witness_;
};

/// A construction needed a unity (or, dually, a counit) that does not exist.
class UnityRequired : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Algebra given by structure constants: e_i * e_j = sum_k product(i, j, k) e_k.
class FiniteAlgebra {
public:
    FiniteAlgebra() = default;
    FiniteAlgebra(Field f, std::vector<std::string> basis_names, Tensor3 product);

    Field field() const { return field_; }
    std::size_t dim() const { return names_.size(); }
    const std::vector<std::string>& basis_names() const { return names_; }
    const Tensor3& product() const { return product_; }
    Vector basis_vector(std::size_t i) const { return unit_vector(field_, dim(), i); }

    friend bool operator==(const FiniteAlgebra&, const FiniteAlgebra&) = default;

private:
    Field field_;
    std::vector<std::string> names_;
    Tensor3 product_;
};

/// Default basis labels e0, e1, ...
std::vector<std::string> default_names(std::size_t n, const std::string& stem = "e");

Vector multiply(const FiniteAlgebra& alg, const Vector& x, const Vector& y);
/// Matrix of x -> x * a (row convention, see Matrix).
Matrix right_mult(const FiniteAlgebra& alg, const Vector& a);
std::optional<Vector> find_unity(const FiniteAlgebra& alg);
/// a'b' - b'a': x[a,b] = (x a) b - (x b) a.
Matrix commutator_bracket(const FiniteAlgebra& alg, const Vector& a, const Vector& b);
/// (x y) z - x (y z)
Vector associator(const FiniteAlgebra& alg, const Vector& x, const Vector& y, const Vector& z);

bool is_commutative(const FiniteAlgebra& alg);
/// Basis pair or triple violating alternation or Jacobi, if any.
std::optional<std::vector<std::size_t>> lie_violation(const FiniteAlgebra& alg);
bool is_lie(const FiniteAlgebra& alg);
/// First basis quadruple (x1, x2, x3, y) where the linearized Jordan identity
/// fails, or a pair (i, j) breaking commutativity.
std::optional<std::vector<std::size_t>> jordan_violation(const FiniteAlgebra& alg);
bool is_jordan(const FiniteAlgebra& alg);

struct OperatorGenerator {
    std::string description;
    Matrix matrix;
    std::size_t left = 0;  // provenance for commutator generators [e_left, e_right]
    std::size_t right = 0;
};

struct GeneratorTerm {
    std::size_t generator;
    Scalar coefficient;
};

/// A space of linear operators on an n-dimensional algebra. The span lives in
/// k^(n*n) via Matrix::flatten(); generators keep their provenance.
class OperatorSpace {
public:
    OperatorSpace() = default;
    OperatorSpace(std::size_t n, Subspace span, std::vector<OperatorGenerator> generators);

    std::size_t operand_dim() const { return n_; }
    std::size_t dim() const { return span_.dim(); }
    const Subspace& span() const { return span_; }
    const std::vector<OperatorGenerator>& generators() const { return generators_; }

    Matrix basis_operator(std::size_t i) const;
    std::vector<Matrix> basis_operators() const;
    bool contains(const Matrix& op) const { return span_.contains(op.flatten()); }
    bool contains(const OperatorSpace& other) const { return span_.contains(other.span_); }
    /// Coordinates of op in the canonical basis; nullopt when op is outside.
    std::optional<Vector> coordinates(const Matrix& op) const;
    /// op as a combination of generators (free coefficients zeroed).
    std::vector<GeneratorTerm> decompose(const Matrix& op) const;

private:
    std::size_t n_ = 0;
    Subspace span_;
    std::vector<OperatorGenerator> generators_;
    SpanSolver solver_;
};

OperatorSpace derivations(const FiniteAlgebra& alg);
/// Span of [e_i, e_j] for i < j, generators recorded with their pairs.
OperatorSpace inner_derivations(const FiniteAlgebra& alg);

/// [ab,c] + [ac,b] + [bc,a] = 0 on basis triples; returns the failing triple.
std::optional<std::vector<std::size_t>> eq1_violation(const FiniteAlgebra& alg);
/// (cd)[a,b] = c[a,b]d' + d[a,b]c' on basis quadruples (a, b, c, d).
std::optional<std::vector<std::size_t>> eq2_violation(const FiniteAlgebra& alg);
bool eq1_check(const FiniteAlgebra& alg);
bool eq2_check(const FiniteAlgebra& alg);

bool is_ideal(const FiniteAlgebra& alg, const Subspace& s);
bool is_subalgebra(const FiniteAlgebra& alg, const Subspace& s);
/// Smallest subalgebra containing the seed (and the unity when requested).
Subspace generated_subalgebra(const FiniteAlgebra& alg, const Subspace& seed, bool with_unity);

/// Same algebra expressed in the basis whose i-th vector is row i of change.
FiniteAlgebra change_basis(const FiniteAlgebra& alg, const Matrix& change);

}  // namespace kktco

#endif  // KKTCO_ALGEBRA_HPP
