#ifndef KKTCO_SCALAR_HPP
#define KKTCO_SCALAR_HPP

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <gmpxx.h>

namespace kktco {

/// Raised when operands live in different fields or spaces of different size.
class DimensionMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised on malformed textual input (scalars, files, subspace rows).
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Exact coefficient field: the rationals, or a prime field F_p with p >= 5.
class Field {
public:
    Field() = default;

    static Field rational() { return Field(0); }
    /// Throws std::invalid_argument unless p is a prime in [5, 2^31).
    static Field prime(std::uint64_t p);
    /// Accepts "rational" or "prime:<p>".
    static Field parse(std::string_view text);

    bool is_rational() const { return p_ == 0; }
    std::uint32_t characteristic() const { return p_; }
    std::string to_string() const;

    friend bool operator==(Field, Field) = default;

private:
    friend class Scalar;
    explicit Field(std::uint32_t p) : p_(p) {}
    std::uint32_t p_ = 0;
};

/// An element of a Field. Rationals are kept in lowest terms with a positive
/// denominator; residues are kept in [0, p).
class Scalar {
public:
    Scalar() : value_(mpq_class(0)) {}

    static Scalar zero(Field f) { return from_int(f, 0); }
    static Scalar one(Field f) { return from_int(f, 1); }
    static Scalar from_int(Field f, long long v);
    static Scalar from_fraction(Field f, long long num, long long den);
    /// Parses the canonical text form: "a" or "a/b" (gcd 1, b > 1) over Q,
    /// "r" with 0 <= r < p over F_p. Non-canonical spellings are rejected.
    static Scalar parse(Field f, std::string_view text);

    Field field() const;
    bool is_zero() const;
    bool is_one() const;

    Scalar inverse() const;
    std::string to_string() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend bool operator==(const Scalar& a, const Scalar& b);

    friend std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

private:
    struct Residue {
        std::uint32_t value;
        std::uint32_t p;
    };

    explicit Scalar(mpq_class q) : value_(std::move(q)) {}
    explicit Scalar(Residue r) : value_(r) {}

    const Residue& residue() const { return std::get<Residue>(value_); }
    void check_same(const Scalar& o) const;

    std::variant<mpq_class, Residue> value_;
};

using Vector = std::vector<Scalar>;

Vector zero_vector(Field f, std::size_t n);
Vector unit_vector(Field f, std::size_t n, std::size_t i);
Vector vector_from_ints(Field f, std::initializer_list<long long> values);
bool is_zero(const Vector& v);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator-(const Vector& a);
Vector operator*(const Scalar& s, const Vector& v);
/// a += s * b
void axpy(Vector& a, const Scalar& s, const Vector& b);
/// Sum of a[i] * b[i]; the field is explicit so empty vectors are fine.
Scalar dot(Field f, const Vector& a, const Vector& b);
std::string to_string(const Vector& v);

}  // namespace kktco

#endif  // KKTCO_SCALAR_HPP
