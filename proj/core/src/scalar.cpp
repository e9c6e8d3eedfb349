#include "kktco/scalar.hpp"

#include <charconv>

namespace kktco {

namespace {

bool is_prime(std::uint64_t p)
{
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

std::uint32_t reduce(long long v, std::uint32_t p)
{
    long long r = v % static_cast<long long>(p);
    if (r < 0) r += p;
    return static_cast<std::uint32_t>(r);
}

std::uint32_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint32_t p)
{
    std::uint64_t result = 1;
    base %= p;
    while (e > 0) {
        if (e & 1) result = result * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(result);
}

}  // namespace

Field Field::prime(std::uint64_t p)
{
    if (p < 5 || p >= (1ULL << 31) || !is_prime(p))
        throw std::invalid_argument("field characteristic must be a prime p >= 5 below 2^31, got " +
                                    std::to_string(p));
    return Field(static_cast<std::uint32_t>(p));
}

Field Field::parse(std::string_view text)
{
    if (text == "rational") return rational();
    constexpr std::string_view prefix = "prime:";
    if (text.substr(0, prefix.size()) == prefix) {
        auto digits = text.substr(prefix.size());
        std::uint64_t p = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
        if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty())
            throw ParseError("bad field descriptor: " + std::string(text));
        try {
            return prime(p);
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what());
        }
    }
    throw ParseError("bad field descriptor: " + std::string(text));
}

std::string Field::to_string() const
{
    return is_rational() ? std::string("rational") : "prime:" + std::to_string(p_);
}

Scalar Scalar::from_int(Field f, long long v)
{
    static_assert(sizeof(long) == sizeof(long long));
    if (f.is_rational()) return Scalar(mpq_class(static_cast<long>(v)));
    return Scalar(Residue{reduce(v, f.characteristic()), f.characteristic()});
}

Scalar Scalar::from_fraction(Field f, long long num, long long den)
{
    if (den == 0) throw std::domain_error("zero denominator");
    return from_int(f, num) / from_int(f, den);
}

Scalar Scalar::parse(Field f, std::string_view text)
{
    Scalar s;
    if (f.is_rational()) {
        mpq_class q;
        if (text.empty() || q.set_str(std::string(text), 10) != 0 || sgn(q.get_den()) == 0)
            throw ParseError("bad rational scalar: " + std::string(text));
        q.canonicalize();
        s = Scalar(q);
    } else {
        std::uint64_t r = 0;
        auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), r);
        if (ec != std::errc() || ptr != text.data() + text.size() || text.empty() ||
            r >= f.characteristic())
            throw ParseError("bad residue mod " + std::to_string(f.characteristic()) + ": " +
                             std::string(text));
        s = Scalar(Residue{static_cast<std::uint32_t>(r), f.characteristic()});
    }
    if (s.to_string() != text) throw ParseError("non-canonical scalar: " + std::string(text));
    return s;
}

Field Scalar::field() const
{
    if (std::holds_alternative<mpq_class>(value_)) return Field::rational();
    return Field(residue().p);
}

bool Scalar::is_zero() const
{
    if (auto q = std::get_if<mpq_class>(&value_)) return sgn(*q) == 0;
    return residue().value == 0;
}

bool Scalar::is_one() const
{
    if (auto q = std::get_if<mpq_class>(&value_)) return *q == 1;
    return residue().value == 1;
}

Scalar Scalar::inverse() const
{
    if (is_zero()) throw std::domain_error("inverse of zero");
    if (auto q = std::get_if<mpq_class>(&value_)) return Scalar(mpq_class(1 / *q));
    const auto& r = residue();
    return Scalar(Residue{pow_mod(r.value, r.p - 2, r.p), r.p});
}

std::string Scalar::to_string() const
{
    if (auto q = std::get_if<mpq_class>(&value_)) return q->get_str(10);
    return std::to_string(residue().value);
}

void Scalar::check_same(const Scalar& o) const
{
    if (value_.index() != o.value_.index() ||
        (value_.index() == 1 && residue().p != o.residue().p))
        throw DimensionMismatch("scalars from different fields");
}

Scalar Scalar::operator-() const
{
    if (auto q = std::get_if<mpq_class>(&value_)) return Scalar(mpq_class(-*q));
    const auto& r = residue();
    return Scalar(Residue{r.value == 0 ? 0u : r.p - r.value, r.p});
}

Scalar& Scalar::operator+=(const Scalar& o)
{
    check_same(o);
    if (auto q = std::get_if<mpq_class>(&value_)) {
        *q += std::get<mpq_class>(o.value_);
    } else {
        auto& r = std::get<Residue>(value_);
        std::uint64_t v = std::uint64_t(r.value) + o.residue().value;
        r.value = static_cast<std::uint32_t>(v >= r.p ? v - r.p : v);
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o)
{
    check_same(o);
    if (auto q = std::get_if<mpq_class>(&value_)) {
        *q -= std::get<mpq_class>(o.value_);
    } else {
        auto& r = std::get<Residue>(value_);
        std::uint64_t v = std::uint64_t(r.value) + r.p - o.residue().value;
        r.value = static_cast<std::uint32_t>(v >= r.p ? v - r.p : v);
    }
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o)
{
    check_same(o);
    if (auto q = std::get_if<mpq_class>(&value_)) {
        *q *= std::get<mpq_class>(o.value_);
    } else {
        auto& r = std::get<Residue>(value_);
        r.value = static_cast<std::uint32_t>(std::uint64_t(r.value) * o.residue().value % r.p);
    }
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o)
{
    check_same(o);
    return *this *= o.inverse();
}

bool operator==(const Scalar& a, const Scalar& b)
{
    if (a.value_.index() != b.value_.index()) return false;
    if (auto q = std::get_if<mpq_class>(&a.value_)) return *q == std::get<mpq_class>(b.value_);
    return a.residue().value == b.residue().value && a.residue().p == b.residue().p;
}

Vector zero_vector(Field f, std::size_t n) { return Vector(n, Scalar::zero(f)); }

Vector unit_vector(Field f, std::size_t n, std::size_t i)
{
    Vector v = zero_vector(f, n);
    v.at(i) = Scalar::one(f);
    return v;
}

Vector vector_from_ints(Field f, std::initializer_list<long long> values)
{
    Vector v;
    v.reserve(values.size());
    for (long long x : values) v.push_back(Scalar::from_int(f, x));
    return v;
}

bool is_zero(const Vector& v)
{
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}

Vector operator+(const Vector& a, const Vector& b)
{
    if (a.size() != b.size()) throw DimensionMismatch("vector lengths differ");
    Vector r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

Vector operator-(const Vector& a, const Vector& b)
{
    if (a.size() != b.size()) throw DimensionMismatch("vector lengths differ");
    Vector r = a;
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

Vector operator-(const Vector& a)
{
    Vector r;
    r.reserve(a.size());
    for (const auto& x : a) r.push_back(-x);
    return r;
}

Vector operator*(const Scalar& s, const Vector& v)
{
    Vector r = v;
    for (auto& x : r) x *= s;
    return r;
}

void axpy(Vector& a, const Scalar& s, const Vector& b)
{
    if (a.size() != b.size()) throw DimensionMismatch("vector lengths differ");
    if (s.is_zero()) return;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!b[i].is_zero()) a[i] += s * b[i];
}

Scalar dot(Field f, const Vector& a, const Vector& b)
{
    if (a.size() != b.size()) throw DimensionMismatch("vector lengths differ");
    Scalar acc = Scalar::zero(f);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a[i].is_zero() && !b[i].is_zero()) acc += a[i] * b[i];
    return acc;
}

std::string to_string(const Vector& v)
{
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += v[i].to_string();
    }
    return out + ")";
}

}  // namespace kktco
