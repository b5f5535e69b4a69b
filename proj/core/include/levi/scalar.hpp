#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <vector>

#include "levi/errors.hpp"

namespace levi {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// Descriptor of the coefficient field: a prime field GF(p) with p < 2^16,
/// or the rational numbers. Two descriptors compare equal iff they have the
/// same kind and, for prime fields, the same modulus.
class Field {
public:
    enum class Kind : std::uint8_t { PrimeField, Rationals };

    /// GF(p). Primality is verified by trial division; p must be < 2^16.
    static Field gf(std::uint32_t p);
    static Field rationals() noexcept { return Field(Kind::Rationals, 0); }

    Kind kind() const noexcept { return kind_; }
    bool is_prime_field() const noexcept { return kind_ == Kind::PrimeField; }
    bool is_rationals() const noexcept { return kind_ == Kind::Rationals; }

    /// Prime modulus; only meaningful for prime fields.
    std::uint32_t modulus() const;

    friend bool operator==(const Field&, const Field&) = default;

    std::string str() const;

private:
    Field(Kind k, std::uint32_t p) : kind_(k), p_(p) {}
    Kind kind_;
    std::uint32_t p_;
};

/// An exact field element in canonical form: a residue in [0, p) for GF(p),
/// a reduced fraction with positive denominator for the rationals. All
/// arithmetic is exact; mixing descriptors raises DescriptorMismatch.
/// Immutable value type, safe to share across threads.
class Scalar {
public:
    static Scalar zero(const Field& f);
    static Scalar one(const Field& f);

    /// Embeds an integer: reduced mod p, or as the rational v/1.
    static Scalar of_int(const Field& f, long long v);

    /// Convenience: residue v in GF(p).
    static Scalar gf(std::uint32_t p, long long v) { return of_int(Field::gf(p), v); }

    static Scalar rational(const BigRat& q);
    static Scalar rational(long long num, long long den);

    /// Parses the canonical string form: residue digits for GF(p) (the field
    /// argument decides), "a" or "a/b" for rationals.
    static Scalar parse(const Field& f, const std::string& text);

    const Field& field() const noexcept { return field_; }
    bool is_zero() const noexcept;
    bool is_one() const noexcept;

    /// Residue in [0, p); prime fields only.
    std::uint32_t residue() const;
    /// Reduced fraction; rationals only.
    const BigRat& rat() const;

    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;  // DivisionByZero if o = 0
    Scalar operator-() const;
    Scalar inv() const;  // DivisionByZero if zero

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    /// Exact equality; scalars of different fields are never equal.
    friend bool operator==(const Scalar& a, const Scalar& b);

    /// Total order within one field, used for canonical sorting: residues
    /// ascend for GF(p), rationals compare by value.
    static bool canonical_less(const Scalar& a, const Scalar& b);

    /// Canonical text form: "3" for residues, "3" / "-3/2" for rationals.
    std::string str() const;

private:
    Scalar(Field f, std::uint32_t residue) : field_(f), res_(residue) {}
    Scalar(Field f, BigRat q) : field_(f), res_(0), rat_(std::move(q)) {}
    void check_same_field(const Scalar& o) const;

    Field field_;
    std::uint32_t res_;  // prime-field value
    BigRat rat_;         // rational value (unused for prime fields)
};

/// All p elements of GF(p), zero first, residues ascending.
/// The rationals cannot be enumerated: InfiniteField.
std::vector<Scalar> enumerate_field(const Field& f);

}  // namespace levi
