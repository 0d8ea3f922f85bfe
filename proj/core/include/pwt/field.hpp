#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

#include "pwt/errors.hpp"

namespace pwt {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

enum class FieldKind : std::uint8_t { Prime, Rational };

// Field context shared by every scalar of one computation. GF(p) for a
// configurable prime p, or exact rationals as the characteristic-0 backend.
class Field {
public:
    static Field gf(std::int64_t p);
    static Field rationals() { return Field(FieldKind::Rational, 0); }

    FieldKind kind() const { return kind_; }
    bool is_prime() const { return kind_ == FieldKind::Prime; }
    // 0 for the rationals.
    std::int64_t characteristic() const { return p_; }

    std::string name() const;

    friend bool operator==(const Field& a, const Field& b) = default;

private:
    Field(FieldKind k, std::int64_t p) : kind_(k), p_(p) {}
    FieldKind kind_;
    std::int64_t p_;
};

// An exact field element. Arithmetic across distinct field contexts throws.
class Scalar {
public:
    static Scalar zero(const Field& f) { return Scalar(f, 0); }
    static Scalar one(const Field& f) { return Scalar(f, 1); }
    static Scalar of(const Field& f, long long value) { return Scalar(f, value); }
    static Scalar ratio(const Field& f, long long num, long long den);

    const Field& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator-() const;
    Scalar inverse() const;  // throws ArithmeticError on zero

    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    std::string to_string() const;
    std::uint64_t hash() const;

    // GF(p) residue in [0, p); only valid on a prime-field scalar.
    std::int64_t residue() const;
    const Rational& rational() const;

private:
    Scalar(const Field& f, long long value);
    Scalar(const Field& f, Rational q) : field_(f), rat_(std::move(q)) {}

    static void require_same(const Scalar& a, const Scalar& b);

    Field field_;
    std::int64_t res_ = 0;  // prime backend
    Rational rat_;          // rational backend
};

}  // namespace pwt
