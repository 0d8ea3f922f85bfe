#include "pwt/field.hpp"

#include "pwt/util.hpp"

namespace pwt {

namespace {

bool is_prime_number(std::int64_t p) {
    if (p < 2) return false;
    for (std::int64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

std::int64_t mod_norm(std::int64_t v, std::int64_t p) {
    v %= p;
    if (v < 0) v += p;
    return v;
}

// Extended Euclid inverse of a mod p, a in [1, p).
std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
    std::int64_t t = 0, new_t = 1, r = p, new_r = a;
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    return mod_norm(t, p);
}

}  // namespace

Field Field::gf(std::int64_t p) {
    if (p <= 1 || p > (std::int64_t(1) << 31) || !is_prime_number(p))
        throw ArithmeticError("GF(p) requires a prime p with 2 <= p < 2^31, got " + std::to_string(p));
    return Field(FieldKind::Prime, p);
}

std::string Field::name() const {
    if (kind_ == FieldKind::Prime) return "GF(" + std::to_string(p_) + ")";
    return "Q";
}

Scalar::Scalar(const Field& f, long long value) : field_(f) {
    if (f.is_prime())
        res_ = mod_norm(value, f.characteristic());
    else
        rat_ = Rational(value);
}

Scalar Scalar::ratio(const Field& f, long long num, long long den) {
    if (den == 0) throw ArithmeticError("zero denominator");
    if (f.is_prime()) {
        Scalar d = Scalar::of(f, den);
        if (d.is_zero()) throw ArithmeticError("denominator vanishes in " + f.name());
        return Scalar::of(f, num) / d;
    }
    return Scalar(f, Rational(BigInt(num), BigInt(den)));
}

void Scalar::require_same(const Scalar& a, const Scalar& b) {
    if (a.field_ != b.field_)
        throw FieldMismatch("mixing field contexts " + a.field_.name() + " and " + b.field_.name());
}

bool Scalar::is_zero() const {
    return field_.is_prime() ? res_ == 0 : rat_.is_zero();
}

bool Scalar::is_one() const {
    return field_.is_prime() ? res_ == 1 : rat_ == 1;
}

Scalar Scalar::operator-() const {
    if (field_.is_prime()) return Scalar(field_, -res_);
    return Scalar(field_, Rational(-rat_));
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw ArithmeticError("inverse of zero");
    if (field_.is_prime()) return Scalar(field_, mod_inverse(res_, field_.characteristic()));
    return Scalar(field_, Rational(1) / rat_);
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    Scalar::require_same(a, b);
    if (a.field_.is_prime()) return Scalar(a.field_, a.res_ + b.res_);
    return Scalar(a.field_, a.rat_ + b.rat_);
}

Scalar operator-(const Scalar& a, const Scalar& b) {
    Scalar::require_same(a, b);
    if (a.field_.is_prime()) return Scalar(a.field_, a.res_ - b.res_);
    return Scalar(a.field_, a.rat_ - b.rat_);
}

Scalar operator*(const Scalar& a, const Scalar& b) {
    Scalar::require_same(a, b);
    if (a.field_.is_prime()) return Scalar(a.field_, a.res_ * b.res_);
    return Scalar(a.field_, a.rat_ * b.rat_);
}

Scalar operator/(const Scalar& a, const Scalar& b) {
    return a * b.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
    Scalar::require_same(a, b);
    return a.field_.is_prime() ? a.res_ == b.res_ : a.rat_ == b.rat_;
}

std::string Scalar::to_string() const {
    if (field_.is_prime()) return std::to_string(res_);
    return rat_.str();
}

std::uint64_t Scalar::hash() const {
    if (field_.is_prime()) return hash_mix(0x51ab1e, static_cast<std::uint64_t>(res_));
    return fnv1a(rat_.str());
}

std::int64_t Scalar::residue() const {
    if (!field_.is_prime()) throw FieldMismatch("residue() requires a prime field scalar");
    return res_;
}

const Rational& Scalar::rational() const {
    if (field_.is_prime()) throw FieldMismatch("rational() requires a rational scalar");
    return rat_;
}

}  // namespace pwt
