#pragma once

#include <vector>

#include "pwt/matrix.hpp"

namespace pwt {

// Univariate polynomial with exact coefficients, ascending order, no
// trailing zeros (the zero polynomial has an empty coefficient list).
class Poly {
public:
    explicit Poly(const Field& f) : field_(f) {}
    Poly(const Field& f, std::vector<Scalar> coeffs);
    static Poly constant(const Scalar& c);
    static Poly x_minus(const Scalar& c);  // t - c
    static Poly from_ints(const Field& f, const std::vector<long long>& coeffs);

    const Field& field() const { return field_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for 0
    Scalar coeff(std::size_t i) const;
    const Scalar& lead() const;

    Poly monic() const;
    Poly derivative() const;
    Scalar eval(const Scalar& at) const;

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly& a, const Poly& b);

    std::string to_string() const;

private:
    Field field_;
    std::vector<Scalar> c_;
    void normalize();
};

// Quotient and remainder of a by b (b nonzero).
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
bool divides(const Poly& d, const Poly& a);
Poly gcd(const Poly& a, const Poly& b);  // monic (or zero)
Poly poly_pow(const Poly& a, int e);

struct PolyFactor {
    Poly factor;       // monic, degree >= 1
    int multiplicity;
};

// Splits f (degree >= 1) into pairwise coprime monic pieces whose product is
// f up to a unit. Over GF(p) the pieces are irreducible; over Q they combine
// all rational roots with Yun squarefree parts, so an individual piece may
// be a product of distinct irrationals of equal multiplicity. Splitting
// completeness over Q is therefore partial, which downstream code treats as
// "no further split found".
std::vector<PolyFactor> primary_coprime_parts(const Poly& f);

// Full irreducible factorization over GF(p); throws on a rational field.
std::vector<PolyFactor> factor_gf(const Poly& f);

// Minimal polynomial of a square matrix, monic.
Poly minimal_polynomial(const Matrix& t);

}  // namespace pwt
