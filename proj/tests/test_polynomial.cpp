#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pwt/polynomial.hpp"

using namespace pwt;

namespace {

Poly product(const std::vector<PolyFactor>& parts, const Field& k) {
    Poly p = Poly::constant(Scalar::one(k));
    for (const auto& f : parts) p = p * poly_pow(f.factor, f.multiplicity);
    return p;
}

}  // namespace

TEST_CASE("divmod and gcd") {
    Field k = Field::gf(7);
    Poly f = Poly::from_ints(k, {-1, 0, 1});  // t^2 - 1
    Poly g = Poly::from_ints(k, {1, 1});      // t + 1
    auto [q, r] = divmod(f, g);
    CHECK(r.is_zero());
    CHECK(q == Poly::from_ints(k, {-1, 1}));
    CHECK(gcd(f, g) == g.monic());
}

TEST_CASE("factor over GF(p): distinct roots, powers, and t^p - t") {
    Field k = Field::gf(5);
    // (t-1)^2 (t-2) t
    Poly f = poly_pow(Poly::x_minus(Scalar::of(k, 1)), 2) * Poly::x_minus(Scalar::of(k, 2)) *
             Poly::from_ints(k, {0, 1});
    auto parts = factor_gf(f);
    CHECK(parts.size() == 3);
    CHECK(product(parts, k) == f.monic());

    // t^5 - t splits into all five linear factors over GF(5)
    Poly frob = Poly::from_ints(k, {0, -1, 0, 0, 0, 1});
    auto lin = factor_gf(frob);
    CHECK(lin.size() == 5);
    for (const auto& pf : lin) CHECK(pf.factor.degree() == 1);
}

TEST_CASE("factor over GF(2): irreducible quadratic times linear") {
    Field k = Field::gf(2);
    Poly irr = Poly::from_ints(k, {1, 1, 1});  // t^2 + t + 1, irreducible over GF(2)
    Poly f = irr * Poly::x_minus(Scalar::zero(k));
    auto parts = factor_gf(f);
    CHECK(parts.size() == 2);
    bool saw_quadratic = false;
    for (const auto& pf : parts)
        if (pf.factor.degree() == 2) saw_quadratic = pf.factor == irr;
    CHECK(saw_quadratic);
}

TEST_CASE("inseparable part over GF(2): (t^2+t)^2 = t^4 + t^2") {
    Field k = Field::gf(2);
    Poly f = Poly::from_ints(k, {0, 0, 1, 0, 1});  // t^2 (t+1)^2
    auto parts = factor_gf(f);
    CHECK(parts.size() == 2);
    for (const auto& pf : parts) CHECK(pf.multiplicity == 2);
    CHECK(product(parts, k) == f.monic());
}

TEST_CASE("coprime parts over Q: rational roots and multiplicity classes") {
    Field k = Field::rationals();
    // (t - 1)(t + 1) splits via the root scan
    Poly f = Poly::from_ints(k, {-1, 0, 1});
    auto parts = primary_coprime_parts(f);
    CHECK(parts.size() == 2);

    // (t - 1/2)^2 (t - 3)
    Poly g = poly_pow(Poly::x_minus(Scalar::ratio(k, 1, 2)), 2) * Poly::x_minus(Scalar::of(k, 3));
    auto gp = primary_coprime_parts(g);
    CHECK(gp.size() == 2);
    CHECK(product(gp, k) == g.monic());

    // t^2 - 2 has no rational root: stays one piece
    Poly irr = Poly::from_ints(k, {-2, 0, 1});
    CHECK(primary_coprime_parts(irr).size() == 1);

    // (t^2 - 2)(t^2 - 2)^2? multiplicity classes split: (t^2-2) * (t^2-3)^2
    Poly mixed = Poly::from_ints(k, {-2, 0, 1}) * poly_pow(Poly::from_ints(k, {-3, 0, 1}), 2);
    auto mp = primary_coprime_parts(mixed);
    CHECK(mp.size() == 2);
}

TEST_CASE("minimal polynomials") {
    Field k = Field::rationals();
    // Jordan block with eigenvalue 2: (t-2)^2
    Matrix j = Matrix::from_rows(k, {{2, 1}, {0, 2}});
    CHECK(minimal_polynomial(j) == poly_pow(Poly::x_minus(Scalar::of(k, 2)), 2));

    // Diagonal (1, 1): t - 1
    CHECK(minimal_polynomial(Matrix::identity(k, 2)) == Poly::x_minus(Scalar::of(k, 1)));

    // Nilpotent: t^2
    Matrix n = Matrix::from_rows(k, {{0, 1}, {0, 0}});
    CHECK(minimal_polynomial(n) == Poly::from_ints(k, {0, 0, 1}));

    // Companion of t^2+t+1 over GF(2)
    Field g2 = Field::gf(2);
    Matrix c = Matrix::from_rows(g2, {{0, 1}, {1, 1}});
    CHECK(minimal_polynomial(c) == Poly::from_ints(g2, {1, 1, 1}));
}
