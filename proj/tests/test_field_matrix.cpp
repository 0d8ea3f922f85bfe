#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pwt/matrix.hpp"
#include "pwt/util.hpp"

using namespace pwt;

TEST_CASE("scalar arithmetic over GF(p) and Q") {
    Field g5 = Field::gf(5);
    CHECK(Scalar::of(g5, 3) + Scalar::of(g5, 4) == Scalar::of(g5, 2));
    CHECK(Scalar::of(g5, 3) * Scalar::of(g5, 4) == Scalar::of(g5, 2));
    CHECK(Scalar::of(g5, 3).inverse() == Scalar::of(g5, 2));
    CHECK(Scalar::of(g5, -1) == Scalar::of(g5, 4));

    Field qq = Field::rationals();
    Scalar half = Scalar::ratio(qq, 1, 2);
    CHECK(half + half == Scalar::one(qq));
    CHECK(half.inverse() == Scalar::of(qq, 2));
    CHECK_THROWS_AS(Scalar::zero(qq).inverse(), ArithmeticError);

    CHECK_THROWS_AS(Scalar::of(g5, 1) + Scalar::of(qq, 1), FieldMismatch);
    CHECK_THROWS_AS(Scalar::of(g5, 1) + Scalar::of(Field::gf(7), 1), FieldMismatch);
    CHECK_THROWS_AS(Field::gf(6), ArithmeticError);
}

TEST_CASE("rank: identity, zero, and a dependent row pair over GF(5)") {
    Field g5 = Field::gf(5);
    CHECK(rank(Matrix::identity(g5, 2)) == 2);
    CHECK(rank(Matrix(g5, 2, 2)) == 0);
    CHECK(rank(Matrix::from_rows(g5, {{1, 2}, {2, 4}})) == 1);
}

TEST_CASE("kernel bases") {
    Field g5 = Field::gf(5);
    CHECK(kernel_basis(Matrix::identity(g5, 3)).cols() == 0);
    CHECK(kernel_basis(Matrix(g5, 2, 3)).cols() == 3);

    Matrix row = Matrix::from_rows(g5, {{1, 1}});
    Matrix kb = kernel_basis(row);
    REQUIRE(kb.cols() == 1);
    CHECK(kb(0, 0) == -kb(1, 0));
    CHECK(!kb(0, 0).is_zero());
}

TEST_CASE("solve: identity, inconsistent, and back-substitution over GF(5)") {
    Field g5 = Field::gf(5);
    Matrix b = Matrix::from_rows(g5, {{2}, {1}});
    auto x0 = solve(Matrix::identity(g5, 2), b);
    REQUIRE(x0.has_value());
    CHECK(*x0 == b);

    CHECK(!solve(Matrix(g5, 2, 2), b).has_value());

    Matrix a = Matrix::from_rows(g5, {{1, 1}, {0, 1}});
    auto x = solve(a, b);
    REQUIRE(x.has_value());
    CHECK(*x == Matrix::from_rows(g5, {{1}, {1}}));
}

TEST_CASE("rank-nullity and exact solve, over both backends") {
    for (Field k : {Field::gf(2), Field::gf(101), Field::rationals()}) {
        SplitMix64 gen(7);
        for (int trial = 0; trial < 40; ++trial) {
            std::size_t r = 1 + gen.below(5), c = 1 + gen.below(5);
            Matrix m(k, r, c);
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < c; ++j)
                    m(i, j) = Scalar::of(k, static_cast<long long>(gen.below(7)) - 3);
            CHECK(rank(m) + kernel_basis(m).cols() == c);

            Matrix x(k, c, 1);
            for (std::size_t j = 0; j < c; ++j) x(j, 0) = Scalar::of(k, static_cast<long long>(gen.below(7)) - 3);
            auto sol = solve(m, m * x);
            REQUIRE(sol.has_value());
            CHECK(m * *sol == m * x);
        }
    }
}

TEST_CASE("deterministic results across repeated runs") {
    Field k = Field::gf(101);
    Matrix m = Matrix::from_rows(k, {{3, 1, 4}, {1, 5, 9}, {2, 6, 5}});
    auto r1 = rref(m);
    auto r2 = rref(m);
    CHECK(r1.r == r2.r);
    CHECK(r1.pivots == r2.pivots);
    CHECK(m.hash() == m.hash());
}

TEST_CASE("split_complement produces a section of the quotient") {
    Field k = Field::rationals();
    Matrix s = Matrix::from_rows(k, {{1, 2}, {2, 4}, {0, 0}});
    SplitBasis sb = split_complement(s);
    CHECK(sb.sub.cols() == 1);
    CHECK(sb.complement.cols() == 2);
    CHECK(sb.projection * sb.section == Matrix::identity(k, 2));
    CHECK((sb.projection * sb.sub).is_zero());
}

TEST_CASE("degenerate shapes") {
    Field k = Field::gf(3);
    Matrix e(k, 0, 0);
    CHECK(rank(e) == 0);
    CHECK(kernel_basis(Matrix(k, 0, 2)).cols() == 2);
    Matrix tall(k, 2, 0);
    CHECK((tall * Matrix(k, 0, 3)).is_zero());
    auto sol = solve(Matrix(k, 2, 0), Matrix(k, 2, 1));
    CHECK(sol.has_value());
}
