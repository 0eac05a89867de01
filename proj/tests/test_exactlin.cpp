#include "affsub/errors.hpp"
#include "affsub/linalg.hpp"
#include "test_support.hpp"

#include <doctest.h>

using namespace affsub;
using affsub::testing::random_matrix;
using affsub::testing::random_rational;
using affsub::testing::random_vector;

TEST_CASE("rational canonical form and text") {
    CHECK(Rational::parse("3/6").str() == "1/2");
    CHECK(Rational::parse("-4/2").str() == "-2");
    CHECK(Rational::parse("0/7").str() == "0");
    CHECK(Rational::parse("+5").str() == "5");
    CHECK(Rational(6, -4).str() == "-3/2");
    CHECK(Rational(6, -4).denominator() == 2);
    CHECK(Rational::parse("12345678901234567890123/3").str() == "4115226300411522630041");
    CHECK_THROWS_AS(Rational::parse("1/0"), InputError);
    CHECK_THROWS_AS(Rational::parse("abc"), InputError);
    CHECK_THROWS_AS(Rational::parse("1/-2"), InputError);
    CHECK_THROWS_AS(Rational::parse(""), InputError);
    CHECK_THROWS_AS(Rational::parse("-"), InputError);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("rational field axioms hold structurally") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 500; ++i) {
        const Rational a = random_rational(rng, 50, 30);
        const Rational b = random_rational(rng, 50, 30);
        const Rational c = random_rational(rng, 50, 30);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == Rational(0));
        if (!a.is_zero()) CHECK(a * (Rational(1) / a) == Rational(1));
        // a/b + c/d = (ad + bc)/(bd), reduced
        const Rational sum = a + c;
        const mpz_class num = a.numerator() * c.denominator() + c.numerator() * a.denominator();
        const mpz_class den = a.denominator() * c.denominator();
        mpq_class expected(num, den);
        expected.canonicalize();
        CHECK(sum.raw() == expected);
        CHECK(sum.denominator() > 0);
        CHECK(gcd(sum.numerator(), sum.denominator()) == 1);
    }
}

TEST_CASE("rank examples") {
    CHECK(rank(Matrix::identity(3)) == 3);
    CHECK(rank(Matrix{{1, 2}, {2, 4}}) == 1);
    CHECK(rank(Matrix::zero(2, 3)) == 0);
    CHECK(rank(Matrix(0, 4)) == 0);
}

TEST_CASE("kernel basis examples") {
    SUBCASE("single constraint") {
        const Matrix m{{1, 0, -1}};
        const Subspace k = kernel_basis(m);
        REQUIRE(k.dim() == 2);
        for (const auto& v : k.basis()) CHECK(is_zero(m * v));
        // Free columns 1 and 2, in order, first nonzero entry normalized to 1.
        CHECK(k.basis()[0] == Vector{0, 1, 0});
        CHECK(k.basis()[1] == Vector{1, 0, 1});
    }
    SUBCASE("full rank") {
        const Subspace k = kernel_basis(Matrix::identity(2));
        CHECK(k.dim() == 0);
        CHECK(k.ambient_dim() == 2);
    }
    SUBCASE("rank one") {
        const Subspace k = kernel_basis(Matrix{{1, 1}, {1, 1}});
        REQUIRE(k.dim() == 1);
        CHECK(k.basis()[0] == Vector{1, -1});
    }
    SUBCASE("normalization uses first nonzero entry") {
        const Subspace k = kernel_basis(Matrix{{2, 3}});
        REQUIRE(k.dim() == 1);
        CHECK(k.basis()[0] == Vector{1, Rational(-2, 3)});
    }
}

TEST_CASE("solve examples") {
    const auto x = solve(Matrix::identity(2), Vector{Rational(3, 2), -1});
    REQUIRE(x);
    CHECK(*x == Vector{Rational(3, 2), -1});

    const Matrix row{{1, 1}};
    const auto y = solve(row, Vector{0});
    REQUIRE(y);
    CHECK((*y)[0] == -(*y)[1]);
    CHECK(row * *y == Vector{0});

    CHECK_FALSE(solve(Matrix{{1}, {1}}, Vector{0, 1}));
    CHECK_THROWS_AS(solve(Matrix::identity(2), Vector{1}), InputError);
}

TEST_CASE("subspace membership") {
    CHECK(subspace_contains(Subspace(3), Vector{0, 0, 0}));
    CHECK(subspace_contains(Subspace(2, {Vector{1, 0}}), Vector{0, 0}));
    CHECK_FALSE(subspace_contains(Subspace(2, {Vector{1, 0}}), Vector{0, 1}));
    CHECK(subspace_contains(Subspace(2, {Vector{1, 1}}), Vector{2, 2}));
    CHECK_THROWS_AS(subspace_contains(Subspace(2), Vector{1}), InputError);
    CHECK_THROWS_AS(Subspace(2, {Vector{1, 1}, Vector{2, 2}}), InputError);
    CHECK(Subspace::span(2, {Vector{1, 1}, Vector{2, 2}, Vector{0, 1}}).dim() == 2);
}

TEST_CASE("determinant") {
    CHECK(determinant(Matrix{{Rational(1, 4), Rational(-5, 4)}, {Rational(5, 4), Rational(1, 4)}}) == Rational(13, 8));
    CHECK(determinant(Matrix{{0, 1}, {1, 0}}) == Rational(-1));
    CHECK(determinant(Matrix{{1, 2}, {2, 4}}) == Rational(0));
}

TEST_CASE("rank-nullity, exact annihilation and transpose rank on random matrices") {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<std::size_t> dim(1, 6);
    for (int trial = 0; trial < 300; ++trial) {
        const Matrix m = random_matrix(rng, dim(rng), dim(rng), trial % 3 == 0 ? 0.7 : 0.3);
        const Subspace k = kernel_basis(m);
        CHECK(rank(m) + k.dim() == m.cols());
        CHECK(rank(m) == rank(m.transpose()));
        CHECK(row_reduce(m).rank() == rank(m));
        for (const auto& v : k.basis()) {
            CHECK(is_zero(m * v));
            for (const auto& x : v)
                if (!x.is_zero()) {
                    CHECK(x == Rational(1));
                    break;
                }
        }
    }
}

TEST_CASE("solve and kernel are consistent") {
    std::mt19937_64 rng(77);
    std::uniform_int_distribution<std::size_t> dim(1, 5);
    int consistent = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const Matrix m = random_matrix(rng, dim(rng), dim(rng), 0.4);
        // Half the right-hand sides are in the column space by construction.
        const Vector rhs = trial % 2 ? m * random_vector(rng, m.cols()) : random_vector(rng, m.rows());
        const auto x = solve(m, rhs);
        if (trial % 2) REQUIRE(x);
        if (!x) {
            // Inconsistent: rank of [m | rhs] exceeds rank of m.
            Matrix aug(m.rows(), m.cols() + 1);
            for (std::size_t r = 0; r < m.rows(); ++r) {
                for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
                aug(r, m.cols()) = rhs[r];
            }
            CHECK(rank(aug) == rank(m) + 1);
            continue;
        }
        ++consistent;
        CHECK(m * *x == rhs);
        const Subspace kernel = kernel_basis(m);
        for (const auto& k : kernel.basis()) CHECK(m * (*x + k) == rhs);
    }
    CHECK(consistent >= 150);
}
