#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qmul/gf2linalg.hpp"
#include "qmul/verify.hpp"
#include "test_util.hpp"

using namespace qmul;
using namespace qmul::test;

namespace {

// Multiplication by 1+x^2 in GF(2^4)/(1+x+x^4): rows 1010 / 0111 / 1011 / 0101.
Gf2Matrix worked_gamma() {
    Gf2Matrix g(4);
    const bool rows[4][4] = {
        {1, 0, 1, 0}, {0, 1, 1, 1}, {1, 0, 1, 1}, {0, 1, 0, 1}};
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) g.set(i, j, rows[i][j]);
    return g;
}

}  // namespace

TEST_CASE("constmult_matrix worked example") {
    const Modulus m({4, 1, 0});
    const Gf2Matrix gamma = constmult_matrix(poly_from_u64(0b101), m);
    CHECK(gamma == worked_gamma());
}

TEST_CASE("constmult_matrix identity and small case") {
    const Modulus m({4, 1, 0});
    CHECK(constmult_matrix(Polynomial::one(), m) == Gf2Matrix::identity(4));

    const Modulus m2({2, 1, 0});
    const Gf2Matrix g = constmult_matrix(poly_from_u64(0b11), m2);
    CHECK(g.at(0, 0));
    CHECK(g.at(1, 0));
    CHECK(g.at(0, 1));
    CHECK_FALSE(g.at(1, 1));

    CHECK_THROWS_AS(constmult_matrix(Polynomial{}, m), std::invalid_argument);
}

TEST_CASE("constmult_matrix columns agree with field_mul") {
    std::mt19937_64 rng(11);
    for (unsigned n : {2u, 4u, 8u, 10u}) {
        const Modulus m = lowest_weight_irreducible(n);
        Polynomial f = random_polynomial(rng, n);
        if (f.is_zero()) f = Polynomial::one();
        const Gf2Matrix gamma = constmult_matrix(f, m);
        for (unsigned j = 0; j < n; ++j) {
            const Polynomial col = field_mul(f, Polynomial::x_pow(j), m);
            for (unsigned i = 0; i < n; ++i) CHECK(gamma.at(i, j) == col.coeff(i));
        }
    }
}

TEST_CASE("lup_decompose worked example") {
    const LupDecomposition lup = lup_decompose(worked_gamma());

    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            const bool expect_l = i == j || (i == 2 && j == 1) || (i == 3 && j == 0);
            const bool expect_u =
                i == j || (i == 0 && j == 2) || (i == 1 && j == 2) || (i == 1 && j == 3);
            CHECK(lup.lower.at(i, j) == expect_l);
            CHECK(lup.upper.at(i, j) == expect_u);
        }
    CHECK(lup.p_inv == std::vector<std::uint32_t>{0, 1, 3, 2});
}

TEST_CASE("lup_decompose of identity") {
    const LupDecomposition lup = lup_decompose(Gf2Matrix::identity(6));
    CHECK(lup.lower == Gf2Matrix::identity(6));
    CHECK(lup.upper == Gf2Matrix::identity(6));
    CHECK(lup.p_inv == identity_perm(6));
}

TEST_CASE("lup_decompose rejects singular input") {
    Gf2Matrix z(3);
    CHECK_THROWS_AS(lup_decompose(z), std::invalid_argument);
    Gf2Matrix dup(3);  // two equal rows
    for (std::size_t j = 0; j < 3; ++j) {
        dup.set(0, j, j != 2);
        dup.set(1, j, j != 2);
        dup.set(2, j, true);
    }
    CHECK_THROWS_AS(lup_decompose(dup), std::invalid_argument);
}

TEST_CASE("lup_decompose recomposes on random invertible matrices") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + rng() % 32;
        const Gf2Matrix g = random_invertible_matrix(rng, n);
        const LupDecomposition lup = lup_decompose(g);

        for (std::size_t i = 0; i < n; ++i) {
            CHECK(lup.lower.at(i, i));
            CHECK(lup.upper.at(i, i));
            for (std::size_t j = i + 1; j < n; ++j) {
                CHECK_FALSE(lup.lower.at(i, j));
                CHECK_FALSE(lup.upper.at(j, i));
            }
        }
        const Gf2Matrix recomposed =
            mat_mul_ref(perm_matrix(lup.p_inv), mat_mul_ref(lup.lower, lup.upper));
        CHECK(recomposed == g);
        CHECK(lup.lower.offdiag_weight() + lup.upper.offdiag_weight() <= n * n - n);
    }
}

TEST_CASE("matvec") {
    const Gf2Matrix gamma = worked_gamma();
    const Polynomial e3 = Polynomial::x_pow(3);
    CHECK(matvec(gamma, e3) == poly_from_u64(0b1110));

    std::mt19937_64 rng(7);
    const Gf2Matrix id = Gf2Matrix::identity(12);
    for (int i = 0; i < 20; ++i) {
        const Polynomial v = random_polynomial(rng, 12);
        CHECK(matvec(id, v) == v);
    }

    const Modulus m({4, 1, 0});
    const Polynomial f = poly_from_u64(0b101);
    for (std::uint64_t v = 0; v < 16; ++v)
        CHECK(matvec(gamma, poly_from_u64(v)) == field_mul(f, poly_from_u64(v), m));

    CHECK_THROWS_AS(matvec(gamma, Polynomial::x_pow(4)), std::invalid_argument);
}
