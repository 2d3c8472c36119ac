#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "symrep/errors.hpp"
#include "symrep/intpoly.hpp"
#include "symrep/structured.hpp"

using symrep::Int;
using symrep::IntMatrix;
using symrep::IntPoly;

namespace {

const std::vector<IntPoly> kCorpus = {
    IntPoly{-3, 1},          IntPoly{-2, 0, 1},       IntPoly{-3, 0, 1},      IntPoly{-1, -1, 1},
    IntPoly{-1, -3, 0, 1},   IntPoly{1, -2, -1, 1},   IntPoly{2, 0, -4, 0, 1},
};

IntPoly random_poly(std::mt19937& rng, int max_deg, int bound) {
    std::uniform_int_distribution<int> deg_dist(0, max_deg);
    std::uniform_int_distribution<long> coeff_dist(-bound, bound);
    int n = deg_dist(rng);
    std::vector<Int> c(n + 1);
    for (int i = 0; i <= n; ++i) c[i] = coeff_dist(rng);
    return IntPoly(c);
}

IntPoly random_monic(std::mt19937& rng, int max_deg, int bound) {
    std::uniform_int_distribution<int> deg_dist(1, max_deg);
    std::uniform_int_distribution<long> coeff_dist(-bound, bound);
    int n = deg_dist(rng);
    std::vector<Int> c(n + 1);
    for (int i = 0; i < n; ++i) c[i] = coeff_dist(rng);
    c[n] = 1;
    return IntPoly(c);
}

}  // namespace

TEST_CASE("companion") {
    CHECK(symrep::companion(IntPoly{-1, -1, 1}).matrix == IntMatrix{{0, 1}, {1, 1}});
    CHECK(symrep::companion(IntPoly{-2, 0, 1}).matrix == IntMatrix{{0, 2}, {1, 0}});
    CHECK(symrep::companion(IntPoly{-7, 1}).matrix == IntMatrix{{7}});
    CHECK_THROWS_AS((void)symrep::companion(IntPoly{1, 2}), symrep::NotMonic);
    CHECK_THROWS_AS((void)symrep::companion(IntPoly::constant(1)), symrep::NotMonic);

    for (const IntPoly& f : kCorpus) {
        auto c = symrep::companion(f);
        CHECK(c.n == f.degree());
        CHECK(symrep::charpoly(c.matrix) == f);
    }
}

TEST_CASE("bezout frozen examples") {
    auto b1 = symrep::bezout(IntPoly{-1, -1, 1}, IntPoly{-1, 2});
    CHECK(b1.matrix.matrix() == IntMatrix{{3, -1}, {-1, 2}});

    auto b2 = symrep::bezout(IntPoly{-2, 0, 1}, IntPoly{0, 2});
    CHECK(b2.matrix.matrix() == IntMatrix{{4, 0}, {0, 2}});

    // (X^2 + aX + b, 1): quotient is X + Y + a
    auto b3 = symrep::bezout(IntPoly{7, 3, 1}, IntPoly::constant(1));
    CHECK(b3.matrix.matrix() == IntMatrix{{3, 1}, {1, 0}});
    CHECK(symrep::det(b3.matrix.matrix()) == -1);

    CHECK_THROWS_AS((void)symrep::bezout(IntPoly{1, 2}, IntPoly::constant(1)), symrep::NotMonic);
    CHECK_THROWS_AS((void)symrep::bezout(IntPoly{-2, 0, 1}, IntPoly{0, 0, 3}), symrep::DegreeTooHigh);
}

TEST_CASE("bezout_ffprime") {
    auto b = symrep::bezout_ffprime(IntPoly{-1, -1, 1});
    CHECK(b.matrix.matrix() == IntMatrix{{3, -1}, {-1, 2}});
    CHECK(symrep::det(b.matrix.matrix()) == 5);  // the discriminant

    CHECK(symrep::bezout_ffprime(IntPoly{-4, 1}).matrix.matrix() == IntMatrix{{1}});

    // X^2 + 1 is not real-rooted, so B(f, f') must not be positive definite
    CHECK_FALSE(symrep::is_positive_definite(symrep::bezout_ffprime(IntPoly{1, 0, 1}).matrix));
}

TEST_CASE("bezout additivity in the second argument") {
    std::mt19937 rng(271828);
    for (const IntPoly& f : kCorpus) {
        for (int i = 0; i < 50; ++i) {
            IntPoly g1 = random_poly(rng, f.degree() - 1, 9);
            IntPoly g2 = random_poly(rng, f.degree() - 1, 9);
            IntMatrix lhs = symrep::bezout(f, g1 + g2).matrix.matrix();
            IntMatrix rhs = symrep::bezout(f, g1).matrix.matrix() + symrep::bezout(f, g2).matrix.matrix();
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("companion intertwines the bezout matrix") {
    std::mt19937 rng(314159);
    for (const IntPoly& f : kCorpus) {
        IntMatrix c = symrep::companion(f).matrix;
        for (int i = 0; i < 15; ++i) {
            IntPoly g = random_poly(rng, f.degree() - 1, 9);
            IntMatrix b = symrep::bezout(f, g).matrix.matrix();
            CHECK(symrep::matmul(c, b) == symrep::matmul(b, c.transpose()));
        }
        IntMatrix bf = symrep::bezout_ffprime(f).matrix.matrix();
        CHECK(symrep::matmul(c, bf) == symrep::matmul(bf, c.transpose()));
    }
}

TEST_CASE("det of bezout_ffprime is the resultant up to sign") {
    for (const IntPoly& f : kCorpus) {
        Int d = symrep::det(symrep::bezout_ffprime(f).matrix.matrix());
        Int r = symrep::resultant(f, symrep::derivative(f));
        CHECK(abs(d) == abs(r));
        CHECK(d != 0);  // corpus polynomials are squarefree
    }
    // a non-squarefree f has singular B(f, f')
    IntPoly sq = IntPoly{-1, 1} * IntPoly{-1, 1};
    CHECK(symrep::det(symrep::bezout_ffprime(sq).matrix.matrix()) == 0);
    CHECK(symrep::resultant(sq, symrep::derivative(sq)) == 0);
}

TEST_CASE("bezout positive definite iff strict real zero") {
    for (const IntPoly& f : kCorpus)
        CHECK(symrep::is_positive_definite(symrep::bezout_ffprime(f).matrix));

    std::mt19937 rng(161803);
    int strict_count = 0;
    for (int i = 0; i < 500; ++i) {
        IntPoly f = random_monic(rng, 5, 6);
        bool strict = symrep::is_strict_real_zero(f);
        strict_count += strict;
        CAPTURE(f.to_string());
        CHECK(symrep::is_positive_definite(symrep::bezout_ffprime(f).matrix) == strict);
    }
    CHECK(strict_count > 0);
}
