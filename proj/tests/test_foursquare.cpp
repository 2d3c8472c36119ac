#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "symrep/errors.hpp"
#include "symrep/foursquare.hpp"

using symrep::FourSquare;
using symrep::Int;

namespace {

void check_valid(const Int& n) {
    FourSquare fs = symrep::decompose(n);
    CAPTURE(n.get_str());
    CHECK(fs.target == n);
    CHECK(fs.a * fs.a + fs.b * fs.b + fs.c * fs.c + fs.d * fs.d == n);
    CHECK(fs.a >= fs.b);
    CHECK(fs.b >= fs.c);
    CHECK(fs.c >= fs.d);
    CHECK(fs.d >= 0);
    CHECK(fs.valid());
}

}  // namespace

TEST_CASE("frozen small examples") {
    FourSquare z = symrep::decompose(0);
    CHECK(z.a == 0);
    CHECK(z.d == 0);

    FourSquare seven = symrep::decompose(7);
    CHECK(seven.a == 2);
    CHECK(seven.b == 1);
    CHECK(seven.c == 1);
    CHECK(seven.d == 1);

    FourSquare four = symrep::decompose(4);
    CHECK(four.a == 2);
    CHECK(four.b == 0);

    CHECK_THROWS_AS((void)symrep::decompose(Int(-1)), symrep::NegativeInput);
}

TEST_CASE("valid for every n up to 10^4") {
    for (long n = 0; n <= 10000; ++n) check_valid(Int(n));
}

TEST_CASE("determinism") {
    for (long n : {7L, 12L, 123L, 9999L, 1000003L}) {
        FourSquare x = symrep::decompose(Int(n));
        FourSquare y = symrep::decompose(Int(n));
        CHECK(x.a == y.a);
        CHECK(x.b == y.b);
        CHECK(x.c == y.c);
        CHECK(x.d == y.d);
    }
}

TEST_CASE("large inputs") {
    Int big = 1;
    big <<= 100;  // 2^100: power of 4 times 1
    check_valid(big);
    check_valid(big + 7);
    check_valid(big - 1);

    Int ten30("1000000000000000000000000000000");
    check_valid(ten30);
    check_valid(ten30 + 7);
    check_valid(ten30 * 4 + 3);

    // 4^k * (8m + 7) exercises the descent that strips powers of four
    Int awkward = (Int(8) * 123456789 + 7) << 40;
    check_valid(awkward);

    // large perfect square
    Int root("123456789123456789");
    check_valid(root * root);

    // large primes of both residue classes mod 4
    check_valid(Int("1000000000000000003"));
    check_valid(Int("1000000000000000009"));
}
