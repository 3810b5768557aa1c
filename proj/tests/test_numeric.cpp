#include "doctest.h"
#include "stabwall/numeric.hpp"

using namespace stabwall;

TEST_CASE("rational parsing and printing round-trips") {
    CHECK(rat_str(parse_rat("-5/4")) == "-5/4");
    CHECK(rat_str(parse_rat("9/16")) == "9/16");
    CHECK(rat_str(parse_rat("7")) == "7");
    CHECK(parse_rat("6/4") == Rat(3, 2));
    CHECK_THROWS_AS(parse_rat("1/0"), ConfigError);
    CHECK_THROWS_AS(parse_rat("x"), ConfigError);
}

TEST_CASE("integer sqrt helpers") {
    CHECK(isqrt_floor(Int(0)) == 0);
    CHECK(isqrt_floor(Int(15)) == 3);
    CHECK(isqrt_floor(Int(16)) == 4);
    CHECK(floor_sqrt_rat(Rat(1, 2)) == 0);
    CHECK(floor_sqrt_rat(Rat(9, 4)) == 1);
    // floor(1/3 + sqrt(2)) = 1, ceil(1/3 - sqrt(2)) = -1
    CHECK(floor_add_sqrt(Rat(1, 3), Rat(2)) == 1);
    CHECK(ceil_sub_sqrt(Rat(1, 3), Rat(2)) == -1);
    // exact boundary: floor(0 + sqrt(9/4)) with rational sqrt
    CHECK(floor_add_sqrt(Rat(0), Rat(9, 4)) == 1);
    CHECK(floor_add_sqrt(Rat(1, 2), Rat(9, 4)) == 2);
}

TEST_CASE("square-free extraction") {
    Int sq;
    CHECK(square_free_core(Int(8), sq) == 2);
    CHECK(sq == 2);
    CHECK(square_free_core(Int(1), sq) == 1);
    CHECK(square_free_core(Int(49), sq) == 1);
    CHECK(sq == 7);
    CHECK(square_free_core(Int(12), sq) == 3);
}

TEST_CASE("QuadExt normalization and arithmetic") {
    QuadExt a(Rat(0), Rat(1), Int(8));  // sqrt(8) = 2 sqrt(2)
    CHECK(a.radicand() == 2);
    CHECK(a.surd_coeff() == 2);
    QuadExt b(Rat(0), Rat(3), Int(4));  // 3 sqrt(4) = 6, rational
    CHECK(b.is_rational());
    CHECK(b.as_rational() == 6);

    QuadExt x(Rat(1, 2), Rat(1, 3), Int(2));
    QuadExt y(Rat(-1, 2), Rat(2, 3), Int(2));
    CHECK((x + y) == QuadExt(Rat(0), Rat(1), Int(2)));
    QuadExt prod = x * y;  // (1/2+1/3 s)(-1/2+2/3 s), s^2=2: -1/4 + 4/9 + s(1/3-1/6)
    CHECK(prod == QuadExt(Rat(7, 36), Rat(1, 6), Int(2)));
    QuadExt quot = prod / y;
    CHECK(quot == x);
    CHECK_THROWS_AS(x / QuadExt(Rat(0)), PreconditionError);
}

TEST_CASE("QuadExt exact sign analysis") {
    // 7/5 - sqrt(2) < 0, 3/2 - sqrt(2) > 0
    CHECK(QuadExt(Rat(7, 5), Rat(-1), Int(2)).sign() == -1);
    CHECK(QuadExt(Rat(3, 2), Rat(-1), Int(2)).sign() == 1);
    CHECK(QuadExt(Rat(0)).sign() == 0);
    CHECK(QuadExt::sqrt_of(Rat(1, 8)) < QuadExt(Rat(1, 2)));
    CHECK(QuadExt::sqrt_of(Rat(1, 8)) > QuadExt(Rat(1, 3)));
    // sqrt(8) == 2 sqrt(2) across representations
    CHECK(QuadExt::sqrt_of(Rat(8)) == QuadExt(Rat(0), Rat(2), Int(2)));
}

TEST_CASE("QuadExt rejects mixed radicands") {
    QuadExt r2 = QuadExt::sqrt_of(Rat(2));
    QuadExt r3 = QuadExt::sqrt_of(Rat(3));
    CHECK_THROWS_AS((void)(r2 + r3), PreconditionError);
    CHECK_NOTHROW((void)(r2 + QuadExt(Rat(5))));
}

TEST_CASE("rational gcd generates the right grid") {
    CHECK(rat_gcd(Rat(1, 2), Rat(1, 3)) == Rat(1, 6));
    CHECK(rat_gcd(Rat(0), Rat(-3, 4)) == Rat(3, 4));
}
