#include <doctest.h>

#include "ulrich/lattice.hpp"

using namespace ulrich;

TEST_CASE("pairing basics") {
    CHECK(self_intersection(H) == 3);
    CHECK(self_intersection(K) == 3);
    CHECK(intersect(H, K) == -3);
    CHECK(degree(H) == 3);
    CHECK(degree(D0) == 6);
    CHECK(self_intersection(D0) == 8);
    CHECK(K == -H);

    DivisorClass d{4, {2, 1, 1, 1, 1, 0}};
    DivisorClass e1{0, {-1, 0, 0, 0, 0, 0}};
    CHECK(intersect(d, e1) == 2);  // D.E_i reads off b_i
    CHECK(self_intersection(e1) == -1);
}

TEST_CASE("arithmetic and ordering") {
    DivisorClass d{1, {1, 0, 0, 0, 0, 0}};
    CHECK(2 * d == d + d);
    CHECK(d - d == DivisorClass{});
    CHECK((-d).a == -1);
    CHECK(DivisorClass{1, {0, 0, 0, 0, 0, 0}} < DivisorClass{1, {0, 0, 0, 0, 0, 1}});
    CHECK(DivisorClass{1, {9, 9, 9, 9, 9, 9}} < DivisorClass{2, {0, 0, 0, 0, 0, 0}});
}

TEST_CASE("arithmetic genus by adjunction") {
    CHECK(arithmetic_genus(H) == 1);  // plane sections are elliptic
    DivisorClass t{1, {0, 0, 0, 0, 0, 0}};
    CHECK(arithmetic_genus(t) == 0);  // rational twisted cubic
    DivisorClass line{0, {-1, 0, 0, 0, 0, 0}};
    CHECK(arithmetic_genus(line) == 0);
    // a(a-3) - sum b_i(b_i - 1) is always even, so the genus is integral
    CHECK(arithmetic_genus(DivisorClass{1, {1, 1, 0, 0, 0, 0}}) == 0);
    CHECK(arithmetic_genus(DivisorClass{5, {2, 2, 1, 1, 1, 1}}).has_value());
}

TEST_CASE("overflow is detected") {
    DivisorClass big{INT64_MAX, {}};
    CHECK_THROWS_AS(big + big, overflow_error);
    CHECK_THROWS_AS(self_intersection(big), overflow_error);
}

TEST_CASE("text form round trip") {
    DivisorClass d{10, {5, 3, 3, 2, 2, 0}};
    CHECK(to_string(d) == "10;5,3,3,2,2,0");
    CHECK(parse_divisor_class(to_string(d)) == d);
    CHECK(parse_divisor_class(" 4 ; 2, 1, 1, 1, 1, 0 ") == D0);
    CHECK(parse_divisor_class("-3;-1,-1,-1,-1,-1,-1") == K);

    CHECK_THROWS_AS(parse_divisor_class(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_divisor_class("4;2,1,1,1,1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_divisor_class("4;2,1,1,1,1,0,0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_divisor_class("4:2,1,1,1,1,0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_divisor_class("a;b,c,d,e,f,g"), std::invalid_argument);
    CHECK_THROWS_AS(parse_divisor_class("4;2,1,1,1,1,0 junk"), std::invalid_argument);
}
