#include <catch2/catch_amalgamated.hpp>

#include "negabase/parse.hpp"

using namespace negabase;

TEST_CASE("symbolic polynomial forms") {
    CHECK(parse_poly("x^3-x-1") == IntPoly({-1, -1, 0, 1}));
    CHECK(parse_poly("x^2 - 2*x - 1") == IntPoly({-1, -2, 1}));
    CHECK(parse_poly("-x+2") == IntPoly({2, -1}));
    CHECK(parse_poly("3") == IntPoly({3}));
    CHECK(parse_poly("2*x*x+x^2") == IntPoly({0, 0, 3}));
    CHECK_THROWS_AS(parse_poly("x^"), std::invalid_argument);
    CHECK_THROWS_AS(parse_poly("x+%"), std::invalid_argument);
    CHECK_THROWS_AS(parse_poly("a*x"), std::invalid_argument);
}

TEST_CASE("coefficient-list polynomial form") {
    CHECK(parse_poly("-1,-1,0,1") == parse_poly("x^3-x-1"));
    CHECK(parse_poly(" 2 , -1 ") == parse_poly("-x+2"));
    CHECK_THROWS_AS(parse_poly(""), std::invalid_argument);
}

TEST_CASE("rationals and coordinate vectors") {
    CHECK(parse_rat("3/4") == BigRat(3, 4));
    CHECK(parse_rat("-7") == BigRat(-7));
    CHECK(parse_rat("6/4") == BigRat(3, 2));
    CHECK(rat_str(parse_rat("6/4")) == "3/2");
    CHECK_THROWS_AS(parse_rat("1/0"), std::invalid_argument);
    auto c = parse_coords("1/2,-1,0");
    REQUIRE(c.size() == 3);
    CHECK(c[0] == BigRat(1, 2));
}

TEST_CASE("scan family grammar") {
    Family fam = parse_family("x^2-a*x-b; a=1..3; b=1..a");
    auto polys = fam.enumerate();
    REQUIRE(polys.size() == 6);  // (1,1) (2,1) (2,2) (3,1) (3,2) (3,3)
    CHECK(polys[0] == parse_poly("x^2-x-1"));
    CHECK(polys.back() == parse_poly("x^2-3*x-3"));

    Family single = parse_family("x^3-x-1");
    CHECK(single.enumerate() == std::vector<IntPoly>{parse_poly("x^3-x-1")});

    Family ints = parse_family("x-n; n=2..5");
    CHECK(ints.enumerate().size() == 4);

    CHECK_THROWS_AS(parse_family("x^2-a*x; a=1.."), std::invalid_argument);
    CHECK_THROWS_AS(parse_family(""), std::invalid_argument);
}
