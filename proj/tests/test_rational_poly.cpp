#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "negabase/parse.hpp"
#include "negabase/poly.hpp"

using namespace negabase;

TEST_CASE("polynomial evaluation at rationals") {
    IntPoly p = parse_poly("x^3-x-1");
    CHECK(p.eval(BigRat(1)) == BigRat(-1));
    CHECK(p.eval(BigRat(2)) == BigRat(5));
    CHECK(p.eval(BigRat(1, 2)) == BigRat(-11, 8));

    IntPoly q = parse_poly("x^4-x^3-x^2+1");
    CHECK(q.eval(BigRat(1)) == BigRat(0));
}

TEST_CASE("division with remainder") {
    auto [quot, rem] = poly_divmod(RatPoly(parse_poly("x^4-x^3-x^2+1")),
                                   RatPoly(parse_poly("x^3-x-1")));
    CHECK(quot == RatPoly(parse_poly("x-1")));
    CHECK(rem.is_zero());

    auto [q2, r2] = poly_divmod(RatPoly(parse_poly("x^2-x-1")), RatPoly(parse_poly("x^2-x-1")));
    CHECK(q2 == RatPoly(parse_poly("1")));
    CHECK(r2.is_zero());

    auto [q3, r3] = poly_divmod(RatPoly(parse_poly("x^2+1")), RatPoly(parse_poly("x")));
    CHECK(q3 == RatPoly(parse_poly("x")));
    CHECK(r3 == RatPoly(parse_poly("1")));

    CHECK_THROWS_AS(poly_divmod(RatPoly(parse_poly("x")), RatPoly{}), std::invalid_argument);
}

TEST_CASE("divmod round-trip on random polynomials") {
    std::mt19937_64 rng(20240811);
    std::uniform_int_distribution<int> deg(0, 6), coef(-9, 9);
    for (int trial = 0; trial < 200; ++trial) {
        auto random_poly = [&](bool nonzero) {
            std::vector<BigRat> c(deg(rng) + 1);
            for (auto& x : c) {
                x = BigRat(coef(rng), 1 + std::abs(coef(rng)));
                x.canonicalize();
            }
            RatPoly p(std::move(c));
            if (nonzero && p.is_zero()) p = RatPoly(parse_poly("1"));
            return p;
        };
        RatPoly a = random_poly(false);
        RatPoly b = random_poly(true);
        auto [q, r] = poly_divmod(a, b);
        CHECK(b * q + r == a);
        CHECK(r.degree() < b.degree());
    }
}

TEST_CASE("gcd and squarefree part") {
    IntPoly p = parse_poly("x^2-x-1");
    RatPoly sq = RatPoly(p) * RatPoly(p) * RatPoly(parse_poly("x-3"));
    std::vector<BigInt> ic;
    for (auto& c : sq.coeffs) ic.push_back(c.get_num());
    IntPoly f = squarefree_part(IntPoly(ic));
    CHECK(f == parse_poly("x^3-4*x^2+2*x+3").primitive_part());
    CHECK(poly_divides(p, f));
}

TEST_CASE("content and primitive part") {
    IntPoly p = parse_poly("-2*x^2+4*x-6");
    CHECK(p.primitive_part() == parse_poly("x^2-2*x+3"));
    CHECK(parse_poly("x^10+x^9-x^7-x^6-x^5-x^4-x^3+x+1").is_self_reciprocal());
    CHECK_FALSE(parse_poly("x^2-x-1").is_self_reciprocal());
}

TEST_CASE("polynomial text round-trip") {
    IntPoly p = parse_poly("1,0,-1,-1,1");
    CHECK(p == parse_poly("x^4-x^3-x^2+1"));
    CHECK(p.coeff_list_str() == "1,0,-1,-1,1");
    CHECK(p.pretty() == "x^4 - x^3 - x^2 + 1");
}
