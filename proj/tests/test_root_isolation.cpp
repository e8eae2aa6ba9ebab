#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "negabase/parse.hpp"
#include "negabase/root_isolation.hpp"

using namespace negabase;

namespace {

// Brute-force real-root counter: scans a fine rational grid and counts sign
// changes plus exact grid hits. Independent of the Sturm machinery.
long sign_scan_root_count(const IntPoly& p, const BigRat& lo, const BigRat& hi, long steps) {
    long count = 0;
    BigRat h = (hi - lo) / BigRat(steps);
    int prev = 0;
    for (long i = 0; i <= steps; ++i) {
        BigRat x = lo + h * BigRat(i);
        BigRat v = p.eval(x);
        int s = mpq_sgn(v.get_mpq_t());
        if (s == 0) {
            ++count;
            prev = 0;
            continue;
        }
        if (prev != 0 && s != prev) ++count;
        prev = s;
    }
    return count;
}

}  // namespace

TEST_CASE("golden-mean quadratic has two real roots") {
    auto roots = isolate_real_roots(parse_poly("x^2-x-1"));
    REQUIRE(roots.size() == 2);
    // (1-sqrt(5))/2 ~ -0.618, (1+sqrt(5))/2 ~ 1.618
    RootIsolation neg = roots[0].refined(BigRat(1, 1000));
    RootIsolation pos = roots[1].refined(BigRat(1, 1000));
    CHECK(neg.contains(BigRat(-309, 500)));
    CHECK(pos.contains(BigRat(809, 500)));
}

TEST_CASE("plastic-number cubic has exactly one real root") {
    auto roots = isolate_real_roots(parse_poly("x^3-x-1"));
    REQUIRE(roots.size() == 1);
    RootIsolation r = roots[0].refined(BigRat(1, 100000));
    // 1.3247 < root < 1.3248
    CHECK(r.lo >= BigRat(13247, 10000));
    CHECK(r.hi <= BigRat(828, 625));
}

TEST_CASE("linear polynomial isolates its rational root") {
    auto roots = isolate_real_roots(parse_poly("x-2"));
    REQUIRE(roots.size() == 1);
    CHECK(roots[0].contains(BigRat(2)));
    RootIsolation r = roots[0].refined(BigRat(1, 1 << 20));
    CHECK(r.contains(BigRat(2)));
}

TEST_CASE("interval endpoints bracket the root") {
    for (const char* expr : {"x^2-x-1", "x^3-x-1", "x^2-2*x-1", "x^3-x^2-1", "x^2-3*x+1"}) {
        auto roots = isolate_real_roots(parse_poly(expr));
        for (auto& r : roots) {
            RootIsolation n = r.refined(BigRat(1, 1024));
            BigRat flo = n.squarefree.eval(n.lo);
            BigRat fhi = n.squarefree.eval(n.hi);
            if (fhi == 0) continue;  // rational root sitting at hi
            CHECK(mpq_sgn(flo.get_mpq_t()) * mpq_sgn(fhi.get_mpq_t()) < 0);
        }
    }
}

TEST_CASE("root count matches the sign-scan oracle") {
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<int> deg(1, 6), coef(-5, 5);
    int interesting = 0;
    for (int trial = 0; trial < 120; ++trial) {
        std::vector<BigInt> c(deg(rng) + 1);
        for (auto& x : c) x = coef(rng);
        IntPoly p(std::move(c));
        if (p.is_zero() || p.degree() < 1) continue;
        IntPoly f = squarefree_part(p);
        BigRat b = cauchy_root_bound(f);
        // fine enough that no grid cell holds two roots of these small polys
        long oracle = sign_scan_root_count(f, -b, b, 4096);
        auto roots = isolate_real_roots(p);
        CHECK(static_cast<long>(roots.size()) == oracle);
        if (!roots.empty()) ++interesting;
    }
    CHECK(interesting > 30);
}

TEST_CASE("repeated roots are isolated once with the flag cleared") {
    // (x-1)^2 (x+2)
    IntPoly p = parse_poly("x^3-3*x+2");
    auto roots = isolate_real_roots(p);
    REQUIRE(roots.size() == 2);
    CHECK_FALSE(roots[0].multiplicity_free);
    CHECK(roots[0].contains(BigRat(-2)));
    CHECK(roots[1].refined(BigRat(1, 100)).contains(BigRat(1)));
}
