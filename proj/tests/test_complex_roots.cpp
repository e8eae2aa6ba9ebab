#include <catch2/catch_amalgamated.hpp>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <algorithm>
#include <complex>
#include <vector>

#include "negabase/complex_roots.hpp"
#include "negabase/parse.hpp"

using namespace negabase;

namespace {

// Independent oracle: root moduli via eigenvalues of the companion matrix.
std::vector<double> companion_moduli(const IntPoly& p) {
    IntPoly f = squarefree_part(p);
    int n = f.degree();
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
    double lead = f.leading().get_d();
    for (int i = 0; i < n; ++i) {
        m(i, n - 1) = -f.coeff(i).get_d() / lead;
        if (i + 1 < n) m(i + 1, i) = 1.0;
    }
    Eigen::EigenSolver<Eigen::MatrixXd> es(m);
    std::vector<double> mods;
    for (int i = 0; i < n; ++i) mods.push_back(std::abs(es.eigenvalues()[i]));
    std::sort(mods.begin(), mods.end());
    return mods;
}

RootIsolation largest_real_root(const IntPoly& p) {
    auto roots = isolate_real_roots(p);
    REQUIRE(!roots.empty());
    return roots.back();
}

}  // namespace

TEST_CASE("plastic number conjugate pair modulus is beta^(-1/2)") {
    IntPoly p = parse_poly("x^3-x-1");
    auto [lo, hi] = max_other_root_modulus(p, largest_real_root(p), BigRat(1, 100000));
    // product of all three roots is 1, so the complex pair has modulus
    // 1/sqrt(beta) ~ 0.86884
    CHECK(lo.get_d() == Catch::Approx(0.868837).margin(1e-4));
    CHECK(hi - lo <= BigRat(1, 100000));
    CHECK(lo <= BigRat(868837, 1000000) + BigRat(1, 10000));
    CHECK(hi >= BigRat(868837, 1000000) - BigRat(1, 10000));
}

TEST_CASE("golden mean conjugate modulus") {
    IntPoly p = parse_poly("x^2-x-1");
    auto [lo, hi] = max_other_root_modulus(p, largest_real_root(p), BigRat(1, 1 << 20));
    CHECK(lo.get_d() == Catch::Approx(0.6180339887).margin(1e-6));
}

TEST_CASE("degree one polynomial has no conjugates") {
    IntPoly p = parse_poly("x-2");
    CHECK_THROWS_AS(max_other_root_modulus(p, largest_real_root(p), BigRat(1, 100)),
                    std::domain_error);
}

TEST_CASE("enclosures always contain the oracle moduli at 4x precision") {
    for (const char* expr :
         {"x^2-x-1", "x^3-x-1", "x^2-2*x-1", "x^3-x^2-1", "x^4-x^3-x^2+1",
          "x^10+x^9-x^7-x^6-x^5-x^4-x^3+x+1", "x^5-3*x^2+1", "x^2-3*x+1"}) {
        IntPoly p = parse_poly(expr);
        BigRat prec(1, 1 << 16);
        auto [lo, hi] = max_other_root_modulus(p, largest_real_root(p), prec);
        auto mods = companion_moduli(p);
        // drop the modulus matching beta (the largest real root here is also
        // the largest in modulus for all polys above... except we just take
        // the max non-beta value from the oracle by removing one instance of
        // the largest-real-root modulus)
        RootIsolation beta = largest_real_root(p).refined(BigRat(1, 1 << 24));
        double bval = beta.mid().get_d();
        auto it = std::min_element(mods.begin(), mods.end(), [&](double a, double b) {
            return std::abs(a - bval) < std::abs(b - bval);
        });
        mods.erase(it);
        double oracle = *std::max_element(mods.begin(), mods.end());
        CHECK(lo.get_d() <= oracle + 1e-9);
        CHECK(hi.get_d() >= oracle - 1e-9);
        CHECK((hi - lo) <= prec);
    }
}

TEST_CASE("certified discs are disjoint and resolve every root") {
    IntPoly p = parse_poly("x^4-x^3-x^2+1");
    auto discs = certify_roots(p, BigRat(1, 1 << 12));
    REQUIRE(discs.size() == 4);
    for (std::size_t i = 0; i < discs.size(); ++i)
        for (std::size_t j = i + 1; j < discs.size(); ++j) {
            BigRat s = discs[i].radius + discs[j].radius;
            CHECK((discs[i].center - discs[j].center).norm2() > s * s);
        }
    // root x = 1 must be one of them
    int hits = 0;
    for (const auto& d : discs)
        if (d.touches_real_interval(BigRat(1), BigRat(1))) ++hits;
    CHECK(hits == 1);
}
