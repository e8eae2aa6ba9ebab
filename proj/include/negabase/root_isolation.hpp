#pragma once

#include <memory>
#include <stdexcept>
#include <utility>
#include <vector>

#include "negabase/poly.hpp"
#include "negabase/rational.hpp"

namespace negabase {

/// Sturm chain of a squarefree polynomial, shared by the isolations that
/// were produced from it.
class SturmChain {
  public:
    explicit SturmChain(const IntPoly& squarefree) : poly_(squarefree) {
        RatPoly p0(squarefree);
        RatPoly p1 = p0.derivative();
        chain_.push_back(p0);
        if (!p1.is_zero()) chain_.push_back(p1);
        while (chain_.size() >= 2 && !chain_.back().is_zero()) {
            RatPoly r = poly_divmod(chain_[chain_.size() - 2], chain_.back()).second;
            if (r.is_zero()) break;
            chain_.push_back(-r);
        }
    }

    const IntPoly& poly() const { return poly_; }

    int sign_variations(const BigRat& x) const {
        int var = 0, prev = 0;
        for (const auto& p : chain_) {
            int s = sgn(p.eval(x));
            if (s == 0) continue;
            if (prev != 0 && s != prev) ++var;
            prev = s;
        }
        return var;
    }

    /// Number of distinct real roots in (a, b].
    int count_roots(const BigRat& a, const BigRat& b) const {
        return sign_variations(a) - sign_variations(b);
    }

  private:
    static int sgn(const BigRat& q) { return mpq_sgn(q.get_mpq_t()); }

    IntPoly poly_;
    std::vector<RatPoly> chain_;
};

/// Isolating interval (lo, hi] holding exactly one real root of `polynomial`.
/// `squarefree` is the isolation substrate (the squarefree part of the input);
/// refinement bisects with exact sign tests on it.
struct RootIsolation {
    IntPoly polynomial;   // as supplied by the caller
    IntPoly squarefree;   // squarefree primitive part; what the interval isolates
    BigRat lo, hi;
    bool multiplicity_free = true;

    BigRat width() const { return hi - lo; }
    BigRat mid() const { return (lo + hi) / 2; }

    bool root_is_rational() const { return squarefree.eval(hi) == 0; }

    /// Narrow (lo, hi] until hi - lo <= target. Pure bisection; the root
    /// stays inside by the sign-change invariant.
    void refine_to(const BigRat& target) {
        while (width() > target) {
            if (root_is_rational()) {
                BigRat m = mid();
                lo = (m < hi) ? m : lo;
                if (hi - lo > target) lo = hi - target;
                continue;
            }
            BigRat m = mid();
            BigRat fm = squarefree.eval(m);
            if (fm == 0) {
                // root exactly at the midpoint; snap hi onto it
                hi = m;
                lo = m - target / 2;
                continue;
            }
            BigRat flo = squarefree.eval(lo);
            if (mpq_sgn(flo.get_mpq_t()) * mpq_sgn(fm.get_mpq_t()) < 0)
                hi = m;
            else
                lo = m;
        }
    }

    /// Interval narrowed to the requested width, without mutating this.
    RootIsolation refined(const BigRat& target) const {
        RootIsolation r = *this;
        r.refine_to(target);
        return r;
    }

    bool contains(const BigRat& x) const { return lo < x && x <= hi; }
};

/// Cauchy bound: all real roots of p lie in [-B, B].
inline BigRat cauchy_root_bound(const IntPoly& p) {
    BigRat m(0);
    BigRat lead = rat_abs(BigRat(p.leading()));
    for (int i = 0; i < p.degree(); ++i) {
        BigRat a = rat_abs(BigRat(p.coeff(i))) / lead;
        if (a > m) m = a;
    }
    return m + 1;
}

namespace detail {

inline void isolate_rec(const SturmChain& st, const IntPoly& orig, bool sqfree,
                        const BigRat& lo, const BigRat& hi, std::vector<RootIsolation>& out) {
    int n = st.count_roots(lo, hi);
    if (n == 0) return;
    if (n == 1) {
        const IntPoly& f = st.poly();
        // Ensure a usable endpoint configuration for sign bisection: either
        // the root sits exactly at hi, or f changes sign across (lo, hi).
        BigRat a = lo, b = hi;
        while (f.eval(b) != 0 && f.eval(a) == 0) {
            // lo is a root of f but not a root counted in (lo, hi]; nudge right
            BigRat m = (a + b) / 2;
            if (st.count_roots(m, b) == 1)
                a = m;
            else
                b = m;
        }
        out.push_back(RootIsolation{orig, f, a, b, sqfree});
        return;
    }
    BigRat m = (lo + hi) / 2;
    if (st.poly().eval(m) == 0) {
        // carve a tiny interval around the midpoint root first
        BigRat eps(1, 2);
        while (st.count_roots(m - eps, m) != 1) eps /= 2;
        out.push_back(RootIsolation{orig, st.poly(), m - eps, m, sqfree});
        isolate_rec(st, orig, sqfree, lo, m - eps, out);
        isolate_rec(st, orig, sqfree, m, hi, out);
        return;
    }
    isolate_rec(st, orig, sqfree, lo, m, out);
    isolate_rec(st, orig, sqfree, m, hi, out);
}

}  // namespace detail

/// One isolating interval per distinct real root, in increasing order.
inline std::vector<RootIsolation> isolate_real_roots(const IntPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("cannot isolate roots of the zero polynomial");
    if (p.degree() == 0) return {};
    IntPoly f = squarefree_part(p);
    bool sqfree = (f.degree() == p.degree());
    SturmChain st(f);
    BigRat b = cauchy_root_bound(f);
    std::vector<RootIsolation> out;
    detail::isolate_rec(st, p, sqfree, -b, b, out);
    std::sort(out.begin(), out.end(),
              [](const RootIsolation& x, const RootIsolation& y) { return x.lo < y.lo; });
    return out;
}

}  // namespace negabase
