#pragma once

#include <stdexcept>
#include <vector>

#include "negabase/complex_roots.hpp"
#include "negabase/expansion.hpp"
#include "negabase/field.hpp"
#include "negabase/poly.hpp"
#include "negabase/words.hpp"

namespace negabase {

/// The Ito-Sadahiro polynomial of a base, built from the canonical
/// d_{-beta}(l_beta) = d1...dm (d_{m+1}...d_{m+p})^omega.
struct ISPolyResult {
    IntPoly polynomial;       // sign convention of the defining formula
    IntPoly monic_normalized; // +-polynomial with positive leading coefficient
    long m = 0;
    long p = 1;
    std::vector<Digit> digits;  // d1..d_{m+p}
};

/// P(x) = (-x)^{m+1} sum_{i=0}^{p-1}(-x)^i
///        + ((-x)^p - 1) sum_{i=1}^{m} d_i (-x)^{m-i}
///        + sum_{i=m+1}^{m+p} d_i (-x)^{m+p-i},
/// expanded to integer coefficients; beta is a root.
inline ISPolyResult build_is_poly(const EPWord& word) {
    const long m = static_cast<long>(word.preperiod_len());
    const long p = static_cast<long>(word.period_len());
    std::vector<Digit> d = word.pre;
    d.insert(d.end(), word.per.begin(), word.per.end());

    std::vector<BigInt> c(m + p + 1, BigInt(0));
    auto add_neg_x_term = [&](long deg, const BigInt& coef) {
        // coefficient of (-x)^deg contributes coef * (-1)^deg at x^deg
        c[deg] += (deg % 2 == 0) ? coef : -coef;
    };
    for (long i = 0; i < p; ++i) add_neg_x_term(m + 1 + i, BigInt(1));
    for (long i = 1; i <= m; ++i) {
        add_neg_x_term(m - i + p, BigInt(d[i - 1]));
        add_neg_x_term(m - i, -BigInt(d[i - 1]));
    }
    for (long i = m + 1; i <= m + p; ++i) add_neg_x_term(m + p - i, BigInt(d[i - 1]));

    ISPolyResult res;
    res.polynomial = IntPoly(std::move(c));
    res.monic_normalized = res.polynomial.leading() < 0
                               ? IntPoly([&] {
                                     std::vector<BigInt> n;
                                     for (const auto& x : res.polynomial.coeffs) n.push_back(-x);
                                     return n;
                                 }())
                               : res.polynomial;
    res.m = m;
    res.p = p;
    res.digits = std::move(d);
    return res;
}

/// Simplified form for p = 1, d_{m+1} = 0 (finite d_{-beta}(l_beta)):
/// P(x) = (-x)^{m+1} + d1(-x)^m + (d2-d1)(-x)^{m-1} + ... + (dm-d_{m-1})(-x) - dm.
inline IntPoly build_is_poly_simple(const EPWord& word) {
    if (word.period_len() != 1 || word.per[0] != 0)
        throw std::invalid_argument("simple form needs period 0^omega");
    const long m = static_cast<long>(word.preperiod_len());
    std::vector<BigInt> c(m + 2, BigInt(0));
    auto add = [&](long deg, const BigInt& coef) {
        c[deg] += (deg % 2 == 0) ? coef : -coef;
    };
    add(m + 1, BigInt(1));
    if (m >= 1) add(m, BigInt(word.pre[0]));
    for (long i = 2; i <= m; ++i) add(m - i + 1, BigInt(word.pre[i - 1] - word.pre[i - 2]));
    if (m >= 1) c[0] += -BigInt(word.pre[m - 1]);
    return IntPoly(std::move(c));
}

/// Evaluation of an integer polynomial at a field element (Horner).
inline FieldElem poly_eval_field(const IntPoly& p, const FieldElem& x) {
    FieldElem acc = FieldElem::zero(x.base());
    for (auto it = p.coeffs.rbegin(); it != p.coeffs.rend(); ++it)
        acc = acc * x + FieldElem::from_rational(x.base(), BigRat(*it));
    return acc;
}

/// Q(x) with P(x) = (x - beta) Q(x), coefficients in Q(beta), built from the
/// orbit values T_i = T^i(l_beta):
///   Q(x) = -(-x)^{m+p-1}
///          + sum_{i=m}^{m+p-2} (T_{m+p-1-i} - T_0 - 1)(-x)^i
///          + sum_{i=0}^{m-1}   (T_{m+p-1-i} - T_{m-1-i})(-x)^i.
/// The two sums give the proof's two coefficient families, recorded
/// separately for the range checks.
struct QuotientPoly {
    std::vector<FieldElem> coeffs;       // coefficient of x^i
    std::vector<FieldElem> first_type;   // T_{m+p-1-i} - T_0 - 1, i = m..m+p-2
    std::vector<FieldElem> second_type;  // T_{m+p-1-i} - T_{m-1-i}, i = 0..m-1
};

inline QuotientPoly quotient_poly(const BasePtr& base, const EPWord& word, const Orbit& orbit) {
    const long m = static_cast<long>(word.preperiod_len());
    const long p = static_cast<long>(word.period_len());
    if (static_cast<long>(orbit.states.size()) < m + p + 1)
        throw std::invalid_argument("orbit too short for quotient construction");
    const auto& T = orbit.states;
    FieldElem one = FieldElem::one(base);

    QuotientPoly q;
    std::vector<FieldElem> neg_x_coeffs(m + p, FieldElem::zero(base));
    neg_x_coeffs[m + p - 1] = -one;
    for (long i = m; i <= m + p - 2; ++i) {
        FieldElem v = T[m + p - 1 - i] - T[0] - one;
        neg_x_coeffs[i] = neg_x_coeffs[i] + v;
        q.first_type.push_back(v);
    }
    for (long i = 0; i <= m - 1; ++i) {
        FieldElem v = T[m + p - 1 - i] - T[m - 1 - i];
        neg_x_coeffs[i] = neg_x_coeffs[i] + v;
        q.second_type.push_back(v);
    }
    for (long i = 0; i < m + p; ++i)
        q.coeffs.push_back(i % 2 == 0 ? neg_x_coeffs[i] : -neg_x_coeffs[i]);
    return q;
}

/// Exact identity (x - beta) Q(x) = P(x), coefficientwise in Q(beta)[x].
inline bool verify_quotient_identity(const BasePtr& base, const QuotientPoly& q,
                                     const IntPoly& isp) {
    FieldElem b = FieldElem::beta(base);
    const long n = static_cast<long>(q.coeffs.size());
    for (long i = 0; i <= n; ++i) {
        FieldElem lhs = FieldElem::zero(base);
        if (i >= 1) lhs = q.coeffs[i - 1];
        if (i < n) lhs = lhs - b * q.coeffs[i];
        FieldElem rhs = FieldElem::from_rational(base, BigRat(isp.coeff(i)));
        if (!(lhs == rhs)) return false;
    }
    return true;
}

/// First-family coefficients in [-1, 0), second-family in (-1, 1), decided
/// by exact field sign tests.
inline bool check_coefficient_ranges(const BasePtr& base, const QuotientPoly& q) {
    FieldElem one = FieldElem::one(base);
    for (const auto& v : q.first_type) {
        if ((v + one).sign() < 0) return false;  // v >= -1
        if (v.sign() >= 0) return false;         // v < 0
    }
    for (const auto& v : q.second_type) {
        if ((v + one).sign() <= 0) return false;  // v > -1
        if ((one - v).sign() <= 0) return false;  // v < 1
    }
    return true;
}

enum class BoundCheck { holds, fails, undecided };

/// Every root of P other than beta has certified modulus < `bound`.
inline BoundCheck verify_root_bound(const IntPoly& isp, const BasePtr& base,
                                    const BigRat& bound, const BigRat& precision) {
    IntPoly f = squarefree_part(isp);
    if (f.degree() <= 1) return BoundCheck::holds;  // no other roots
    // isolate beta inside the (possibly larger) IS polynomial
    auto roots = isolate_real_roots(isp);
    const RootIsolation* sel = nullptr;
    auto [blo, bhi] = base->interval(BigRat(1, 1024));
    for (auto& r : roots) {
        RootIsolation rr = r.refined(BigRat(1, 4096));
        if (rr.hi >= blo && rr.lo <= bhi) sel = &r;
    }
    if (!sel) throw std::logic_error("beta is not a root of the supplied polynomial");
    BigRat prec = precision;
    for (int i = 0; i < 8; ++i) {
        auto [lo, hi] = max_other_root_modulus(isp, *sel, prec);
        if (hi < bound) return BoundCheck::holds;
        if (lo >= bound) return BoundCheck::fails;
        prec /= 16;
    }
    return BoundCheck::undecided;
}

}  // namespace negabase
