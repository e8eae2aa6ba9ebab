#pragma once

#include <optional>
#include <string>
#include <utility>

#include "negabase/complex_roots.hpp"
#include "negabase/expansion.hpp"
#include "negabase/ispoly.hpp"

namespace negabase {

enum class Verdict { yes, no, borderline };

inline const char* verdict_str(Verdict v) {
    switch (v) {
        case Verdict::yes: return "yes";
        case Verdict::no: return "no";
        default: return "borderline";
    }
}

struct PeriodicData {
    EPWord word;
    long m;
    long p;
};

/// Per-base classification record.
struct ClassificationReport {
    IntPoly base_poly;
    std::pair<BigRat, BigRat> beta_enclosure;
    Verdict is_perron = Verdict::borderline;
    Verdict is_pisot = Verdict::borderline;
    Verdict is_salem = Verdict::borderline;
    std::optional<PeriodicData> parry;           // d*_beta(1)
    std::optional<PeriodicData> ito_sadahiro;    // d_{-beta}(l_beta)
    std::optional<ISPolyResult> is_poly;
    bool degree_bound_ok = false;      // deg(min_poly) <= m + p
    bool minpoly_divides_isp = false;  // min_poly | P over Q
    BoundCheck root_bound = BoundCheck::undecided;  // non-beta roots of P inside |z| < 2
    std::optional<std::pair<BigRat, BigRat>> conjugate_max_modulus;
    long cap = 0;
};

namespace detail {

/// Salem shape test: self-reciprocal minimal polynomial of degree >= 4 whose
/// roots other than beta and 1/beta all have modulus enclosures containing 1.
/// Sidesteps the impossible strict numeric comparison against the unit circle.
inline bool salem_by_reciprocity(const BasePtr& base, const BigRat& prec) {
    const IntPoly& mp = base->min_poly();
    if (mp.degree() < 4 || !mp.is_self_reciprocal()) return false;
    auto real_roots = isolate_real_roots(mp);
    // the reciprocal root 1/beta is the unique real root inside (0, 1)
    const RootIsolation* recip = nullptr;
    int inside = 0;
    for (auto& r : real_roots) {
        RootIsolation rr = r.refined(BigRat(1, 1 << 16));
        if (rr.lo >= 0 && rr.hi < 1) {
            ++inside;
            recip = &r;
        }
    }
    if (inside != 1) return false;
    auto [discs, beta_idx] = certify_roots_excluding(mp, base->root(), prec);
    RootIsolation rr = recip->refined(prec / 2);
    int recip_idx = -1;
    for (std::size_t i = 0; i < discs.size(); ++i)
        if (discs[i].touches_real_interval(rr.lo, rr.hi)) recip_idx = static_cast<int>(i);
    if (recip_idx < 0 || recip_idx == beta_idx) return false;
    BigRat one(1);
    for (std::size_t i = 0; i < discs.size(); ++i) {
        if (static_cast<int>(i) == beta_idx || static_cast<int>(i) == recip_idx) continue;
        if (!discs[i].contains(one)) return false;
    }
    return true;
}

}  // namespace detail

/// Full per-base report: Parry data, Ito-Sadahiro data, the IS polynomial
/// with its divisibility/degree/root-bound facts, and the number-theoretic
/// flags decided from certified conjugate moduli.
inline ClassificationReport classify(const BasePtr& base, long cap = 100000) {
    ClassificationReport rep;
    rep.base_poly = base->min_poly();
    rep.cap = cap;
    rep.beta_enclosure = base->interval(BigRat(1, 1u << 24));

    const BigRat prec(1, 1u << 24);
    const int n = base->degree();
    if (n == 1) {
        bool alg_int = base->is_algebraic_integer();
        rep.is_perron = alg_int ? Verdict::yes : Verdict::no;
        rep.is_pisot = alg_int ? Verdict::yes : Verdict::no;
        rep.is_salem = Verdict::no;
    } else {
        auto [clo, chi] = max_other_root_modulus(base->min_poly(), base->root(), prec);
        rep.conjugate_max_modulus = {clo, chi};
        if (chi < 1) {
            rep.is_pisot = Verdict::yes;
            rep.is_salem = Verdict::no;
        } else if (clo > 1) {
            rep.is_pisot = Verdict::no;
            rep.is_salem = Verdict::no;
        } else if (detail::salem_by_reciprocity(base, prec)) {
            rep.is_pisot = Verdict::no;
            rep.is_salem = Verdict::yes;
        }
        auto [blo, bhi] = rep.beta_enclosure;
        if (chi < blo)
            rep.is_perron = Verdict::yes;
        else if (clo > bhi)
            rep.is_perron = Verdict::no;
        if (rep.is_salem == Verdict::yes && rep.is_perron == Verdict::borderline) {
            // Salem conjugates stay at the unit circle, strictly under beta
            rep.is_perron = Verdict::yes;
        }
    }

    ExpansionOutcome parry = d_star_pos_one(base, cap);
    if (parry.periodic())
        rep.parry = PeriodicData{*parry.word, static_cast<long>(parry.word->preperiod_len()),
                                 static_cast<long>(parry.word->period_len())};

    Orbit orbit;
    ExpansionOutcome is = d_neg_l(base, cap, &orbit);
    if (is.periodic()) {
        rep.ito_sadahiro = PeriodicData{*is.word, static_cast<long>(is.word->preperiod_len()),
                                        static_cast<long>(is.word->period_len())};
        ISPolyResult isp = build_is_poly(*is.word);
        rep.degree_bound_ok = base->min_poly().degree() <= isp.m + isp.p;
        rep.minpoly_divides_isp = poly_divides(base->min_poly(), isp.polynomial);
        rep.root_bound = verify_root_bound(isp.polynomial, base, BigRat(2), BigRat(1, 1u << 20));
        rep.is_poly = std::move(isp);
    }
    return rep;
}

}  // namespace negabase
