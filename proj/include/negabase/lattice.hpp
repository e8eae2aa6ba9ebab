#pragma once

#include <algorithm>
#include <optional>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "negabase/expansion.hpp"
#include "negabase/field.hpp"
#include "negabase/words.hpp"

namespace negabase {

/// A beta- or (-beta)-integer: exact value plus its digit word y_k...y_0
/// (most significant first).
struct LatticePoint {
    FieldElem value;
    std::vector<Digit> word;
};

namespace detail {

/// A most-significant-first digit prefix survives against an upper lex bound
/// if no tail of it is already strictly above the bound's matching prefix.
/// Undecided (equal-so-far) tails stay viable; the leaf check settles them.
inline bool prefix_viable_lex(const std::vector<Digit>& w, const EPWord& bound) {
    for (std::size_t s = 0; s < w.size(); ++s) {
        for (std::size_t j = 0; j + s < w.size(); ++j) {
            Digit a = w[s + j], b = bound.at(j + 1);
            if (a < b) break;
            if (a > b) return false;
        }
    }
    return true;
}

inline bool prefix_viable_alt(const std::vector<Digit>& w, const EPWord& dl,
                              const EPWord& dstar_r) {
    for (std::size_t s = 0; s < w.size(); ++s) {
        // against the lower bound dl (must not be alt-below it)
        for (std::size_t j = 0; j + s < w.size(); ++j) {
            Digit a = w[s + j], b = dl.at(j + 1);
            if (a == b) continue;
            bool odd = (j % 2) == 0;  // 1-based position j+1
            bool tail_lt = odd ? (a > b) : (a < b);
            if (tail_lt) return false;
            break;
        }
        // against the upper bound dstar_r (must not be alt-above it)
        for (std::size_t j = 0; j + s < w.size(); ++j) {
            Digit a = w[s + j], b = dstar_r.at(j + 1);
            if (a == b) continue;
            bool odd = (j % 2) == 0;
            bool tail_gt = odd ? (a < b) : (a > b);
            if (tail_gt) return false;
            break;
        }
    }
    return true;
}

inline bool word_admissible_pos(const std::vector<Digit>& w, const EPWord& dstar1) {
    for (std::size_t s = 0; s < w.size(); ++s) {
        EPWord t(std::vector<Digit>(w.begin() + s, w.end()), {0});
        if (lex_compare(t, dstar1).relation != Rel::LT) return false;
    }
    return true;
}

inline bool word_admissible_neg(const std::vector<Digit>& w, const EPWord& dl,
                                const EPWord& dstar_r) {
    for (std::size_t s = 0; s <= w.size(); ++s) {
        EPWord t(std::vector<Digit>(w.begin() + s, w.end()), {0});
        if (alt_compare(dl, t).relation == Rel::GT) return false;
        if (alt_compare(t, dstar_r).relation != Rel::LT) return false;
    }
    return true;
}

}  // namespace detail

/// All y in Z_beta with 0 <= y <= R, sorted ascending. Needs periodic Parry
/// data (d*_beta(1)); words are generated most-significant first with
/// admissibility and value pruning.
inline std::vector<LatticePoint> enumerate_pos(const BasePtr& base, const BigRat& R,
                                               const EPWord& dstar1) {
    if (R <= 0) throw std::invalid_argument("bound must be positive");
    FieldElem b = FieldElem::beta(base);
    FieldElem bound = FieldElem::from_rational(base, R);
    Digit max_digit = dstar1.at(1);

    std::vector<LatticePoint> out;
    out.push_back(LatticePoint{FieldElem::zero(base), {0}});

    // powers beta^0..beta^K while beta^K <= R (leading digit >= 1)
    std::vector<FieldElem> powers{FieldElem::one(base)};
    while ((bound - powers.back() * b).sign() >= 0) powers.push_back(powers.back() * b);

    std::vector<Digit> w;
    auto rec = [&](auto&& self, std::size_t len, const FieldElem& partial) -> void {
        if (w.size() == len) {
            if (detail::word_admissible_pos(w, dstar1))
                out.push_back(LatticePoint{partial, w});
            return;
        }
        std::size_t pos = len - 1 - w.size();  // power of the next digit
        for (Digit d = 0; d <= max_digit; ++d) {
            if (w.empty() && d == 0) continue;  // fixed length, leading digit nonzero
            FieldElem nv = partial + powers[pos] * BigRat(d);
            if ((bound - nv).sign() < 0) break;  // value already exceeds R
            w.push_back(d);
            if (detail::prefix_viable_lex(w, dstar1)) self(self, len, nv);
            w.pop_back();
        }
    };
    for (std::size_t len = 1; len <= powers.size(); ++len) rec(rec, len, FieldElem::zero(base));

    std::sort(out.begin(), out.end(),
              [](const LatticePoint& a, const LatticePoint& b2) { return a.value < b2.value; });
    return out;
}

/// All y in Z_{-beta} with -R <= y <= R, sorted ascending. The word length
/// cap comes from the leading-zero inequality: a length-(k+1) word with
/// nonzero leading digit has |y| >= beta^k/(beta+1), so lengths with
/// beta^k > R(beta+1) cannot land in [-R, R].
inline std::vector<LatticePoint> enumerate_neg(const BasePtr& base, const BigRat& R,
                                               const EPWord& dl) {
    if (R <= 0) throw std::invalid_argument("bound must be positive");
    EPWord dstar_r = d_star_neg_r(dl);
    FieldElem b = FieldElem::beta(base);
    FieldElem mb = -b;
    FieldElem rbound = FieldElem::from_rational(base, R);
    FieldElem lbound = FieldElem::from_rational(base, -R);
    Digit max_digit = FieldElem::beta(base).floor().get_si();

    // largest k with beta^k <= R(beta+1)
    FieldElem cutoff = rbound * (b + FieldElem::one(base));
    std::vector<FieldElem> neg_powers{FieldElem::one(base)};  // (-beta)^i
    FieldElem pospow = FieldElem::one(base);
    for (;;) {
        pospow = pospow * b;
        if ((cutoff - pospow).sign() < 0) break;
        neg_powers.push_back(neg_powers.back() * mb);
    }

    std::vector<LatticePoint> out;
    out.push_back(LatticePoint{FieldElem::zero(base), {0}});
    std::vector<Digit> w;
    auto rec = [&](auto&& self, std::size_t len, const FieldElem& partial) -> void {
        if (w.size() == len) {
            if ((rbound - partial).sign() < 0 || (partial - lbound).sign() < 0) return;
            if (detail::word_admissible_neg(w, dl, dstar_r))
                out.push_back(LatticePoint{partial, w});
            return;
        }
        std::size_t pos = len - 1 - w.size();
        for (Digit d = 0; d <= max_digit; ++d) {
            if (w.empty() && d == 0) continue;
            w.push_back(d);
            if (detail::prefix_viable_alt(w, dl, dstar_r))
                self(self, len, partial + neg_powers[pos] * BigRat(d));
            w.pop_back();
        }
    };
    for (std::size_t len = 1; len <= neg_powers.size(); ++len)
        rec(rec, len, FieldElem::zero(base));

    std::sort(out.begin(), out.end(), [](const LatticePoint& a, const LatticePoint& b2) {
        if (a.value == b2.value) return a.word.size() < b2.word.size();
        return a.value < b2.value;
    });
    // one value can admit admissible words of several lengths; keep the set
    // of values, represented by the shortest word each
    out.erase(std::unique(out.begin(), out.end(),
                          [](const LatticePoint& a, const LatticePoint& b2) {
                              return a.value == b2.value;
                          }),
              out.end());
    return out;
}

/// Exact set of consecutive differences of an ascending point list.
inline std::vector<FieldElem> gap_alphabet(const std::vector<LatticePoint>& points) {
    if (points.size() < 2) throw std::invalid_argument("need at least two points");
    std::vector<FieldElem> gaps;
    for (std::size_t i = 1; i < points.size(); ++i) {
        FieldElem g = points[i].value - points[i - 1].value;
        bool dup = false;
        for (const auto& h : gaps)
            if (h == g) dup = true;
        if (!dup) gaps.push_back(std::move(g));
    }
    return gaps;
}

/// Fin(-beta) membership: scale x into I_beta by powers of -beta and test
/// whether the exact orbit reaches 0.
inline Finiteness fin_membership(const FieldElem& x, long cap) {
    const BasePtr& base = x.base();
    FieldElem l = l_endpoint(base);
    FieldElem r = r_endpoint(base);
    FieldElem mbinv = (-FieldElem::beta(base)).inverse();
    FieldElem scaled = x;
    while ((scaled - l).sign() < 0 || (r - scaled).sign() <= 0) scaled = scaled * mbinv;
    return is_finite_neg(scaled, cap);
}

struct ClosureReport {
    long additions = 0;
    long multiplications = 0;
    long finite = 0;
    long infinite = 0;
    long inconclusive = 0;
};

/// Seeded random sums and products of Fin(-beta) elements, each tested for
/// membership by exact expansion. For a quadratic Pisot base with negative
/// conjugate the expected infinite count is zero.
inline ClosureReport closure_sample(const BasePtr& base, long samples, long cap,
                                    std::uint64_t seed, const EPWord& dl,
                                    const BigRat& pool_bound = BigRat(10)) {
    auto points = enumerate_neg(base, pool_bound, dl);
    FieldElem mbinv = (-FieldElem::beta(base)).inverse();
    std::vector<FieldElem> pool;
    for (const auto& p : points) {
        pool.push_back(p.value);
        pool.push_back(p.value * mbinv);
        pool.push_back(p.value * mbinv * mbinv);
    }
    if (pool.empty()) throw std::logic_error("empty sampling pool");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    ClosureReport rep;
    auto tally = [&](Finiteness f) {
        switch (f) {
            case Finiteness::finite: ++rep.finite; break;
            case Finiteness::infinite_periodic: ++rep.infinite; break;
            default: ++rep.inconclusive; break;
        }
    };
    for (long i = 0; i < samples; ++i) {
        const FieldElem& a = pool[pick(rng)];
        const FieldElem& b = pool[pick(rng)];
        tally(fin_membership(a + b, cap));
        ++rep.additions;
        tally(fin_membership(a * b, cap));
        ++rep.multiplications;
    }
    return rep;
}

}  // namespace negabase
