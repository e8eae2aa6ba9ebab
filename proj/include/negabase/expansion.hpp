#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "negabase/field.hpp"
#include "negabase/words.hpp"

namespace negabase {

enum class System { pos, neg };

/// Result of an orbit run: a canonical eventually periodic word, or
/// `inconclusive` when the step cap was reached without a state repeat.
struct ExpansionOutcome {
    std::optional<EPWord> word;
    long steps_taken = 0;

    bool periodic() const { return word.has_value(); }
};

/// Exact orbit of the step map: states[i] = T^i(x), digits[i] = (i+1)-th digit.
struct Orbit {
    std::vector<FieldElem> states;
    std::vector<Digit> digits;
};

/// One step of the Renyi map T(x) = beta*x - floor(beta*x) on [0, 1).
/// Returns the emitted digit and the next state.
inline std::pair<Digit, FieldElem> step_pos(const FieldElem& x) {
    const BasePtr& base = x.base();
    if (x.sign() < 0 || (FieldElem::one(base) - x).sign() <= 0)
        throw std::domain_error("step_pos: x outside [0,1)");
    FieldElem bx = FieldElem::beta(base) * x;
    BigInt d = bx.floor();
    FieldElem next = bx - FieldElem::from_rational(base, BigRat(d));
    return {d.get_si(), next};
}

/// One step of the Ito-Sadahiro map T(x) = -beta*x - floor(-beta*x - l_beta)
/// on I_beta = [l_beta, r_beta).
inline std::pair<Digit, FieldElem> step_neg(const FieldElem& x) {
    const BasePtr& base = x.base();
    FieldElem l = l_endpoint(base);
    FieldElem r = r_endpoint(base);
    if ((x - l).sign() < 0 || (r - x).sign() <= 0)
        throw std::domain_error("step_neg: x outside I_beta");
    FieldElem mbx = -(FieldElem::beta(base) * x);
    BigInt d = (mbx - l).floor();
    FieldElem next = mbx - FieldElem::from_rational(base, BigRat(d));
    return {d.get_si(), next};
}

inline std::pair<Digit, FieldElem> step(System sys, const FieldElem& x) {
    return sys == System::pos ? step_pos(x) : step_neg(x);
}

/// Iterates the step map with exact states. The orbit lives in Q(beta), so
/// the first exact coordinate-vector repeat closes the cycle.
inline ExpansionOutcome expand(System sys, const FieldElem& x, long cap,
                               Orbit* orbit_out = nullptr) {
    std::map<std::vector<BigRat>, long> seen;
    std::vector<FieldElem> states{x};
    std::vector<Digit> digits;
    seen.emplace(x.coords(), 0);
    FieldElem cur = x;
    for (long i = 0; i < cap; ++i) {
        auto [d, next] = step(sys, cur);
        digits.push_back(d);
        auto [it, fresh] = seen.emplace(next.coords(), i + 1);
        states.push_back(next);
        if (!fresh) {
            long j = it->second;
            std::vector<Digit> pre(digits.begin(), digits.begin() + j);
            std::vector<Digit> per(digits.begin() + j, digits.end());
            if (orbit_out) *orbit_out = Orbit{std::move(states), std::move(digits)};
            return {EPWord(std::move(pre), std::move(per)), i + 1};
        }
        cur = next;
    }
    if (orbit_out) *orbit_out = Orbit{std::move(states), std::move(digits)};
    return {std::nullopt, cap};
}

/// d_{-beta}(l_beta); a periodic outcome certifies beta is an Ito-Sadahiro
/// number.
inline ExpansionOutcome d_neg_l(const BasePtr& base, long cap, Orbit* orbit_out = nullptr) {
    return expand(System::neg, l_endpoint(base), cap, orbit_out);
}

/// d*_beta(1) = lim d_beta(1 - eps). Realized through d_beta(1) with the
/// convention: first digit floor(beta), then continue from beta - floor(beta).
/// A finite d_beta(1) = t1...tm 0^omega turns into (t1...t_{m-1}(tm - 1))^omega.
inline ExpansionOutcome d_star_pos_one(const BasePtr& base, long cap) {
    FieldElem b = FieldElem::beta(base);
    BigInt fb = b.floor();
    FieldElem rest = b - FieldElem::from_rational(base, BigRat(fb));
    if (rest.is_zero()) {
        // integer base: d_beta(1) = beta 0^omega, limit word (beta-1)^omega
        return {EPWord({}, {fb.get_si() - 1}), 0};
    }
    ExpansionOutcome tail = expand(System::pos, rest, cap);
    if (!tail.periodic()) return tail;
    std::vector<Digit> full{fb.get_si()};
    if (tail.word->is_finite()) {
        full.insert(full.end(), tail.word->pre.begin(), tail.word->pre.end());
        while (!full.empty() && full.back() == 0) full.pop_back();
        full.back() -= 1;
        return {EPWord({}, std::move(full)), tail.steps_taken};
    }
    full.insert(full.end(), tail.word->pre.begin(), tail.word->pre.end());
    return {EPWord(std::move(full), tail.word->per), tail.steps_taken};
}

/// d_beta(1) itself under the same convention (used for Parry reporting).
inline ExpansionOutcome d_pos_one(const BasePtr& base, long cap) {
    FieldElem b = FieldElem::beta(base);
    BigInt fb = b.floor();
    FieldElem rest = b - FieldElem::from_rational(base, BigRat(fb));
    std::vector<Digit> head{fb.get_si()};
    if (rest.is_zero()) return {EPWord(std::move(head), {0}), 0};
    ExpansionOutcome tail = expand(System::pos, rest, cap);
    if (!tail.periodic()) return tail;
    head.insert(head.end(), tail.word->pre.begin(), tail.word->pre.end());
    return {EPWord(std::move(head), tail.word->per), tail.steps_taken};
}

/// Expansion of an arbitrary value: the least k >= 0 scaling y into the
/// fundamental domain, plus the digit word of the scaled value. Leading
/// zeros are kept.
inline std::pair<long, ExpansionOutcome> expand_any(System sys, const FieldElem& y, long cap) {
    const BasePtr& base = y.base();
    FieldElem b = FieldElem::beta(base);
    if (sys == System::pos) {
        if (y.sign() < 0) throw std::domain_error("positive system needs y >= 0");
        FieldElem scaled = y;
        long k = 0;
        while ((FieldElem::one(base) - scaled).sign() <= 0) {
            scaled = scaled / b;
            ++k;
        }
        return {k, expand(System::pos, scaled, cap)};
    }
    FieldElem l = l_endpoint(base);
    FieldElem r = r_endpoint(base);
    FieldElem scaled = y;
    FieldElem mb = -b;
    long k = 0;
    while ((scaled - l).sign() < 0 || (r - scaled).sign() <= 0) {
        scaled = scaled / mb;
        ++k;
    }
    return {k, expand(System::neg, scaled, cap)};
}

enum class Finiteness { finite, infinite_periodic, inconclusive };

/// Whether d_{-beta}(x) has suffix 0^omega: the exact orbit reaches 0.
inline Finiteness is_finite_neg(const FieldElem& x, long cap) {
    ExpansionOutcome out = expand(System::neg, x, cap);
    if (!out.periodic()) return Finiteness::inconclusive;
    return out.word->is_finite() ? Finiteness::finite : Finiteness::infinite_periodic;
}

/// Exact value of the word pre (per)^omega in base s (s = beta or -beta),
/// via the geometric series: sum_i d_i s^-i.
inline FieldElem word_value(const BasePtr& base, const EPWord& w, System sys) {
    FieldElem b = FieldElem::beta(base);
    FieldElem s = sys == System::pos ? b : -b;
    FieldElem sinv = s.inverse();
    FieldElem acc = FieldElem::zero(base);
    FieldElem pw = FieldElem::one(base);
    for (Digit d : w.pre) {
        pw = pw * sinv;
        acc = acc + pw * BigRat(d);
    }
    // periodic block value at scale s^-m: (sum d_{m+i} s^{p-i}) / (s^p - 1)
    FieldElem num = FieldElem::zero(base);
    for (Digit d : w.per) num = num * s + FieldElem::from_rational(base, BigRat(d));
    FieldElem sp = FieldElem::one(base);
    for (std::size_t i = 0; i < w.per.size(); ++i) sp = sp * s;
    acc = acc + pw * (num / (sp - FieldElem::one(base)));
    return acc;
}

}  // namespace negabase
