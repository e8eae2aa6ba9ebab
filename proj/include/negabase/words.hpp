#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace negabase {

using Digit = long;

/// Eventually periodic infinite digit word  pre (per)^omega.
/// Canonical form: the period is primitive and the preperiod is minimal
/// (no trailing preperiod digit can be absorbed by rotating the period).
struct EPWord {
    std::vector<Digit> pre;
    std::vector<Digit> per;

    EPWord() : per{0} {}
    EPWord(std::vector<Digit> preperiod, std::vector<Digit> period)
        : pre(std::move(preperiod)), per(std::move(period)) {
        if (per.empty()) throw std::invalid_argument("period must be nonempty");
        canonicalize();
    }

    std::size_t preperiod_len() const { return pre.size(); }
    std::size_t period_len() const { return per.size(); }

    /// Digit at 1-based position i of the infinite word.
    Digit at(std::size_t i) const {
        if (i == 0) throw std::out_of_range("positions are 1-based");
        --i;
        if (i < pre.size()) return pre[i];
        return per[(i - pre.size()) % per.size()];
    }

    Digit max_digit() const {
        Digit m = 0;
        for (Digit d : pre) m = std::max(m, d);
        for (Digit d : per) m = std::max(m, d);
        return m;
    }

    bool is_purely_periodic() const { return pre.empty(); }

    /// Suffix 0^omega (canonical period is the single digit 0).
    bool is_finite() const { return per.size() == 1 && per[0] == 0; }

    bool operator==(const EPWord& o) const = default;

    /// Tail starting at 1-based position i, as an eventually periodic word.
    EPWord tail(std::size_t i) const {
        if (i == 0) throw std::out_of_range("positions are 1-based");
        --i;
        if (i <= pre.size())
            return EPWord(std::vector<Digit>(pre.begin() + i, pre.end()), per);
        std::size_t k = (i - pre.size()) % per.size();
        std::vector<Digit> rot(per.begin() + k, per.end());
        rot.insert(rot.end(), per.begin(), per.begin() + k);
        return EPWord({}, std::move(rot));
    }

    void canonicalize() {
        // primitive period: smallest divisor-length prefix that tiles it
        for (std::size_t d = 1; d <= per.size() / 2; ++d) {
            if (per.size() % d) continue;
            bool tiles = true;
            for (std::size_t i = d; i < per.size() && tiles; ++i)
                if (per[i] != per[i % d]) tiles = false;
            if (tiles) {
                per.resize(d);
                break;
            }
        }
        // absorb preperiod digits equal to the period's last digit
        while (!pre.empty() && pre.back() == per.back()) {
            per.insert(per.begin(), per.back());
            per.pop_back();
            pre.pop_back();
        }
    }

    /// "d1 d2 ... dm | p1 p2 ... pp"  (empty preperiod allowed, bar mandatory).
    std::string str() const {
        std::string s;
        for (std::size_t i = 0; i < pre.size(); ++i) {
            if (i) s += " ";
            s += std::to_string(pre[i]);
        }
        s += pre.empty() ? "|" : " |";
        for (Digit d : per) s += " " + std::to_string(d);
        return s;
    }

    static EPWord parse(const std::string& text) {
        auto bar = text.find('|');
        if (bar == std::string::npos) throw std::invalid_argument("word needs a '|' separator");
        auto digits = [](const std::string& part) {
            std::vector<Digit> out;
            std::istringstream in(part);
            long d;
            while (in >> d) {
                if (d < 0) throw std::invalid_argument("negative digit");
                out.push_back(d);
            }
            if (!in.eof()) throw std::invalid_argument("bad digit in word");
            return out;
        };
        std::vector<Digit> pre = digits(text.substr(0, bar));
        std::vector<Digit> per = digits(text.substr(bar + 1));
        if (per.empty()) throw std::invalid_argument("word needs a nonempty period");
        return EPWord(std::move(pre), std::move(per));
    }
};

enum class Rel { LT, EQ, GT };

/// Comparison verdict with the first differing 1-based position (absent on EQ).
struct OrderVerdict {
    Rel relation;
    std::optional<std::size_t> witness;
};

namespace detail {

/// Two eventually periodic words agreeing on m_u + m_v + 2*lcm(p_u, p_v)
/// positions are equal: beyond position max(m_u, m_v) both are periodic with
/// period lcm(p_u, p_v), and the agreed stretch covers a full common period
/// twice, so the periodic parts coincide.
inline std::size_t compare_horizon(const EPWord& u, const EPWord& v) {
    std::size_t l = std::lcm(u.period_len(), v.period_len());
    return u.preperiod_len() + v.preperiod_len() + 2 * l;
}

}  // namespace detail

/// Exact lexicographic comparison of the two infinite words.
inline OrderVerdict lex_compare(const EPWord& u, const EPWord& v) {
    std::size_t h = detail::compare_horizon(u, v);
    for (std::size_t j = 1; j <= h; ++j) {
        Digit a = u.at(j), b = v.at(j);
        if (a != b) return {a < b ? Rel::LT : Rel::GT, j};
    }
    return {Rel::EQ, std::nullopt};
}

/// Alternate order: the first differing position j decides by the sign of
/// (-1)^j, i.e. u < v iff u_j*(-1)^j < v_j*(-1)^j.
inline OrderVerdict alt_compare(const EPWord& u, const EPWord& v) {
    std::size_t h = detail::compare_horizon(u, v);
    for (std::size_t j = 1; j <= h; ++j) {
        Digit a = u.at(j), b = v.at(j);
        if (a != b) {
            bool odd = (j % 2) == 1;
            bool lt = odd ? (a > b) : (a < b);
            return {lt ? Rel::LT : Rel::GT, j};
        }
    }
    return {Rel::EQ, std::nullopt};
}

/// Admissibility verdict; `violating_shift` is the 1-based shift index of the
/// first tail breaking the bound.
struct Admissibility {
    bool ok;
    std::optional<std::size_t> violating_shift;
};

/// Parry condition: every tail of `word` is strictly lexicographically below
/// d*_beta(1). The m + p distinct tails cover all shifts.
inline Admissibility is_admissible_pos(const EPWord& word, const EPWord& dstar1) {
    std::size_t shifts = word.preperiod_len() + word.period_len();
    for (std::size_t i = 1; i <= shifts; ++i) {
        if (lex_compare(word.tail(i), dstar1).relation != Rel::LT) return {false, i};
    }
    return {true, std::nullopt};
}

/// Ito-Sadahiro condition: d_{-beta}(l) <=_alt tail <_alt d*_{-beta}(r)
/// for every tail.
inline Admissibility is_admissible_neg(const EPWord& word, const EPWord& dl,
                                       const EPWord& dstar_r) {
    std::size_t shifts = word.preperiod_len() + word.period_len();
    for (std::size_t i = 1; i <= shifts; ++i) {
        EPWord t = word.tail(i);
        if (alt_compare(dl, t).relation == Rel::GT) return {false, i};
        if (alt_compare(t, dstar_r).relation != Rel::LT) return {false, i};
    }
    return {true, std::nullopt};
}

/// The reference word d*_{-beta}(r_beta) derived from d_{-beta}(l_beta):
/// purely periodic with odd period (d1...d_{2k+1})^omega maps to
/// (0 d1 ... (d_{2k+1}-1))^omega; every other shape gets 0 prepended.
inline EPWord d_star_neg_r(const EPWord& dl) {
    if (dl.is_purely_periodic() && dl.period_len() % 2 == 1) {
        std::vector<Digit> p;
        p.push_back(0);
        p.insert(p.end(), dl.per.begin(), dl.per.end());
        if (p.back() == 0)
            throw std::invalid_argument("odd pure period ending in 0 cannot be a d_{-beta}(l)");
        --p.back();
        return EPWord({}, std::move(p));
    }
    std::vector<Digit> pre;
    pre.push_back(0);
    pre.insert(pre.end(), dl.pre.begin(), dl.pre.end());
    return EPWord(std::move(pre), dl.per);
}

}  // namespace negabase
