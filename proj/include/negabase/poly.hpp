#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "negabase/rational.hpp"

namespace negabase {

/// Integer polynomial, coefficients in ascending degree order.
/// Normalized: no trailing zero coefficients (zero polynomial is empty).
struct IntPoly {
    std::vector<BigInt> coeffs;

    IntPoly() = default;
    explicit IntPoly(std::vector<BigInt> c) : coeffs(std::move(c)) { normalize(); }

    void normalize() {
        while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    }

    bool is_zero() const { return coeffs.empty(); }
    int degree() const { return static_cast<int>(coeffs.size()) - 1; }

    const BigInt& leading() const {
        if (is_zero()) throw std::logic_error("leading coefficient of zero polynomial");
        return coeffs.back();
    }

    BigInt coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(coeffs.size())) return BigInt(0);
        return coeffs[i];
    }

    bool operator==(const IntPoly& o) const = default;

    BigRat eval(const BigRat& x) const {
        BigRat acc(0);
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + BigRat(*it);
        return acc;
    }

    IntPoly derivative() const {
        std::vector<BigInt> d;
        for (std::size_t i = 1; i < coeffs.size(); ++i) d.push_back(coeffs[i] * BigInt(static_cast<long>(i)));
        return IntPoly(std::move(d));
    }

    BigInt content() const {
        BigInt g(0);
        for (const auto& c : coeffs) {
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        }
        return g;
    }

    /// Content-free copy with positive leading coefficient.
    IntPoly primitive_part() const {
        if (is_zero()) return {};
        BigInt g = content();
        if (leading() < 0) g = -g;
        std::vector<BigInt> c;
        c.reserve(coeffs.size());
        for (const auto& x : coeffs) c.push_back(x / g);
        return IntPoly(std::move(c));
    }

    bool is_monic() const { return !is_zero() && leading() == 1; }

    /// Palindrome coefficient test (p(x) = x^n p(1/x)).
    bool is_self_reciprocal() const {
        if (is_zero()) return false;
        std::size_t n = coeffs.size();
        for (std::size_t i = 0; i < n; ++i)
            if (coeffs[i] != coeffs[n - 1 - i]) return false;
        return true;
    }

    std::string coeff_list_str() const {
        if (is_zero()) return "0";
        std::string s;
        for (std::size_t i = 0; i < coeffs.size(); ++i) {
            if (i) s += ",";
            s += coeffs[i].get_str();
        }
        return s;
    }

    /// Human-oriented form like "x^3-x-1" (descending powers).
    std::string pretty() const;
};

/// Rational-coefficient polynomial, ascending order, normalized.
struct RatPoly {
    std::vector<BigRat> coeffs;

    RatPoly() = default;
    explicit RatPoly(std::vector<BigRat> c) : coeffs(std::move(c)) { normalize(); }
    explicit RatPoly(const IntPoly& p) {
        coeffs.reserve(p.coeffs.size());
        for (const auto& c : p.coeffs) coeffs.emplace_back(c);
    }

    void normalize() {
        while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    }

    bool is_zero() const { return coeffs.empty(); }
    int degree() const { return static_cast<int>(coeffs.size()) - 1; }

    const BigRat& leading() const {
        if (is_zero()) throw std::logic_error("leading coefficient of zero polynomial");
        return coeffs.back();
    }

    BigRat coeff(int i) const {
        if (i < 0 || i >= static_cast<int>(coeffs.size())) return BigRat(0);
        return coeffs[i];
    }

    bool operator==(const RatPoly& o) const = default;

    BigRat eval(const BigRat& x) const {
        BigRat acc(0);
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    RatPoly derivative() const {
        std::vector<BigRat> d;
        for (std::size_t i = 1; i < coeffs.size(); ++i) d.push_back(coeffs[i] * BigRat(static_cast<long>(i)));
        return RatPoly(std::move(d));
    }

    RatPoly operator-() const {
        RatPoly r = *this;
        for (auto& c : r.coeffs) c = -c;
        return r;
    }

    friend RatPoly operator+(const RatPoly& a, const RatPoly& b) {
        std::vector<BigRat> c(std::max(a.coeffs.size(), b.coeffs.size()), BigRat(0));
        for (std::size_t i = 0; i < a.coeffs.size(); ++i) c[i] += a.coeffs[i];
        for (std::size_t i = 0; i < b.coeffs.size(); ++i) c[i] += b.coeffs[i];
        return RatPoly(std::move(c));
    }

    friend RatPoly operator-(const RatPoly& a, const RatPoly& b) { return a + (-b); }

    friend RatPoly operator*(const RatPoly& a, const RatPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<BigRat> c(a.coeffs.size() + b.coeffs.size() - 1, BigRat(0));
        for (std::size_t i = 0; i < a.coeffs.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs.size(); ++j) c[i + j] += a.coeffs[i] * b.coeffs[j];
        return RatPoly(std::move(c));
    }

    RatPoly scaled(const BigRat& s) const {
        RatPoly r = *this;
        for (auto& c : r.coeffs) c *= s;
        r.normalize();
        return r;
    }

    RatPoly monic() const {
        if (is_zero()) return {};
        return scaled(BigRat(1) / leading());
    }
};

/// Euclidean division: a = b*q + r with deg r < deg b.
inline std::pair<RatPoly, RatPoly> poly_divmod(const RatPoly& a, const RatPoly& b) {
    if (b.is_zero()) throw std::invalid_argument("polynomial division by zero");
    RatPoly rem = a;
    std::vector<BigRat> q(a.coeffs.size(), BigRat(0));
    const int db = b.degree();
    while (!rem.is_zero() && rem.degree() >= db) {
        int shift = rem.degree() - db;
        BigRat f = rem.leading() / b.leading();
        q[shift] = f;
        for (int i = 0; i <= db; ++i) rem.coeffs[i + shift] -= f * b.coeffs[i];
        rem.normalize();
    }
    return {RatPoly(std::move(q)), rem};
}

/// Monic gcd over Q.
inline RatPoly poly_gcd(RatPoly a, RatPoly b) {
    while (!b.is_zero()) {
        RatPoly r = poly_divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.is_zero() ? a : a.monic();
}

/// Squarefree part of p as a primitive integer polynomial.
inline IntPoly squarefree_part(const IntPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("squarefree part of zero polynomial");
    RatPoly rp(p);
    RatPoly g = poly_gcd(rp, rp.derivative());
    RatPoly q = poly_divmod(rp, g).first;
    // clear denominators
    BigInt lcm(1);
    for (const auto& c : q.coeffs) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
    std::vector<BigInt> ic;
    ic.reserve(q.coeffs.size());
    for (const auto& c : q.coeffs) {
        BigRat v = c * BigRat(lcm);
        ic.push_back(v.get_num());
    }
    return IntPoly(std::move(ic)).primitive_part();
}

/// True iff b divides a exactly over Q.
inline bool poly_divides(const IntPoly& b, const IntPoly& a) {
    return poly_divmod(RatPoly(a), RatPoly(b)).second.is_zero();
}

inline std::string IntPoly::pretty() const {
    if (is_zero()) return "0";
    std::string s;
    for (int i = degree(); i >= 0; --i) {
        BigInt c = coeff(i);
        if (c == 0) continue;
        bool first = s.empty();
        if (c < 0)
            s += first ? "-" : " - ";
        else if (!first)
            s += " + ";
        BigInt a = abs(c);
        if (a != 1 || i == 0) s += a.get_str();
        if (i > 0) {
            if (a != 1) s += "*";
            s += "x";
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

}  // namespace negabase
