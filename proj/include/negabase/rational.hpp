#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace negabase {

/// Arbitrary-precision integer and rational scalars. Rationals are kept
/// canonical (positive denominator, reduced) by the underlying library.
using BigInt = mpz_class;
using BigRat = mpq_class;

inline BigInt rat_floor(const BigRat& q) {
    BigInt r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

inline BigInt rat_ceil(const BigRat& q) {
    BigInt r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

inline BigRat rat_abs(const BigRat& q) { return q < 0 ? BigRat(-q) : q; }

inline BigRat rat_pow(const BigRat& q, unsigned long e) {
    BigRat r;
    mpz_pow_ui(r.get_num_mpz_t(), q.get_num_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), q.get_den_mpz_t(), e);
    return r;
}

/// 2^-k as a rational.
inline BigRat pow2_inv(unsigned long k) {
    BigRat r(1);
    mpz_mul_2exp(r.get_den_mpz_t(), r.get_den_mpz_t(), k);
    return r;
}

/// Parses "p/q" or an integer literal.
inline BigRat parse_rat(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    BigRat q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    q.canonicalize();
    return q;
}

/// "p/q" for non-integers, plain integer string otherwise.
inline std::string rat_str(const BigRat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

/// Decimal rendering with a fixed number of fractional digits (truncated
/// toward zero). Display only; never used in exact paths.
inline std::string rat_decimal(const BigRat& q, unsigned digits) {
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
    BigInt num = q.get_num() * scale;
    BigInt scaled;
    mpz_tdiv_q(scaled.get_mpz_t(), num.get_mpz_t(), q.get_den_mpz_t());
    bool neg = scaled < 0;
    std::string s = BigInt(abs(scaled)).get_str();
    if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
    s.insert(s.size() - digits, ".");
    if (neg) s.insert(0, "-");
    return s;
}

}  // namespace negabase
