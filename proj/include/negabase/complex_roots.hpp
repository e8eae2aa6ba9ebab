#pragma once

#include <complex>
#include <stdexcept>
#include <utility>
#include <vector>

#include "negabase/poly.hpp"
#include "negabase/rational.hpp"
#include "negabase/root_isolation.hpp"

namespace negabase {

/// Complex number with exact rational real and imaginary parts.
struct RatComplex {
    BigRat re, im;

    friend RatComplex operator+(const RatComplex& a, const RatComplex& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend RatComplex operator-(const RatComplex& a, const RatComplex& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend RatComplex operator*(const RatComplex& a, const RatComplex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    RatComplex operator/(const RatComplex& b) const {
        BigRat n2 = b.re * b.re + b.im * b.im;
        if (n2 == 0) throw std::domain_error("complex division by zero");
        return {(re * b.re + im * b.im) / n2, (im * b.re - re * b.im) / n2};
    }
    BigRat norm2() const { return re * re + im * im; }
};

namespace detail {

/// floor(sqrt(q * 4^k)) based bounds: returns (lo, hi) with
/// lo <= sqrt(q) <= hi and hi - lo = 2^-k.
inline std::pair<BigRat, BigRat> sqrt_bounds(const BigRat& q, unsigned long k) {
    if (q < 0) throw std::domain_error("sqrt of negative rational");
    BigInt scaled;  // floor(q * 4^k)
    BigInt num = q.get_num();
    mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), 2 * k);
    mpz_fdiv_q(scaled.get_mpz_t(), num.get_mpz_t(), q.get_den_mpz_t());
    BigInt s;
    mpz_sqrt(s.get_mpz_t(), scaled.get_mpz_t());
    BigRat unit = pow2_inv(k);
    return {BigRat(s) * unit, BigRat(s + 1) * unit};
}

inline RatComplex eval_at(const IntPoly& p, const RatComplex& z) {
    RatComplex acc{BigRat(0), BigRat(0)};
    for (auto it = p.coeffs.rbegin(); it != p.coeffs.rend(); ++it)
        acc = acc * z + RatComplex{BigRat(*it), BigRat(0)};
    return acc;
}

/// Round to denominator 2^bits.
inline BigRat dyadic_round(const BigRat& q, unsigned long bits) {
    BigInt num = q.get_num();
    mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), bits);
    BigInt r;
    mpz_fdiv_q(r.get_mpz_t(), num.get_mpz_t(), q.get_den_mpz_t());
    return BigRat(r) * pow2_inv(bits);
}

inline std::vector<std::complex<double>> durand_kerner(const IntPoly& f) {
    int n = f.degree();
    std::vector<std::complex<double>> c(n + 1);
    double lead = f.leading().get_d();
    for (int i = 0; i <= n; ++i) c[i] = f.coeff(i).get_d() / lead;
    auto eval = [&](std::complex<double> z) {
        std::complex<double> acc = 0;
        for (int i = n; i >= 0; --i) acc = acc * z + c[i];
        return acc;
    };
    std::vector<std::complex<double>> z(n);
    std::complex<double> seed(0.4, 0.9);
    std::complex<double> w(1.0, 0.0);
    for (int i = 0; i < n; ++i) {
        w *= seed;
        z[i] = w;
    }
    for (int iter = 0; iter < 500; ++iter) {
        double moved = 0;
        for (int i = 0; i < n; ++i) {
            std::complex<double> denom = 1;
            for (int j = 0; j < n; ++j)
                if (j != i) denom *= (z[i] - z[j]);
            if (denom == std::complex<double>(0, 0)) denom = 1e-30;
            std::complex<double> delta = eval(z[i]) / denom;
            z[i] -= delta;
            moved = std::max(moved, std::abs(delta));
        }
        if (moved < 1e-14) break;
    }
    return z;
}

}  // namespace detail

/// Certified disc around one root of the squarefree part of a polynomial.
/// The disc |z - center| <= radius contains exactly one root, and the
/// modulus of that root lies in [mod_lo, mod_hi].
struct RootDisc {
    RatComplex center;
    BigRat radius;
    BigRat mod_lo, mod_hi;

    /// Whether the disc meets the real segment [a, b].
    bool touches_real_interval(const BigRat& a, const BigRat& b) const {
        BigRat dx(0);
        if (center.re < a) dx = a - center.re;
        if (center.re > b) dx = center.re - b;
        return dx * dx + center.im * center.im <= radius * radius;
    }

    bool contains(const BigRat& m) const { return mod_lo <= m && m <= mod_hi; }
};

/// Certified enclosures for all roots of p (via its squarefree part).
/// Discs are pairwise disjoint, so each holds exactly one of the distinct
/// roots and together they hold all of them. `target_radius` bounds every
/// disc radius.
///
/// Certification: for the squarefree f of degree n and any z with f'(z) != 0,
/// some root lies within n*|f(z)/f'(z)| of z (from f'/f = sum 1/(z - r_j)).
/// Disjointness of the n discs then pins one distinct root per disc.
inline std::vector<RootDisc> certify_roots(const IntPoly& p, const BigRat& target_radius) {
    if (p.is_zero() || p.degree() < 1)
        throw std::invalid_argument("certify_roots needs degree >= 1");
    IntPoly f = squarefree_part(p);
    const int n = f.degree();
    const BigRat nq(n);
    IntPoly fd = f.derivative();

    auto approx = detail::durand_kerner(f);
    unsigned long bits = 64;
    std::vector<RatComplex> z(n);
    for (int i = 0; i < n; ++i)
        z[i] = {detail::dyadic_round(BigRat(approx[i].real()), bits),
                detail::dyadic_round(BigRat(approx[i].imag()), bits)};

    for (int attempt = 0; attempt < 64; ++attempt) {
        std::vector<RootDisc> discs(n);
        bool ok = true;
        // sqrt precision: the rounding unit 2^-k must be far below
        // target_radius or the radius bound can never fit under it
        unsigned long k = 16;
        {
            BigRat t = target_radius;
            while (t < 256 && k < 1u << 16) {
                t *= 2;
                ++k;
            }
        }
        for (int i = 0; i < n && ok; ++i) {
            RatComplex pv = detail::eval_at(f, z[i]);
            RatComplex dv = detail::eval_at(fd, z[i]);
            BigRat d2 = dv.norm2();
            if (d2 == 0) {
                ok = false;
                break;
            }
            auto [plo, phi] = detail::sqrt_bounds(pv.norm2(), k);
            auto [dlo, dhi] = detail::sqrt_bounds(d2, k);
            if (dlo == 0) {
                ok = false;
                break;
            }
            BigRat r = nq * phi / dlo;
            if (r > target_radius) {
                ok = false;
                break;
            }
            auto [clo, chi] = detail::sqrt_bounds(z[i].norm2(), k);
            BigRat mlo = clo - r;
            if (mlo < 0) mlo = 0;
            discs[i] = RootDisc{z[i], r, mlo, chi + r};
        }
        if (ok) {
            for (int i = 0; i < n && ok; ++i)
                for (int j = i + 1; j < n && ok; ++j) {
                    BigRat s = discs[i].radius + discs[j].radius;
                    if ((z[i] - z[j]).norm2() <= s * s) ok = false;
                }
        }
        if (ok) return discs;

        // Newton-polish every approximation at doubled working precision.
        bits *= 2;
        if (bits > 1u << 20) break;
        for (int i = 0; i < n; ++i) {
            RatComplex pv = detail::eval_at(f, z[i]);
            RatComplex dv = detail::eval_at(fd, z[i]);
            if (dv.norm2() == 0) {
                // nudge off the critical point
                z[i].re += pow2_inv(bits / 2);
                pv = detail::eval_at(f, z[i]);
                dv = detail::eval_at(fd, z[i]);
            }
            RatComplex next = z[i] - pv / dv;
            z[i] = {detail::dyadic_round(next.re, bits), detail::dyadic_round(next.im, bits)};
        }
    }
    throw std::runtime_error("root certification did not converge");
}

/// Root discs plus the index of the disc holding the distinguished real root.
inline std::pair<std::vector<RootDisc>, int> certify_roots_excluding(
    const IntPoly& p, const RootIsolation& exclude, const BigRat& target_radius) {
    BigRat tr = target_radius;
    for (int attempt = 0; attempt < 24; ++attempt) {
        auto discs = certify_roots(p, tr);
        RootIsolation iv = exclude.refined(tr / 2);
        int found = -1;
        bool ambiguous = false;
        for (std::size_t i = 0; i < discs.size(); ++i) {
            if (discs[i].touches_real_interval(iv.lo, iv.hi)) {
                if (found >= 0) ambiguous = true;
                found = static_cast<int>(i);
            }
        }
        if (found >= 0 && !ambiguous) return {std::move(discs), found};
        tr /= 4;
    }
    throw std::runtime_error("could not match the excluded root to a certified disc");
}

/// Certified enclosure of max{|gamma| : p(gamma)=0, gamma != excluded root},
/// with width <= precision. Throws std::domain_error when p has no other
/// roots (degree 1 after squarefree reduction).
inline std::pair<BigRat, BigRat> max_other_root_modulus(const IntPoly& p,
                                                        const RootIsolation& exclude,
                                                        const BigRat& precision) {
    if (precision <= 0) throw std::invalid_argument("precision must be positive");
    BigRat tr = precision / 4;
    for (;;) {
        auto [discs, skip] = certify_roots_excluding(p, exclude, tr);
        if (discs.size() == 1) throw std::domain_error("no conjugates: polynomial has a single root");
        BigRat lo(-1), hi(-1);
        for (std::size_t i = 0; i < discs.size(); ++i) {
            if (static_cast<int>(i) == skip) continue;
            if (discs[i].mod_lo > lo) lo = discs[i].mod_lo;
            if (discs[i].mod_hi > hi) hi = discs[i].mod_hi;
        }
        if (hi - lo <= precision) return {lo, hi};
        tr /= 4;
    }
}

}  // namespace negabase
