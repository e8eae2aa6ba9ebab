#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "negabase/poly.hpp"
#include "negabase/rational.hpp"
#include "negabase/root_isolation.hpp"

namespace negabase {

/// Defining data of the base beta > 1: a monic integer polynomial together
/// with the isolating interval selecting the distinguished real root.
/// Rational bases use degree 1 with a degenerate power basis.
///
/// The narrowed root interval is cached; narrowing swaps in a fresh copy
/// under a lock, so concurrent readers only ever see consistent snapshots.
class BaseSpec {
  public:
    /// Selects the largest real root of `min_poly` and requires it > 1.
    /// Irreducibility of `min_poly` is an input contract, not verified.
    static std::shared_ptr<const BaseSpec> from_poly(const IntPoly& min_poly) {
        IntPoly p = min_poly.primitive_part();
        if (p.degree() < 1) throw std::invalid_argument("base polynomial must have degree >= 1");
        auto roots = isolate_real_roots(p);
        if (roots.empty()) throw std::invalid_argument("base polynomial has no real root");
        RootIsolation sel = roots.back();
        sel.refine_to(BigRat(1, 16));
        if (!(sel.lo >= 1) ) {
            // certify beta > 1 exactly: refine until the interval clears 1
            while (sel.lo < 1 && sel.hi > 1 && !sel.root_is_rational()) sel.refine_to(sel.width() / 4);
            if (sel.root_is_rational() ? !(sel.hi > 1) : !(sel.lo >= 1))
                throw std::invalid_argument("base polynomial has no root > 1");
        }
        if (p.degree() == 1) {
            // rational base p(x) = a1 x + a0, beta = -a0/a1
            BigRat beta(-p.coeff(0), p.coeff(1));
            beta.canonicalize();
            return from_rational(beta);
        }
        if (!p.is_monic()) throw std::invalid_argument("irrational base polynomial must be monic");
        return std::shared_ptr<const BaseSpec>(new BaseSpec(p, sel));
    }

    static std::shared_ptr<const BaseSpec> from_rational(const BigRat& beta) {
        if (!(beta > 1)) throw std::invalid_argument("base must exceed 1");
        std::vector<BigInt> c{-beta.get_num(), beta.get_den()};
        IntPoly p(std::move(c));
        auto roots = isolate_real_roots(p);
        return std::shared_ptr<const BaseSpec>(new BaseSpec(p, roots.front(), beta));
    }

    const IntPoly& min_poly() const { return poly_; }
    int degree() const { return poly_.degree(); }
    bool is_rational() const { return rational_.has_value(); }
    const BigRat& rational_value() const { return *rational_; }
    const RootIsolation& root() const { return root_; }

    /// beta is an algebraic integer (monic minimal polynomial).
    bool is_algebraic_integer() const {
        return is_rational() ? rational_->get_den() == 1 : poly_.is_monic();
    }

    /// Snapshot of the root interval, at most `width` wide.
    std::pair<BigRat, BigRat> interval(const BigRat& width) const {
        {
            std::lock_guard<std::mutex> g(mu_);
            if (cached_->width() <= width) return {cached_->lo, cached_->hi};
        }
        auto next = std::make_shared<RootIsolation>(*snapshot());
        next->refine_to(width);
        std::lock_guard<std::mutex> g(mu_);
        if (next->width() < cached_->width()) cached_ = next;
        return {cached_->lo, cached_->hi};
    }

    double beta_double() const {
        auto [lo, hi] = interval(BigRat(1, 1000000000));
        return BigRat((lo + hi) / 2).get_d();
    }

    /// Reduction table: x^(n+i) mod min_poly for i = 0..n-2, as rational
    /// coordinate rows.
    const std::vector<std::vector<BigRat>>& power_table() const { return powers_; }

  private:
    BaseSpec(IntPoly p, RootIsolation r, std::optional<BigRat> rat = std::nullopt)
        : poly_(std::move(p)), root_(std::move(r)), rational_(std::move(rat)) {
        cached_ = std::make_shared<RootIsolation>(root_);
        int n = poly_.degree();
        if (n >= 2) {
            // x^n = -(a0 + a1 x + ... + a_{n-1} x^{n-1}) for monic poly
            std::vector<BigRat> xn(n);
            for (int i = 0; i < n; ++i) xn[i] = BigRat(-poly_.coeff(i));
            powers_.push_back(xn);
            for (int i = 1; i < n - 1; ++i) {
                const auto& prev = powers_.back();
                std::vector<BigRat> cur(n, BigRat(0));
                // multiply by x, then reduce the overflow term
                for (int j = 0; j < n - 1; ++j) cur[j + 1] = prev[j];
                const BigRat& top = prev[n - 1];
                for (int j = 0; j < n; ++j) cur[j] += top * xn[j];
                powers_.push_back(std::move(cur));
            }
        }
    }

    std::shared_ptr<const RootIsolation> snapshot() const {
        std::lock_guard<std::mutex> g(mu_);
        return cached_;
    }

    IntPoly poly_;
    RootIsolation root_;
    std::optional<BigRat> rational_;
    std::vector<std::vector<BigRat>> powers_;
    mutable std::mutex mu_;
    mutable std::shared_ptr<RootIsolation> cached_;
};

using BasePtr = std::shared_ptr<const BaseSpec>;

enum class Ordering { LT, EQ, GT };

/// Element of Q(beta) in the power basis c0 + c1*beta + ... + c_{n-1}*beta^{n-1}.
/// Immutable value type; equality is coordinatewise (exact).
class FieldElem {
  public:
    FieldElem(BasePtr base, std::vector<BigRat> coords)
        : base_(std::move(base)), coords_(std::move(coords)) {
        if (static_cast<int>(coords_.size()) != base_->degree())
            throw std::invalid_argument("coordinate vector length mismatch");
    }

    static FieldElem from_rational(const BasePtr& base, const BigRat& q) {
        std::vector<BigRat> c(base->degree(), BigRat(0));
        c[0] = q;
        return FieldElem(base, std::move(c));
    }

    static FieldElem zero(const BasePtr& base) { return from_rational(base, BigRat(0)); }
    static FieldElem one(const BasePtr& base) { return from_rational(base, BigRat(1)); }

    /// The base element beta itself.
    static FieldElem beta(const BasePtr& base) {
        if (base->is_rational()) return from_rational(base, base->rational_value());
        std::vector<BigRat> c(base->degree(), BigRat(0));
        c[1] = 1;
        return FieldElem(base, std::move(c));
    }

    const BasePtr& base() const { return base_; }
    const std::vector<BigRat>& coords() const { return coords_; }

    bool is_zero() const {
        for (const auto& c : coords_)
            if (c != 0) return false;
        return true;
    }

    bool is_rational() const {
        for (std::size_t i = 1; i < coords_.size(); ++i)
            if (coords_[i] != 0) return false;
        return true;
    }

    const BigRat& rational_part() const { return coords_[0]; }

    bool operator==(const FieldElem& o) const { return coords_ == o.coords_; }

    FieldElem operator-() const {
        std::vector<BigRat> c = coords_;
        for (auto& x : c) x = -x;
        return FieldElem(base_, std::move(c));
    }

    friend FieldElem operator+(const FieldElem& a, const FieldElem& b) {
        a.check_same(b);
        std::vector<BigRat> c = a.coords_;
        for (std::size_t i = 0; i < c.size(); ++i) c[i] += b.coords_[i];
        return FieldElem(a.base_, std::move(c));
    }

    friend FieldElem operator-(const FieldElem& a, const FieldElem& b) { return a + (-b); }

    friend FieldElem operator*(const FieldElem& a, const FieldElem& b) {
        a.check_same(b);
        const int n = a.base_->degree();
        if (n == 1) {
            std::vector<BigRat> c{a.coords_[0] * b.coords_[0]};
            return FieldElem(a.base_, std::move(c));
        }
        std::vector<BigRat> prod(2 * n - 1, BigRat(0));
        for (int i = 0; i < n; ++i) {
            if (a.coords_[i] == 0) continue;
            for (int j = 0; j < n; ++j) prod[i + j] += a.coords_[i] * b.coords_[j];
        }
        const auto& table = a.base_->power_table();
        std::vector<BigRat> c(prod.begin(), prod.begin() + n);
        for (int i = n; i < 2 * n - 1; ++i) {
            if (prod[i] == 0) continue;
            const auto& row = table[i - n];
            for (int j = 0; j < n; ++j) c[j] += prod[i] * row[j];
        }
        return FieldElem(a.base_, std::move(c));
    }

    friend FieldElem operator*(const FieldElem& a, const BigRat& s) {
        std::vector<BigRat> c = a.coords_;
        for (auto& x : c) x *= s;
        return FieldElem(a.base_, std::move(c));
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against
    /// the minimal polynomial.
    FieldElem inverse() const {
        if (is_zero()) throw std::domain_error("inversion of zero");
        const int n = base_->degree();
        if (n == 1) {
            std::vector<BigRat> c{BigRat(1) / coords_[0]};
            return FieldElem(base_, std::move(c));
        }
        RatPoly a{std::vector<BigRat>(coords_)};
        RatPoly m{RatPoly(base_->min_poly())};
        // Bezout: u*a + v*m = gcd = 1 (min_poly irreducible by contract)
        RatPoly r0 = m, r1 = a;
        RatPoly u0(std::vector<BigRat>{}), u1(std::vector<BigRat>{BigRat(1)});
        while (!r1.is_zero()) {
            auto [q, r2] = poly_divmod(r0, r1);
            RatPoly u2 = u0 - q * u1;
            r0 = std::move(r1);
            r1 = std::move(r2);
            u0 = std::move(u1);
            u1 = std::move(u2);
        }
        if (r0.degree() != 0)
            throw std::domain_error("element not invertible (reducible base polynomial?)");
        RatPoly inv = u0.scaled(BigRat(1) / r0.coeffs[0]);
        inv = poly_divmod(inv, m).second;
        std::vector<BigRat> c(n, BigRat(0));
        for (int i = 0; i <= inv.degree(); ++i) c[i] = inv.coeffs[i];
        return FieldElem(base_, std::move(c));
    }

    friend FieldElem operator/(const FieldElem& a, const FieldElem& b) { return a * b.inverse(); }

    /// Exact sign of the real embedding. Zero is decided algebraically from
    /// the coordinates; a nonzero element gets a terminating interval
    /// refinement (min_poly irreducible implies its value is nonzero).
    int sign() const {
        if (is_zero()) return 0;
        if (is_rational()) return mpq_sgn(coords_[0].get_mpq_t());
        BigRat w(1, 16);
        for (;;) {
            auto [lo, hi] = value_interval(w);
            if (lo > 0) return 1;
            if (hi < 0) return -1;
            w = w * w / 4;  // refinement depth doubles per round
            if (w > BigRat(1, 32)) w = BigRat(1, 32);
        }
    }

    /// Rational interval certainly containing the value, refined until the
    /// beta interval is at most `base_width` wide.
    std::pair<BigRat, BigRat> value_interval(const BigRat& base_width) const {
        auto [blo, bhi] = base_->interval(base_width);
        // interval Horner in beta
        BigRat lo(0), hi(0);
        for (auto it = coords_.rbegin(); it != coords_.rend(); ++it) {
            BigRat p1 = lo * blo, p2 = lo * bhi, p3 = hi * blo, p4 = hi * bhi;
            BigRat nlo = std::min(std::min(p1, p2), std::min(p3, p4));
            BigRat nhi = std::max(std::max(p1, p2), std::max(p3, p4));
            lo = nlo + *it;
            hi = nhi + *it;
        }
        return {lo, hi};
    }

    /// Unique integer z with z <= value < z + 1, decided exactly.
    BigInt floor() const {
        if (is_rational()) return rat_floor(coords_[0]);
        BigRat w(1, 16);
        for (;;) {
            auto [lo, hi] = value_interval(w);
            BigInt z = rat_floor(lo);
            if (hi < BigRat(z + 1)) return z;
            // the interval straddles z+1; the value could equal it exactly
            FieldElem diff = *this - from_rational(base_, BigRat(z + 1));
            if (diff.is_zero()) return z + 1;
            w = w * w / 4;
            if (w > BigRat(1, 32)) w = BigRat(1, 32);
        }
    }

    Ordering compare(const FieldElem& o) const {
        int s = (*this - o).sign();
        return s < 0 ? Ordering::LT : (s == 0 ? Ordering::EQ : Ordering::GT);
    }

    bool operator<(const FieldElem& o) const { return (*this - o).sign() < 0; }
    bool operator<=(const FieldElem& o) const { return (*this - o).sign() <= 0; }

    double to_double() const {
        auto [lo, hi] = value_interval(BigRat(1, 1000000000));
        return BigRat((lo + hi) / 2).get_d();
    }

    /// Display-only decimal approximation.
    std::string decimal_approx(unsigned digits = 20) const {
        BigRat w = BigRat(1);
        for (unsigned i = 0; i < digits + 4; ++i) w /= 10;
        auto [lo, hi] = value_interval(w / (BigRat(1) + rat_abs(coords_sum_bound())));
        return rat_decimal((lo + hi) / 2, digits);
    }

    std::string coords_str() const {
        std::string s;
        for (std::size_t i = 0; i < coords_.size(); ++i) {
            if (i) s += ",";
            s += rat_str(coords_[i]);
        }
        return s;
    }

  private:
    BigRat coords_sum_bound() const {
        BigRat s(0);
        for (const auto& c : coords_) s += rat_abs(c);
        return s;
    }

    void check_same(const FieldElem& o) const {
        if (base_ != o.base_) throw std::invalid_argument("mixed base specs");
    }

    BasePtr base_;
    std::vector<BigRat> coords_;
};

/// l_beta = -beta/(beta+1), the left endpoint of the negative-base domain.
inline FieldElem l_endpoint(const BasePtr& base) {
    FieldElem b = FieldElem::beta(base);
    return -(b / (b + FieldElem::one(base)));
}

/// r_beta = 1/(beta+1) = 1 + l_beta.
inline FieldElem r_endpoint(const BasePtr& base) {
    return l_endpoint(base) + FieldElem::one(base);
}

}  // namespace negabase
