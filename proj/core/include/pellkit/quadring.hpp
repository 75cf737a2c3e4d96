#pragma once

#include "pellkit/arith.hpp"

namespace pellkit {

/// Element (u + v*sqrt(d))/denom of a real quadratic ring, denom in {1,2}.
/// Canonical form: denom == 2 only when u and v are both odd (then d must
/// be 1 mod 4 so products stay in the ring); even/even reduces to denom 1.
/// Conjugates (negative v) are permitted.
class QuadInt {
public:
    QuadInt(Int u, Int v, Int d, int denom = 1);

    static QuadInt one(const Int& d) { return QuadInt(1, 0, d, 1); }

    const Int& u() const { return u_; }
    const Int& v() const { return v_; }
    const Int& d() const { return d_; }
    int denom() const { return denom_; }

    QuadInt conjugate() const { return QuadInt(u_, -v_, d_, denom_); }
    bool is_one() const { return denom_ == 1 && u_ == 1 && v_ == 0; }

    friend bool operator==(const QuadInt& a, const QuadInt& b) {
        return a.d_ == b.d_ && a.denom_ == b.denom_ && a.u_ == b.u_ && a.v_ == b.v_;
    }

private:
    Int u_, v_, d_;
    int denom_;
};

/// Exact ring product in canonical form. Mismatched radicands are a
/// domain error.
QuadInt quad_mul(const QuadInt& p, const QuadInt& q);

/// p^n by repeated squaring, n >= 0.
QuadInt quad_pow(const QuadInt& p, unsigned long n);

/// (u^2 - d*v^2)/denom^2, exact.
Int quad_norm(const QuadInt& p);

/// A positive solution (x, y) of k*x^2 - l*y^2 = c, interpreted as the
/// element (x*sqrt(k) + y*sqrt(l))/sqrt(c). gcd(k, l) = 1, k*l nonsquare,
/// and k*l odd when c is 2 or 4. Powers of the minimal solution may have
/// even components even in the c = 4 regime (e.g. 5*2^2 - 4^2 = 4), so no
/// parity is imposed on x, y here; the odd-solvability hypotheses of the
/// c = 4 theorems are checked where those theorems are applied.
class MixedSolution {
public:
    MixedSolution(Int x, Int y, Int k, Int l, int c);

    const Int& x() const { return x_; }
    const Int& y() const { return y_; }
    const Int& k() const { return k_; }
    const Int& l() const { return l_; }
    int c() const { return c_; }
    Int d() const { return k_ * l_; }

    bool same_equation(const MixedSolution& o) const {
        return k_ == o.k_ && l_ == o.l_ && c_ == o.c_;
    }

    friend bool operator==(const MixedSolution& a, const MixedSolution& b) {
        return a.x_ == b.x_ && a.y_ == b.y_ && a.k_ == b.k_ && a.l_ == b.l_ && a.c_ == b.c_;
    }

private:
    Int x_, y_, k_, l_;
    int c_;
};

/// Product of two mixed elements over the same equation: the sqrt(c)
/// denominators combine to c, so the result lives in the ring over
/// d = k*l (an even total power of the mixed form).
QuadInt mixed_mul(const MixedSolution& s, const MixedSolution& t);

/// Mixed element times a ring element over d = k*l: stays mixed (an odd
/// total power).
MixedSolution mixed_mul(const MixedSolution& s, const QuadInt& q);

/// s^2 as a ring element over k*l.
QuadInt mixed_square(const MixedSolution& s);

/// s^n for odd n >= 1; even powers leave the mixed form (use mixed_mul).
MixedSolution mixed_pow(const MixedSolution& s, unsigned long n);

}  // namespace pellkit
