#include "pellkit/quadring.hpp"

namespace pellkit {

namespace {

bool is_odd(const Int& n) { return mpz_odd_p(n.get_mpz_t()) != 0; }
bool is_even(const Int& n) { return mpz_even_p(n.get_mpz_t()) != 0; }

}  // namespace

QuadInt::QuadInt(Int u, Int v, Int d, int denom)
    : u_(std::move(u)), v_(std::move(v)), d_(std::move(d)), denom_(denom) {
    if (d_ < 2 || is_perfect_square(d_))
        throw std::domain_error("QuadInt: radicand must be a nonsquare >= 2");
    if (denom_ != 1 && denom_ != 2) throw std::domain_error("QuadInt: denom must be 1 or 2");
    if (denom_ == 2) {
        if (is_even(u_) && is_even(v_)) {
            u_ /= 2;
            v_ /= 2;
            denom_ = 1;
        } else if (is_odd(u_) && is_odd(v_)) {
            if (mpz_fdiv_ui(d_.get_mpz_t(), 4) != 1)
                throw std::domain_error("QuadInt: half-integers need d = 1 (mod 4)");
        } else {
            throw std::domain_error("QuadInt: denom 2 needs u = v (mod 2)");
        }
    }
}

QuadInt quad_mul(const QuadInt& p, const QuadInt& q) {
    if (p.d() != q.d()) throw std::domain_error("quad_mul: mismatched radicands");
    Int u = p.u() * q.u() + p.v() * q.v() * p.d();
    Int v = p.u() * q.v() + p.v() * q.u();
    int denom = p.denom() * q.denom();
    while (denom % 2 == 0 && mpz_even_p(u.get_mpz_t()) && mpz_even_p(v.get_mpz_t())) {
        u /= 2;
        v /= 2;
        denom /= 2;
    }
    if (denom == 4)
        throw std::domain_error("quad_mul: product left the ring");
    return QuadInt(u, v, p.d(), denom);
}

QuadInt quad_pow(const QuadInt& p, unsigned long n) {
    QuadInt acc = QuadInt::one(p.d());
    QuadInt base = p;
    while (n > 0) {
        if (n & 1) acc = quad_mul(acc, base);
        n >>= 1;
        if (n > 0) base = quad_mul(base, base);
    }
    return acc;
}

Int quad_norm(const QuadInt& p) {
    Int num = p.u() * p.u() - p.d() * p.v() * p.v();
    Int den = Int(p.denom()) * p.denom();
    if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
        throw std::domain_error("quad_norm: non-integer norm");
    return num / den;
}

MixedSolution::MixedSolution(Int x, Int y, Int k, Int l, int c)
    : x_(std::move(x)), y_(std::move(y)), k_(std::move(k)), l_(std::move(l)), c_(c) {
    if (c_ != 1 && c_ != 2 && c_ != 4) throw std::domain_error("MixedSolution: c must be 1, 2 or 4");
    if (x_ < 1 || y_ < 1 || k_ < 1 || l_ < 1)
        throw std::domain_error("MixedSolution: components must be positive");
    if (gcd(k_, l_) != 1) throw std::domain_error("MixedSolution: k, l must be coprime");
    Int d = k_ * l_;
    if (is_perfect_square(d)) throw std::domain_error("MixedSolution: k*l must be nonsquare");
    if ((c_ == 2 || c_ == 4) && mpz_even_p(d.get_mpz_t()))
        throw std::domain_error("MixedSolution: k*l must be odd when c is 2 or 4");
    if (k_ * x_ * x_ - l_ * y_ * y_ != c_)
        throw std::domain_error("MixedSolution: k*x^2 - l*y^2 != c");
}

QuadInt mixed_mul(const MixedSolution& s, const MixedSolution& t) {
    if (!s.same_equation(t)) throw std::domain_error("mixed_mul: different equations");
    Int a = s.k() * s.x() * t.x() + s.l() * s.y() * t.y();
    Int b = s.x() * t.y() + s.y() * t.x();
    Int d = s.d();
    switch (s.c()) {
        case 1:
            return QuadInt(a, b, d, 1);
        case 2:
            if (mpz_odd_p(a.get_mpz_t()) || mpz_odd_p(b.get_mpz_t()))
                throw std::domain_error("mixed_mul: c = 2 product not integral");
            return QuadInt(a / 2, b / 2, d, 1);
        default:  // c == 4
            if (mpz_odd_p(a.get_mpz_t()) || mpz_odd_p(b.get_mpz_t()))
                throw std::domain_error("mixed_mul: c = 4 product not integral");
            return QuadInt(a / 2, b / 2, d, 2);
    }
}

MixedSolution mixed_mul(const MixedSolution& s, const QuadInt& q) {
    if (q.d() != s.d()) throw std::domain_error("mixed_mul: ring element over wrong radicand");
    Int xn = s.x() * q.u() + s.l() * s.y() * q.v();
    Int yn = s.y() * q.u() + s.k() * s.x() * q.v();
    Int den(q.denom());
    if (!mpz_divisible_p(xn.get_mpz_t(), den.get_mpz_t()) ||
        !mpz_divisible_p(yn.get_mpz_t(), den.get_mpz_t()))
        throw std::domain_error("mixed_mul: product not integral");
    return MixedSolution(xn / den, yn / den, s.k(), s.l(), s.c());
}

QuadInt mixed_square(const MixedSolution& s) { return mixed_mul(s, s); }

MixedSolution mixed_pow(const MixedSolution& s, unsigned long n) {
    if (n % 2 == 0) throw std::domain_error("mixed_pow: exponent must be odd");
    QuadInt sq = mixed_square(s);
    return mixed_mul(s, quad_pow(sq, (n - 1) / 2));
}

}  // namespace pellkit
