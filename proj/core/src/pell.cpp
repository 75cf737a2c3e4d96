#include "pellkit/pell.hpp"

namespace pellkit {

namespace {

bool is_odd(const Int& n) { return mpz_odd_p(n.get_mpz_t()) != 0; }

// Solves a^3 - 3a = t (sign = +1) or a^3 + 3a = t (sign = -1) for a
// positive integer a, if one exists. The left side is strictly
// increasing for a >= 2, so the candidate is pinned by the cube root.
std::optional<Int> solve_unit_cubic(const Int& t, int sign) {
    if (t < 1) return std::nullopt;
    Int guess;
    mpz_root(guess.get_mpz_t(), t.get_mpz_t(), 3);
    for (Int a = (guess > 2 ? guess - 2 : Int(1)); a <= guess + 2; ++a) {
        if (a < 1) continue;
        Int val = a * a * a + Int(sign > 0 ? -3 : 3) * a;
        if (val == t) return a;
    }
    return std::nullopt;
}

// The half-integral unit (a + b*sqrt(d))/2 with a, b odd whose cube (for
// norm +1) or whose value chain gives the fundamental +-1 solution.
// `x_fund` is the x-part of the fundamental solution of x^2 - d y^2 = sign.
std::optional<PellSolution> half_unit(const Int& d, int sign, const Int& x_fund) {
    auto a = solve_unit_cubic(2 * x_fund, sign);
    if (!a || !is_odd(*a)) return std::nullopt;
    Int bb = (*a) * (*a) - Int(4 * sign);
    if (!mpz_divisible_p(bb.get_mpz_t(), d.get_mpz_t())) return std::nullopt;
    auto b = is_perfect_square(bb / d);
    if (!b || !is_odd(*b) || *b == 0) return std::nullopt;
    return PellSolution{*a, *b, d, 4 * sign, 2};
}

// Divides the target value by k and checks the quotient is a perfect
// square; nullopt when the shape does not match.
std::optional<Int> square_quotient(const Int& value, const Int& k) {
    if (!mpz_divisible_p(value.get_mpz_t(), k.get_mpz_t())) return std::nullopt;
    return is_perfect_square(value / k);
}

}  // namespace

CFExpansion cf_sqrt(const Int& d) {
    if (d < 2 || is_perfect_square(d))
        throw std::domain_error("cf_sqrt: d must be a nonsquare >= 2");
    Int a0;
    mpz_sqrt(a0.get_mpz_t(), d.get_mpz_t());
    CFExpansion cf{a0, {}};
    // stage value (m + sqrt(d))/den; den returns to 1 exactly at the
    // period boundary
    Int m = 0, den = 1, a = a0;
    do {
        m = den * a - m;
        den = (d - m * m) / den;
        a = (a0 + m) / den;
        cf.period.push_back(a);
    } while (den != 1);
    if (cf.period.back() != 2 * a0)
        throw std::logic_error("cf_sqrt: period did not close on 2*a0");
    return cf;
}

std::optional<PellSolution> fundamental_solution(const Int& d, int rhs, bool odd_only) {
    if (d < 2 || is_perfect_square(d))
        throw std::domain_error("fundamental_solution: d must be a nonsquare >= 2");
    if (rhs != 1 && rhs != -1 && rhs != 4 && rhs != -4)
        throw std::domain_error("fundamental_solution: rhs must be +-1 or +-4");

    CFExpansion cf = cf_sqrt(d);
    std::size_t r = cf.period.size();
    // convergent just before the period closes
    Int p_prev = 1, p = cf.a0, q_prev = 0, q = 1;
    for (std::size_t i = 0; i + 1 < r; ++i) {
        Int an = cf.period[i];
        Int pn = an * p + p_prev;
        Int qn = an * q + q_prev;
        p_prev = p;
        p = pn;
        q_prev = q;
        q = qn;
    }
    // (p, q) now satisfies p^2 - d q^2 = (-1)^r
    bool minus_one_solvable = (r % 2 == 1);
    Int x1, y1;  // fundamental of +1
    if (minus_one_solvable) {
        x1 = p * p + d * q * q;
        y1 = 2 * p * q;
    } else {
        x1 = p;
        y1 = q;
    }

    switch (rhs) {
        case 1:
            return PellSolution{x1, y1, d, 1, 1};
        case -1:
            if (!minus_one_solvable) return std::nullopt;
            return PellSolution{p, q, d, -1, 1};
        case 4: {
            auto half = half_unit(d, 1, x1);
            if (half) return half;
            if (odd_only) return std::nullopt;
            return PellSolution{2 * x1, 2 * y1, d, 4, 1};
        }
        default: {  // rhs == -4
            if (!minus_one_solvable) return std::nullopt;
            auto half = half_unit(d, -1, p);
            if (half) return half;
            if (odd_only) return std::nullopt;
            return PellSolution{2 * p, 2 * q, d, -4, 1};
        }
    }
}

std::optional<MixedSolution> minimal_solution(const Int& k, const Int& l, int c) {
    if (c != 1 && c != 2 && c != 4) throw std::domain_error("minimal_solution: c must be 1, 2 or 4");
    if (k < 1 || l < 1 || gcd(k, l) != 1)
        throw std::domain_error("minimal_solution: k, l must be coprime positive integers");
    Int d = k * l;
    if (is_perfect_square(d)) throw std::domain_error("minimal_solution: k*l must be nonsquare");
    if (!(k > 1 || c == 2)) throw std::domain_error("minimal_solution: requires k > 1 or c = 2");
    if ((c == 2 || c == 4) && !is_odd(d))
        throw std::domain_error("minimal_solution: k*l must be odd when c is 2 or 4");

    if (c == 4) {
        // Minimal odd (X, Y) of X^2 - d Y^2 = 4 satisfies
        // (x1 sqrt(k) + y1 sqrt(l))^2 = 2 (X + Y sqrt(d)), so
        // k x1^2 = X + 2 and l y1^2 = X - 2.
        auto f = fundamental_solution(d, 4, /*odd_only=*/true);
        if (!f) return std::nullopt;
        auto u = square_quotient(f->x + 2, k);
        auto v = square_quotient(f->x - 2, l);
        if (!u || !v) return std::nullopt;
        return MixedSolution(*u, *v, k, l, 4);
    }

    auto f = fundamental_solution(d, 1);
    const Int& x0 = f->x;
    if (c == 1) {
        // (x1 sqrt(k) + y1 sqrt(l))^2 = x0 + y0 sqrt(d):
        // x0 + 1 = 2 k x1^2, x0 - 1 = 2 l y1^2, so x0 must be odd.
        if (!is_odd(x0)) return std::nullopt;
        auto u = square_quotient(x0 + 1, 2 * k);
        auto v = square_quotient(x0 - 1, 2 * l);
        if (!u || !v) return std::nullopt;
        return MixedSolution(*u, *v, k, l, 1);
    }
    // c == 2: (x1 sqrt(k) + y1 sqrt(l))^2 = 2 (x0 + y0 sqrt(d)):
    // x0 + 1 = k x1^2, x0 - 1 = l y1^2, so x0 must be even.
    if (is_odd(x0)) return std::nullopt;
    auto u = square_quotient(x0 + 1, k);
    auto v = square_quotient(x0 - 1, l);
    if (!u || !v) return std::nullopt;
    return MixedSolution(*u, *v, k, l, 2);
}

QuadInt pell_element(const PellSolution& s) {
    if (s.rhs == 1 || s.rhs == -1) return QuadInt(s.x, s.y, s.d, 1);
    return QuadInt(s.x, s.y, s.d, 2);  // canonicalizes even/even to denom 1
}

namespace {

PellSolution solution_from_element(const QuadInt& e, const Int& d, int rhs) {
    if (rhs == 1 || rhs == -1) {
        if (e.denom() != 1) throw std::logic_error("unexpected half-integral unit");
        return PellSolution{e.u(), e.v(), d, rhs, 1};
    }
    if (e.denom() == 2) return PellSolution{e.u(), e.v(), d, rhs, 2};
    return PellSolution{2 * e.u(), 2 * e.v(), d, rhs, 1};
}

}  // namespace

std::vector<PellSolution> solutions(const PellSolution& fundamental, unsigned long count) {
    std::vector<PellSolution> out;
    out.reserve(count);
    QuadInt eps = pell_element(fundamental);
    QuadInt step = (fundamental.rhs > 0) ? eps : quad_mul(eps, eps);
    QuadInt cur = eps;
    for (unsigned long i = 0; i < count; ++i) {
        out.push_back(solution_from_element(cur, fundamental.d, fundamental.rhs));
        if (i + 1 < count) cur = quad_mul(cur, step);
    }
    return out;
}

std::vector<MixedSolution> solutions(const MixedSolution& minimal, unsigned long count) {
    std::vector<MixedSolution> out;
    out.reserve(count);
    QuadInt step = mixed_square(minimal);
    MixedSolution cur = minimal;
    for (unsigned long i = 0; i < count; ++i) {
        out.push_back(cur);
        if (i + 1 < count) cur = mixed_mul(cur, step);
    }
    return out;
}

Lemma24Report lemma24_relations(const Int& k, const Int& l) {
    if (k < 2 || l < 1 || gcd(k, l) != 1)
        throw std::domain_error("lemma24_relations: need coprime k > 1, l >= 1");
    Int d = k * l;
    if (!is_odd(d) || is_perfect_square(d))
        throw std::domain_error("lemma24_relations: k*l must be odd and nonsquare");

    Lemma24Report rep;
    rep.k = k;
    rep.l = l;
    rep.eps1 = minimal_solution(k, l, 1);
    rep.eps2 = fundamental_solution(d, 1);
    rep.eps3 = minimal_solution(k, l, 2);
    rep.eps4 = minimal_solution(k, l, 4);
    rep.eps5 = fundamental_solution(d, 4, /*odd_only=*/true);

    auto check = [&rep](int id, bool lhs_exists, bool rhs_exists, auto&& eq,
                        const char* missing) {
        Lemma24Identity ident;
        ident.id = id;
        if (!lhs_exists || !rhs_exists) {
            ident.status = IdentityStatus::skipped;
            ident.note = missing;
        } else {
            ident.status = eq() ? IdentityStatus::holds : IdentityStatus::failed;
        }
        rep.identities.push_back(ident);
    };

    QuadInt e2 = rep.eps2 ? pell_element(*rep.eps2) : QuadInt::one(d);

    check(1, rep.eps1.has_value(), rep.eps2.has_value(),
          [&] { return mixed_square(*rep.eps1) == e2; }, "equation (2.2) unsolvable");
    check(2, rep.eps3.has_value(), rep.eps2.has_value(),
          [&] { return mixed_square(*rep.eps3) == e2; }, "equation (2.4) unsolvable");
    check(3, rep.eps4.has_value(), rep.eps2.has_value(),
          [&] { return quad_pow(mixed_square(*rep.eps4), 3) == e2; },
          "equation (2.5) unsolvable in odd integers");
    check(4, rep.eps5.has_value() && rep.eps5->denom == 2, rep.eps2.has_value(),
          [&] { return quad_pow(pell_element(*rep.eps5), 3) == e2; },
          "equation (2.6) unsolvable in odd integers");
    check(5, rep.eps4.has_value(), rep.eps4.has_value(),
          [&] {
              // (eps4 / 2)^3 carries the c = 4 normalization: its
              // components are twice the c = 1 minimal solution's.
              MixedSolution cube = mixed_pow(*rep.eps4, 3);
              return rep.eps1.has_value() && cube.x() == 2 * rep.eps1->x() &&
                     cube.y() == 2 * rep.eps1->y();
          },
          "equation (2.5) unsolvable in odd integers");
    check(6, rep.eps4.has_value(), rep.eps4.has_value(),
          [&] {
              return rep.eps5.has_value() &&
                     mixed_square(*rep.eps4) == pell_element(*rep.eps5);
          },
          "equation (2.5) unsolvable in odd integers");
    return rep;
}

}  // namespace pellkit
