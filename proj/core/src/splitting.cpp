#include "pellkit/splitting.hpp"

#include <algorithm>

namespace pellkit {

namespace {

bool is_odd(const Int& n) { return mpz_odd_p(n.get_mpz_t()) != 0; }

// The part of d supported on the primes of a: the largest divisor of d
// whose every prime divides a.
Int supported_part(const Int& d, const Int& a) {
    Int rest = d, part = 1;
    for (;;) {
        Int g = gcd(rest, a);
        if (g == 1) break;
        part *= g;
        rest /= g;
    }
    return part;
}

Int exact_square_root(const Int& n, const char* what) {
    auto r = is_perfect_square(n);
    if (!r) throw std::logic_error(std::string(what) + ": expected a perfect square");
    return *r;
}

std::vector<std::pair<Int, Int>> coprime_splits(const Int& d, unsigned max_omega) {
    Factorization f = factor(d);
    if (f.size() > max_omega) return {};
    std::vector<std::pair<Int, Int>> out;
    std::size_t combos = std::size_t(1) << f.size();
    for (std::size_t mask = 0; mask < combos; ++mask) {
        Int k = 1;
        for (std::size_t i = 0; i < f.size(); ++i) {
            if (mask & (std::size_t(1) << i)) {
                Int pe;
                mpz_pow_ui(pe.get_mpz_t(), f[i].prime.get_mpz_t(), f[i].exponent);
                k *= pe;
            }
        }
        out.emplace_back(k, d / k);
    }
    return out;
}

}  // namespace

std::vector<PerronWitness> perron_trichotomy(const Int& d) {
    if (d == 2 || d < 3 || is_perfect_square(d))
        throw std::domain_error("perron_trichotomy: d must be a nonsquare >= 3, d != 2");
    std::vector<PerronWitness> found;
    auto record = [&](int rhs, const Int& x, const Int& y) {
        for (const auto& w : found)
            if (w.rhs == rhs) return;
        found.push_back({rhs, x, y});
    };
    // small direct scan first so the least witnesses win for d = 3
    for (Int y = 1; y <= 4; ++y) {
        for (int rhs : {-1, 2, -2}) {
            Int xx = d * y * y + rhs;
            if (xx < 1) continue;
            if (auto x = is_perfect_square(xx)) {
                if (*x >= 1) record(rhs, *x, y);
            }
        }
    }
    CFExpansion cf = cf_sqrt(d);
    Int p_prev = 1, p = cf.a0, q_prev = 0, q = 1;
    auto consider = [&](const Int& x, const Int& y, const Int& value) {
        if (value == -1) record(-1, x, y);
        else if (value == 2) record(2, x, y);
        else if (value == -2) record(-2, x, y);
    };
    consider(p, q, p * p - d * q * q);
    // Two full periods: for odd period lengths the convergent norms
    // return with flipped signs in the second pass.
    for (int pass = 0; pass < 2; ++pass) {
        for (const Int& a : cf.period) {
            Int pn = a * p + p_prev;
            Int qn = a * q + q_prev;
            p_prev = p;
            p = pn;
            q_prev = q;
            q = qn;
            consider(p, q, p * p - d * q * q);
        }
    }
    std::sort(found.begin(), found.end(),
              [](const PerronWitness& a, const PerronWitness& b) { return a.rhs < b.rhs; });
    return found;
}

namespace {

// Theorem 4.2 uniqueness at desk scale: the found (k, l, c) must be the
// only solvable split among all coprime splits of d, counting both the
// c = 1 (k > 1) and, for odd d, the c = 2 equations.
Uniqueness splits_unique(const Int& d) {
    if (factor(d).size() > 8) return Uniqueness::unknown;
    std::size_t count = enumerate_solvable_splits(d, 1).size();
    if (mpz_odd_p(d.get_mpz_t())) count += enumerate_solvable_splits(d, 2).size();
    return count == 1 ? Uniqueness::unique : Uniqueness::not_unique;
}

}  // namespace

SplitResult split(const Int& d) {
    if (d < 3 || is_perfect_square(d))
        throw std::domain_error("split: d must be a nonsquare >= 3");
    auto fund = fundamental_solution(d, 1);
    const Int& x0 = fund->x;
    const Int& y0 = fund->y;

    if (is_odd(d) && !is_odd(x0)) {
        // gcd(x0 - 1, x0 + 1) = 1: x0 + 1 = k u^2, x0 - 1 = l v^2, c = 2.
        Int k = supported_part(d, x0 + 1);
        Int l = d / k;
        Int u = exact_square_root((x0 + 1) / k, "split c=2 u");
        Int v = exact_square_root((x0 - 1) / l, "split c=2 v");
        if (u * v != y0) throw std::logic_error("split: witness mismatch, u v != y0");
        return SplitResult{k, l, 2, d, MixedSolution(u, v, k, l, 2), splits_unique(d)};
    }

    // x0 odd: (x0 + 1)/2 and (x0 - 1)/2 are coprime.
    Int a = (x0 + 1) / 2;
    Int b = (x0 - 1) / 2;
    if (!is_odd(y0)) {
        // a * b = d (y0/2)^2: full split of d with c = 1.
        Int k = supported_part(d, a);
        Int l = d / k;
        Int u = exact_square_root(a / k, "split c=1 u");
        Int v = exact_square_root(b / l, "split c=1 v");
        if (k == 1)
            throw std::logic_error("split: k = 1 in the c = 1 branch contradicts minimality");
        if (2 * u * v != y0) throw std::logic_error("split: witness mismatch, 2 u v != y0");
        return SplitResult{k, l, 1, d, MixedSolution(u, v, k, l, 1), splits_unique(d)};
    }
    // y0 odd forces 8 | d and a b = (d/4) y0^2.
    if (mpz_fdiv_ui(d.get_mpz_t(), 8) != 0)
        throw std::logic_error("split: odd y0 outside the 8 | d branch");
    Int d4 = d / 4;
    Int k = supported_part(d4, a);
    Int l = d4 / k;
    Int u = exact_square_root(a / k, "split 8|d u");
    Int v = exact_square_root(b / l, "split 8|d v");
    if (u * v != y0) throw std::logic_error("split: witness mismatch, u v != y0");
    return SplitResult{k, l, 1, d4, MixedSolution(u, v, k, l, 1), Uniqueness::not_unique};
}

std::optional<SplitResult> split_quartic(const Int& d) {
    if (d < 3 || !is_odd(d) || is_perfect_square(d))
        throw std::domain_error("split_quartic: d must be an odd nonsquare >= 3");
    auto fund = fundamental_solution(d, 4, /*odd_only=*/true);
    if (!fund) return std::nullopt;
    const Int& X = fund->x;
    const Int& Y = fund->y;
    // X odd: gcd(X + 2, X - 2) = 1, (X + 2)(X - 2) = d Y^2.
    Int k = supported_part(d, X + 2);
    Int l = d / k;
    Int u = exact_square_root((X + 2) / k, "split_quartic u");
    Int v = exact_square_root((X - 2) / l, "split_quartic v");
    if (k == 1)
        throw std::logic_error("split_quartic: k = 1 contradicts minimality of the odd solution");
    if (u * v != Y) throw std::logic_error("split_quartic: witness mismatch");
    return SplitResult{k, l, 4, d, MixedSolution(u, v, k, l, 4), Uniqueness::unknown};
}

std::vector<SplitCandidate> enumerate_solvable_splits(const Int& d, int c, unsigned max_omega) {
    if (c != 1 && c != 2 && c != 4)
        throw std::domain_error("enumerate_solvable_splits: c must be 1, 2 or 4");
    std::vector<SplitCandidate> out;
    for (const auto& [k, l] : coprime_splits(d, max_omega)) {
        if (c != 2 && k < 2) continue;
        if ((c == 2 || c == 4) && mpz_even_p(d.get_mpz_t())) continue;
        if (is_perfect_square(Int(k * l))) continue;
        if (minimal_solution(k, l, c)) out.push_back({k, l, c});
    }
    std::sort(out.begin(), out.end(), [](const SplitCandidate& a, const SplitCandidate& b) {
        return a.k < b.k;
    });
    return out;
}

}  // namespace pellkit
