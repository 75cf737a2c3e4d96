#include "pellkit/arith.hpp"

#include <algorithm>
#include <array>
#include <cstdint>

namespace pellkit {

namespace {

const std::vector<unsigned long>& small_primes() {
    static const std::vector<unsigned long> primes = [] {
        constexpr unsigned long limit = 1'000'000;
        std::vector<bool> sieve(limit + 1, true);
        std::vector<unsigned long> out;
        for (unsigned long i = 2; i <= limit; ++i) {
            if (!sieve[i]) continue;
            out.push_back(i);
            for (unsigned long j = i * i; j <= limit; j += i) sieve[j] = false;
        }
        return out;
    }();
    return primes;
}

bool miller_rabin_witness(const Int& n, const Int& base, const Int& d, unsigned long r) {
    Int a = base % n;
    if (a == 0) return false;
    Int x;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n - 1) return false;
    for (unsigned long i = 1; i < r; ++i) {
        x = (x * x) % n;
        if (x == n - 1) return false;
    }
    return true;  // composite witness found
}

std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Brent's cycle-finding variant of Pollard rho with batched gcds.
// Returns a nontrivial factor or 0 when the budget is exhausted.
Int pollard_brent(const Int& n, std::uint64_t& budget) {
    if (n % 2 == 0) return 2;
    std::uint64_t rng = 0x5eedULL ^ mpz_fdiv_ui(n.get_mpz_t(), 0xffffffffULL);
    while (budget > 0) {
        Int y = Int(splitmix64(rng)) % n;
        Int c = Int(splitmix64(rng)) % n;
        if (c == 0) c = 1;
        Int x, ys, q = 1, g = 1;
        unsigned long r = 1;
        const unsigned long batch = 128;
        while (g == 1 && budget > 0) {
            x = y;
            for (unsigned long i = 0; i < r && budget > 0; ++i) {
                y = (y * y + c) % n;
                --budget;
            }
            unsigned long k = 0;
            while (k < r && g == 1 && budget > 0) {
                ys = y;
                unsigned long steps = std::min(batch, r - k);
                for (unsigned long i = 0; i < steps && budget > 0; ++i) {
                    y = (y * y + c) % n;
                    Int diff = x - y;
                    if (diff < 0) diff = -diff;
                    q = (q * diff) % n;
                    --budget;
                }
                g = gcd(q, n);
                k += steps;
            }
            r *= 2;
        }
        if (g == n) {
            // backtrack one step at a time
            do {
                ys = (ys * ys + c) % n;
                Int diff = x - ys;
                if (diff < 0) diff = -diff;
                g = gcd(diff, n);
            } while (g == 1);
        }
        if (g != n && g > 1) return g;
        // retry with a fresh constant
    }
    return 0;
}

void insert_factor(Factorization& out, const Int& p, unsigned exponent) {
    for (auto& e : out) {
        if (e.prime == p) {
            e.exponent += exponent;
            return;
        }
    }
    out.push_back({p, exponent});
}

// Recursive split of a trial-division-free cofactor.
// Returns false if some piece resisted the budget.
bool split_rough(const Int& n, unsigned multiplicity, Factorization& out,
                 std::uint64_t& budget) {
    if (n == 1) return true;
    if (is_probable_prime(n)) {
        insert_factor(out, n, multiplicity);
        return true;
    }
    if (mpz_perfect_power_p(n.get_mpz_t())) {
        for (unsigned long k = 2; ; ++k) {
            Int root;
            if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k) != 0) {
                return split_rough(root, multiplicity * static_cast<unsigned>(k), out, budget);
            }
            Int bound;
            mpz_ui_pow_ui(bound.get_mpz_t(), 2, k + 1);
            if (bound > n) break;
        }
    }
    Int d = pollard_brent(n, budget);
    if (d == 0) return false;
    return split_rough(d, multiplicity, out, budget) &&
           split_rough(n / d, multiplicity, out, budget);
}

}  // namespace

bool is_probable_prime(const Int& n) {
    if (n < 2) return false;
    static const std::array<unsigned long, 12> det_bases = {2,  3,  5,  7,  11, 13,
                                                            17, 19, 23, 29, 31, 37};
    for (unsigned long p : det_bases) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    Int d = n - 1;
    unsigned long r = mpz_scan1(d.get_mpz_t(), 0);
    d >>= r;
    for (unsigned long b : det_bases) {
        if (miller_rabin_witness(n, Int(b), d, r)) return false;
    }
    // The 12-base set is deterministic below 3.3e24.
    Int det_limit;
    mpz_ui_pow_ui(det_limit.get_mpz_t(), 10, 24);
    if (n < 3 * det_limit) return true;
    std::uint64_t rng = 0x9e3779b9ULL ^ mpz_fdiv_ui(n.get_mpz_t(), 0xfffffffbULL);
    for (int i = 0; i < 28; ++i) {
        Int base = 2 + Int(splitmix64(rng)) % (n - 3);
        if (miller_rabin_witness(n, base, d, r)) return false;
    }
    return true;
}

PartialFactorization try_factor(const Int& n, std::uint64_t rho_budget,
                                unsigned long trial_limit) {
    if (n <= 0) throw std::domain_error("try_factor: n must be >= 1");
    PartialFactorization result;
    Int rest = n;
    if (rest == 1) return result;
    for (unsigned long p : small_primes()) {
        if (p > trial_limit) break;
        if (Int(p) * p > rest) break;
        if (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
            unsigned e = 0;
            do {
                mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
                ++e;
            } while (mpz_divisible_ui_p(rest.get_mpz_t(), p));
            result.factors.push_back({Int(p), e});
        }
        if (rest == 1) break;
    }
    if (rest > 1) {
        // After trial division the remainder has no prime factor below
        // min(trial_limit, sqrt(original remainder)).
        Factorization rough;
        bool ok = split_rough(rest, 1, rough, rho_budget);
        for (const auto& e : rough) {
            Int pe;
            mpz_pow_ui(pe.get_mpz_t(), e.prime.get_mpz_t(), e.exponent);
            rest /= pe;
            insert_factor(result.factors, e.prime, e.exponent);
        }
        if (!ok) result.cofactor = rest;
    }
    std::sort(result.factors.begin(), result.factors.end(),
              [](const FactorEntry& a, const FactorEntry& b) { return a.prime < b.prime; });
    return result;
}

Factorization factor(const Int& n) {
    if (n == 0) throw std::domain_error("factor: n must be >= 1");
    PartialFactorization pf = try_factor(n);
    if (!pf.complete()) {
        throw incomplete_factorization("factor: unfactored cofactor " +
                                       pf.cofactor.get_str() + " of " + n.get_str());
    }
    return pf.factors;
}

Int factorization_value(const Factorization& f) {
    Int v = 1;
    for (const auto& e : f) {
        Int pe;
        mpz_pow_ui(pe.get_mpz_t(), e.prime.get_mpz_t(), e.exponent);
        v *= pe;
    }
    return v;
}

Int radical(const Int& n) {
    if (n == 0) throw std::domain_error("radical: n must be >= 1");
    Int r = 1;
    for (const auto& e : factor(n)) r *= e.prime;
    return r;
}

std::pair<Int, Int> smooth_part(const Int& n, const Int& base) {
    if (n == 0 || base == 0) throw std::domain_error("smooth_part: arguments must be >= 1");
    Int smooth = 1, rest = n;
    for (;;) {
        Int g = gcd(rest, base);
        if (g == 1) break;
        smooth *= g;
        rest /= g;
    }
    return {smooth, rest};
}

std::optional<Int> is_perfect_square(const Int& n) {
    if (n < 0) return std::nullopt;
    if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return std::nullopt;
    Int r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

int jacobi(Int a, Int n) {
    if (n <= 0 || n % 2 == 0) throw std::domain_error("jacobi: n must be odd and positive");
    a %= n;
    if (a < 0) a += n;
    int result = 1;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            unsigned long m8 = mpz_fdiv_ui(n.get_mpz_t(), 8);
            if (m8 == 3 || m8 == 5) result = -result;
        }
        std::swap(a, n);
        if (mpz_fdiv_ui(a.get_mpz_t(), 4) == 3 && mpz_fdiv_ui(n.get_mpz_t(), 4) == 3)
            result = -result;
        a %= n;
    }
    return n == 1 ? result : 0;
}

Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

unsigned ord_p(const Int& n, const Int& p) {
    if (p < 2) throw std::domain_error("ord_p: p must be >= 2");
    if (n == 0) throw std::domain_error("ord_p: n must be nonzero");
    Int rest = n;
    unsigned e = 0;
    while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
        rest /= p;
        ++e;
    }
    return e;
}

std::optional<unsigned> exact_power_of(const Int& n, const Int& base) {
    if (n < 2 || base < 2) return std::nullopt;
    Int v = base;
    unsigned e = 1;
    while (v < n) {
        v *= base;
        ++e;
    }
    if (v == n) return e;
    return std::nullopt;
}

}  // namespace pellkit
