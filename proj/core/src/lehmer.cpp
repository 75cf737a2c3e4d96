#include "pellkit/lehmer.hpp"

#include <algorithm>
#include <numeric>

namespace pellkit {

namespace {

// Both sequences satisfy the same parity-alternating recurrences derived
// from alpha + beta = sqrt(R), alpha*beta = Q:
//   P_n = R P_{n-1} - Q P_{n-2}  (n odd),   P_n = P_{n-1} - Q P_{n-2}  (n even)
//   Q_n = Q_{n-1} - Q Q_{n-2}    (n odd),   Q_n = R Q_{n-1} - Q Q_{n-2} (n even)
Int run_recurrence(unsigned long n, const LehmerParams& p, Int v0, Int v1, bool odd_uses_r) {
    if (n == 0) return v0;
    if (n == 1) return v1;
    Int prev2 = std::move(v0), prev1 = std::move(v1);
    for (unsigned long i = 2; i <= n; ++i) {
        bool odd = (i % 2 == 1);
        Int next = (odd == odd_uses_r ? p.r * prev1 : prev1) - p.q * prev2;
        prev2 = std::move(prev1);
        prev1 = std::move(next);
    }
    return prev1;
}

Int checked_nonnegative(Int v, const char* what) {
    if (v < 0) throw std::logic_error(std::string(what) + ": negative sequence value");
    return v;
}

}  // namespace

Int lehmer_P(unsigned long n, const LehmerParams& p) {
    return checked_nonnegative(run_recurrence(n, p, 0, 1, /*odd_uses_r=*/true), "lehmer_P");
}

Int lehmer_Q(unsigned long n, const LehmerParams& p) {
    return checked_nonnegative(run_recurrence(n, p, 2, 1, /*odd_uses_r=*/false), "lehmer_Q");
}

Int lehmer_P_closed(unsigned long n, const LehmerParams& p) {
    if (n == 0) return 0;
    // 2^(n-1) P_n = sum over odd i of C(n,i) R^e Delta^((i-1)/2),
    // e = (n-i)/2 for odd n and (n-i-1)/2 for even n.
    Int delta = p.r - 4 * p.q;
    Int sum = 0;
    for (unsigned long i = 1; i <= n; i += 2) {
        Int binom;
        mpz_bin_uiui(binom.get_mpz_t(), n, i);
        unsigned long e = (n % 2 == 1) ? (n - i) / 2 : (n - i - 1) / 2;
        Int rp, dp;
        mpz_pow_ui(rp.get_mpz_t(), p.r.get_mpz_t(), e);
        mpz_pow_ui(dp.get_mpz_t(), delta.get_mpz_t(), (i - 1) / 2);
        sum += binom * rp * dp;
    }
    Int scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 2, n - 1);
    if (!mpz_divisible_p(sum.get_mpz_t(), scale.get_mpz_t()))
        throw std::logic_error("lehmer_P_closed: non-integral value");
    return sum / scale;
}

Int lehmer_Q_closed(unsigned long n, const LehmerParams& p) {
    if (n == 0) return 2;
    Int delta = p.r - 4 * p.q;
    Int sum = 0;
    for (unsigned long i = 0; i <= n; i += 2) {
        Int binom;
        mpz_bin_uiui(binom.get_mpz_t(), n, i);
        unsigned long e = (n % 2 == 0) ? (n - i) / 2 : (n - i - 1) / 2;
        Int rp, dp;
        mpz_pow_ui(rp.get_mpz_t(), p.r.get_mpz_t(), e);
        mpz_pow_ui(dp.get_mpz_t(), delta.get_mpz_t(), i / 2);
        sum += binom * rp * dp;
    }
    Int scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 2, n - 1);
    if (!mpz_divisible_p(sum.get_mpz_t(), scale.get_mpz_t()))
        throw std::logic_error("lehmer_Q_closed: non-integral value");
    return sum / scale;
}

LehmerParams lehmer_params_for(const MixedSolution& minimal) {
    Int num = 4 * minimal.k() * minimal.x() * minimal.x();
    if (!mpz_divisible_ui_p(num.get_mpz_t(), minimal.c()))
        throw std::logic_error("lehmer_params_for: 4 k x1^2 not divisible by c");
    return LehmerParams(num / minimal.c(), 1);
}

Prop21Report prop21_check(unsigned long m, unsigned long n, const LehmerParams& p,
                          std::optional<Int> prime) {
    if (m == 0 || n == 0) throw std::domain_error("prop21_check: m, n must be >= 1");
    Prop21Report rep;
    rep.m = m;
    rep.n = n;
    unsigned long d = std::gcd(m, n);

    Int pm = lehmer_P(m, p), pn = lehmer_P(n, p), pd = lehmer_P(d, p);
    Int qm = lehmer_Q(m, p), qn = lehmer_Q(n, p), qd = lehmer_Q(d, p);

    {
        ClaimResult c{1, pm != 1, true, ""};
        if (c.applicable) {
            bool divides = mpz_divisible_p(pn.get_mpz_t(), pm.get_mpz_t());
            c.pass = (divides == (n % m == 0));
        } else {
            c.note = "P_m = 1";
        }
        rep.claims.push_back(c);
    }
    {
        // The forward direction needs Q_m > 2: divisibility by 1 or 2
        // cannot see the parity of n/m (claim 4's otherwise-branch
        // already allows a shared factor 2).
        ClaimResult c{2, qm > 2, true, ""};
        if (c.applicable) {
            bool divides = mpz_divisible_p(qn.get_mpz_t(), qm.get_mpz_t());
            bool odd_ratio = (n % m == 0) && ((n / m) % 2 == 1);
            c.pass = (divides == odd_ratio);
        } else {
            c.note = "Q_m <= 2, forward direction vacuous";
            bool odd_ratio = (n % m == 0) && ((n / m) % 2 == 1);
            if (odd_ratio) c.pass = mpz_divisible_p(qn.get_mpz_t(), qm.get_mpz_t());
        }
        rep.claims.push_back(c);
    }
    {
        ClaimResult c{3, true, gcd(pm, pn) == pd, ""};
        rep.claims.push_back(c);
    }
    {
        ClaimResult c{4, true, true, ""};
        Int g = gcd(qm, qn);
        if ((m / d) % 2 == 1 && (n / d) % 2 == 1) {
            c.pass = (g == qd);
        } else {
            c.pass = (g == 1 || g == 2);
            c.note = "otherwise-branch admits gcd 2 (e.g. Q_3, Q_6 at (1,-1))";
        }
        rep.claims.push_back(c);
    }
    {
        ClaimResult c{5, true, true, ""};
        Int g = gcd(pm, qn);
        if ((m / d) % 2 == 0) {
            c.pass = (g == qd);
        } else {
            c.pass = (g == 1 || g == 2);
            c.note = "otherwise-branch admits gcd 2 (e.g. P_3, Q_3 at (1,-1))";
        }
        rep.claims.push_back(c);
    }
    {
        Int p2m = lehmer_P(2 * m, p);
        ClaimResult c{6, true, p2m == pm * qm, "P_2m = P_m Q_m"};
        rep.claims.push_back(c);
    }
    if (prime) {
        ClaimResult c{7, true, true, "ord_p(P_mp / P_m) = 1 iff p | P_m"};
        if (*prime < 2 || !is_probable_prime(*prime)) {
            throw std::domain_error("prop21_check: claim 7 needs a prime");
        }
        if (!prime->fits_ulong_p() || prime->get_ui() > 10'000 / std::max<unsigned long>(m, 1))
            throw std::domain_error("prop21_check: claim 7 index m*p too large");
        unsigned long mp_index = m * prime->get_ui();
        Int pmp = lehmer_P(mp_index, p);
        if (!mpz_divisible_p(pmp.get_mpz_t(), pm.get_mpz_t())) {
            c.pass = false;
            c.note = "P_m does not divide P_mp";
        } else {
            unsigned ord = ord_p(pmp / pm, *prime);
            unsigned expected = mpz_divisible_p(pm.get_mpz_t(), prime->get_mpz_t()) ? 1 : 0;
            c.pass = (ord == expected);
        }
        rep.claims.push_back(c);
    }
    return rep;
}

Lemma23Scan lemma23_scan(const LehmerParams& p, unsigned long bound) {
    if (mpz_even_p(p.r.get_mpz_t()) || mpz_even_p(p.q.get_mpz_t()))
        throw std::domain_error("lemma23_scan: R and Q must both be odd");
    Lemma23Scan scan;
    for (unsigned long n = 1; n <= bound; n += 2) {
        Int qn = lehmer_Q(n, p);
        // squarefree divisors k of n
        std::vector<Int> ks{1};
        for (const auto& e : factor(Int(n))) {
            std::size_t sz = ks.size();
            for (std::size_t i = 0; i < sz; ++i) ks.push_back(ks[i] * e.prime);
        }
        std::sort(ks.begin(), ks.end());
        for (const Int& k : ks) {
            if (mpz_divisible_p(qn.get_mpz_t(), k.get_mpz_t())) {
                if (auto u = is_perfect_square(qn / k)) {
                    SquareClassHit hit{n, k, *u, 1};
                    scan.hits.push_back(hit);
                    if (n != 1 && n != 3 && n != 5) scan.outside.push_back(hit);
                }
            }
            Int k2 = 2 * k;
            if (mpz_divisible_p(qn.get_mpz_t(), k2.get_mpz_t())) {
                if (auto u = is_perfect_square(qn / k2)) {
                    SquareClassHit hit{n, k, *u, 2};
                    scan.hits.push_back(hit);
                    if (n != 3) scan.outside.push_back(hit);
                }
            }
        }
    }
    return scan;
}

}  // namespace pellkit
