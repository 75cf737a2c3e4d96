#pragma once

#include "pellkit/quadring.hpp"

#include <optional>
#include <vector>

namespace pellkit {

/// Parameters of a Lehmer sequence pair: R > 0 and Q nonzero coprime
/// with R - 4Q > 0. alpha, beta are the roots of x^2 - sqrt(R) x + Q.
struct LehmerParams {
    Int r, q;

    LehmerParams(Int r_, Int q_) : r(std::move(r_)), q(std::move(q_)) {
        if (r <= 0 || q == 0 || gcd(r, q < 0 ? -q : q) != 1 || r - 4 * q <= 0)
            throw std::domain_error(
                "LehmerParams: need R > 0, Q nonzero, coprime, R - 4Q > 0");
    }
};

/// P_n = (a^n - b^n)/(a - b) for odd n, (a^n - b^n)/(a^2 - b^2) for even
/// n, by the parity-alternating recurrence seeded P_0 = 0, P_1 = 1.
Int lehmer_P(unsigned long n, const LehmerParams& p);

/// Q_n = (a^n + b^n)/(a + b) for odd n, a^n + b^n for even n, seeded
/// Q_0 = 2, Q_1 = 1.
Int lehmer_Q(unsigned long n, const LehmerParams& p);

/// Closed-form values by exact binomial expansion over sqrt(R) and
/// sqrt(R - 4Q); the independent route guarding the recurrences.
Int lehmer_P_closed(unsigned long n, const LehmerParams& p);
Int lehmer_Q_closed(unsigned long n, const LehmerParams& p);

/// Lehmer parameters of the solution chain of k x^2 - l y^2 = c: with
/// alpha = (x1 sqrt(k) + y1 sqrt(l))/sqrt(c) the pair is
/// R = (alpha + beta)^2 = 4 k x1^2 / c and Q = alpha beta = 1. Under it
/// x_n = x1 Q_n and y_n = y1 P_n for odd n.
LehmerParams lehmer_params_for(const MixedSolution& minimal);

struct ClaimResult {
    int claim = 0;        // 1..7
    bool applicable = true;
    bool pass = true;
    std::string note;
};

struct Prop21Report {
    unsigned long m = 0, n = 0;
    std::vector<ClaimResult> claims;

    bool all_pass() const {
        for (const auto& c : claims)
            if (c.applicable && !c.pass) return false;
        return true;
    }
};

/// Evaluates the divisibility and gcd claims on the concrete pair
/// (m, n), in the readings that direct computation supports:
///  (1) P_m | P_n iff m | n, for P_m != 1,
///  (2) Q_m | Q_n iff n/m is an odd integer, for Q_m > 2 (divisibility
///      by 1 or 2 cannot see the parity of n/m),
///  (3) gcd(P_m, P_n) = P_d with d = gcd(m, n),
///  (4) gcd(Q_m, Q_n) = Q_d when m/d and n/d are both odd, else at
///      most 2 (gcd(Q_3, Q_6) = 2 at (1,-1)),
///  (5) gcd(P_m, Q_n) = Q_d when m/d is even, else at most 2,
///  (6) P_{2m} = P_m Q_m,
///  (7) for a supplied prime p: ord_p(P_{mp}/P_m) is 1 or 0 according
///      as p divides P_m or not; reported pass/fail, since ranks of
///      apparition can break it (ord_5(P_5/P_1) = 1 with 5 not
///      dividing P_1).
Prop21Report prop21_check(unsigned long m, unsigned long n, const LehmerParams& p,
                          std::optional<Int> prime = std::nullopt);

struct SquareClassHit {
    unsigned long n = 0;
    Int k, u;
    int form = 1;  // 1: Q_n = k u^2, 2: Q_n = 2 k u^2
};

struct Lemma23Scan {
    std::vector<SquareClassHit> hits;
    /// Hits whose n falls outside {1, 3, 5} (form 1) or {3} (form 2).
    std::vector<SquareClassHit> outside;
};

/// Scans odd n <= bound for Q_n = k u^2 or 2 k u^2 with k a squarefree
/// divisor of n. Requires R and Q both odd. The square-class law holds
/// in the odd-index regime only (Q_6 = 18 = 2 * 3^2 at (1, -1) breaks
/// it for even n), so even indices are excluded.
Lemma23Scan lemma23_scan(const LehmerParams& p, unsigned long bound);

}  // namespace pellkit
