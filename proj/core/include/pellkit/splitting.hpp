#pragma once

#include "pellkit/pell.hpp"

#include <optional>
#include <vector>

namespace pellkit {

struct PerronWitness {
    int rhs = 0;  // -1, 2 or -2
    Int x, y;
};

/// Which of x^2 - d y^2 = -1, 2, -2 are solvable, each with its least
/// witness, for d >= 3 nonsquare and d != 2. Witnesses come from two
/// periods of the convergents of sqrt(d) (all solutions with
/// |rhs| < sqrt(d) do), plus a small direct scan that covers d = 3 where
/// 2 exceeds sqrt(d). At least one equation is solvable for prime d; for
/// composite d the set can be empty (d = 8 blocks all three mod 8,
/// d = 15 mod 3 and mod 5), so emptiness is returned, not asserted.
std::vector<PerronWitness> perron_trichotomy(const Int& d);

enum class Uniqueness { unique, not_unique, unknown };

/// A coprime split modulus = k * l with k x^2 - l y^2 = c solvable,
/// constructed from the factorization of x0 +- 1 (or X +- 2) of the
/// fundamental solution. For d divisible by 8 with odd y0 the natural
/// construction lands on modulus = d / 4; in every other branch
/// modulus = d.
struct SplitResult {
    Int k, l;
    int c = 1;
    Int modulus;
    MixedSolution witness;
    Uniqueness unique = Uniqueness::unknown;
};

/// The constructive splitting of d >= 3 nonsquare:
///  - 2 | d, 8 does not divide d: x0 +- 1 = 2k u^2, 2l v^2 gives c = 1
///    with k > 1 (unique);
///  - 2 does not divide d, x0 odd: same, c = 1, k > 1 (unique);
///  - 2 does not divide d, x0 even: x0 +- 1 = k u^2, l v^2 gives c = 2
///    (unique, k = 1 legal);
///  - 8 | d: the same extraction; with y0 even it still yields a full
///    c = 1 split of d with k > 1, with y0 odd it yields a coprime split
///    of d / 4 (k = 1 possible; e.g. d = 32 has no solvable coprime
///    k > 1 split of d or d/4 at all, by exhaustion). Not unique.
SplitResult split(const Int& d);

/// The c = 4 analogue from the odd fundamental solution of
/// x^2 - d y^2 = 4: (X + 2)(X - 2) = d Y^2 gives k u^2, l v^2 with
/// k > 1; nullopt when the odd-solvability precondition fails.
std::optional<SplitResult> split_quartic(const Int& d);

/// Exhaustive check over all coprime splits of d (2 or 4 may be the c
/// values, per the Theorem 4.2 regime): returns the solvable (k, l, c)
/// triples with k > 1 for c = 1|4 and k >= 1 for c = 2. Used by the
/// uniqueness verdicts; requires omega(d) <= max_omega.
struct SplitCandidate {
    Int k, l;
    int c;
};
std::vector<SplitCandidate> enumerate_solvable_splits(const Int& d, int c,
                                                      unsigned max_omega = 8);

}  // namespace pellkit
