#pragma once

#include "pellkit/quadring.hpp"

#include <optional>
#include <vector>

namespace pellkit {

/// Periodic continued fraction of sqrt(d): a0 followed by the minimal
/// period. The last period element is always 2*a0.
struct CFExpansion {
    Int a0;
    std::vector<Int> period;
};

/// Positive solution of x^2 - d*y^2 = rhs, rhs in {+1, -1, +4, -4}.
/// denom == 2 marks the half-integral form (x + y*sqrt(d))/2 with x, y
/// odd, which only occurs for rhs = +-4.
struct PellSolution {
    Int x, y, d;
    int rhs = 1;
    int denom = 1;

    friend bool operator==(const PellSolution& a, const PellSolution& b) {
        return a.x == b.x && a.y == b.y && a.d == b.d && a.rhs == b.rhs && a.denom == b.denom;
    }
};

/// Minimal-period continued fraction of sqrt(d), d >= 2 nonsquare.
CFExpansion cf_sqrt(const Int& d);

/// Least positive solution of x^2 - d*y^2 = rhs, or nullopt when the
/// equation is unsolvable. For rhs = +-4, odd_only restricts to the
/// regime solvable in odd x, y; without the flag the least solution is
/// returned (the half-integral unit when one exists, else twice the
/// rhs = +-1 solution).
std::optional<PellSolution> fundamental_solution(const Int& d, int rhs, bool odd_only = false);

/// Minimal positive solution of k*x^2 - l*y^2 = c for c in {1, 2, 4},
/// gcd(k, l) = 1, k*l nonsquare, k > 1 or c == 2, k*l odd when c is 2 or
/// 4. Constructed from the factorization of x0 +- 1 (or X +- 2) of the
/// fundamental solution over d = k*l; nullopt when unsolvable.
std::optional<MixedSolution> minimal_solution(const Int& k, const Int& l, int c);

/// The ring element represented by a Pell solution: x + y*sqrt(d) for
/// |rhs| = 1 and (x + y*sqrt(d))/2 for |rhs| = 4.
QuadInt pell_element(const PellSolution& s);

/// First `count` solutions in increasing order: all powers of the
/// fundamental element when rhs is +1 or +4, odd powers when rhs is -1
/// or -4 (the even powers change the sign of the norm).
std::vector<PellSolution> solutions(const PellSolution& fundamental, unsigned long count);

/// First `count` solutions of the mixed equation: odd powers of the
/// minimal solution.
std::vector<MixedSolution> solutions(const MixedSolution& minimal, unsigned long count);

/// Outcome of checking one of the six minimal-solution identities
/// relating the equations k x^2 - l y^2 = 1, x^2 - d y^2 = 1,
/// k x^2 - l y^2 = 2, k x^2 - l y^2 = 4 and x^2 - d y^2 = 4.
enum class IdentityStatus { holds, failed, skipped };

struct Lemma24Identity {
    int id = 0;  // 1..6
    IdentityStatus status = IdentityStatus::skipped;
    std::string note;
};

struct Lemma24Report {
    Int k, l;
    std::optional<MixedSolution> eps1;   // k x^2 - l y^2 = 1, k > 1
    std::optional<PellSolution> eps2;    // x^2 - d y^2 = 1
    std::optional<MixedSolution> eps3;   // k x^2 - l y^2 = 2
    std::optional<MixedSolution> eps4;   // k x^2 - l y^2 = 4 (odd regime)
    std::optional<PellSolution> eps5;    // x^2 - d y^2 = 4 in odd integers
    std::vector<Lemma24Identity> identities;

    bool all_hold() const {
        for (const auto& i : identities)
            if (i.status == IdentityStatus::failed) return false;
        return true;
    }
};

/// Computes every minimal solution that exists for the five equations
/// over (k, l) and checks each applicable identity by exact arithmetic.
/// Requires gcd(k, l) = 1, k*l odd nonsquare, k > 1.
Lemma24Report lemma24_relations(const Int& k, const Int& l);

}  // namespace pellkit
