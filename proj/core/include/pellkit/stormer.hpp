#pragma once

#include "pellkit/pell.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace pellkit {

/// Does every prime divisor of y divide modulus? Computed by repeated
/// gcd extraction, no factorization. `widen` multiplies extra allowed
/// prime support into the modulus (the "divides k or x1" reading).
bool stormer_condition(const Int& y, const Int& modulus, const Int& widen = 1);

enum class ShapeKind {
    pure_smooth,   // no prime outside the modulus support
    one_prime,     // exactly one outside prime
    two_prime,     // exactly two distinct outside primes
    other,         // more outside primes than requested
    unresolved,    // at least two outside primes, exact count unknown
};

/// Decomposition of a value into its modulus-smooth core and the primes
/// outside the modulus support. `unresolved_cofactor` > 1 carries the
/// part of the outside cofactor that resisted the factoring budget (it
/// is composite with at least two distinct primes).
struct SmoothShape {
    ShapeKind kind = ShapeKind::pure_smooth;
    std::vector<FactorEntry> primes;  // outside primes, increasing
    Int smooth_core = 1;
    Int unresolved_cofactor = 1;

    std::vector<Int> outside_primes() const {
        std::vector<Int> out;
        for (const auto& e : primes) out.push_back(e.prime);
        return out;
    }
};

/// Shape of y relative to the prime support of `modulus`, with
/// max_outside in {0, 1, 2} selecting which theorem family the caller
/// cares about. kind == other means strictly more distinct outside
/// primes than max_outside.
SmoothShape smooth_shape(const Int& y, const Int& modulus, unsigned max_outside,
                         std::uint64_t factor_budget = kDefaultRhoBudget);

enum class TheoremId {
    t3_1, t3_2, t3_3, t3_4, t3_5, t3_6, t3_7, t3_8, t3_9, t3_10, t3_11, t3_12,
};

std::string theorem_name(TheoremId id);                     // "3.1" .. "3.12"
std::optional<TheoremId> theorem_from_name(const std::string& name);

/// The equation families the exponent theorems classify.
enum class EquationTag {
    pell_plus1,      // x^2 - d y^2 = 1
    pell_minus1,     // x^2 - d y^2 = -1
    pell_plus4_odd,  // x^2 - d y^2 = 4, solvable in odd integers
    mixed1,          // k x^2 - l y^2 = 1, k > 1
    mixed2,          // k x^2 - l y^2 = 2
    mixed4,          // k x^2 - l y^2 = 4, odd regime, k > 1
};

/// Everything an exponent predicate may consult: the equation, its
/// minimal solution, the classified power, and the outside primes of the
/// conditioned side.
struct ExponentContext {
    Int k = 1, l = 1, d = 1;
    Int x1 = 1, y1 = 1, xm = 1, ym = 1;
    std::vector<Int> outside_primes;
    char side = 'y';      // which component carries the smoothness hypothesis
    bool strict = false;  // Remark 3.3 reading of Thm 3.6's q^r
};

/// Is the power m admissible for the theorem on this instance? Side
/// conditions (the 3^s forms of Thms 3.2/3.3) are evaluated exactly.
bool exponent_allowed(TheoremId id, unsigned long m, const ExponentContext& ctx);

struct AdmissibleExponents {
    TheoremId theorem;
    std::string description;
    std::vector<std::vector<Int>> exceptions;  // the stated exceptional witnesses
};

/// Maps a (shape kind, equation, side) triple to the theorem covering
/// it. Throws std::domain_error when no exponent theorem applies.
AdmissibleExponents admissible_exponents(ShapeKind kind, EquationTag eq, char side = 'y');

/// The stated exceptional witnesses of a theorem (main conclusion).
const std::vector<std::vector<Int>>& theorem_exceptions(TheoremId id);

/// The unique m >= 1 with minimal^m == sol; throws std::domain_error
/// when sol is not a power of the minimal solution. Powers are odd in
/// the mixed (Lemma 2.2) and negative-norm regimes.
unsigned long classify_exponent(const PellSolution& sol, const PellSolution& minimal);
unsigned long classify_exponent(const MixedSolution& sol, const MixedSolution& minimal);

struct VerifyBounds {
    unsigned long d_max = 100;
    unsigned long m_max = 9;
    bool strict_power_reading = false;
    std::uint64_t factor_budget = kDefaultRhoBudget;
    double budget_seconds = 0;  // 0: unlimited
};

struct ExceptionWitness {
    std::vector<Int> tuple;
    unsigned long m = 0;
    std::string kind;        // "exponent", "side-condition", "remark-3.2", "remark-3.4"
    bool known = false;
};

struct VerificationReport {
    std::string theorem;
    VerifyBounds bounds;
    std::uint64_t instances = 0;   // hypothesis-satisfying (instance, m) pairs
    std::uint64_t matches = 0;     // of those, conclusion holds
    std::uint64_t indeterminate = 0;  // shape undecided within budget
    std::vector<ExceptionWitness> exceptions;
    std::vector<ExceptionWitness> remark_exceptions;
    bool partial = false;  // aborted by budget_seconds

    bool has_unexplained() const {
        for (const auto& e : exceptions)
            if (!e.known) return true;
        for (const auto& e : remark_exceptions)
            if (!e.known) return true;
        return false;
    }
};

/// Walks every equation instance with d (or k*l) <= d_max and every
/// solution minimal^m with m <= m_max, tests the theorem hypotheses via
/// smooth_shape, and checks m against the admissible set. All
/// stated exceptions in range must be recovered; anything else is
/// an unexplained violation.
VerificationReport verify_theorem(TheoremId id, const VerifyBounds& bounds = {});

}  // namespace pellkit
