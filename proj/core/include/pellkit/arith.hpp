#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pellkit {

/// Exact arbitrary-precision integer. All arithmetic in this library is
/// exact; no rounding occurs anywhere.
using Int = mpz_class;

/// Thrown when a cofactor resists factoring within the effort budget.
/// A composite is never silently reported as prime.
class incomplete_factorization : public std::runtime_error {
public:
    explicit incomplete_factorization(const std::string& what)
        : std::runtime_error(what) {}
};

struct FactorEntry {
    Int prime;
    unsigned exponent = 0;

    friend bool operator==(const FactorEntry& a, const FactorEntry& b) {
        return a.prime == b.prime && a.exponent == b.exponent;
    }
};

/// Complete prime factorization, primes strictly increasing. The value 1
/// maps to the empty list.
using Factorization = std::vector<FactorEntry>;

/// Outcome of a budgeted factoring attempt: `factors` times `cofactor`
/// reconstructs the input; cofactor == 1 means the factorization is
/// complete, otherwise the cofactor is a composite collecting the pieces
/// that resisted the budget (no prime factor below the trial bound).
struct PartialFactorization {
    Factorization factors;
    Int cofactor = 1;

    bool complete() const { return cofactor == 1; }
};

/// Miller-Rabin primality test: deterministic witness set below 3.3e24
/// (covers 64-bit), fixed extra rounds with deterministically derived
/// bases above.
bool is_probable_prime(const Int& n);

inline constexpr std::uint64_t kDefaultRhoBudget = 4'000'000;

/// Trial division then Brent's rho with a deterministic seed. Never
/// throws on a hard cofactor; reports it in `cofactor` instead.
PartialFactorization try_factor(const Int& n,
                                std::uint64_t rho_budget = kDefaultRhoBudget,
                                unsigned long trial_limit = 1'000'000);

/// Complete factorization of n >= 1. Throws incomplete_factorization if
/// the rho budget runs out before the last cofactor splits.
Factorization factor(const Int& n);

/// Product of prime^exponent over all entries.
Int factorization_value(const Factorization& f);

/// Product of the distinct primes of n; radical(1) = 1.
Int radical(const Int& n);

/// Splits n into (smooth, rest): smooth * rest = n, every prime of
/// smooth divides base, no prime of rest divides base. Needs no
/// factorization, only gcd extraction.
std::pair<Int, Int> smooth_part(const Int& n, const Int& base);

/// The r with r*r = n, or nullopt.
std::optional<Int> is_perfect_square(const Int& n);

/// Jacobi symbol (a|n) for odd n >= 1, computed by quadratic
/// reciprocity. Throws std::domain_error for even or nonpositive n.
int jacobi(Int a, Int n);

Int gcd(const Int& a, const Int& b);

/// Largest e with p^e | n, for p >= 2.
unsigned ord_p(const Int& n, const Int& p);

/// If n == base^e for some e >= 1 returns e, otherwise nullopt. n, base >= 2.
std::optional<unsigned> exact_power_of(const Int& n, const Int& base);

}  // namespace pellkit
