#pragma once

#include "pellkit/arith.hpp"

#include <optional>
#include <vector>

namespace pellkit {

/// Raised when no theorem covers the instance; an empty solution set is
/// a mathematical claim, absence of coverage is not.
class uncovered_error : public std::domain_error {
public:
    explicit uncovered_error(const std::string& what) : std::domain_error(what) {}
};

Int triangular(const Int& n);

/// Index k with T_k == v, when v is triangular.
std::optional<Int> triangular_index(const Int& v);

/// Three triangular numbers in geometric progression with an exact
/// rational ratio.
struct GPTriple {
    Int n1, n2, n3;
    Int t1, t2, t3;
    mpq_class ratio;
};

/// If T_n = m^2, builds the progression T_n, T_{n+2m}, T_{3n+4m+1} with
/// ratio (2n + 3m + 1)/m; nullopt when T_n is not a square.
std::optional<GPTriple> gp_construct(const Int& n);

/// All geometric progressions of the requested length (3 or 4) among
/// triangular numbers T_i, i <= bound, values ascending. Rational ratios
/// included. Length 4 is expected empty.
std::vector<std::vector<Int>> gp_scan(unsigned long bound, int length);

/// The same scan over the value set {D m^2 + C, D m^2 - C} up to
/// value_cap.
std::vector<std::vector<Int>> gp_scan_form(const Int& d, int c, const Int& value_cap,
                                           int length);

/// One instance of the Ma-family equations
///   x^2 = p^{2a} K^2 y^2 - p^{a+b} K_t K_r delta + c0
/// with K = prod k_i^{t_i}, K_t K_r = prod k_i^{t_i + r_i}, c0 in {1, 4},
/// delta in {+-1, +-2, +-4}. Solutions constrain y to be odd when
/// c0 = 4 or |delta| in {2, 4}.
struct MaInstance {
    Int p;
    unsigned long a = 1, b = 1;
    std::vector<Int> k;
    std::vector<unsigned long> t, r;
    int delta = 1;
    int c0 = 1;

    MaInstance(Int p_, unsigned long a_, unsigned long b_, std::vector<Int> k_,
               std::vector<unsigned long> t_, std::vector<unsigned long> r_, int delta_,
               int c0_);

    Int m_value() const;  // p^a prod k_i^{t_i}
    Int n_value() const;  // p^b prod k_i^{r_i}
    Int rhs_for(const Int& y) const;
    bool y_parity_constrained() const { return c0 == 4 || delta == 2 || delta == -2 || delta == 4 || delta == -4; }
};

/// The full solution set given by the applicable closed forms (Theorems
/// covering the delta = +-1, +-2 and +-4 families), side conditions
/// checked exactly. Throws uncovered_error when no theorem applies.
std::vector<std::pair<Int, Int>> ma_solve(const MaInstance& inst);

/// Exhaustive scan over y (x follows) with x, y <= bound.
std::vector<std::pair<Int, Int>> ma_bruteforce(const MaInstance& inst, const Int& bound);

enum class LjFamily {
    power_over_linear,  // (a x^n + c)/(a x + c) = y^2, n odd
    shifted,            // (a x^{n+2l} + c)/(a x^n + c) = y^2
    general,            // (a x^{n+2l} + c)/(a b t^2 x^n + c) = b y^2
    general_linear,     // (a x^n + c)/(a b x t^2 + c) = b y^2, n odd
};

struct LjBounds {
    unsigned long a_max = 10;
    unsigned long x_max = 10;
    unsigned long n_max = 12;
    unsigned long l_max = 4;
    unsigned long t_max = 3;
    long b_max = 3;  // b ranges over [-b_max, b_max] minus 0 where applicable
};

struct LjQuery {
    LjFamily family = LjFamily::power_over_linear;
    int c = -1;  // +-1, +-2, +-4
    std::optional<Int> fixed_a;
    LjBounds bounds;
};

struct LjSolution {
    Int a, b, x, y;
    unsigned long n = 1, t = 1, l = 0;

    friend bool operator==(const LjSolution& s, const LjSolution& o) {
        return s.a == o.a && s.b == o.b && s.x == o.x && s.y == o.y && s.n == o.n &&
               s.t == o.t && s.l == o.l;
    }
};

/// The complete solution set inside the query bounds, enumerated from
/// the closed-form characterizations (x = 3 families with parity side
/// conditions, the x = 5 sporadic, the trivial y = +-1 families, the
/// exceptional (1,-1,2,+-3,...) tuples). y reported positive.
std::vector<LjSolution> ljunggren_solve(const LjQuery& q);

/// Independent oracle: direct evaluation of the quotient over the same
/// grid.
std::vector<LjSolution> ljunggren_bruteforce(const LjQuery& q);

}  // namespace pellkit
