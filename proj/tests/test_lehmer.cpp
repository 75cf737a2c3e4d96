#include "pellkit/lehmer.hpp"

#include "pellkit/pell.hpp"

#include <doctest.h>

#include <cstdint>

using namespace pellkit;

namespace {

// independent Fibonacci/Lucas oracle
Int fib(unsigned long n) {
    Int a = 0, b = 1;
    for (unsigned long i = 0; i < n; ++i) {
        Int t = a + b;
        a = b;
        b = t;
    }
    return a;
}

Int lucas(unsigned long n) {
    Int a = 2, b = 1;
    for (unsigned long i = 0; i < n; ++i) {
        Int t = a + b;
        a = b;
        b = t;
    }
    return a;
}

struct Rng {
    std::uint64_t state = 0xda3e39cb94b95bdbULL;
    std::uint64_t next() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    }
    long range(long lo, long hi) { return lo + static_cast<long>(next() % (hi - lo + 1)); }
};

}  // namespace

TEST_SUITE_BEGIN("lehmer");

TEST_CASE("parameter validation") {
    CHECK_THROWS_AS(LehmerParams(Int(0), Int(1)), std::domain_error);
    CHECK_THROWS_AS(LehmerParams(Int(4), Int(2)), std::domain_error);   // not coprime
    CHECK_THROWS_AS(LehmerParams(Int(3), Int(1)), std::domain_error);   // R - 4Q <= 0
    CHECK_THROWS_AS(LehmerParams(Int(5), Int(0)), std::domain_error);   // Q = 0
    CHECK_NOTHROW(LehmerParams(Int(1), Int(-1)));
    CHECK_NOTHROW(LehmerParams(Int(5), Int(1)));
}

TEST_CASE("seed values and small examples") {
    LehmerParams fibp(Int(1), Int(-1));
    CHECK(lehmer_P(0, fibp) == 0);
    CHECK(lehmer_P(1, fibp) == 1);
    CHECK(lehmer_P(5, fibp) == 5);
    CHECK(lehmer_Q(0, fibp) == 2);
    CHECK(lehmer_Q(1, fibp) == 1);
    CHECK(lehmer_Q(3, fibp) == 4);
    CHECK(lehmer_Q(5, fibp) == 11);
}

TEST_CASE("Fibonacci and Lucas instantiation up to 64") {
    LehmerParams fibp(Int(1), Int(-1));
    for (unsigned long n = 0; n <= 64; ++n) {
        CHECK(lehmer_P(n, fibp) == fib(n));
        CHECK(lehmer_Q(n, fibp) == lucas(n));
    }
}

TEST_CASE("recurrence equals the closed form for 20 parameter pairs") {
    Rng rng;
    int tested = 0;
    while (tested < 20) {
        Int r(rng.range(1, 40));
        Int q(rng.range(-20, 20));
        if (q == 0 || gcd(r, q < 0 ? Int(-q) : q) != 1 || r - 4 * q <= 0) continue;
        LehmerParams p(r, q);
        for (unsigned long n = 0; n <= 64; ++n) {
            REQUIRE(lehmer_P(n, p) == lehmer_P_closed(n, p));
            REQUIRE(lehmer_Q(n, p) == lehmer_Q_closed(n, p));
        }
        ++tested;
    }
}

TEST_CASE("pell context parameters: x_n = x1 Q_n and y_n = y1 P_n") {
    auto min = minimal_solution(Int(5), Int(1), 4);
    REQUIRE(min.has_value());
    LehmerParams ctx = lehmer_params_for(*min);
    CHECK(ctx.r == 5);
    CHECK(ctx.q == 1);
    // x_25 = 75025 = 5^2 * 3001 in this chain
    CHECK(min->x() * lehmer_Q(25, ctx) == 75025);
    CHECK(min->y() * lehmer_P(25, ctx) == 167761);
    for (unsigned long n = 1; n <= 15; n += 2) {
        MixedSolution p = mixed_pow(*min, n);
        CHECK(p.x() == min->x() * lehmer_Q(n, ctx));
        CHECK(p.y() == min->y() * lehmer_P(n, ctx));
    }
    // the same values in the Fibonacci normalization
    CHECK(lehmer_P(25, LehmerParams(Int(1), Int(-1))) == 75025);
}

TEST_CASE("proposition 2.1 examples") {
    LehmerParams fibp(Int(1), Int(-1));
    CHECK(gcd(lehmer_P(10, fibp), lehmer_P(15, fibp)) == lehmer_P(5, fibp));
    CHECK(lehmer_P(6, fibp) == lehmer_P(3, fibp) * lehmer_Q(3, fibp));  // 8 = 2 * 4
    Prop21Report rep = prop21_check(10, 15, fibp);
    CHECK(rep.all_pass());
    Prop21Report self = prop21_check(7, 7, fibp);
    CHECK(self.all_pass());
}

TEST_CASE("claims 1 to 5 hold exhaustively for m, n up to 24") {
    LehmerParams fibp(Int(1), Int(-1));
    LehmerParams other(Int(5), Int(1));
    for (unsigned long m = 1; m <= 24; ++m)
        for (unsigned long n = 1; n <= 24; ++n) {
            for (const auto& p : {fibp, other}) {
                Prop21Report rep = prop21_check(m, n, p);
                for (const auto& c : rep.claims)
                    if (c.claim <= 5 && c.applicable) {
                        INFO("claim ", c.claim, " at m=", m, " n=", n);
                        CHECK(c.pass);
                    }
            }
        }
}

TEST_CASE("doubling identity P_2m = P_m Q_m up to 32") {
    LehmerParams fibp(Int(1), Int(-1));
    LehmerParams other(Int(7), Int(-3));
    for (unsigned long m = 1; m <= 32; ++m) {
        CHECK(lehmer_P(2 * m, fibp) == lehmer_P(m, fibp) * lehmer_Q(m, fibp));
        CHECK(lehmer_P(2 * m, other) == lehmer_P(m, other) * lehmer_Q(m, other));
    }
}

TEST_CASE("divisibility law P_m | P_n iff m | n") {
    LehmerParams fibp(Int(1), Int(-1));
    for (unsigned long m = 1; m <= 24; ++m) {
        Int pm = lehmer_P(m, fibp);
        if (pm == 1) continue;
        for (unsigned long n = 1; n <= 24; ++n) {
            Int pn = lehmer_P(n, fibp);
            CHECK(mpz_divisible_p(pn.get_mpz_t(), pm.get_mpz_t()) == (n % m == 0));
        }
    }
}

TEST_CASE("ord_p claim for a supplied prime") {
    LehmerParams fibp(Int(1), Int(-1));
    auto rep = prop21_check(5, 5, fibp, Int(5));
    REQUIRE(rep.claims.size() == 7);
    CHECK(rep.claims[6].pass);  // ord_5(P_25 / P_5) = 1 and 5 | P_5
    auto rep2 = prop21_check(2, 2, fibp, Int(3));
    CHECK(rep2.claims[6].pass);  // ord_3(P_6 / P_2) = 0 and 3 does not divide P_2
}

TEST_CASE("square-class scan for the Lucas sequence") {
    LehmerParams fibp(Int(1), Int(-1));
    Lemma23Scan scan = lemma23_scan(fibp, 50);
    CHECK(scan.outside.empty());
    bool hit1 = false, hit3 = false;
    for (const auto& h : scan.hits) {
        if (h.form == 1 && h.n == 1) hit1 = true;   // Q_1 = 1 = 1 * 1^2
        if (h.form == 1 && h.n == 3) hit3 = true;   // Q_3 = 4 = 1 * 2^2
        CHECK((h.form == 1 ? (h.n == 1 || h.n == 3 || h.n == 5) : h.n == 3));
    }
    CHECK(hit1);
    CHECK(hit3);
    // form 2ku^2 never fires for the Lucas numbers below 50
    for (const auto& h : scan.hits) CHECK(h.form == 1);
}

TEST_CASE("square-class scan input validation and empty bound") {
    CHECK_THROWS_AS(lemma23_scan(LehmerParams(Int(2), Int(-1)), 10), std::domain_error);
    LehmerParams fibp(Int(1), Int(-1));
    CHECK(lemma23_scan(fibp, 0).hits.empty());
}

TEST_SUITE_END();
