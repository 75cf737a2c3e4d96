#include "pellkit/quadring.hpp"

#include <doctest.h>

#include <cstdint>

using namespace pellkit;

namespace {

struct Rng {
    std::uint64_t state = 0x2545f4914f6cdd1dULL;
    std::uint64_t next() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    }
    long range(long lo, long hi) { return lo + static_cast<long>(next() % (hi - lo + 1)); }
};

}  // namespace

TEST_SUITE_BEGIN("quadring");

TEST_CASE("quad_mul examples") {
    QuadInt a(2, 1, 3);
    CHECK(quad_mul(a, a) == QuadInt(7, 4, 3));
    CHECK(quad_mul(a, QuadInt::one(Int(3))) == a);
    QuadInt h(3, 1, 5, 2);
    CHECK(quad_mul(h, h.conjugate()).is_one());
    CHECK_THROWS_AS(quad_mul(a, h), std::domain_error);
}

TEST_CASE("quad_pow examples") {
    CHECK(quad_pow(QuadInt(2, 1, 3), 3) == QuadInt(26, 15, 3));
    CHECK(quad_pow(QuadInt(3, 1, 5, 2), 5) == QuadInt(123, 55, 5, 2));
    CHECK(quad_pow(QuadInt(9, 4, 5), 0).is_one());
}

TEST_CASE("quad_norm examples") {
    CHECK(quad_norm(QuadInt(26, 15, 3)) == 1);
    CHECK(quad_norm(QuadInt(3, 1, 5, 2)) == 1);
    CHECK(quad_norm(QuadInt(2, 1, 5)) == -1);
}

TEST_CASE("canonicalization of half-integers") {
    CHECK(QuadInt(6, 2, 5, 2) == QuadInt(3, 1, 5));           // even/even reduces
    CHECK(QuadInt(3, 1, 5, 2).denom() == 2);                  // odd/odd stays
    CHECK_THROWS_AS(QuadInt(1, 2, 5, 2), std::domain_error);  // mixed parity
    CHECK_THROWS_AS(QuadInt(1, 1, 3, 2), std::domain_error);  // d = 3 mod 4
    CHECK_THROWS_AS(QuadInt(1, 1, 4), std::domain_error);     // square radicand
}

TEST_CASE("norm is multiplicative on random pairs") {
    Rng rng;
    for (int i = 0; i < 300; ++i) {
        Int d(rng.range(2, 200));
        if (is_perfect_square(d)) continue;
        QuadInt p(rng.range(-50, 50), rng.range(-50, 50), d);
        QuadInt q(rng.range(-50, 50), rng.range(-50, 50), d);
        CHECK(quad_norm(quad_mul(p, q)) == quad_norm(p) * quad_norm(q));
    }
}

TEST_CASE("power addition law") {
    Rng rng;
    QuadInt eps(2, 1, 3);
    QuadInt half(3, 1, 5, 2);
    for (int i = 0; i < 50; ++i) {
        unsigned long a = rng.next() % 65;
        unsigned long b = rng.next() % 65;
        CHECK(quad_pow(eps, a + b) == quad_mul(quad_pow(eps, a), quad_pow(eps, b)));
        CHECK(quad_pow(half, a + b) == quad_mul(quad_pow(half, a), quad_pow(half, b)));
    }
}

TEST_CASE("mixed squaring lands on the ring over k*l") {
    // ((sqrt(5) + 1)/2)^2 = (3 + sqrt(5))/2
    MixedSolution s(1, 1, 5, 1, 4);
    CHECK(mixed_square(s) == QuadInt(3, 1, 5, 2));
    // identity element leaves a mixed solution unchanged
    CHECK(mixed_mul(s, QuadInt::one(Int(5))) == s);
}

TEST_CASE("mixed_pow golden values") {
    MixedSolution s(1, 1, 5, 1, 4);
    CHECK(mixed_pow(s, 5) == MixedSolution(5, 11, 5, 1, 4));
    CHECK(mixed_pow(s, 3) == MixedSolution(2, 4, 5, 1, 4));
    CHECK(mixed_pow(s, 1) == s);
    CHECK(mixed_pow(s, 25) == MixedSolution(Int(75025), Int(167761), 5, 1, 4));
    CHECK_THROWS_AS(mixed_pow(s, 2), std::domain_error);
}

TEST_CASE("odd powers satisfy the defining equation exactly") {
    struct Case { long x, y, k, l; int c; };
    for (const Case& t : {Case{1, 1, 5, 1, 4}, Case{1, 1, 3, 2, 1}, Case{1, 1, 5, 3, 2},
                          Case{1, 1, 7, 3, 4}, Case{2, 1, 3, 11, 1}}) {
        MixedSolution s(t.x, t.y, t.k, t.l, t.c);
        for (unsigned long n = 1; n <= 25; n += 2) {
            MixedSolution p = mixed_pow(s, n);
            CHECK(p.k() * p.x() * p.x() - p.l() * p.y() * p.y() == t.c);
        }
    }
}

TEST_CASE("mixed squares have norm one in the c = 1 regime") {
    MixedSolution s(1, 1, 3, 2, 1);
    for (unsigned long n = 1; n <= 9; n += 2) {
        MixedSolution p = mixed_pow(s, n);
        CHECK(quad_norm(mixed_square(p)) == 1);
    }
}

TEST_CASE("mixed solution validation") {
    CHECK_THROWS_AS(MixedSolution(1, 1, 2, 2, 1), std::domain_error);  // not coprime
    CHECK_THROWS_AS(MixedSolution(1, 1, 4, 1, 1), std::domain_error);  // kl square
    CHECK_THROWS_AS(MixedSolution(1, 1, 3, 2, 2), std::domain_error);  // kl even for c=2
    CHECK_THROWS_AS(MixedSolution(2, 1, 3, 2, 1), std::domain_error);  // equation fails
}

TEST_SUITE_END();
