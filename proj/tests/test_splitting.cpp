#include "pellkit/splitting.hpp"

#include <doctest.h>

using namespace pellkit;

namespace {

std::optional<PerronWitness> find_rhs(const std::vector<PerronWitness>& ws, int rhs) {
    for (const auto& w : ws)
        if (w.rhs == rhs) return w;
    return std::nullopt;
}

}  // namespace

TEST_SUITE_BEGIN("splitting");

TEST_CASE("perron trichotomy examples") {
    auto w3 = perron_trichotomy(Int(3));
    REQUIRE(w3.size() == 1);
    CHECK(w3[0].rhs == -2);
    CHECK(w3[0].x == 1);
    CHECK(w3[0].y == 1);

    auto w5 = perron_trichotomy(Int(5));
    auto m1 = find_rhs(w5, -1);
    REQUIRE(m1.has_value());
    CHECK(m1->x == 2);
    CHECK(m1->y == 1);

    auto w7 = perron_trichotomy(Int(7));
    auto p2 = find_rhs(w7, 2);
    REQUIRE(p2.has_value());
    CHECK(p2->x == 3);
    CHECK(p2->y == 1);

    CHECK_THROWS_AS(perron_trichotomy(Int(2)), std::domain_error);
    CHECK_THROWS_AS(perron_trichotomy(Int(9)), std::domain_error);
}

TEST_CASE("perron witnesses solve their equations and are least") {
    for (long d = 3; d <= 200; ++d) {
        if (d == 2 || is_perfect_square(Int(d))) continue;
        auto ws = perron_trichotomy(Int(d));
        for (const auto& w : ws) {
            CHECK(w.x * w.x - Int(d) * w.y * w.y == w.rhs);
            bool smaller_exists = false;
            for (Int y = 1; y < w.y; ++y)
                if (is_perfect_square(Int(d) * y * y + w.rhs)) smaller_exists = true;
            CHECK(!smaller_exists);
        }
        // agreement with a direct scan of which equations are solvable
        // below a small bound
        for (int rhs : {-1, 2, -2}) {
            bool listed = false;
            for (const auto& w : ws) listed |= (w.rhs == rhs);
            bool small = false;
            for (Int y = 1; y <= 50 && !small; ++y)
                if (Int v = Int(d) * y * y + rhs; v >= 1 && is_perfect_square(v)) small = true;
            if (small) CHECK(listed);
        }
    }
}

TEST_CASE("the trichotomy holds for prime d") {
    for (long d = 3; d <= 500; ++d) {
        if (!is_probable_prime(Int(d))) continue;
        CHECK(!perron_trichotomy(Int(d)).empty());
    }
}

TEST_CASE("composite counterexamples to the trichotomy") {
    // all three equations are blocked by congruences at these d
    for (long d : {8, 12, 15, 32}) {
        CAPTURE(d);
        CHECK(perron_trichotomy(Int(d)).empty());
    }
}

TEST_CASE("split examples") {
    SplitResult s6 = split(Int(6));
    CHECK(s6.k == 3);
    CHECK(s6.l == 2);
    CHECK(s6.c == 1);
    CHECK(s6.modulus == 6);
    CHECK(s6.witness == MixedSolution(1, 1, 3, 2, 1));
    CHECK(s6.unique == Uniqueness::unique);

    SplitResult s15 = split(Int(15));
    CHECK(s15.k == 5);
    CHECK(s15.l == 3);
    CHECK(s15.c == 2);
    CHECK(s15.witness == MixedSolution(1, 1, 5, 3, 2));

    SplitResult s10 = split(Int(10));
    CHECK(s10.k == 10);
    CHECK(s10.l == 1);
    CHECK(s10.c == 1);
    CHECK(s10.witness == MixedSolution(1, 3, 10, 1, 1));
}

TEST_CASE("split in the 8 | d regime lands on d or d/4") {
    SplitResult s8 = split(Int(8));
    CHECK(s8.modulus == 2);  // fundamental (3, 1): odd y0
    CHECK(s8.k == 2);
    CHECK(s8.l == 1);
    CHECK(s8.c == 1);

    SplitResult s32 = split(Int(32));
    CHECK(s32.modulus == 8);
    CHECK(s32.k == 1);  // no k > 1 split exists for 32 at all
    CHECK(s32.l == 8);

    SplitResult s56 = split(Int(56));
    CHECK(s56.modulus == 56);  // fundamental (15, 2): even y0
    CHECK(s56.k == 8);
    CHECK(s56.l == 7);
}

TEST_CASE("split quartic examples") {
    auto q5 = split_quartic(Int(5));
    REQUIRE(q5.has_value());
    CHECK(q5->k == 5);
    CHECK(q5->l == 1);
    CHECK(q5->c == 4);
    CHECK(q5->witness == MixedSolution(1, 1, 5, 1, 4));

    auto q21 = split_quartic(Int(21));
    REQUIRE(q21.has_value());
    CHECK(q21->k == 7);
    CHECK(q21->l == 3);
    CHECK(q21->witness == MixedSolution(1, 1, 7, 3, 4));

    CHECK(!split_quartic(Int(3)).has_value());
    CHECK_THROWS_AS(split_quartic(Int(6)), std::domain_error);
}

TEST_CASE("witness consistency with the fundamental solution") {
    for (long d = 3; d <= 120; ++d) {
        if (is_perfect_square(Int(d))) continue;
        SplitResult s = split(Int(d));
        auto fund = fundamental_solution(Int(d), 1);
        if (s.c == 1 && s.modulus == d)
            CHECK(2 * s.witness.x() * s.witness.y() == fund->y);
        if (s.c == 2)
            CHECK(s.witness.x() * s.witness.y() == fund->y);
    }
}

TEST_CASE("theorem 4.2 uniqueness for odd d") {
    for (long d = 3; d <= 100; d += 2) {
        if (is_perfect_square(Int(d))) continue;
        std::size_t count = enumerate_solvable_splits(Int(d), 1).size() +
                            enumerate_solvable_splits(Int(d), 2).size();
        CHECK(count == 1);
        CHECK(split(Int(d)).unique == Uniqueness::unique);
    }
}

TEST_SUITE_END();
