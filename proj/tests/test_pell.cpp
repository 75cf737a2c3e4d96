#include "pellkit/pell.hpp"

#include <doctest.h>

using namespace pellkit;

TEST_SUITE_BEGIN("pell");

TEST_CASE("continued fraction of sqrt(d)") {
    CFExpansion cf2 = cf_sqrt(Int(2));
    CHECK(cf2.a0 == 1);
    CHECK(cf2.period == std::vector<Int>{Int(2)});

    CFExpansion cf7 = cf_sqrt(Int(7));
    CHECK(cf7.a0 == 2);
    CHECK(cf7.period == std::vector<Int>{Int(1), Int(1), Int(1), Int(4)});

    CHECK_THROWS_AS(cf_sqrt(Int(4)), std::domain_error);
    CHECK_THROWS_AS(cf_sqrt(Int(1)), std::domain_error);
}

TEST_CASE("period closes on 2*a0 for all d up to 500") {
    for (long d = 2; d <= 500; ++d) {
        if (is_perfect_square(Int(d))) continue;
        CFExpansion cf = cf_sqrt(Int(d));
        CHECK(cf.period.back() == 2 * cf.a0);
    }
}

TEST_CASE("fundamental solutions") {
    auto f3 = fundamental_solution(Int(3), 1);
    REQUIRE(f3.has_value());
    CHECK(f3->x == 2);
    CHECK(f3->y == 1);

    auto f5odd = fundamental_solution(Int(5), 4, /*odd_only=*/true);
    REQUIRE(f5odd.has_value());
    CHECK(f5odd->x == 3);
    CHECK(f5odd->y == 1);
    CHECK(f5odd->denom == 2);

    CHECK(!fundamental_solution(Int(3), -1).has_value());

    auto f61 = fundamental_solution(Int(61), 1);
    REQUIRE(f61.has_value());
    CHECK(f61->x == Int("1766319049"));
    CHECK(f61->y == Int("226153980"));
}

TEST_CASE("fundamental solutions satisfy the equation for d up to 300") {
    for (long d = 2; d <= 300; ++d) {
        if (is_perfect_square(Int(d))) continue;
        for (int rhs : {1, -1, 4, -4}) {
            auto f = fundamental_solution(Int(d), rhs);
            if (!f) continue;
            CHECK(f->x * f->x - Int(d) * f->y * f->y == rhs);
            if (f->denom == 2) {
                CHECK(mpz_odd_p(f->x.get_mpz_t()));
                CHECK(mpz_odd_p(f->y.get_mpz_t()));
            }
        }
    }
}

TEST_CASE("rhs -1 solvable exactly when the period is odd") {
    for (long d = 2; d <= 300; ++d) {
        if (is_perfect_square(Int(d))) continue;
        bool solvable = fundamental_solution(Int(d), -1).has_value();
        CHECK(solvable == (cf_sqrt(Int(d)).period.size() % 2 == 1));
    }
}

TEST_CASE("minimal solutions of mixed equations") {
    auto m32 = minimal_solution(Int(3), Int(2), 1);
    REQUIRE(m32.has_value());
    CHECK(m32->x() == 1);
    CHECK(m32->y() == 1);

    CHECK(!minimal_solution(Int(2), Int(3), 1).has_value());

    auto m514 = minimal_solution(Int(5), Int(1), 4);
    REQUIRE(m514.has_value());
    CHECK(m514->x() == 1);
    CHECK(m514->y() == 1);

    CHECK_THROWS_AS(minimal_solution(Int(2), Int(2), 1), std::domain_error);
    CHECK_THROWS_AS(minimal_solution(Int(3), Int(3), 1), std::domain_error);
    CHECK_THROWS_AS(minimal_solution(Int(1), Int(5), 1), std::domain_error);
    CHECK_THROWS_AS(minimal_solution(Int(3), Int(2), 2), std::domain_error);
}

TEST_CASE("minimality by direct enumeration for every d up to 200") {
    // any returned minimal solution admits no smaller positive solution
    for (long n = 3; n <= 200; ++n) {
        if (is_perfect_square(Int(n))) continue;
        for (long k = 1; k <= n; ++k) {
            if (n % k != 0) continue;
            Int kk(k), ll(n / k);
            if (gcd(kk, ll) != 1) continue;
            for (int c : {1, 2, 4}) {
                if (c != 2 && k < 2) continue;
                if ((c == 2 || c == 4) && n % 2 == 0) continue;
                auto m = minimal_solution(kk, ll, c);
                if (!m) continue;
                CHECK(kk * m->x() * m->x() - ll * m->y() * m->y() == c);
                // enumerate every y below the returned solution, walking
                // only the residue classes mod k where k | l y^2 + c
                std::vector<long> residues;
                for (long r = 0; r < k; ++r)
                    if (((n / k) * r * r + c) % k == 0) residues.push_back(r);
                bool smaller_exists = false;
                for (long r : residues) {
                    for (Int y = (r == 0 ? Int(k) : Int(r)); y < m->y(); y += k) {
                        if (is_perfect_square((ll * y * y + c) / kk)) smaller_exists = true;
                    }
                }
                CAPTURE(k);
                CAPTURE(n);
                CHECK(!smaller_exists);
            }
        }
    }
}

TEST_CASE("solution chains") {
    auto m514 = minimal_solution(Int(5), Int(1), 4);
    auto chain = solutions(*m514, 3);
    REQUIRE(chain.size() == 3);
    CHECK(chain[0] == MixedSolution(1, 1, 5, 1, 4));
    CHECK(chain[1] == MixedSolution(2, 4, 5, 1, 4));
    CHECK(chain[2] == MixedSolution(5, 11, 5, 1, 4));

    auto f3 = fundamental_solution(Int(3), 1);
    auto pchain = solutions(*f3, 3);
    REQUIRE(pchain.size() == 3);
    CHECK(pchain[0].x == 2);
    CHECK(pchain[1].x == 7);
    CHECK(pchain[1].y == 4);
    CHECK(pchain[2].x == 26);
    CHECK(pchain[2].y == 15);

    CHECK(solutions(*f3, 1).size() == 1);
}

TEST_CASE("chains are increasing and step by the fundamental element") {
    for (long d : {2, 3, 5, 13, 61}) {
        auto f = fundamental_solution(Int(d), 1);
        auto chain = solutions(*f, 6);
        QuadInt eps = pell_element(*f);
        QuadInt cur = eps;
        for (std::size_t i = 1; i < chain.size(); ++i) {
            CHECK(chain[i - 1].y < chain[i].y);
            cur = quad_mul(cur, eps);
            CHECK(pell_element(chain[i]) == cur);
        }
    }
}

TEST_CASE("negative rhs chains hold their equation") {
    auto f5 = fundamental_solution(Int(5), -1);
    REQUIRE(f5.has_value());
    for (const auto& s : solutions(*f5, 5)) CHECK(s.x * s.x - 5 * s.y * s.y == -1);

    auto f5m4 = fundamental_solution(Int(5), -4, /*odd_only=*/true);
    REQUIRE(f5m4.has_value());
    CHECK(f5m4->x == 1);
    CHECK(f5m4->y == 1);
    for (const auto& s : solutions(*f5m4, 5)) CHECK(s.x * s.x - 5 * s.y * s.y == -4);
}

TEST_CASE("lemma 2.4 relations for (5, 1)") {
    Lemma24Report rep = lemma24_relations(Int(5), Int(1));
    REQUIRE(rep.eps4.has_value());
    CHECK(*rep.eps4 == MixedSolution(1, 1, 5, 1, 4));
    REQUIRE(rep.eps1.has_value());
    CHECK(*rep.eps1 == MixedSolution(1, 2, 5, 1, 1));
    REQUIRE(rep.eps5.has_value());
    CHECK(rep.eps5->x == 3);
    CHECK(rep.eps5->y == 1);
    CHECK(!rep.eps3.has_value());
    CHECK(rep.all_hold());
    int held = 0, skipped = 0;
    for (const auto& ident : rep.identities) {
        if (ident.status == IdentityStatus::holds) ++held;
        if (ident.status == IdentityStatus::skipped) ++skipped;
    }
    CHECK(held == 5);
    CHECK(skipped == 1);  // identity (2), equation (2.4) unsolvable here
}

TEST_CASE("lemma 2.4 relations for (3, 1)") {
    Lemma24Report rep = lemma24_relations(Int(3), Int(1));
    CHECK(!rep.eps1.has_value());
    REQUIRE(rep.eps3.has_value());
    CHECK(*rep.eps3 == MixedSolution(1, 1, 3, 1, 2));
    REQUIRE(rep.eps2.has_value());
    CHECK(rep.eps2->x == 2);
    CHECK(rep.all_hold());
}

TEST_CASE("lemma 2.4 identities hold for every odd nonsquare kl up to 500") {
    for (long n = 3; n <= 500; n += 2) {
        if (is_perfect_square(Int(n))) continue;
        for (long k = 2; k <= n; ++k) {
            if (n % k != 0) continue;
            Int kk(k), ll(n / k);
            if (gcd(kk, ll) != 1) continue;
            Lemma24Report rep = lemma24_relations(kk, ll);
            CHECK(rep.all_hold());
        }
    }
}

TEST_SUITE_END();
