#include <catch2/catch_amalgamated.hpp>

#include <numeric>

#include "monogen/integers.hpp"

using namespace monogen;

TEST_CASE("factor_int known values") {
    auto f1 = factor_int(1);
    CHECK(f1.sign == 1);
    CHECK(f1.factors.empty());

    auto f2 = factor_int(-108);
    CHECK(f2.sign == -1);
    REQUIRE(f2.factors.size() == 2);
    CHECK(f2.factors[0] == std::pair<mpz_class, unsigned>{2, 2});
    CHECK(f2.factors[1] == std::pair<mpz_class, unsigned>{3, 3});

    auto f3 = factor_int(144);
    REQUIRE(f3.factors.size() == 2);
    CHECK(f3.factors[0] == std::pair<mpz_class, unsigned>{2, 4});
    CHECK(f3.factors[1] == std::pair<mpz_class, unsigned>{3, 2});
}

TEST_CASE("factor_int round-trips and flags budget exhaustion") {
    Rng rng(42);
    for (int i = 0; i < 300; ++i) {
        mpz_class n = mpz_class(rng_below(rng, 1'000'000'000ULL)) + 2;
        if (rng_below(rng, 2)) n = -n;
        auto f = factor_int(n);
        CHECK(f.reassemble() == n);
        for (const auto& [p, e] : f.factors) CHECK(is_prime(p));
        for (std::size_t j = 1; j < f.factors.size(); ++j) CHECK(f.factors[j - 1].first < f.factors[j].first);
    }
    CHECK_THROWS_AS(factor_int(0), zero_input);

    mpz_class p("1000000007"), q("1000000009");
    FactorBudget tiny{100, 0};
    try {
        factor_int(p * q, tiny);
        FAIL("budget exhaustion not reported");
    } catch (const factor_budget_exceeded& e) {
        CHECK(e.cofactor == p * q);
    }
}

TEST_CASE("is_prime small and structured cases") {
    CHECK(is_prime(2));
    CHECK(is_prime(11));
    CHECK_FALSE(is_prime(91));
    CHECK_FALSE(is_prime(561));   // Carmichael
    CHECK_FALSE(is_prime(25326001));
    mpz_class m61 = (mpz_class(1) << 61) - 1;
    CHECK(is_prime(m61));
    CHECK_FALSE(is_prime(m61 * m61));
    // brute check against trial division
    for (unsigned n = 2; n < 2000; ++n) {
        bool ref = true;
        for (unsigned d = 2; d * d <= n; ++d)
            if (n % d == 0) ref = false;
        CHECK(is_prime(mpz_class(n)) == ref);
    }
}

TEST_CASE("euler_phi values and multiplicativity") {
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(5) == 4);
    CHECK(euler_phi(12) == 4);
    // unit-count oracle
    for (unsigned n = 1; n <= 200; ++n) {
        unsigned count = 0;
        for (unsigned k = 1; k <= n; ++k)
            if (std::gcd(k, n) == 1) ++count;
        CHECK(euler_phi(mpz_class(n)) == count);
    }
    Rng rng(7);
    for (int i = 0; i < 100; ++i) {
        mpz_class m = mpz_class(rng_below(rng, 10'000)) + 1;
        mpz_class n = mpz_class(rng_below(rng, 10'000)) + 1;
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), m.get_mpz_t(), n.get_mpz_t());
        if (g != 1) continue;
        CHECK(euler_phi(m * n) == euler_phi(m) * euler_phi(n));
    }
}

TEST_CASE("moebius values") {
    CHECK(moebius(1) == 1);
    CHECK(moebius(6) == 1);
    CHECK(moebius(12) == 0);
    // squarefree oracle
    for (unsigned n = 1; n <= 300; ++n) {
        int ref = 1;
        unsigned m = n;
        for (unsigned d = 2; d * d <= m; ++d) {
            if (m % d) continue;
            unsigned e = 0;
            while (m % d == 0) {
                m /= d;
                ++e;
            }
            if (e >= 2) ref = 0;
            else ref = -ref;
        }
        if (ref != 0 && m > 1) ref = -ref;
        CHECK(moebius(mpz_class(n)) == ref);
    }
}

TEST_CASE("mult_order values and divisibility") {
    CHECK(mult_order(1, 7) == 1);
    CHECK(mult_order(11, 5) == 1);
    CHECK(mult_order(2, 5) == 4);
    CHECK_THROWS_AS(mult_order(6, 9), not_coprime);
    // brute oracle and order | phi(n)
    for (unsigned n = 2; n <= 500; ++n) {
        mpz_class phi = euler_phi(mpz_class(n));
        for (unsigned a = 1; a < n; ++a) {
            if (std::gcd(a, n) != 1) continue;
            mpz_class ord = mult_order(mpz_class(a), mpz_class(n));
            CHECK(phi % ord == 0);
            if (n <= 100) {
                unsigned long k = 1;
                unsigned long pw = a % n;
                while (pw != 1) {
                    pw = pw * a % n;
                    ++k;
                }
                CHECK(ord == k);
            }
        }
    }
}

TEST_CASE("count_monic_irreducibles values and the counting identity") {
    CHECK(count_monic_irreducibles(11, 1) == 11);
    CHECK(count_monic_irreducibles(2, 1) == 2);
    CHECK(count_monic_irreducibles(2, 3) == 2);
    for (unsigned long l : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul}) {
        for (unsigned long k = 1; k <= 6; ++k) {
            mpz_class lhs = 0;
            for (unsigned long d = 1; d <= k; ++d)
                if (k % d == 0) lhs += mpz_class(d) * count_monic_irreducibles(mpz_class(l), d);
            mpz_class lk;
            mpz_ui_pow_ui(lk.get_mpz_t(), l, k);
            CHECK(lhs == lk);
        }
    }
}
