#include <catch2/catch_amalgamated.hpp>

#include "monogen/intpoly.hpp"
#include "monogen/util.hpp"

using namespace monogen;

namespace {

// Independent oracle: resultant as the determinant of the Sylvester matrix,
// computed by fraction-free Bareiss elimination.
mpz_class sylvester_resultant(const IntPoly& a, const IntPoly& b) {
    const int m = a.degree(), n = b.degree();
    const int N = m + n;
    if (N == 0) return 1;
    std::vector<std::vector<mpz_class>> M(static_cast<std::size_t>(N),
                                          std::vector<mpz_class>(static_cast<std::size_t>(N), 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j) M[i][i + j] = a.c[static_cast<std::size_t>(m - j)];
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j) M[n + i][i + j] = b.c[static_cast<std::size_t>(n - j)];
    mpz_class prev = 1;
    int sign = 1;
    for (int k = 0; k + 1 < N; ++k) {
        if (M[k][k] == 0) {
            int sw = -1;
            for (int i = k + 1; i < N; ++i)
                if (M[i][k] != 0) {
                    sw = i;
                    break;
                }
            if (sw < 0) return 0;
            std::swap(M[k], M[sw]);
            sign = -sign;
        }
        for (int i = k + 1; i < N; ++i) {
            for (int j = k + 1; j < N; ++j) {
                mpz_class t = M[i][j] * M[k][k] - M[i][k] * M[k][j];
                mpz_class q, r;
                mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                REQUIRE(r == 0);
                M[i][j] = q;
            }
            M[i][k] = 0;
        }
        prev = M[k][k];
    }
    return sign * M[N - 1][N - 1];
}

IntPoly random_poly(Rng& rng, int maxdeg, long maxcoeff) {
    int deg = 1 + static_cast<int>(rng_below(rng, static_cast<std::uint64_t>(maxdeg)));
    std::vector<mpz_class> c;
    for (int i = 0; i <= deg; ++i) {
        long v = static_cast<long>(rng_below(rng, static_cast<std::uint64_t>(2 * maxcoeff + 1))) - maxcoeff;
        c.emplace_back(v);
    }
    if (c.back() == 0) c.back() = 1;
    return IntPoly(std::move(c));
}

} // namespace

TEST_CASE("resultant examples") {
    CHECK(resultant(IntPoly{-2, 1}, IntPoly{-3, 1}) == -1);
    CHECK(resultant(IntPoly{1, 0, 1}, IntPoly{0, 1}) == 1);
    CHECK(resultant(IntPoly{-1, -1, 1}, IntPoly{-1, 2}) == -5);
    CHECK_THROWS_AS(resultant(IntPoly{}, IntPoly{1, 1}), zero_polynomial);
}

TEST_CASE("resultant agrees with the Sylvester-Bareiss oracle") {
    Rng rng(99);
    for (int i = 0; i < 200; ++i) {
        IntPoly a = random_poly(rng, 6, 20);
        IntPoly b = random_poly(rng, 6, 20);
        mpz_class r1 = resultant(a, b);
        CHECK(r1 == sylvester_resultant(a, b));
        mpz_class r2 = resultant(b, a);
        mpz_class expect = (a.degree() % 2 && b.degree() % 2) ? mpz_class(-r1) : r1;
        CHECK(r2 == expect);
    }
}

TEST_CASE("discriminant examples") {
    CHECK(discriminant(IntPoly{-5, 0, 1}) == 20);
    CHECK(discriminant(IntPoly{-8, -2, -1, 1}) == -2012);
    CHECK(discriminant(IntPoly{1, 0, -1, 0, 1}) == 144);
    CHECK_THROWS_AS(discriminant(IntPoly{-5, 0, 2}), not_monic);
    CHECK_THROWS_AS(discriminant(IntPoly{-5, 1}), degree_too_small);
}

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic(1) == IntPoly{-1, 1});
    CHECK(cyclotomic(5) == IntPoly{1, 1, 1, 1, 1});
    CHECK(cyclotomic(12) == IntPoly{1, 0, -1, 0, 1});
    for (unsigned long n = 1; n <= 200; ++n)
        CHECK(cyclotomic(n).degree() == euler_phi(mpz_class(n)).get_si());
}

TEST_CASE("cyclotomic discriminant closed form") {
    CHECK(cyclo_disc_formula(5) == 125);
    CHECK(cyclo_disc_formula(12) == 144);
    CHECK(cyclo_disc_formula(4) == -4);
    CHECK_THROWS_AS(cyclo_disc_formula(6), bad_conductor);
    CHECK_THROWS_AS(cyclo_disc_formula(2), bad_conductor);
    for (unsigned long n = 3; n <= 30; ++n) {
        if (n % 4 == 2) continue;
        CHECK(discriminant(cyclotomic(n)) == cyclo_disc_formula(n));
    }
}

TEST_CASE("radical discriminant closed form") {
    CHECK(disc_radical_formula(2, 5) == 20);
    CHECK(disc_radical_formula(3, 2) == -108);
    CHECK(disc_radical_formula(2, 1) == 4);
    for (unsigned long n = 2; n <= 8; ++n)
        for (long a = -20; a <= 20; ++a) {
            if (a == 0) continue;
            // x^n - a has constant term -a
            CHECK(discriminant(IntPoly::binomial(static_cast<unsigned>(n), mpz_class(-a))) ==
                  disc_radical_formula(n, mpz_class(a)));
        }
}

TEST_CASE("irreducibility over Q") {
    CHECK(is_irreducible_q(IntPoly{-12, 0, 0, 0, 0, 1})); // x^5 - 12, Eisenstein at 3
    CHECK_FALSE(is_irreducible_q(IntPoly{-1, 0, 1}));     // x^2 - 1
    CHECK(is_irreducible_q(IntPoly{1, 0, -1, 0, 1}));     // Phi_12
    CHECK(is_irreducible_q(IntPoly{-8, -2, -1, 1}));      // Dedekind's cubic
    CHECK(is_irreducible_q(IntPoly{0, 1}));
    CHECK_FALSE(is_irreducible_q(IntPoly{0, 0, 1}));      // x^2
    CHECK_FALSE(is_irreducible_q(IntPoly{4, 4, 1}));      // (x+2)^2: repeated factor
    // these split modulo every prime; only recombination decides
    CHECK(is_irreducible_q(IntPoly{1, 0, 0, 0, 1}));       // x^4 + 1
    CHECK(is_irreducible_q(IntPoly{1, 0, -10, 0, 1}));     // minimal polynomial of sqrt2 + sqrt3
    CHECK_FALSE(is_irreducible_q(IntPoly{6, 0, -5, 0, 1})); // (x^2-2)(x^2-3)
    {
        std::vector<mpz_class> big(34, 0);
        big[0] = -2;
        big[33] = 1;
        CHECK_THROWS_AS(is_irreducible_q(IntPoly(std::move(big))), degree_cap);
    }
    // random products of two irreducibles are reducible
    Rng rng(5);
    int found = 0;
    while (found < 40) {
        IntPoly a = random_poly(rng, 4, 8), b = random_poly(rng, 4, 8);
        if (a.degree() < 1 || b.degree() < 1) continue;
        a.c.back() = 1;
        b.c.back() = 1;
        if (!is_irreducible_q(a) || !is_irreducible_q(b)) continue;
        CHECK_FALSE(is_irreducible_q(a * b));
        ++found;
    }
    // and monic irreducibles stay irreducible after a shift x -> x + 1
    found = 0;
    while (found < 20) {
        IntPoly a = random_poly(rng, 5, 10);
        a.c.back() = 1;
        if (!is_irreducible_q(a)) continue;
        IntPoly shifted = IntPoly{1, 1};
        IntPoly acc = IntPoly::constant(a.c[0]);
        IntPoly pw = IntPoly::constant(1);
        for (std::size_t i = 1; i < a.c.size(); ++i) {
            pw = pw * shifted;
            acc = acc + IntPoly::constant(a.c[i]) * pw;
        }
        CHECK(is_irreducible_q(acc));
        ++found;
    }
}
