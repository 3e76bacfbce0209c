#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "monogen/fq.hpp"
#include "monogen/integers.hpp"

using namespace monogen;

namespace {

FqPoly poly(const FqPtr& F, std::initializer_list<std::uint64_t> cs) { return FqPoly::from_uints(F, cs); }

// all elements of F_q by coefficient vectors
std::vector<FqElem> all_elems(const FqPtr& F) {
    std::vector<FqElem> out;
    FqElem cur(F->f, 0);
    for (;;) {
        out.push_back(cur);
        unsigned i = 0;
        while (i < F->f) {
            if (++cur[i] < F->p) break;
            cur[i] = 0;
            ++i;
        }
        if (i == F->f) break;
    }
    return out;
}

FqPoly random_poly(const FqPtr& F, int maxdeg, Rng& rng) {
    std::vector<FqElem> cs;
    int deg = 1 + static_cast<int>(rng_below(rng, static_cast<std::uint64_t>(maxdeg)));
    for (int i = 0; i <= deg; ++i) {
        FqElem e(F->f);
        for (unsigned j = 0; j < F->f; ++j) e[j] = rng_below(rng, F->p);
        cs.push_back(std::move(e));
    }
    if (F->is_zero(cs.back())) cs.back() = F->one();
    return FqPoly(F, std::move(cs));
}

} // namespace

TEST_CASE("fq_make basics") {
    auto F2 = fq_make(2, 1);
    CHECK(F2->q == 2);
    CHECK(F2->modulus == std::vector<std::uint64_t>{0, 1});
    auto F4 = fq_make(2, 2);
    CHECK(F4->q == 4);
    CHECK(F4->modulus == std::vector<std::uint64_t>{1, 1, 1}); // the unique irreducible quadratic
    auto F11 = fq_make(11, 1);
    CHECK(F11->q == 11);
    CHECK_THROWS_AS(fq_make(mpz_class("9223372036854775783"), 2), size_bound);
}

TEST_CASE("fq_poly_gcd examples") {
    auto F5 = fq_make(5, 1);
    CHECK(fq_poly_gcd(poly(F5, {4, 0, 1}), poly(F5, {4, 1})) == poly(F5, {4, 1})); // (x^2-1, x-1) -> x-1
    auto F2 = fq_make(2, 1);
    CHECK(fq_poly_gcd(poly(F2, {0, 1}), poly(F2, {1, 1})) == poly(F2, {1}));
    FqPoly a = poly(F2, {1, 1}) * poly(F2, {1, 1});
    FqPoly b = a * poly(F2, {1, 1});
    CHECK(fq_poly_gcd(a, b) == a);
    CHECK(fq_poly_gcd(FqPoly(F2), FqPoly(F2)).is_zero());
}

TEST_CASE("factor_fq examples") {
    auto F11 = fq_make(11, 1);
    // x^5 - 1 over F_11: roots are the powers of 3
    FqPoly f = poly(F11, {10, 0, 0, 0, 0, 1});
    auto fac = factor_fq(f);
    REQUIRE(fac.size() == 5);
    std::set<std::uint64_t> roots;
    for (const auto& [g, e] : fac) {
        CHECK(e == 1);
        CHECK(g.degree() == 1);
        roots.insert((11 - g.c[0][0]) % 11);
    }
    CHECK(roots == std::set<std::uint64_t>{1, 3, 9, 5, 4});

    // pure power x^3
    auto F7 = fq_make(7, 1);
    auto fac2 = factor_fq(poly(F7, {0, 0, 0, 1}));
    REQUIRE(fac2.size() == 1);
    CHECK(fac2[0].first == poly(F7, {0, 1}));
    CHECK(fac2[0].second == 3);

    // x^2 + 1 = (x+1)^2 over F_2
    auto F2 = fq_make(2, 1);
    auto fac3 = factor_fq(poly(F2, {1, 0, 1}));
    REQUIRE(fac3.size() == 1);
    CHECK(fac3[0].first == poly(F2, {1, 1}));
    CHECK(fac3[0].second == 2);
}

TEST_CASE("is_irreducible_fq examples") {
    auto F5 = fq_make(5, 1);
    CHECK(is_irreducible_fq(poly(F5, {0, 1})));
    CHECK_FALSE(is_irreducible_fq(poly(F5, {1, 0, 1}))); // roots +-2
    auto F2 = fq_make(2, 1);
    CHECK(is_irreducible_fq(poly(F2, {1, 1, 1})));
}

TEST_CASE("nth_power_residue examples and brute-force agreement") {
    auto F11 = fq_make(11, 1);
    CHECK(nth_power_residue(*F11, F11->from_uint(1), 5));
    CHECK(nth_power_residue(*F11, F11->from_uint(12 % 11), 5));
    CHECK_FALSE(nth_power_residue(*F11, F11->from_uint(2), 5));
    CHECK_THROWS_AS(nth_power_residue(*F11, F11->zero(), 3), zero_input);

    std::vector<FqPtr> fields;
    for (unsigned long p : {2ul, 3ul, 5ul, 7ul, 11ul}) {
        for (unsigned f = 1;; ++f) {
            mpz_class q;
            mpz_ui_pow_ui(q.get_mpz_t(), p, f);
            if (q > 121) break;
            fields.push_back(fq_make(mpz_class(p), f, 17));
        }
    }
    for (unsigned long p : {13ul, 17ul, 19ul, 23ul, 29ul, 31ul, 37ul, 41ul, 43ul, 47ul, 53ul, 59ul, 61ul, 67ul,
                            71ul, 73ul, 79ul, 83ul, 89ul, 97ul, 101ul, 103ul, 107ul, 109ul, 113ul})
        fields.push_back(fq_make(mpz_class(p), 1));
    for (const auto& F : fields) {
        auto elems = all_elems(F);
        for (unsigned n = 1; n <= 12; ++n) {
            std::set<FqElem> powers;
            for (const auto& x : elems)
                if (!F->is_zero(x)) powers.insert(F->pow(x, n));
            for (const auto& a : elems) {
                if (F->is_zero(a)) continue;
                CHECK(nth_power_residue(*F, a, n) == (powers.count(a) > 0));
            }
        }
    }
}

TEST_CASE("factor_fq reconstruction on random polynomials") {
    std::vector<FqPtr> fields{fq_make(2, 1), fq_make(3, 1), fq_make(2, 2), fq_make(11, 1)};
    Rng rng(20240817);
    for (const auto& F : fields) {
        for (int i = 0; i < 125; ++i) {
            FqPoly a = random_poly(F, 9, rng);
            if (a.degree() < 1) continue;
            auto fac = factor_fq(a);
            FqPoly prod = FqPoly::constant(F, a.lc());
            int degsum = 0;
            for (const auto& [g, e] : fac) {
                CHECK(is_irreducible_fq(g));
                CHECK(g.c.back() == F->one());
                degsum += g.degree() * static_cast<int>(e);
                for (unsigned k = 0; k < e; ++k) prod = prod * g;
            }
            CHECK(degsum == a.degree());
            CHECK(prod == a);
        }
    }
}

TEST_CASE("exhaustive irreducible counts match the Moebius formula") {
    for (unsigned long l : {2ul, 3ul, 5ul}) {
        auto F = fq_make(mpz_class(l), 1);
        for (unsigned k = 1; k <= 4; ++k) {
            // enumerate all monic degree-k polynomials
            std::vector<std::uint64_t> digits(k, 0);
            unsigned long count = 0;
            for (;;) {
                std::vector<std::uint64_t> cs(digits.begin(), digits.end());
                cs.push_back(1);
                if (is_irreducible_fq(FqPoly::from_uints(F, cs))) ++count;
                unsigned i = 0;
                while (i < k) {
                    if (++digits[i] < l) break;
                    digits[i] = 0;
                    ++i;
                }
                if (i == k) break;
            }
            CHECK(mpz_class(count) == count_monic_irreducibles(mpz_class(l), k));
        }
    }
}
