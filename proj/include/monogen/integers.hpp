#pragma once

// Exact integer utilities: factorization, primality, multiplicative
// functions, and the monic-irreducible count over F_l.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "monogen/errors.hpp"
#include "monogen/util.hpp"

namespace monogen {

struct IntFactorization {
    mpz_class value;
    int sign = 1;
    std::vector<std::pair<mpz_class, unsigned>> factors; // primes strictly increasing

    mpz_class reassemble() const {
        mpz_class r = sign;
        for (const auto& [p, e] : factors)
            for (unsigned i = 0; i < e; ++i) r *= p;
        return r;
    }
};

struct FactorBudget {
    unsigned long trial_bound = 1'000'000;   // trial division up to this bound
    unsigned long rho_iterations = 20'000'000; // total Brent iterations per call
};

namespace detail {

inline bool miller_rabin_witness(const mpz_class& n, const mpz_class& a, const mpz_class& d, unsigned long s) {
    // returns true if a witnesses compositeness of n; n odd, n-1 = d*2^s
    mpz_class x;
    mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n - 1) return false;
    for (unsigned long i = 1; i < s; ++i) {
        x = (x * x) % n;
        if (x == n - 1) return false;
    }
    return true;
}

} // namespace detail

// Strong-probable-prime test. Deterministic for n below the published
// first-13-prime-bases bound 3317044064679887385961981 (~3.3e24); above it,
// 40 fixed prime bases are used.
inline bool is_prime(const mpz_class& n) {
    if (n < 2) throw error("is_prime requires n >= 2");
    static const unsigned small_primes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41,
                                            43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};
    for (unsigned p : small_primes) {
        if (n == p) return true;
        if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
    }
    mpz_class d = n - 1;
    unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);

    static const mpz_class det_bound("3317044064679887385961981");
    if (n < det_bound) {
        for (unsigned a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41})
            if (detail::miller_rabin_witness(n, a, d, s)) return false;
        return true;
    }
    // 40 independent witnesses: the first 40 primes.
    static const unsigned bases[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41, 43,
                                     47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97, 101, 103, 107,
                                     109, 113, 127, 131, 137, 139, 149, 151, 157, 163, 167, 173};
    for (unsigned a : bases)
        if (detail::miller_rabin_witness(n, a, d, s)) return false;
    return true;
}

namespace detail {

// Brent's cycle-finding variant of Pollard rho. Returns a nontrivial factor
// of composite odd n, or 0 if the iteration budget ran out.
inline mpz_class pollard_brent(const mpz_class& n, unsigned long& iters_left) {
    Rng rng(hash_mpz(n));
    while (iters_left > 0) {
        mpz_class y = 2 + mpz_class(rng_below(rng, 1'000'000'007ULL)) % (n - 3);
        mpz_class c = 1 + mpz_class(rng_below(rng, 1'000'000'007ULL)) % (n - 2);
        mpz_class x, q = 1, g = 1, ys;
        unsigned long r = 1;
        const unsigned long batch = 128;
        while (g == 1 && iters_left > 0) {
            x = y;
            for (unsigned long i = 0; i < r && iters_left > 0; ++i) {
                y = (y * y + c) % n;
                --iters_left;
            }
            unsigned long k = 0;
            while (k < r && g == 1 && iters_left > 0) {
                ys = y;
                unsigned long lim = std::min(batch, r - k);
                for (unsigned long i = 0; i < lim && iters_left > 0; ++i) {
                    y = (y * y + c) % n;
                    q = q * ((x > y) ? x - y : y - x) % n;
                    --iters_left;
                }
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                k += lim;
            }
            r *= 2;
        }
        if (g == n) {
            // backtrack one step at a time
            do {
                ys = (ys * ys + c) % n;
                mpz_class diff = (x > ys) ? x - ys : ys - x;
                mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
            } while (g == 1);
        }
        if (g != n && g > 1) return g;
        // retry with fresh parameters
    }
    return 0;
}

inline void factor_into(const mpz_class& n, FactorBudget const& budget, unsigned long& rho_left,
                        std::vector<mpz_class>& primes);

inline void split_composite(const mpz_class& n, FactorBudget const& budget, unsigned long& rho_left,
                            std::vector<mpz_class>& primes) {
    // perfect-power shortcut keeps rho off squares of primes
    if (mpz_perfect_power_p(n.get_mpz_t())) {
        for (unsigned long k = 2; k <= mpz_sizeinbase(n.get_mpz_t(), 2); ++k) {
            mpz_class root;
            if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k)) {
                std::vector<mpz_class> sub;
                factor_into(root, budget, rho_left, sub);
                for (unsigned long i = 0; i < k; ++i) primes.insert(primes.end(), sub.begin(), sub.end());
                return;
            }
        }
    }
    mpz_class d = pollard_brent(n, rho_left);
    if (d == 0) throw factor_budget_exceeded(n);
    factor_into(d, budget, rho_left, primes);
    factor_into(n / d, budget, rho_left, primes);
}

inline void factor_into(const mpz_class& n, FactorBudget const& budget, unsigned long& rho_left,
                        std::vector<mpz_class>& primes) {
    if (n == 1) return;
    if (is_prime(n)) {
        primes.push_back(n);
        return;
    }
    split_composite(n, budget, rho_left, primes);
}

} // namespace detail

// Complete factorization of n != 0, or factor_budget_exceeded carrying the
// cofactor that resisted trial division plus Brent rho.
inline IntFactorization factor_int(const mpz_class& n, FactorBudget const& budget = {}) {
    if (n == 0) throw zero_input("factor_int(0)");
    IntFactorization out;
    out.value = n;
    out.sign = n < 0 ? -1 : 1;
    mpz_class m = abs(n);
    std::vector<mpz_class> primes;
    for (unsigned long p = 2; p <= budget.trial_bound && m > 1; p += (p == 2 ? 1 : 2)) {
        if (mpz_class(p) * p > m) break;
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
            primes.emplace_back(p);
            m /= static_cast<unsigned long>(p);
        }
    }
    if (m > 1) {
        unsigned long rho_left = budget.rho_iterations;
        detail::factor_into(m, budget, rho_left, primes);
    }
    std::sort(primes.begin(), primes.end());
    for (std::size_t i = 0; i < primes.size();) {
        std::size_t j = i;
        while (j < primes.size() && primes[j] == primes[i]) ++j;
        out.factors.emplace_back(primes[i], static_cast<unsigned>(j - i));
        i = j;
    }
    return out;
}

inline mpz_class euler_phi(const mpz_class& n, FactorBudget const& budget = {}) {
    if (n < 1) throw error("euler_phi requires n >= 1");
    mpz_class phi = 1;
    for (const auto& [p, e] : factor_int(n, budget).factors) {
        mpz_class pe1;
        mpz_pow_ui(pe1.get_mpz_t(), p.get_mpz_t(), e - 1);
        phi *= pe1 * (p - 1);
    }
    return phi;
}

inline int moebius(const mpz_class& k, FactorBudget const& budget = {}) {
    if (k < 1) throw error("moebius requires k >= 1");
    int mu = 1;
    for (const auto& [p, e] : factor_int(k, budget).factors) {
        if (e >= 2) return 0;
        mu = -mu;
    }
    return mu;
}

// Least f >= 1 with a^f == 1 mod n. Requires gcd(a, n) = 1.
inline mpz_class mult_order(const mpz_class& a, const mpz_class& n, FactorBudget const& budget = {}) {
    if (n < 2) throw error("mult_order requires n >= 2");
    mpz_class g, am = a % n;
    if (am < 0) am += n;
    mpz_gcd(g.get_mpz_t(), am.get_mpz_t(), n.get_mpz_t());
    if (g != 1) throw not_coprime("mult_order: gcd(a, n) != 1");
    mpz_class order = euler_phi(n, budget);
    for (const auto& [p, e] : factor_int(order, budget).factors) {
        for (unsigned i = 0; i < e; ++i) {
            mpz_class cand = order / p, r;
            mpz_powm(r.get_mpz_t(), am.get_mpz_t(), cand.get_mpz_t(), n.get_mpz_t());
            if (r == 1)
                order = cand;
            else
                break;
        }
    }
    return order;
}

// Number of monic irreducible polynomials of degree k over F_l:
// (1/k) * sum_{d | k} mu(k/d) l^d.
inline mpz_class count_monic_irreducibles(const mpz_class& l, unsigned long k) {
    if (k < 1) throw error("count_monic_irreducibles requires k >= 1");
    mpz_class sum = 0;
    for (unsigned long d = 1; d <= k; ++d) {
        if (k % d != 0) continue;
        mpz_class ld;
        mpz_pow_ui(ld.get_mpz_t(), l.get_mpz_t(), d);
        sum += moebius(mpz_class(k / d)) * ld;
    }
    check_internal(sum % k == 0, "Moebius sum divisible by k");
    return sum / k;
}

} // namespace monogen
