#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace monogen {

using Rng = std::mt19937_64;

// splitmix64, used to derive independent deterministic seeds.
inline std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t seed_combine(std::uint64_t a, std::uint64_t b) {
    return mix64(a ^ mix64(b));
}

inline std::uint64_t hash_mpz(const mpz_class& z) {
    std::uint64_t h = mpz_sgn(z.get_mpz_t()) < 0 ? 0x5851f42d4c957f2dULL : 0x14057b7ef767814fULL;
    const std::size_t n = mpz_size(z.get_mpz_t());
    for (std::size_t i = 0; i < n; ++i)
        h = seed_combine(h, static_cast<std::uint64_t>(mpz_getlimbn(z.get_mpz_t(), static_cast<mp_size_t>(i))));
    return h;
}

inline std::uint64_t hash_mpz_vec(const std::vector<mpz_class>& v) {
    std::uint64_t h = 0x9ae16a3b2f90404fULL;
    for (const auto& z : v) h = seed_combine(h, hash_mpz(z));
    return h;
}

// Uniform integer in [0, n), n > 0, from a 64-bit generator.
inline std::uint64_t rng_below(Rng& rng, std::uint64_t n) {
    std::uniform_int_distribution<std::uint64_t> d(0, n - 1);
    return d(rng);
}

} // namespace monogen
