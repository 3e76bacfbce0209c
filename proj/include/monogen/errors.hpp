#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace monogen {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Arithmetic-layer errors.
struct factor_budget_exceeded : error {
    mpz_class cofactor; // composite part that resisted the budget
    explicit factor_budget_exceeded(mpz_class c)
        : error("factorization budget exceeded at cofactor " + c.get_str()), cofactor(std::move(c)) {}
};
struct not_coprime : error {
    using error::error;
};
struct zero_input : error {
    using error::error;
};
struct size_bound : error {
    using error::error;
};
struct field_mismatch : error {
    using error::error;
};
struct zero_polynomial : error {
    using error::error;
};
struct not_monic : error {
    using error::error;
};
struct degree_too_small : error {
    using error::error;
};
struct degree_cap : error {
    using error::error;
};

// Number-field layer errors.
struct not_irreducible : error {
    using error::error;
};
struct base_order_not_maximal : error {
    mpz_class prime; // first prime dividing the index of Z[theta]
    explicit base_order_not_maximal(mpz_class p)
        : error("Z[theta] is not maximal: index divisible by " + p.get_str()), prime(std::move(p)) {}
};
struct bad_conductor : error {
    using error::error;
};
struct not_full_rank : error {
    using error::error;
};
struct zero_element : error {
    using error::error;
};
struct not_in_ideal : error {
    using error::error;
};
struct precision_exhausted : error {
    using error::error;
};

// Criterion-engine errors.
struct index_divides : error {
    using error::error;
};
struct coefficient_not_in_ideal : error {
    using error::error;
};
struct prime_not_dividing_n : error {
    using error::error;
};
struct porism_hypothesis_fails : error {
    using error::error;
};
struct ramified : error {
    using error::error;
};
struct ramified_or_divides_alpha : error {
    using error::error;
};
struct not_coprime_to_l : error {
    using error::error;
};
struct hypothesis_fails : error {
    using error::error;
};

// CLI / text layer.
struct parse_error : error {
    using error::error;
};

// Internal consistency failure: indicates a bug, never expected on valid input.
struct internal_error : error {
    using error::error;
};

inline void check_internal(bool ok, const char* what) {
    if (!ok) throw internal_error(std::string("internal invariant violated: ") + what);
}

} // namespace monogen
