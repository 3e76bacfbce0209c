#pragma once

// Dedekind's index criterion over Q, Dedekind splitting shapes, and Hensel's
// essential-discriminant-divisor counting criterion. The relative
// (Kumar-Khanduja) engine lives in relative.hpp on top of the number-field
// layer.

#include <gmpxx.h>

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "monogen/errors.hpp"
#include "monogen/fq.hpp"
#include "monogen/integers.hpp"
#include "monogen/intpoly.hpp"

namespace monogen {

// Verdict of an index criterion at one prime. PolyT is IntPoly over Q and a
// coefficient-in-O_L polynomial in the relative engine; PrimeT is the
// rational prime resp. a PrimeIdeal.
template <class PolyT, class PrimeT>
struct BasicLocalVerdict {
    PrimeT prime;
    bool maximal_here = false;
    std::vector<std::pair<PolyT, unsigned>> factors; // monic lifts and multiplicities
    FqPoly d_residue;                                // reduction of (f - prod f_i^{e_i}) / pi
    std::optional<std::size_t> offender;             // index with gcd(fbar_i^{e_i-1}, dbar) != 1
};

using LocalVerdictQ = BasicLocalVerdict<IntPoly, mpz_class>;

// centered representative in (-p/2, p/2]
inline mpz_class centered_lift(std::uint64_t v, const mpz_class& p) {
    mpz_class z(static_cast<unsigned long>(v));
    if (2 * z > p) z -= p;
    return z;
}

inline IntPoly lift_fq_poly_centered(const FqPoly& a, const mpz_class& p) {
    std::vector<mpz_class> c(a.c.size());
    for (std::size_t i = 0; i < a.c.size(); ++i) c[i] = centered_lift(a.c[i][0], p);
    return IntPoly(std::move(c));
}

// Theorem of Dedekind: p | [O_L : Z[theta]] iff gcd(fbar_i^(e_i-1), dbar) != 1
// for some i, with d(x) = (f - prod f_i^{e_i}) / p.
inline LocalVerdictQ dedekind_index_q(const IntPoly& f, const mpz_class& p) {
    check_internal(f.is_monic() && f.degree() >= 1, "dedekind_index_q needs monic f");
    LocalVerdictQ out;
    out.prime = p;
    FqPtr Fp = fq_make(p, 1);
    FqPoly fbar = reduce_mod_p(f, Fp);
    auto fac = factor_fq(fbar);
    // deterministic order: by degree, then coefficient sequence
    std::sort(fac.begin(), fac.end(), [](const auto& a, const auto& b) {
        if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
        return a.first.c < b.first.c;
    });
    IntPoly prod = IntPoly::constant(1);
    for (const auto& [g, e] : fac) {
        IntPoly lift = lift_fq_poly_centered(g, p);
        out.factors.emplace_back(lift, e);
        for (unsigned i = 0; i < e; ++i) prod = prod * lift;
    }
    IntPoly delta = f - prod;
    std::vector<mpz_class> dcoeffs(delta.c.size());
    for (std::size_t i = 0; i < delta.c.size(); ++i) {
        check_internal(delta.c[i] % p == 0, "f - prod f_i^{e_i} is divisible by p");
        dcoeffs[i] = delta.c[i] / p;
    }
    out.d_residue = reduce_mod_p(IntPoly(std::move(dcoeffs)), Fp);
    out.maximal_here = true;
    for (std::size_t i = 0; i < fac.size(); ++i) {
        const auto& [g, e] = fac[i];
        FqPoly power = FqPoly::constant(Fp, Fp->one());
        for (unsigned k = 0; k + 1 < e; ++k) power = power * g;
        FqPoly gg = fq_poly_gcd(power, out.d_residue);
        if (!(gg.degree() == 0)) {
            out.maximal_here = false;
            out.offender = i;
            break;
        }
    }
    return out;
}

struct SplittingShape {
    mpz_class p;                                      // residue characteristic
    std::vector<std::pair<unsigned, unsigned>> parts; // (e_i, f_i), sorted

    unsigned degree_sum() const {
        unsigned s = 0;
        for (auto [e, fd] : parts) s += e * fd;
        return s;
    }
};

// Dedekind's splitting criterion: valid only when p does not divide the index.
inline SplittingShape dedekind_split(const IntPoly& f, const mpz_class& p, const LocalVerdictQ& verified) {
    if (!verified.maximal_here) throw index_divides("p divides the index; splitting shape not readable");
    SplittingShape s;
    s.p = p;
    for (const auto& [g, e] : verified.factors) s.parts.emplace_back(e, static_cast<unsigned>(g.degree()));
    std::sort(s.parts.begin(), s.parts.end(),
              [](auto a, auto b) { return a.second != b.second ? a.second < b.second : a.first < b.first; });
    check_internal(s.degree_sum() == static_cast<unsigned>(f.degree()), "sum e_i f_i = deg f");
    return s;
}

// Hensel: p is an essential discriminant divisor iff for some inertia degree
// f, more primes of that degree lie above p than there are monic
// irreducibles of degree f over F_p.
inline bool hensel_edd(const mpz_class& p, const SplittingShape& shape) {
    std::vector<unsigned> degrees;
    for (auto [e, fd] : shape.parts) degrees.push_back(fd);
    std::sort(degrees.begin(), degrees.end());
    for (std::size_t i = 0; i < degrees.size();) {
        std::size_t j = i;
        while (j < degrees.size() && degrees[j] == degrees[i]) ++j;
        if (mpz_class(static_cast<unsigned long>(j - i)) > count_monic_irreducibles(p, degrees[i])) return true;
        i = j;
    }
    return false;
}

} // namespace monogen
