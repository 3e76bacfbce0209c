#pragma once

// Kumar-Khanduja relative index criterion and the prime-by-prime relative
// monogeneity decision for monic polynomials over O_L.

#include <gmpxx.h>

#include <algorithm>
#include <utility>
#include <vector>

#include "monogen/dedekind.hpp"
#include "monogen/numberfield.hpp"
#include "monogen/poly_ring.hpp"

namespace monogen {

struct ElemPoly {
    FieldPtr L;
    std::vector<FieldElem> c; // trailing zeros trimmed

    ElemPoly() = default;
    explicit ElemPoly(FieldPtr field) : L(std::move(field)) {}
    ElemPoly(FieldPtr field, std::vector<FieldElem> coeffs) : L(std::move(field)), c(std::move(coeffs)) { trim(); }

    void trim() {
        while (!c.empty() && c.back().is_zero()) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }
    bool is_monic() const { return !c.empty() && c.back() == elem_one(L); }
    FieldElem eval(const FieldElem& x) const { return pr_eval(OLRing{L}, c, x); }

    static ElemPoly from_intpoly(const FieldPtr& L, const IntPoly& a) {
        std::vector<FieldElem> cs;
        cs.reserve(a.c.size());
        for (const auto& z : a.c) cs.push_back(elem_from_int(L, z));
        return ElemPoly(L, std::move(cs));
    }
    // x^n - alpha
    static ElemPoly radical(const FieldPtr& L, unsigned long n, const FieldElem& alpha) {
        std::vector<FieldElem> cs(n + 1, elem_zero(L));
        cs[0] = -alpha;
        cs[n] = elem_one(L);
        return ElemPoly(L, std::move(cs));
    }
};

inline ElemPoly operator*(const ElemPoly& a, const ElemPoly& b) {
    return ElemPoly(a.L, pr_mul(OLRing{a.L}, a.c, b.c));
}
inline ElemPoly operator-(const ElemPoly& a, const ElemPoly& b) {
    return ElemPoly(a.L, pr_sub(OLRing{a.L}, a.c, b.c));
}
inline bool operator==(const ElemPoly& a, const ElemPoly& b) { return a.c == b.c; }

inline FieldElem elem_poly_resultant(const ElemPoly& a, const ElemPoly& b) {
    if (a.is_zero() || b.is_zero()) throw zero_polynomial("resultant of the zero polynomial");
    return pr_resultant(OLRing{a.L}, a.c, b.c);
}

inline FieldElem elem_poly_disc(const ElemPoly& a) {
    if (!a.is_monic()) throw not_monic("discriminant requires a monic polynomial");
    if (a.degree() < 2) throw degree_too_small("discriminant requires degree >= 2");
    return pr_discriminant_monic(OLRing{a.L}, a.c);
}

// Discriminant of x^n - alpha by the closed form
// (-1)^((n^2-n)/2) n^n (-alpha)^(n-1), as an element of O_L.
inline FieldElem disc_radical_formula_elem(unsigned long n, const FieldElem& alpha) {
    check_internal(n >= 2, "disc_radical_formula requires n >= 2");
    mpz_class nn;
    mpz_ui_pow_ui(nn.get_mpz_t(), n, n);
    FieldElem r = nn * elem_pow(-alpha, mpz_class(n - 1));
    return (n * (n - 1) / 2) % 2 ? -r : r;
}

using LocalVerdictRel = BasicLocalVerdict<ElemPoly, PrimeIdeal>;

// lift an F_{p^f} element (a polynomial in t over F_p) into O_L with
// centered digits, t |-> theta
inline FieldElem lift_fq_elem_centered(const FqElem& a, const PrimeIdeal& P) {
    std::vector<mpz_class> coords(static_cast<std::size_t>(P.L->d), 0);
    for (std::size_t i = 0; i < a.size(); ++i) coords[i] = centered_lift(a[i], P.p);
    return FieldElem{P.L, std::move(coords)};
}

inline ElemPoly lift_fq_poly_elem(const FqPoly& a, const PrimeIdeal& P) {
    std::vector<FieldElem> cs;
    cs.reserve(a.c.size());
    for (const auto& e : a.c) cs.push_back(lift_fq_elem_centered(e, P));
    return ElemPoly(P.L, std::move(cs));
}

// Kumar-Khanduja: (O_M)_P = (O_L)_P[theta] iff fbar_i^(e_i-1) is coprime to
// dbar for each i, with d(x) = (f - prod f_i^{e_i}) / pi_P taken
// coefficientwise through the localization.
inline LocalVerdictRel relative_index_criterion(const FieldPtr& L, const ElemPoly& f, const PrimeIdeal& P) {
    check_internal(f.is_monic() && f.degree() >= 1, "relative criterion needs monic f");
    check_internal(same_field(L, P.L) && same_field(L, f.L), "field mismatch in relative criterion");
    LocalVerdictRel out;
    out.prime = P;
    std::vector<FqElem> resc;
    resc.reserve(f.c.size());
    for (const auto& coef : f.c) resc.push_back(residue_map(coef, P));
    FqPoly fbar(P.residue, std::move(resc));
    auto fac = factor_fq(fbar);
    std::sort(fac.begin(), fac.end(), [](const auto& a, const auto& b) {
        if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
        return a.first.c < b.first.c;
    });
    ElemPoly prod = ElemPoly::from_intpoly(L, IntPoly::constant(1));
    for (const auto& [g, e] : fac) {
        ElemPoly lift = lift_fq_poly_elem(g, P);
        out.factors.emplace_back(lift, e);
        for (unsigned i = 0; i < e; ++i) prod = prod * lift;
    }
    ElemPoly delta = f - prod;
    std::vector<FqElem> dbar_c(delta.c.size(), P.residue->zero());
    for (std::size_t i = 0; i < delta.c.size(); ++i) {
        if (delta.c[i].is_zero()) continue;
        if (!ideal_contains(P.lat, delta.c[i]))
            throw coefficient_not_in_ideal("f - prod f_i^{e_i} has a coefficient outside P");
        dbar_c[i] = div_by_uniformizer_mod_p(delta.c[i], P);
    }
    out.d_residue = FqPoly(P.residue, std::move(dbar_c));
    out.maximal_here = true;
    for (std::size_t i = 0; i < fac.size(); ++i) {
        const auto& [g, e] = fac[i];
        FqPoly power = FqPoly::constant(P.residue, P.residue->one());
        for (unsigned k = 0; k + 1 < e; ++k) power = power * g;
        if (!(fq_poly_gcd(power, out.d_residue).degree() == 0)) {
            out.maximal_here = false;
            out.offender = i;
            break;
        }
    }
    return out;
}

struct RelativeVerdict {
    bool monogenic = false;
    FieldElem disc;                      // Delta_f in O_L
    std::vector<LocalVerdictRel> locals; // one per prime dividing (Delta_f), in split order
};

// O_M = O_L[theta] iff the local criterion passes at every prime dividing
// (Delta_f); only those primes can carry index (Delta_f = Delta_{M/L} [O_M :
// O_L[theta]]^2).
inline RelativeVerdict relative_monogenic(const FieldPtr& L, const ElemPoly& f, FactorBudget const& budget = {}) {
    check_internal(f.is_monic() && f.degree() >= 2, "relative_monogenic needs monic f of degree >= 2");
    RelativeVerdict out;
    out.disc = elem_poly_disc(f);
    if (out.disc.is_zero()) throw not_irreducible("f has a repeated factor over L");
    out.monogenic = true;
    mpz_class n = abs(norm(out.disc));
    for (const auto& [p, e] : factor_int(n, budget).factors) {
        for (const auto& P : split_prime(L, p)) {
            if (!ideal_contains(P.lat, out.disc)) continue;
            LocalVerdictRel lv = relative_index_criterion(L, f, P);
            if (!lv.maximal_here) out.monogenic = false;
            out.locals.push_back(std::move(lv));
        }
    }
    return out;
}

} // namespace monogen
