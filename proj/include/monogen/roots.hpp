#pragma once

// Roots in O_L of monic squarefree polynomials over O_L, by modular root
// enumeration, Newton lifting mod p^m, and exact verification. No step
// trusts an unverified candidate: a reconstructed root is accepted only
// after exact re-substitution, and the lifting precision is chosen from a
// rigorous coordinate bound so an empty result is a proof of non-existence.
//
// This powers the k-th-power tests and Capelli's irreducibility criterion
// for x^n - alpha.

#include <gmpxx.h>

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "monogen/numberfield.hpp"

namespace monogen {

namespace detail {

// residue of an O_L element in F_p[t]/(hbar) without a PrimeIdeal in hand
inline FqElem component_residue(const FieldElem& x, const FqPtr& Fp, const FqPoly& hbar, const FqPtr& comp) {
    std::vector<FqElem> cs;
    cs.reserve(x.c.size());
    for (const auto& z : x.c) cs.push_back(Fp->from_int(z));
    FqPoly r = fq_poly_mod(FqPoly(Fp, std::move(cs)), hbar);
    FqElem out(comp->f, 0);
    for (std::size_t i = 0; i < r.c.size(); ++i) out[i] = r.c[i][0];
    return out;
}

// Cauchy-style bound on the coordinates of any root of f in O_L, from exact
// integer arithmetic only: |coord_j(beta)| <= d * B_root * 2^(d-1) * R^(d-1)
// * H1^(d-1), with R a bound on |theta| at every embedding, B_root a bound
// on |beta| at every embedding, and H1 a bound on |g'| on the disk of
// radius R (the |disc g| >= 1 denominator is dropped).
inline mpz_class root_coord_bound(const FieldPtr& L, const std::vector<FieldElem>& f) {
    const int d = L->d;
    mpz_class R = 1;
    for (int i = 0; i < d; ++i) R = std::max(R, mpz_class(1 + abs(L->g.c[static_cast<std::size_t>(i)])));
    mpz_class Rpow;
    mpz_pow_ui(Rpow.get_mpz_t(), R.get_mpz_t(), static_cast<unsigned long>(d - 1));
    mpz_class Bcoeff = 0;
    for (std::size_t j = 0; j + 1 < f.size(); ++j) {
        mpz_class s = 0;
        for (const auto& z : f[j].c) s += abs(z);
        Bcoeff = std::max(Bcoeff, mpz_class(s * Rpow));
    }
    mpz_class Broot = 1 + Bcoeff;
    mpz_class H1 = 0, Ri = 1;
    for (int i = 1; i <= d; ++i) {
        mpz_class gi = i == d ? mpz_class(1) : abs(L->g.c[static_cast<std::size_t>(i)]);
        H1 += i * gi * Ri;
        Ri *= R;
    }
    mpz_class H1pow;
    mpz_pow_ui(H1pow.get_mpz_t(), H1.get_mpz_t(), static_cast<unsigned long>(d - 1));
    mpz_class C = d * Broot * H1pow;
    C *= Rpow;
    C <<= static_cast<unsigned>(d - 1);
    return C;
}

// evaluate a polynomial with ZV coefficients at y, inside (Z/m)[x]/(G)
inline zx::ZV eval_mod(const std::vector<zx::ZV>& coeffs, const zx::ZV& y, const std::vector<mpz_class>& G,
                       const mpz_class& m) {
    zx::ZV acc;
    for (std::size_t j = coeffs.size(); j-- > 0;) {
        acc = zx::mul(acc, y, m);
        acc = zx::add(acc, zx::reduce(coeffs[j], m), m);
        acc = zx::divrem_monic(acc, zx::reduce(G, m), m).second;
    }
    return acc;
}

// inverse of v in (Z/m)[x]/(G), m = p^k: xgcd mod p then Newton lifting
inline zx::ZV invert_mod(const zx::ZV& v, const std::vector<mpz_class>& G, const mpz_class& p, const mpz_class& m,
                         const FqPtr& Fp, const FqPoly& gbar) {
    std::vector<FqElem> cs;
    cs.reserve(v.size());
    for (const auto& z : v) cs.push_back(Fp->from_int(z));
    FqPoly vbar(Fp, std::move(cs));
    FqPoly u(Fp), w(Fp);
    FqPoly gg = fq_poly_xgcd(fq_poly_mod(vbar, gbar), gbar, u, w);
    check_internal(gg.is_one(), "derivative is a unit mod every prime above p");
    zx::ZV inv = fqpoly_to_zv(u);
    mpz_class mm = p;
    zx::ZV two{2};
    while (mm < m) {
        mm = mm * mm;
        if (mm > m) mm = m;
        zx::ZV gm = zx::reduce(G, mm);
        zx::ZV t = zx::sub(two, zx::divrem_monic(zx::mul(inv, zx::reduce(v, mm), mm), gm, mm).second, mm);
        inv = zx::divrem_monic(zx::mul(inv, t, mm), gm, mm).second;
    }
    return inv;
}

} // namespace detail

// All roots of the monic squarefree polynomial f (coefficients in O_L,
// f.size() = deg+1, leading coefficient 1) that lie in O_L.
inline std::vector<FieldElem> integral_roots(const FieldPtr& L, const std::vector<FieldElem>& f) {
    check_internal(f.size() >= 2, "integral_roots needs degree >= 1");
    check_internal(f.back() == elem_one(L), "integral_roots needs a monic polynomial");
    const int d = L->d;
    OLRing R{L};
    PolyVec<OLRing> fv(f.begin(), f.end());
    PolyVec<OLRing> fder = pr_derivative(R, fv);
    FieldElem disc_f = pr_resultant(R, fv, fder);
    if (disc_f.is_zero()) throw error("integral_roots requires a squarefree polynomial");
    mpz_class bad = abs(L->disc_g * norm(disc_f));

    struct Component {
        FqPoly hbar;     // factor of g mod p
        FqPtr field;     // F_p[t]/(hbar)
        std::vector<FqElem> roots;
    };
    struct Choice {
        mpz_class p;
        FqPtr Fp;
        FqPoly gbar;
        std::vector<Component> comps;
        mpz_class combos = 1;
    };
    std::optional<Choice> best;
    int good_seen = 0;
    for (unsigned long pu = 2; pu < 10000 && good_seen < 6; ++pu) {
        mpz_class p(pu);
        if (!is_prime(p)) continue;
        if (bad % p == 0) continue;
        ++good_seen;
        Choice ch;
        ch.p = p;
        ch.Fp = fq_make(p, 1);
        ch.gbar = reduce_mod_p(L->g, ch.Fp);
        auto fac = factor_fq(ch.gbar);
        bool refuted = false;
        for (const auto& [hb, e] : fac) {
            check_internal(e == 1, "g squarefree mod a good prime");
            Component comp;
            comp.hbar = hb;
            if (hb.degree() == 1) {
                comp.field = ch.Fp;
            } else {
                std::vector<std::uint64_t> modulus(hb.c.size());
                for (std::size_t i = 0; i < hb.c.size(); ++i) modulus[i] = hb.c[i][0];
                comp.field = fq_make_with_modulus(p, std::move(modulus));
            }
            std::vector<FqElem> cs;
            for (const auto& coef : f) cs.push_back(detail::component_residue(coef, ch.Fp, hb, comp.field));
            FqPoly fbar(comp.field, std::move(cs));
            check_internal(fbar.degree() == static_cast<int>(f.size()) - 1, "reduction preserves the degree");
            for (const auto& [irr, mult] : factor_fq(fbar)) {
                if (irr.degree() != 1) continue;
                // monic x + a0: root is -a0
                comp.roots.push_back(comp.field->neg(irr.c[0]));
            }
            if (comp.roots.empty()) {
                refuted = true;
                break;
            }
            ch.combos *= static_cast<unsigned long>(comp.roots.size());
            ch.comps.push_back(std::move(comp));
        }
        if (refuted) return {};
        if (!best || ch.combos < best->combos) best = std::move(ch);
        if (best->combos == 1) break;
    }
    if (!best) throw precision_exhausted("no usable prime found for root lifting");
    if (best->combos > 4096) throw precision_exhausted("too many modular root candidates");

    // lifting target from the rigorous coordinate bound
    mpz_class target = 2 * detail::root_coord_bound(L, f) + 1;
    const mpz_class& p = best->p;

    // CRT basis over F_p[x]: E_i = 1 mod hbar_i, 0 mod hbar_j
    std::vector<FqPoly> crt_basis;
    for (const auto& comp : best->comps) {
        FqPoly cof = fq_poly_divrem(best->gbar, comp.hbar).first;
        FqPoly u(best->Fp), v(best->Fp);
        FqPoly gg = fq_poly_xgcd(fq_poly_mod(cof, comp.hbar), comp.hbar, u, v);
        check_internal(gg.is_one(), "CRT cofactor is invertible");
        crt_basis.push_back(fq_poly_mod(cof * u, best->gbar));
    }

    std::vector<zx::ZV> fcoeffs;
    for (const auto& coef : f) fcoeffs.emplace_back(coef.c.begin(), coef.c.end());
    std::vector<zx::ZV> dcoeffs;
    {
        PolyVec<OLRing> der = fder;
        for (const auto& coef : der) dcoeffs.emplace_back(coef.c.begin(), coef.c.end());
    }
    std::vector<mpz_class> G(L->g.c.begin(), L->g.c.end());

    std::vector<FieldElem> roots;
    std::vector<std::size_t> idx(best->comps.size(), 0);
    for (;;) {
        // assemble the mod-p candidate for this combination
        FqPoly cand(best->Fp);
        for (std::size_t i = 0; i < best->comps.size(); ++i) {
            const FqElem& r = best->comps[i].roots[idx[i]];
            std::vector<FqElem> rc;
            for (auto coefbit : r) rc.push_back(best->Fp->from_uint(coefbit));
            cand = cand + fq_poly_mod(FqPoly(best->Fp, std::move(rc)) * crt_basis[i], best->gbar);
        }
        zx::ZV y = detail::fqpoly_to_zv(cand);
        mpz_class m = p;
        while (m < target) {
            mpz_class m2 = m * m;
            zx::ZV fy = detail::eval_mod(fcoeffs, y, G, m2);
            zx::ZV dy = detail::eval_mod(dcoeffs, y, G, m2);
            zx::ZV inv = detail::invert_mod(dy, G, p, m2, best->Fp, best->gbar);
            zx::ZV step = zx::divrem_monic(zx::mul(fy, inv, m2), zx::reduce(G, m2), m2).second;
            y = zx::sub(y, step, m2);
            m = m2;
        }
        std::vector<mpz_class> coords = zx::center(y, m);
        coords.resize(static_cast<std::size_t>(d), mpz_class(0));
        FieldElem beta{L, std::move(coords)};
        if (pr_eval(R, fv, beta).is_zero()) roots.push_back(std::move(beta));
        // next combination
        std::size_t i = 0;
        while (i < idx.size()) {
            if (++idx[i] < best->comps[i].roots.size()) break;
            idx[i] = 0;
            ++i;
        }
        if (i == idx.size()) break;
    }
    return roots;
}

// A k-th root of alpha in O_L, if one exists in the fraction field of O_L
// (such a root is integral, hence lies in O_L). Norm and residue refutation
// first; confirmation by lifting with exact verification.
inline std::optional<FieldElem> is_nth_power_in_field(const FieldElem& alpha, unsigned k) {
    if (alpha.is_zero()) throw zero_input("is_nth_power_in_field of 0");
    check_internal(k >= 2, "is_nth_power_in_field needs k >= 2");
    mpz_class na = norm(alpha);
    if (k % 2 == 0 && na < 0) return std::nullopt;
    mpz_class root, absn = abs(na);
    if (!mpz_root(root.get_mpz_t(), absn.get_mpz_t(), k)) return std::nullopt; // |N(alpha)| must be a k-th power
    std::vector<FieldElem> f(k + 1, elem_zero(alpha.L));
    f[0] = -alpha;
    f[k] = elem_one(alpha.L);
    auto roots = integral_roots(alpha.L, f);
    if (roots.empty()) return std::nullopt;
    return roots.front();
}

// Capelli: x^n - alpha is irreducible over L iff alpha is not a q-th power
// for every prime q | n, and, when 4 | n, alpha is not in -4 L^4.
inline bool is_irreducible_radical(const FieldElem& alpha, unsigned long n) {
    if (alpha.is_zero()) throw zero_input("is_irreducible_radical of 0");
    check_internal(n >= 2, "is_irreducible_radical needs n >= 2");
    for (const auto& [q, e] : factor_int(mpz_class(n)).factors)
        if (is_nth_power_in_field(alpha, static_cast<unsigned>(q.get_ui()))) return false;
    if (n % 4 == 0) {
        // alpha = -4 gamma^4 with gamma in L iff -4*alpha is a 4th power in O_L
        if (is_nth_power_in_field(mpz_class(-4) * alpha, 4)) return false;
    }
    return true;
}

// Rational specializations (base field Q).
inline std::optional<mpz_class> is_nth_power_int(const mpz_class& a, unsigned k) {
    if (a == 0) throw zero_input("is_nth_power_int of 0");
    if (k % 2 == 0 && a < 0) return std::nullopt;
    mpz_class root;
    if (!mpz_root(root.get_mpz_t(), a.get_mpz_t(), k)) return std::nullopt;
    return root;
}

inline bool is_irreducible_radical_q(const mpz_class& a, unsigned long n) {
    if (a == 0) throw zero_input("is_irreducible_radical_q of 0");
    check_internal(n >= 2, "is_irreducible_radical_q needs n >= 2");
    for (const auto& [q, e] : factor_int(mpz_class(n)).factors)
        if (is_nth_power_int(a, static_cast<unsigned>(q.get_ui()))) return false;
    if (n % 4 == 0 && is_nth_power_int(mpz_class(-4) * a, 4)) return false;
    return true;
}

} // namespace monogen
