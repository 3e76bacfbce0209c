#pragma once

// Arithmetic and factorization for polynomials over F_q, q = p^f < 2^63.
// Elements of F_q are dense polynomials in t over F_p reduced modulo a monic
// irreducible modulus; f = 1 uses modulus t, so the prime-field path is the
// same code path.

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

#include "monogen/errors.hpp"
#include "monogen/integers.hpp"
#include "monogen/util.hpp"

namespace monogen {

using FqElem = std::vector<std::uint64_t>; // length = field degree f, coeffs in [0, p)

struct FqField;
using FqPtr = std::shared_ptr<const FqField>;

struct FqField {
    std::uint64_t p;                   // residue characteristic, prime
    unsigned f;                        // extension degree over F_p
    std::vector<std::uint64_t> modulus; // monic, degree f, irreducible over F_p
    mpz_class q;                       // p^f, < 2^63

    // scalar arithmetic in F_p
    std::uint64_t sadd(std::uint64_t a, std::uint64_t b) const {
        std::uint64_t s = a + b;
        return s >= p ? s - p : s;
    }
    std::uint64_t ssub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + p - b; }
    std::uint64_t smul(std::uint64_t a, std::uint64_t b) const {
        return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
    }
    std::uint64_t spow(std::uint64_t a, std::uint64_t e) const {
        std::uint64_t r = 1 % p;
        while (e) {
            if (e & 1) r = smul(r, a);
            a = smul(a, a);
            e >>= 1;
        }
        return r;
    }
    std::uint64_t sinv(std::uint64_t a) const {
        check_internal(a % p != 0, "inverse of 0 in F_p");
        return spow(a % p, p - 2);
    }

    // element arithmetic in F_q
    FqElem zero() const { return FqElem(f, 0); }
    FqElem one() const {
        FqElem e(f, 0);
        e[0] = 1 % p;
        return e;
    }
    bool is_zero(const FqElem& a) const {
        for (auto v : a)
            if (v) return false;
        return true;
    }
    FqElem from_uint(std::uint64_t v) const {
        FqElem e(f, 0);
        e[0] = v % p;
        return e;
    }
    FqElem from_int(const mpz_class& v) const {
        mpz_class r = v % static_cast<unsigned long>(p);
        if (r < 0) r += static_cast<unsigned long>(p);
        return from_uint(r.get_ui());
    }
    FqElem add(const FqElem& a, const FqElem& b) const {
        FqElem r(f);
        for (unsigned i = 0; i < f; ++i) r[i] = sadd(a[i], b[i]);
        return r;
    }
    FqElem sub(const FqElem& a, const FqElem& b) const {
        FqElem r(f);
        for (unsigned i = 0; i < f; ++i) r[i] = ssub(a[i], b[i]);
        return r;
    }
    FqElem neg(const FqElem& a) const {
        FqElem r(f);
        for (unsigned i = 0; i < f; ++i) r[i] = a[i] ? p - a[i] : 0;
        return r;
    }
    FqElem scalar_mul(std::uint64_t s, const FqElem& a) const {
        FqElem r(f);
        for (unsigned i = 0; i < f; ++i) r[i] = smul(s, a[i]);
        return r;
    }
    FqElem mul(const FqElem& a, const FqElem& b) const {
        std::vector<std::uint64_t> prod(2 * f - 1, 0);
        for (unsigned i = 0; i < f; ++i) {
            if (!a[i]) continue;
            for (unsigned j = 0; j < f; ++j) prod[i + j] = sadd(prod[i + j], smul(a[i], b[j]));
        }
        // reduce mod modulus (monic)
        for (unsigned d = 2 * f - 2; d >= f && d < prod.size(); --d) {
            std::uint64_t c = prod[d];
            if (!c) continue;
            prod[d] = 0;
            for (unsigned j = 0; j < f; ++j) prod[d - f + j] = ssub(prod[d - f + j], smul(c, modulus[j]));
        }
        prod.resize(f);
        return prod;
    }
    FqElem pow(FqElem a, mpz_class e) const {
        check_internal(e >= 0, "negative exponent in F_q");
        FqElem r = one();
        while (e > 0) {
            if (mpz_odd_p(e.get_mpz_t())) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    FqElem inv(const FqElem& a) const {
        check_internal(!is_zero(a), "inverse of 0 in F_q");
        return pow(a, q - 2);
    }
};

namespace detail {
inline FqPtr fq_unchecked(std::uint64_t p, unsigned f, std::vector<std::uint64_t> modulus) {
    auto F = std::make_shared<FqField>();
    F->p = p;
    F->f = f;
    F->modulus = std::move(modulus);
    mpz_class q;
    mpz_ui_pow_ui(q.get_mpz_t(), static_cast<unsigned long>(p), f);
    F->q = q;
    return F;
}
} // namespace detail

// ---------------------------------------------------------------------------
// Polynomials over F_q

struct FqPoly {
    FqPtr F;
    std::vector<FqElem> c; // c[i] = coefficient of x^i, trailing zeros trimmed

    FqPoly() = default;
    explicit FqPoly(FqPtr field) : F(std::move(field)) {}
    FqPoly(FqPtr field, std::vector<FqElem> coeffs) : F(std::move(field)), c(std::move(coeffs)) { trim(); }

    void trim() {
        while (!c.empty() && F->is_zero(c.back())) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; } // -1 for zero polynomial
    const FqElem& lc() const {
        check_internal(!c.empty(), "lc of zero polynomial");
        return c.back();
    }
    FqElem coeff(std::size_t i) const { return i < c.size() ? c[i] : F->zero(); }
    bool is_one() const { return c.size() == 1 && c[0] == F->one(); }

    static FqPoly from_uints(FqPtr F, const std::vector<std::uint64_t>& v) {
        std::vector<FqElem> cs;
        cs.reserve(v.size());
        for (auto x : v) cs.push_back(F->from_uint(x));
        return FqPoly(std::move(F), std::move(cs));
    }
    static FqPoly x(FqPtr F) { return from_uints(std::move(F), {0, 1}); }
    static FqPoly constant(FqPtr F, FqElem e) { return FqPoly(std::move(F), {std::move(e)}); }
};

inline void require_same_field(const FqPoly& a, const FqPoly& b) {
    if (a.F.get() != b.F.get() && !(a.F->p == b.F->p && a.F->modulus == b.F->modulus))
        throw field_mismatch("FqPoly operands live in different fields");
}

inline bool operator==(const FqPoly& a, const FqPoly& b) { return a.c == b.c; }

inline FqPoly operator+(const FqPoly& a, const FqPoly& b) {
    require_same_field(a, b);
    const auto& F = *a.F;
    std::vector<FqElem> r(std::max(a.c.size(), b.c.size()), F.zero());
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (i < a.c.size()) r[i] = F.add(r[i], a.c[i]);
        if (i < b.c.size()) r[i] = F.add(r[i], b.c[i]);
    }
    return FqPoly(a.F, std::move(r));
}

inline FqPoly operator-(const FqPoly& a, const FqPoly& b) {
    require_same_field(a, b);
    const auto& F = *a.F;
    std::vector<FqElem> r(std::max(a.c.size(), b.c.size()), F.zero());
    for (std::size_t i = 0; i < r.size(); ++i) {
        FqElem x = i < a.c.size() ? a.c[i] : F.zero();
        FqElem y = i < b.c.size() ? b.c[i] : F.zero();
        r[i] = F.sub(x, y);
    }
    return FqPoly(a.F, std::move(r));
}

inline FqPoly operator*(const FqPoly& a, const FqPoly& b) {
    require_same_field(a, b);
    if (a.is_zero() || b.is_zero()) return FqPoly(a.F);
    const auto& F = *a.F;
    std::vector<FqElem> r(a.c.size() + b.c.size() - 1, F.zero());
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (F.is_zero(a.c[i])) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(a.c[i], b.c[j]));
    }
    return FqPoly(a.F, std::move(r));
}

inline FqPoly fq_poly_scale(const FqElem& s, const FqPoly& a) {
    std::vector<FqElem> r(a.c.size());
    for (std::size_t i = 0; i < a.c.size(); ++i) r[i] = a.F->mul(s, a.c[i]);
    return FqPoly(a.F, std::move(r));
}

inline std::pair<FqPoly, FqPoly> fq_poly_divrem(const FqPoly& a, const FqPoly& b) {
    require_same_field(a, b);
    check_internal(!b.is_zero(), "division by zero polynomial");
    const auto& F = *a.F;
    if (a.degree() < b.degree()) return {FqPoly(a.F), a};
    FqElem linv = F.inv(b.lc());
    std::vector<FqElem> rem = a.c;
    std::vector<FqElem> quot(a.c.size() - b.c.size() + 1, F.zero());
    for (int i = static_cast<int>(rem.size()) - 1; i >= b.degree(); --i) {
        if (F.is_zero(rem[static_cast<std::size_t>(i)])) continue;
        FqElem qc = F.mul(rem[static_cast<std::size_t>(i)], linv);
        quot[static_cast<std::size_t>(i - b.degree())] = qc;
        for (std::size_t j = 0; j < b.c.size(); ++j)
            rem[static_cast<std::size_t>(i) - b.c.size() + 1 + j] =
                F.sub(rem[static_cast<std::size_t>(i) - b.c.size() + 1 + j], F.mul(qc, b.c[j]));
    }
    return {FqPoly(a.F, std::move(quot)), FqPoly(a.F, std::move(rem))};
}

inline FqPoly fq_poly_mod(const FqPoly& a, const FqPoly& b) { return fq_poly_divrem(a, b).second; }

inline FqPoly fq_poly_make_monic(const FqPoly& a) {
    if (a.is_zero() || a.F->is_zero(a.F->sub(a.lc(), a.F->one()))) return a;
    return fq_poly_scale(a.F->inv(a.lc()), a);
}

// Monic gcd; gcd(0, 0) = 0.
inline FqPoly fq_poly_gcd(FqPoly a, FqPoly b) {
    require_same_field(a, b);
    while (!b.is_zero()) {
        FqPoly r = fq_poly_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return fq_poly_make_monic(a);
}

// g = gcd(a, b) monic, with u a + v b = g.
inline FqPoly fq_poly_xgcd(const FqPoly& a, const FqPoly& b, FqPoly& u, FqPoly& v) {
    require_same_field(a, b);
    FqPtr F = a.F;
    FqPoly r0 = a, r1 = b;
    FqPoly s0 = FqPoly::constant(F, F->one()), s1 = FqPoly(F);
    FqPoly t0 = FqPoly(F), t1 = FqPoly::constant(F, F->one());
    while (!r1.is_zero()) {
        auto [q, r] = fq_poly_divrem(r0, r1);
        FqPoly s = s0 - q * s1, t = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
        t0 = std::move(t1);
        t1 = std::move(t);
    }
    if (r0.is_zero()) {
        u = s0;
        v = t0;
        return r0;
    }
    FqElem inv_lc = F->inv(r0.lc());
    u = fq_poly_scale(inv_lc, s0);
    v = fq_poly_scale(inv_lc, t0);
    return fq_poly_scale(inv_lc, r0);
}

inline FqPoly fq_poly_powmod(FqPoly base, mpz_class e, const FqPoly& mod) {
    check_internal(e >= 0, "negative exponent");
    FqPoly r = FqPoly::constant(base.F, base.F->one());
    base = fq_poly_mod(base, mod);
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) r = fq_poly_mod(r * base, mod);
        base = fq_poly_mod(base * base, mod);
        e >>= 1;
    }
    return r;
}

inline FqPoly fq_poly_derivative(const FqPoly& a) {
    if (a.degree() < 1) return FqPoly(a.F);
    const auto& F = *a.F;
    std::vector<FqElem> r(a.c.size() - 1);
    for (std::size_t i = 1; i < a.c.size(); ++i) r[i - 1] = F.scalar_mul(static_cast<std::uint64_t>(i % F.p), a.c[i]);
    return FqPoly(a.F, std::move(r));
}

inline FqElem fq_poly_eval(const FqPoly& a, const FqElem& x) {
    const auto& F = *a.F;
    FqElem r = F.zero();
    for (std::size_t i = a.c.size(); i-- > 0;) r = F.add(F.mul(r, x), a.c[i]);
    return r;
}

// Rabin irreducibility test.
inline bool is_irreducible_fq(const FqPoly& a) {
    check_internal(a.degree() >= 1, "is_irreducible_fq requires degree >= 1");
    const unsigned n = static_cast<unsigned>(a.degree());
    if (n == 1) return true;
    FqPoly am = fq_poly_make_monic(a);
    FqPoly x = FqPoly::x(a.F);
    mpz_class qn;
    mpz_pow_ui(qn.get_mpz_t(), a.F->q.get_mpz_t(), n);
    if (!(fq_poly_powmod(x, qn, am) == fq_poly_mod(x, am))) return false;
    for (const auto& [r, e] : factor_int(mpz_class(n)).factors) {
        unsigned nr = n / static_cast<unsigned>(r.get_ui());
        mpz_class qd;
        mpz_pow_ui(qd.get_mpz_t(), a.F->q.get_mpz_t(), nr);
        FqPoly h = fq_poly_powmod(x, qd, am) - fq_poly_mod(x, am);
        if (fq_poly_gcd(h, am).degree() != 0) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Field construction

// F_{p^f} with the given monic degree-f modulus; irreducibility is verified.
inline FqPtr fq_make_with_modulus(const mpz_class& p, std::vector<std::uint64_t> modulus) {
    if (!is_prime(p)) throw error("fq field characteristic must be prime");
    if (mpz_sizeinbase(p.get_mpz_t(), 2) > 62) throw size_bound("p too large for F_q layer");
    std::uint64_t pu = mpz_get_ui(p.get_mpz_t());
    check_internal(modulus.size() >= 2, "modulus must have degree >= 1");
    for (auto& x : modulus) x %= pu;
    unsigned f = static_cast<unsigned>(modulus.size()) - 1;
    check_internal(modulus.back() == 1, "modulus must be monic");
    // q = p^f must stay below 2^63
    mpz_class q;
    mpz_ui_pow_ui(q.get_mpz_t(), pu, f);
    if (mpz_sizeinbase(q.get_mpz_t(), 2) > 62) throw size_bound("q = p^f exceeds the 2^63 bound");
    if (f > 1) {
        FqPtr Fp = detail::fq_unchecked(pu, 1, {0, 1});
        if (!is_irreducible_fq(FqPoly::from_uints(Fp, modulus)))
            throw error("fq modulus is reducible over F_p");
    }
    return detail::fq_unchecked(pu, f, std::move(modulus));
}

// F_{p^f} with a deterministically-seeded irreducible modulus (f = 1 uses t).
inline FqPtr fq_make(const mpz_class& p, unsigned f, std::uint64_t seed = 0) {
    if (!is_prime(p)) throw error("fq field characteristic must be prime");
    if (mpz_sizeinbase(p.get_mpz_t(), 2) > 62) throw size_bound("p too large for F_q layer");
    std::uint64_t pu = mpz_get_ui(p.get_mpz_t());
    if (f == 0) throw error("fq_make requires f >= 1");
    if (f == 1) return detail::fq_unchecked(pu, 1, {0, 1});
    mpz_class q;
    mpz_ui_pow_ui(q.get_mpz_t(), pu, f);
    if (mpz_sizeinbase(q.get_mpz_t(), 2) > 62) throw size_bound("q = p^f exceeds the 2^63 bound");
    FqPtr Fp = detail::fq_unchecked(pu, 1, {0, 1});
    Rng rng(seed_combine(seed, seed_combine(hash_mpz(p), f)));
    for (;;) {
        std::vector<std::uint64_t> cand(f + 1, 0);
        cand[f] = 1;
        for (unsigned i = 0; i < f; ++i) cand[i] = rng_below(rng, pu);
        if (is_irreducible_fq(FqPoly::from_uints(Fp, cand)))
            return detail::fq_unchecked(pu, f, std::move(cand));
    }
}

// ---------------------------------------------------------------------------
// Factorization over F_q

namespace detail {

// f is a p-th power; take the p-th root coefficientwise (inverse Frobenius).
inline FqPoly fq_pth_root(const FqPoly& a) {
    const auto& F = *a.F;
    mpz_class e;
    mpz_ui_pow_ui(e.get_mpz_t(), static_cast<unsigned long>(F.p), F.f >= 1 ? F.f - 1 : 0);
    std::vector<FqElem> r;
    for (std::size_t i = 0; i < a.c.size(); i += static_cast<std::size_t>(F.p))
        r.push_back(F.pow(a.c[i], e));
    return FqPoly(a.F, std::move(r));
}

// monic squarefree parts: returns list of (monic squarefree g_i, multiplicity m_i)
inline void fq_squarefree_decompose(const FqPoly& f, unsigned mult, std::vector<std::pair<FqPoly, unsigned>>& out) {
    const std::uint64_t p = f.F->p;
    FqPoly fp = fq_poly_derivative(f);
    if (fp.is_zero()) {
        fq_squarefree_decompose(fq_pth_root(f), mult * static_cast<unsigned>(p), out);
        return;
    }
    FqPoly c = fq_poly_gcd(f, fp);
    FqPoly w = fq_poly_divrem(f, c).first;
    unsigned i = 1;
    while (!(w.degree() == 0)) {
        FqPoly y = fq_poly_gcd(w, c);
        FqPoly z = fq_poly_divrem(w, y).first;
        if (z.degree() > 0) out.emplace_back(fq_poly_make_monic(z), i * mult);
        w = std::move(y);
        c = fq_poly_divrem(c, w).first;
        ++i;
    }
    if (c.degree() > 0) fq_squarefree_decompose(fq_pth_root(c), mult * static_cast<unsigned>(p), out);
}

// Cantor-Zassenhaus equal-degree splitting: f monic squarefree, all
// irreducible factors of degree d.
inline void fq_equal_degree(const FqPoly& f, unsigned d, Rng& rng, std::vector<FqPoly>& out) {
    const unsigned n = static_cast<unsigned>(f.degree());
    if (n == d) {
        out.push_back(f);
        return;
    }
    const auto& F = *f.F;
    FqPoly split(f.F);
    for (;;) {
        std::vector<FqElem> uc(n);
        for (unsigned i = 0; i < n; ++i) {
            FqElem e(F.f);
            for (unsigned j = 0; j < F.f; ++j) e[j] = rng_below(rng, F.p);
            uc[i] = std::move(e);
        }
        FqPoly u(f.F, std::move(uc));
        if (u.degree() < 1) continue;
        FqPoly g = fq_poly_gcd(u, f);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            split = g;
            break;
        }
        FqPoly v(f.F);
        if (F.p == 2) {
            // trace map over F_2: sum of u^(2^i), i < f*d
            FqPoly acc(f.F), pw = fq_poly_mod(u, f);
            for (unsigned i = 0; i < F.f * d; ++i) {
                acc = acc + pw;
                pw = fq_poly_mod(pw * pw, f);
            }
            v = acc;
        } else {
            mpz_class e;
            mpz_pow_ui(e.get_mpz_t(), F.q.get_mpz_t(), d);
            e = (e - 1) / 2;
            v = fq_poly_powmod(u, e, f) - FqPoly::constant(f.F, F.one());
        }
        FqPoly g2 = fq_poly_gcd(v, f);
        if (g2.degree() > 0 && g2.degree() < f.degree()) {
            split = g2;
            break;
        }
    }
    fq_equal_degree(split, d, rng, out);
    fq_equal_degree(fq_poly_divrem(f, split).first, d, rng, out);
}

} // namespace detail

// Complete factorization into monic irreducibles with multiplicities, plus
// the leading coefficient. Randomized splitting is driven by rng.
inline std::vector<std::pair<FqPoly, unsigned>> factor_fq(const FqPoly& a, Rng& rng) {
    check_internal(a.degree() >= 1, "factor_fq requires degree >= 1");
    std::vector<std::pair<FqPoly, unsigned>> out;
    FqPoly f = fq_poly_make_monic(a);
    std::vector<std::pair<FqPoly, unsigned>> sqf;
    detail::fq_squarefree_decompose(f, 1, sqf);
    for (auto& [g, mult] : sqf) {
        // distinct-degree splitting of the squarefree part g
        FqPoly rest = g;
        FqPoly x = FqPoly::x(a.F);
        FqPoly h = fq_poly_mod(x, rest);
        for (unsigned d = 1; rest.degree() > 0 && 2 * d <= static_cast<unsigned>(rest.degree()); ++d) {
            h = fq_poly_powmod(h, a.F->q, rest);
            FqPoly gd = fq_poly_gcd(h - fq_poly_mod(x, rest), rest);
            if (gd.degree() > 0) {
                std::vector<FqPoly> irr;
                detail::fq_equal_degree(gd, d, rng, irr);
                for (auto& u : irr) out.emplace_back(std::move(u), mult);
                rest = fq_poly_divrem(rest, gd).first;
                h = fq_poly_mod(h, rest);
            }
        }
        if (rest.degree() > 0) out.emplace_back(rest, mult);
    }
    return out;
}

// Deterministic wrapper: seeds the splitting RNG from the input.
inline std::vector<std::pair<FqPoly, unsigned>> factor_fq(const FqPoly& a) {
    std::uint64_t h = seed_combine(a.F->p, a.F->f);
    for (const auto& e : a.c)
        for (auto v : e) h = seed_combine(h, v);
    Rng rng(h);
    return factor_fq(a, rng);
}

// True iff nonzero a is an n-th power in F_q: a^((q-1)/gcd(n, q-1)) = 1.
inline bool nth_power_residue(const FqField& F, const FqElem& a, const mpz_class& n) {
    if (F.is_zero(a)) throw zero_input("nth_power_residue of 0");
    if (n < 1) throw error("nth_power_residue requires n >= 1");
    mpz_class g, qm1 = F.q - 1;
    mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), qm1.get_mpz_t());
    FqElem r = F.pow(a, qm1 / g);
    return r == F.one();
}

} // namespace monogen
