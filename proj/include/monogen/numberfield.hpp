#pragma once

// Number fields L = Q(theta) with maximal order Z[theta]: exact element
// arithmetic, norms, HNF ideal lattices, prime splitting, valuations,
// residue maps, uniformizers, and division by a uniformizer mod p.
//
// Base orders are restricted to maximal Z[theta]; nf_make certifies this
// with the Dedekind index criterion at every prime whose square divides the
// polynomial discriminant, so later splitting steps are unconditional.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <utility>
#include <vector>

#include "monogen/dedekind.hpp"
#include "monogen/errors.hpp"
#include "monogen/fq.hpp"
#include "monogen/integers.hpp"
#include "monogen/intpoly.hpp"
#include "monogen/poly_ring.hpp"

namespace monogen {

struct MaximalityCertificate {
    bool asserted = false;    // user bypassed verification
    bool cyclotomic = false;  // certified by the integral-basis lemma for Q(zeta_n)
    std::vector<std::pair<mpz_class, bool>> checked; // (p with p^2 | disc_g, criterion passed)
};

struct NumberField;
using FieldPtr = std::shared_ptr<const NumberField>;

struct NumberField {
    IntPoly g;       // monic irreducible, degree d in [2, 32]
    int d = 0;
    mpz_class disc_g;
    mpz_class field_disc;
    MaximalityCertificate maximality;
    unsigned long cyclotomic_n = 0; // nonzero iff constructed as Q(zeta_n)
};

inline bool same_field(const FieldPtr& a, const FieldPtr& b) {
    return a.get() == b.get() || a->g == b->g;
}

// ---------------------------------------------------------------------------
// Elements of O_L = Z[theta]

struct FieldElem {
    FieldPtr L;
    std::vector<mpz_class> c; // length d, coefficients of 1, theta, ..., theta^(d-1)

    bool is_zero() const {
        for (const auto& z : c)
            if (z != 0) return false;
        return true;
    }
    IntPoly rep() const { return IntPoly(std::vector<mpz_class>(c)); }
};

inline void require_same_field(const FieldElem& a, const FieldElem& b) {
    if (!same_field(a.L, b.L)) throw field_mismatch("elements of different number fields");
}

inline FieldElem elem_from_coords(FieldPtr L, std::vector<mpz_class> coords) {
    const int d = L->d;
    if (static_cast<int>(coords.size()) > d) {
        auto rem = pr_divrem_monic(MpzRing{}, std::move(coords), L->g.c).second;
        coords = std::move(rem);
    }
    coords.resize(static_cast<std::size_t>(d), mpz_class(0));
    return FieldElem{std::move(L), std::move(coords)};
}

inline FieldElem elem_from_int(FieldPtr L, const mpz_class& v) {
    std::vector<mpz_class> c(static_cast<std::size_t>(L->d), 0);
    c[0] = v;
    return FieldElem{std::move(L), std::move(c)};
}

inline FieldElem elem_zero(FieldPtr L) { return elem_from_int(std::move(L), 0); }
inline FieldElem elem_one(FieldPtr L) { return elem_from_int(std::move(L), 1); }
inline FieldElem elem_theta(FieldPtr L) {
    std::vector<mpz_class> c(static_cast<std::size_t>(L->d), 0);
    c[1] = 1;
    return FieldElem{std::move(L), std::move(c)};
}

inline bool operator==(const FieldElem& a, const FieldElem& b) { return same_field(a.L, b.L) && a.c == b.c; }

inline FieldElem operator+(const FieldElem& a, const FieldElem& b) {
    require_same_field(a, b);
    std::vector<mpz_class> c(a.c.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.c[i] + b.c[i];
    return FieldElem{a.L, std::move(c)};
}
inline FieldElem operator-(const FieldElem& a, const FieldElem& b) {
    require_same_field(a, b);
    std::vector<mpz_class> c(a.c.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.c[i] - b.c[i];
    return FieldElem{a.L, std::move(c)};
}
inline FieldElem operator-(const FieldElem& a) {
    std::vector<mpz_class> c(a.c.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = -a.c[i];
    return FieldElem{a.L, std::move(c)};
}
inline FieldElem operator*(const FieldElem& a, const FieldElem& b) {
    require_same_field(a, b);
    auto prod = pr_mul(MpzRing{}, a.c, b.c);
    return elem_from_coords(a.L, std::move(prod));
}
inline FieldElem operator*(const mpz_class& s, const FieldElem& a) {
    std::vector<mpz_class> c(a.c.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = s * a.c[i];
    return FieldElem{a.L, std::move(c)};
}

inline FieldElem elem_pow(const FieldElem& a, const mpz_class& e) {
    check_internal(e >= 0, "elem_pow needs a nonnegative exponent");
    FieldElem r = elem_one(a.L), base = a;
    mpz_class k = e;
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) r = r * base;
        base = base * base;
        k >>= 1;
    }
    return r;
}

// N_{L/Q}(a) = Res(g, rep(a)); multiplicative, equals the product of the
// conjugates of a.
inline mpz_class norm(const FieldElem& a) {
    if (a.is_zero()) return 0;
    return resultant(a.L->g, a.rep());
}

namespace detail {

// minimal rational-coefficient polynomial helpers for exact division in O_L
using QV = std::vector<mpq_class>;

inline void q_trim(QV& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}
inline QV q_mul(const QV& a, const QV& b) {
    if (a.empty() || b.empty()) return {};
    QV r(a.size() + b.size() - 1, mpq_class(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    q_trim(r);
    return r;
}
inline QV q_sub(const QV& a, const QV& b) {
    QV r(std::max(a.size(), b.size()), mpq_class(0));
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (i < a.size()) r[i] += a[i];
        if (i < b.size()) r[i] -= b[i];
    }
    q_trim(r);
    return r;
}
inline QV q_scale(const mpq_class& s, const QV& a) {
    QV r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
    q_trim(r);
    return r;
}
inline std::pair<QV, QV> q_divrem(QV a, const QV& b) {
    check_internal(!b.empty(), "rational division by zero polynomial");
    const int db = static_cast<int>(b.size()) - 1;
    if (static_cast<int>(a.size()) - 1 < db) return {{}, std::move(a)};
    QV q(a.size() - b.size() + 1, mpq_class(0));
    mpq_class inv_lb = 1 / b.back();
    for (int i = static_cast<int>(a.size()) - 1; i >= db; --i) {
        const std::size_t ii = static_cast<std::size_t>(i);
        if (a[ii] == 0) continue;
        mpq_class qc = a[ii] * inv_lb;
        q[ii - static_cast<std::size_t>(db)] = qc;
        for (int j = 0; j <= db; ++j) {
            const std::size_t kk = ii - static_cast<std::size_t>(db) + static_cast<std::size_t>(j);
            a[kk] -= qc * b[static_cast<std::size_t>(j)];
        }
    }
    a.resize(static_cast<std::size_t>(db));
    q_trim(a);
    q_trim(q);
    return {std::move(q), std::move(a)};
}

// inverse of a modulo g over Q[x] (a coprime to g since g is irreducible)
inline QV q_inv_mod(const QV& a, const QV& g) {
    QV r0 = g, r1 = a;
    QV t0, t1{mpq_class(1)};
    while (!r1.empty()) {
        auto [q, r] = q_divrem(r0, r1);
        QV t = q_sub(t0, q_mul(q, t1));
        r0 = std::move(r1);
        r1 = std::move(r);
        t0 = std::move(t1);
        t1 = std::move(t);
    }
    check_internal(r0.size() == 1, "element is a zero divisor mod g");
    return q_scale(1 / r0[0], t0);
}

} // namespace detail

// Exact division in O_L (b | a guaranteed by the caller's algebra).
inline FieldElem elem_divexact(const FieldElem& a, const FieldElem& b) {
    require_same_field(a, b);
    check_internal(!b.is_zero(), "division by zero in O_L");
    if (a.is_zero()) return elem_zero(a.L);
    detail::QV ga(a.L->g.c.size());
    for (std::size_t i = 0; i < ga.size(); ++i) ga[i] = mpq_class(a.L->g.c[i]);
    detail::QV bq(b.c.size());
    for (std::size_t i = 0; i < b.c.size(); ++i) bq[i] = mpq_class(b.c[i]);
    detail::q_trim(bq);
    detail::QV binv = detail::q_inv_mod(bq, ga);
    detail::QV aq(a.c.size());
    for (std::size_t i = 0; i < a.c.size(); ++i) aq[i] = mpq_class(a.c[i]);
    detail::q_trim(aq);
    detail::QV prod = detail::q_divrem(detail::q_mul(aq, binv), ga).second;
    std::vector<mpz_class> coords(static_cast<std::size_t>(a.L->d), 0);
    for (std::size_t i = 0; i < prod.size(); ++i) {
        prod[i].canonicalize();
        check_internal(prod[i].get_den() == 1, "inexact division in O_L");
        coords[i] = prod[i].get_num();
    }
    FieldElem q{a.L, std::move(coords)};
    check_internal(q * b == a, "O_L division verification");
    return q;
}

// Ring context over O_L for the generic polynomial algorithms.
struct OLRing {
    FieldPtr L;
    using Elem = FieldElem;
    Elem zero() const { return elem_zero(L); }
    Elem one() const { return elem_one(L); }
    Elem from_ulong(unsigned long n) const { return elem_from_int(L, mpz_class(n)); }
    bool is_zero(const Elem& a) const { return a.is_zero(); }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem divexact(const Elem& a, const Elem& b) const { return elem_divexact(a, b); }
};

// ---------------------------------------------------------------------------
// Field construction

// Q(theta) for a monic irreducible g with Z[theta] maximal. Every prime p
// with p^2 | disc(g) is checked with the Dedekind index criterion; a failure
// raises base_order_not_maximal unless assert_maximal is set.
inline FieldPtr nf_make(const IntPoly& g, bool assert_maximal = false, FactorBudget const& budget = {}) {
    if (!g.is_monic()) throw not_monic("field polynomial must be monic");
    if (g.degree() < 2) throw error("nf_make requires degree >= 2 (the base field Q is implicit)");
    if (g.degree() > 32) throw degree_cap("field degree capped at 32");
    if (!is_irreducible_q(g)) throw not_irreducible("field polynomial is reducible over Q");
    auto L = std::make_shared<NumberField>();
    L->g = g;
    L->d = g.degree();
    L->disc_g = discriminant(g);
    L->maximality.asserted = assert_maximal;
    if (!assert_maximal) {
        for (const auto& [p, e] : factor_int(L->disc_g, budget).factors) {
            if (e < 2) continue;
            bool ok = dedekind_index_q(g, p).maximal_here;
            L->maximality.checked.emplace_back(p, ok);
            if (!ok) throw base_order_not_maximal(p);
        }
    }
    L->field_disc = L->disc_g; // index 1 once certified
    return L;
}

// Q(zeta_n); maximality is certified by the cyclotomic integral-basis lemma,
// with the field discriminant from the closed form.
inline FieldPtr cyclotomic_field(unsigned long n) {
    if (n < 3 || n % 4 == 2) throw bad_conductor("cyclotomic_field requires n >= 3 and n != 2 mod 4");
    auto L = std::make_shared<NumberField>();
    L->g = cyclotomic(n);
    L->d = L->g.degree();
    if (L->d > 32) throw degree_cap("field degree capped at 32");
    L->disc_g = discriminant(L->g);
    L->field_disc = cyclo_disc_formula(n);
    L->maximality.cyclotomic = true;
    L->cyclotomic_n = n;
    return L;
}

// ---------------------------------------------------------------------------
// HNF lattices

namespace detail {

using Mat = std::vector<std::vector<mpz_class>>;

// Row HNF: upper triangular, positive diagonal, entries above a pivot
// reduced into [0, pivot). Returns false if the rows do not span a rank-d
// lattice. If U is non-null it receives a unimodular transform with
// U * input = [H; 0].
inline bool hnf_rows(Mat rows, int d, Mat& H, Mat* U = nullptr) {
    const std::size_t k = rows.size();
    if (U) {
        U->assign(k, std::vector<mpz_class>(k, 0));
        for (std::size_t i = 0; i < k; ++i) (*U)[i][i] = 1;
    }
    auto row_sub = [&](std::size_t dst, std::size_t src, const mpz_class& q) {
        for (int j = 0; j < d; ++j) rows[dst][static_cast<std::size_t>(j)] -= q * rows[src][static_cast<std::size_t>(j)];
        if (U)
            for (std::size_t j = 0; j < k; ++j) (*U)[dst][j] -= q * (*U)[src][j];
    };
    auto row_swap = [&](std::size_t a, std::size_t b) {
        std::swap(rows[a], rows[b]);
        if (U) std::swap((*U)[a], (*U)[b]);
    };
    auto row_negate = [&](std::size_t a) {
        for (auto& x : rows[a]) x = -x;
        if (U)
            for (auto& x : (*U)[a]) x = -x;
    };

    std::size_t processed = 0;
    for (int col = 0; col < d; ++col) {
        const std::size_t cj = static_cast<std::size_t>(col);
        for (;;) {
            std::size_t best = k;
            for (std::size_t i = processed; i < k; ++i) {
                if (rows[i][cj] == 0) continue;
                if (best == k || cmp(abs(rows[i][cj]), abs(rows[best][cj])) < 0) best = i;
            }
            if (best == k) return false; // no pivot available: rank deficient
            row_swap(processed, best);
            bool clean = true;
            for (std::size_t i = processed + 1; i < k; ++i) {
                if (rows[i][cj] == 0) continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), rows[i][cj].get_mpz_t(), rows[processed][cj].get_mpz_t());
                row_sub(i, processed, q);
                if (rows[i][cj] != 0) clean = false;
            }
            if (clean) break;
        }
        if (rows[processed][cj] < 0) row_negate(processed);
        ++processed;
    }
    if (processed != static_cast<std::size_t>(d)) return false;
    // reduce entries above each pivot
    for (int i = 0; i < d; ++i) {
        const std::size_t si = static_cast<std::size_t>(i);
        for (std::size_t i2 = 0; i2 < si; ++i2) {
            mpz_class q;
            mpz_fdiv_q(q.get_mpz_t(), rows[i2][si].get_mpz_t(), rows[si][si].get_mpz_t());
            if (q != 0) row_sub(i2, si, q);
        }
    }
    H.assign(rows.begin(), rows.begin() + d);
    return true;
}

} // namespace detail

struct IdealLattice {
    FieldPtr L;
    detail::Mat h;   // d x d HNF rows, row i has its pivot at column i
    mpz_class norm;  // determinant = product of the diagonal

    FieldElem basis_elem(std::size_t i) const { return FieldElem{L, h[i]}; }
};

// canonical representative of x + lattice, coordinates in [0, pivot_j)
inline std::vector<mpz_class> reduce_mod_lattice(std::vector<mpz_class> v, const IdealLattice& I) {
    const int d = I.L->d;
    for (int j = 0; j < d; ++j) {
        const std::size_t sj = static_cast<std::size_t>(j);
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), v[sj].get_mpz_t(), I.h[sj][sj].get_mpz_t());
        if (q != 0)
            for (int t = j; t < d; ++t) v[static_cast<std::size_t>(t)] -= q * I.h[sj][static_cast<std::size_t>(t)];
    }
    return v;
}

inline bool ideal_contains(const IdealLattice& I, const FieldElem& x) {
    if (!same_field(I.L, x.L)) throw field_mismatch("ideal and element fields differ");
    auto v = reduce_mod_lattice(x.c, I);
    for (const auto& z : v)
        if (z != 0) return false;
    return true;
}

// HNF of the ideal generated by gens as a Z[theta]-module.
inline IdealLattice ideal_hnf(const FieldPtr& L, const std::vector<FieldElem>& gens) {
    const int d = L->d;
    detail::Mat rows;
    FieldElem theta = elem_theta(L);
    for (const auto& g : gens) {
        if (!same_field(L, g.L)) throw field_mismatch("generator from a different field");
        FieldElem cur = g;
        for (int i = 0; i < d; ++i) {
            rows.push_back(cur.c);
            cur = cur * theta;
        }
    }
    IdealLattice I;
    I.L = L;
    if (rows.empty() || !detail::hnf_rows(std::move(rows), d, I.h)) throw not_full_rank("ideal generators do not span a full-rank lattice");
    I.norm = 1;
    for (int i = 0; i < d; ++i) I.norm *= I.h[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)];
    // closed under multiplication by theta by construction; verify cheaply
    for (int i = 0; i < d; ++i)
        check_internal(ideal_contains(I, I.basis_elem(static_cast<std::size_t>(i)) * theta), "ideal closure under theta");
    return I;
}

inline IdealLattice unit_ideal(const FieldPtr& L) { return ideal_hnf(L, {elem_one(L)}); }

inline IdealLattice ideal_product(const IdealLattice& a, const IdealLattice& b) {
    if (!same_field(a.L, b.L)) throw field_mismatch("ideal product across fields");
    const int d = a.L->d;
    std::vector<FieldElem> gens;
    gens.reserve(static_cast<std::size_t>(d) * static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            gens.push_back(a.basis_elem(static_cast<std::size_t>(i)) * b.basis_elem(static_cast<std::size_t>(j)));
    return ideal_hnf(a.L, gens);
}

// ---------------------------------------------------------------------------
// Prime ideals

struct PrimeIdeal {
    FieldPtr L;
    mpz_class p;      // residue characteristic
    FqPtr Fp;         // F_p
    FqPoly hbar;      // monic irreducible factor of g mod p, over F_p
    unsigned e = 1;   // ramification index
    unsigned f = 1;   // residue degree
    IdealLattice lat;    // (p, h(theta))
    IdealLattice lat_sq; // its square
    FieldElem pi;        // uniformizer, v(pi) = 1
    FqPtr residue;       // F_{p^f} = F_p[t]/(hbar)

    struct PowerCache {
        std::mutex mu;
        std::vector<IdealLattice> pw; // pw[k] = P^(k+1)
    };
    std::shared_ptr<PowerCache> powers;

    mpz_class ideal_norm() const { return lat.norm; }
};

inline FqElem residue_map(const FieldElem& x, const PrimeIdeal& P) {
    std::vector<FqElem> cs;
    cs.reserve(x.c.size());
    for (const auto& z : x.c) cs.push_back(P.Fp->from_int(z));
    FqPoly r = fq_poly_mod(FqPoly(P.Fp, std::move(cs)), P.hbar);
    FqElem out(P.residue->f, 0);
    for (std::size_t i = 0; i < r.c.size(); ++i) out[i] = r.c[i][0];
    return out;
}

inline const IdealLattice& prime_power(const PrimeIdeal& P, unsigned k) {
    check_internal(k >= 1, "prime_power needs k >= 1");
    std::lock_guard<std::mutex> lock(P.powers->mu);
    auto& pw = P.powers->pw;
    while (pw.size() < k) pw.push_back(ideal_product(pw.back(), P.lat));
    return pw[k - 1];
}

// v_P(x) for x != 0, by iterated membership against cached powers of P.
inline unsigned valuation(const FieldElem& x, const PrimeIdeal& P) {
    if (x.is_zero()) throw zero_element("valuation of 0");
    mpz_class nx = abs(norm(x));
    // crude termination bound: v_P(x) <= v_p(N(x)) * d
    unsigned bound = 0;
    mpz_class t = nx;
    while (t % P.p == 0) {
        t /= P.p;
        ++bound;
    }
    bound = bound * static_cast<unsigned>(P.L->d) + 1;
    unsigned v = 0;
    while (v < bound && ideal_contains(prime_power(P, v + 1), x)) ++v;
    check_internal(v < bound, "valuation exceeded its termination bound");
    return v;
}

namespace detail {

inline FieldElem pick_uniformizer(const FieldPtr& L, const mpz_class& p, unsigned e, const IdealLattice& lat,
                                  const IdealLattice& lat_sq) {
    if (e == 1) return elem_from_int(L, p);
    const int d = L->d;
    for (int i = 0; i < d; ++i) {
        FieldElem cand = FieldElem{L, lat.h[static_cast<std::size_t>(i)]};
        if (!ideal_contains(lat_sq, cand)) return cand;
    }
    // a basis row outside P^2 always exists; row sums kept as a fallback
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) {
            FieldElem cand = FieldElem{L, lat.h[static_cast<std::size_t>(i)]} + FieldElem{L, lat.h[static_cast<std::size_t>(j)]};
            if (!ideal_contains(lat_sq, cand)) return cand;
        }
    throw internal_error("no uniformizer found: P = P^2 cannot happen");
}

} // namespace detail

// Primes of O_L above p, via Dedekind splitting of g mod p. Requires the
// field's maximality certificate (verified or asserted), so p never divides
// the index. Deterministic order: by residue degree, then by hbar.
inline std::vector<PrimeIdeal> split_prime(const FieldPtr& L, const mpz_class& p) {
    if (!is_prime(p)) throw error("split_prime requires a prime p");
    FqPtr Fp = fq_make(p, 1);
    FqPoly gbar = reduce_mod_p(L->g, Fp);
    auto fac = factor_fq(gbar);
    std::sort(fac.begin(), fac.end(), [](const auto& a, const auto& b) {
        if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
        return a.first.c < b.first.c;
    });
    std::vector<PrimeIdeal> out;
    unsigned efsum = 0;
    for (const auto& [hb, e] : fac) {
        PrimeIdeal P;
        P.L = L;
        P.p = p;
        P.Fp = Fp;
        P.hbar = hb;
        P.e = e;
        P.f = static_cast<unsigned>(hb.degree());
        efsum += P.e * P.f;
        std::vector<std::uint64_t> modulus(hb.c.size());
        for (std::size_t i = 0; i < hb.c.size(); ++i) modulus[i] = hb.c[i][0];
        P.residue = P.f == 1 ? Fp : fq_make_with_modulus(p, std::move(modulus));
        IntPoly hlift = lift_fq_poly_centered(hb, p);
        P.lat = ideal_hnf(L, {elem_from_int(L, p), elem_from_coords(L, std::vector<mpz_class>(hlift.c))});
        P.lat_sq = ideal_product(P.lat, P.lat);
        P.pi = detail::pick_uniformizer(L, p, P.e, P.lat, P.lat_sq);
        P.powers = std::make_shared<PrimeIdeal::PowerCache>();
        P.powers->pw.push_back(P.lat);
        P.powers->pw.push_back(P.lat_sq);
        mpz_class pf;
        mpz_pow_ui(pf.get_mpz_t(), p.get_mpz_t(), P.f);
        check_internal(P.lat.norm == pf, "[O_L : P] = p^f");
        out.push_back(std::move(P));
    }
    check_internal(efsum == static_cast<unsigned>(L->d), "sum e_i f_i = d");
    return out;
}

// Same prime with a caller-chosen uniformizer (validated: v(pi) = 1).
inline PrimeIdeal with_uniformizer(const PrimeIdeal& P, const FieldElem& pi) {
    if (!ideal_contains(P.lat, pi) || ideal_contains(P.lat_sq, pi))
        throw error("proposed uniformizer is not in P \\ P^2");
    PrimeIdeal Q = P;
    Q.pi = pi;
    return Q;
}

// Residue of c / pi_P modulo P, for c in P: solve pi * t = c (mod P^2) over
// O_L and return the residue of t. The result does not depend on the
// solution chosen.
inline FqElem div_by_uniformizer_mod_p(const FieldElem& c, const PrimeIdeal& P) {
    if (!same_field(c.L, P.L)) throw field_mismatch("element from a different field");
    if (!ideal_contains(P.lat, c)) throw not_in_ideal("div_by_uniformizer_mod_p: c not in P");
    const int d = P.L->d;
    detail::Mat rows;
    FieldElem theta = elem_theta(P.L);
    FieldElem cur = P.pi;
    for (int i = 0; i < d; ++i) {
        rows.push_back(cur.c);
        cur = cur * theta;
    }
    for (int i = 0; i < d; ++i) rows.push_back(P.lat_sq.h[static_cast<std::size_t>(i)]);
    detail::Mat H, U;
    bool ok = detail::hnf_rows(rows, d, H, &U);
    check_internal(ok, "(pi) + P^2 spans a full-rank lattice");
    // solve v * H = c by forward substitution
    std::vector<mpz_class> rhs = c.c, v(static_cast<std::size_t>(d), 0);
    for (int j = 0; j < d; ++j) {
        const std::size_t sj = static_cast<std::size_t>(j);
        check_internal(rhs[sj] % H[sj][sj] == 0, "c lies in (pi) + P^2 = P");
        v[sj] = rhs[sj] / H[sj][sj];
        for (int t = j; t < d; ++t) rhs[static_cast<std::size_t>(t)] -= v[sj] * H[sj][static_cast<std::size_t>(t)];
    }
    // t-coordinates: first d columns of v * U
    std::vector<mpz_class> y(static_cast<std::size_t>(d), 0);
    for (int j = 0; j < d; ++j)
        for (int i = 0; i < d; ++i)
            y[static_cast<std::size_t>(j)] += v[static_cast<std::size_t>(i)] * U[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    return residue_map(FieldElem{P.L, std::move(y)}, P);
}

// ---------------------------------------------------------------------------
// Square-freeness of (alpha)

struct SquarefreeReport {
    bool squarefree = true;
    std::optional<std::pair<PrimeIdeal, unsigned>> witness; // first offending prime and its valuation
};

// Factor |N(alpha)| and check v_P(alpha) <= 1 at every prime above each
// divisor. The unit ideal is square-free.
inline SquarefreeReport is_squarefree_ideal(const FieldElem& alpha, FactorBudget const& budget = {}) {
    if (alpha.is_zero()) throw zero_element("is_squarefree_ideal of 0");
    SquarefreeReport rep;
    mpz_class n = abs(norm(alpha));
    if (n == 1) return rep;
    for (const auto& [p, e] : factor_int(n, budget).factors) {
        for (const auto& P : split_prime(alpha.L, p)) {
            if (!ideal_contains(P.lat, alpha)) continue;
            unsigned v = valuation(alpha, P);
            if (v >= 2) {
                rep.squarefree = false;
                rep.witness = {P, v};
                return rep;
            }
        }
    }
    return rep;
}

} // namespace monogen
