#pragma once

// Exact integer-coefficient polynomials: subresultant resultants,
// discriminants, cyclotomic polynomials, the closed-form discriminant
// formulas, and irreducibility over Q (Hensel lifting + factor
// recombination, degree-capped).

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "monogen/errors.hpp"
#include "monogen/fq.hpp"
#include "monogen/integers.hpp"
#include "monogen/poly_ring.hpp"

namespace monogen {

struct IntPoly {
    std::vector<mpz_class> c; // c[i] = coefficient of x^i, trailing zeros trimmed

    IntPoly() = default;
    IntPoly(std::initializer_list<long> v) {
        for (long x : v) c.emplace_back(x);
        trim();
    }
    explicit IntPoly(std::vector<mpz_class> v) : c(std::move(v)) { trim(); }

    void trim() {
        while (!c.empty() && c.back() == 0) c.pop_back();
    }
    bool is_zero() const { return c.empty(); }
    int degree() const { return static_cast<int>(c.size()) - 1; }
    const mpz_class& lc() const {
        check_internal(!c.empty(), "lc of zero polynomial");
        return c.back();
    }
    bool is_monic() const { return !c.empty() && c.back() == 1; }
    mpz_class coeff(std::size_t i) const { return i < c.size() ? c[i] : mpz_class(0); }
    mpz_class operator()(const mpz_class& x) const { return pr_eval(MpzRing{}, c, x); }

    static IntPoly x() { return IntPoly{0, 1}; }
    static IntPoly constant(mpz_class v) { return IntPoly(std::vector<mpz_class>{std::move(v)}); }
    // x^n + c0 shorthand for radical polynomials x^n - alpha
    static IntPoly binomial(unsigned n, const mpz_class& c0) {
        std::vector<mpz_class> v(n + 1, 0);
        v[0] = c0;
        v[n] = 1;
        return IntPoly(std::move(v));
    }
};

inline bool operator==(const IntPoly& a, const IntPoly& b) { return a.c == b.c; }
inline IntPoly operator+(const IntPoly& a, const IntPoly& b) { return IntPoly(pr_add(MpzRing{}, a.c, b.c)); }
inline IntPoly operator-(const IntPoly& a, const IntPoly& b) { return IntPoly(pr_sub(MpzRing{}, a.c, b.c)); }
inline IntPoly operator*(const IntPoly& a, const IntPoly& b) { return IntPoly(pr_mul(MpzRing{}, a.c, b.c)); }
inline IntPoly operator-(const IntPoly& a) { return IntPoly(pr_scale(MpzRing{}, mpz_class(-1), a.c)); }

inline IntPoly derivative(const IntPoly& a) { return IntPoly(pr_derivative(MpzRing{}, a.c)); }

// Quotient and remainder for a monic divisor; exact over Z.
inline std::pair<IntPoly, IntPoly> divrem_monic(const IntPoly& a, const IntPoly& b) {
    check_internal(b.is_monic(), "divrem_monic needs a monic divisor");
    auto [q, r] = pr_divrem_monic(MpzRing{}, a.c, b.c);
    return {IntPoly(std::move(q)), IntPoly(std::move(r))};
}

// Res(a, b) by the subresultant PRS.
inline mpz_class resultant(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) throw zero_polynomial("resultant of the zero polynomial");
    return pr_resultant(MpzRing{}, a.c, b.c);
}

// (-1)^(d(d-1)/2) Res(a, a') for monic a of degree >= 2.
inline mpz_class discriminant(const IntPoly& a) {
    if (!a.is_monic()) throw not_monic("discriminant requires a monic polynomial");
    if (a.degree() < 2) throw degree_too_small("discriminant requires degree >= 2");
    return pr_discriminant_monic(MpzRing{}, a.c);
}

// n-th cyclotomic polynomial by iterated exact division of x^n - 1.
inline IntPoly cyclotomic(unsigned long n) {
    if (n < 1) throw error("cyclotomic requires n >= 1");
    std::vector<IntPoly> phi(n + 1);
    for (unsigned long d = 1; d <= n; ++d) {
        if (n % d != 0) continue;
        std::vector<mpz_class> xd1(d + 1, 0);
        xd1[0] = -1;
        xd1[d] = 1;
        IntPoly num((std::vector<mpz_class>(xd1)));
        for (unsigned long e = 1; e < d; ++e) {
            if (d % e != 0) continue;
            auto [q, r] = divrem_monic(num, phi[e]);
            check_internal(r.is_zero(), "cyclotomic division is exact");
            num = std::move(q);
        }
        phi[d] = std::move(num);
    }
    return phi[n];
}

// Signed discriminant of Q(zeta_n) via the closed form
// n^phi(n) / prod_{p|n} p^(phi(n)/(p-1)); sign (-1)^(phi(n)/2).
inline mpz_class cyclo_disc_formula(unsigned long n, FactorBudget const& budget = {}) {
    if (n < 3 || n % 4 == 2) throw bad_conductor("cyclo_disc_formula requires n >= 3, n != 2 mod 4");
    mpz_class phi = euler_phi(mpz_class(n), budget);
    unsigned long phiu = phi.get_ui();
    mpz_class num;
    mpz_ui_pow_ui(num.get_mpz_t(), n, phiu);
    for (const auto& [p, e] : factor_int(mpz_class(n), budget).factors) {
        unsigned long exp = phiu / (p.get_ui() - 1);
        mpz_class den;
        mpz_pow_ui(den.get_mpz_t(), p.get_mpz_t(), exp);
        check_internal(num % den == 0, "cyclotomic discriminant division is exact");
        num /= den;
    }
    return (phiu / 2) % 2 ? -num : num;
}

// Discriminant of x^n - alpha: (-1)^((n^2-n)/2) n^n (-alpha)^(n-1).
inline mpz_class disc_radical_formula(unsigned long n, const mpz_class& alpha) {
    check_internal(n >= 2, "disc_radical_formula requires n >= 2");
    mpz_class nn;
    mpz_ui_pow_ui(nn.get_mpz_t(), n, n);
    mpz_class ma = -alpha, man1;
    mpz_pow_ui(man1.get_mpz_t(), ma.get_mpz_t(), n - 1);
    mpz_class r = nn * man1;
    return (n * (n - 1) / 2) % 2 ? -r : r;
}

// ---------------------------------------------------------------------------
// Reduction mod p and irreducibility over Q

inline FqPoly reduce_mod_p(const IntPoly& a, const FqPtr& Fp) {
    check_internal(Fp->f == 1, "reduce_mod_p expects a prime field");
    std::vector<FqElem> cs;
    cs.reserve(a.c.size());
    for (const auto& z : a.c) cs.push_back(Fp->from_int(z));
    return FqPoly(Fp, std::move(cs));
}

namespace zx {

// polynomials over Z/m, coefficients canonical in [0, m)
using ZV = std::vector<mpz_class>;

inline mpz_class md(const mpz_class& a, const mpz_class& m) {
    mpz_class r = a % m;
    if (r < 0) r += m;
    return r;
}
inline void trim(ZV& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}
inline ZV reduce(const std::vector<mpz_class>& a, const mpz_class& m) {
    ZV r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = md(a[i], m);
    trim(r);
    return r;
}
inline ZV add(const ZV& a, const ZV& b, const mpz_class& m) {
    ZV r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (i < a.size()) r[i] += a[i];
        if (i < b.size()) r[i] += b[i];
        r[i] = md(r[i], m);
    }
    trim(r);
    return r;
}
inline ZV sub(const ZV& a, const ZV& b, const mpz_class& m) {
    ZV r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        mpz_class x = i < a.size() ? a[i] : mpz_class(0);
        mpz_class y = i < b.size() ? b[i] : mpz_class(0);
        r[i] = md(x - y, m);
    }
    trim(r);
    return r;
}
inline ZV mul(const ZV& a, const ZV& b, const mpz_class& m) {
    if (a.empty() || b.empty()) return {};
    ZV r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    for (auto& x : r) x = md(x, m);
    trim(r);
    return r;
}
// b must be monic mod m
inline std::pair<ZV, ZV> divrem_monic(ZV a, const ZV& b, const mpz_class& m) {
    check_internal(!b.empty() && b.back() == 1, "zx divisor must be monic");
    const int db = static_cast<int>(b.size()) - 1;
    if (static_cast<int>(a.size()) - 1 < db) return {{}, std::move(a)};
    ZV q(a.size() - b.size() + 1, 0);
    for (int i = static_cast<int>(a.size()) - 1; i >= db; --i) {
        const std::size_t ii = static_cast<std::size_t>(i);
        if (a[ii] == 0) continue;
        mpz_class qc = a[ii];
        q[ii - static_cast<std::size_t>(db)] = qc;
        for (int j = 0; j <= db; ++j) {
            const std::size_t k = ii - static_cast<std::size_t>(db) + static_cast<std::size_t>(j);
            a[k] = md(a[k] - qc * b[static_cast<std::size_t>(j)], m);
        }
    }
    a.resize(static_cast<std::size_t>(db));
    trim(a);
    trim(q);
    return {std::move(q), std::move(a)};
}
// symmetric representative in (-m/2, m/2]
inline std::vector<mpz_class> center(const ZV& a, const mpz_class& m) {
    std::vector<mpz_class> r(a.size());
    mpz_class half = m / 2;
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] > half ? a[i] - m : a[i];
    return r;
}

} // namespace zx

namespace detail {

// One quadratic Hensel step: from f = g h (mod m) with s g + t h = 1 (mod m)
// to the same data mod m^2. f monic, g and h monic.
inline void hensel_step(const std::vector<mpz_class>& f, zx::ZV& g, zx::ZV& h, zx::ZV& s, zx::ZV& t,
                        const mpz_class& m) {
    const mpz_class m2 = m * m;
    zx::ZV fr = zx::reduce(f, m2);
    zx::ZV e = zx::sub(fr, zx::mul(g, h, m2), m2);
    auto [q, r] = zx::divrem_monic(zx::mul(s, e, m2), h, m2);
    zx::ZV gs = zx::add(g, zx::add(zx::mul(t, e, m2), zx::mul(q, g, m2), m2), m2);
    zx::ZV hs = zx::add(h, r, m2);
    zx::ZV one{1};
    zx::ZV b = zx::sub(zx::add(zx::mul(s, gs, m2), zx::mul(t, hs, m2), m2), one, m2);
    auto [cq, cd] = zx::divrem_monic(zx::mul(s, b, m2), hs, m2);
    zx::ZV ss = zx::sub(s, cd, m2);
    zx::ZV ts = zx::sub(zx::sub(t, zx::mul(t, b, m2), m2), zx::mul(cq, gs, m2), m2);
    g = std::move(gs);
    h = std::move(hs);
    s = std::move(ss);
    t = std::move(ts);
}

struct HenselNode {
    zx::ZV poly;        // current lift of the product of the node's leaves
    int left = -1, right = -1;
    zx::ZV s, t;        // Bezout pair for (children) at the current modulus
    bool leaf() const { return left < 0; }
};

inline zx::ZV fqpoly_to_zv(const FqPoly& a) {
    zx::ZV r(a.c.size());
    for (std::size_t i = 0; i < a.c.size(); ++i) r[i] = mpz_class(a.c[i][0]);
    return r;
}

inline int build_hensel_tree(std::vector<HenselNode>& tree, const std::vector<FqPoly>& leaves, std::size_t lo,
                             std::size_t hi, const FqPtr& Fp) {
    HenselNode node;
    if (hi - lo == 1) {
        node.poly = fqpoly_to_zv(leaves[lo]);
        tree.push_back(std::move(node));
        return static_cast<int>(tree.size()) - 1;
    }
    std::size_t mid = lo + (hi - lo) / 2;
    FqPoly prodl = leaves[lo], prodr = leaves[mid];
    for (std::size_t i = lo + 1; i < mid; ++i) prodl = prodl * leaves[i];
    for (std::size_t i = mid + 1; i < hi; ++i) prodr = prodr * leaves[i];
    FqPoly u(Fp), v(Fp);
    FqPoly gg = fq_poly_xgcd(prodl, prodr, u, v);
    check_internal(gg.is_one(), "Hensel tree children must be coprime mod p");
    int il = build_hensel_tree(tree, leaves, lo, mid, Fp);
    int ir = build_hensel_tree(tree, leaves, mid, hi, Fp);
    node.left = il;
    node.right = ir;
    node.poly = fqpoly_to_zv(prodl * prodr);
    node.s = fqpoly_to_zv(u);
    node.t = fqpoly_to_zv(v);
    tree.push_back(std::move(node));
    return static_cast<int>(tree.size()) - 1;
}

// Lift every node's children from mod m to mod m^2. Precondition: node.poly
// is correct mod m^2 (the root holds the exact integer polynomial; internal
// nodes were refreshed by their parent's step in the same pass).
inline void lift_tree(std::vector<HenselNode>& tree, int idx, const mpz_class& m) {
    HenselNode& node = tree[static_cast<std::size_t>(idx)];
    if (node.leaf()) return;
    hensel_step(node.poly, tree[static_cast<std::size_t>(node.left)].poly,
                tree[static_cast<std::size_t>(node.right)].poly, node.s, node.t, m);
    lift_tree(tree, node.left, m);
    lift_tree(tree, node.right, m);
}

// Collect leaf polys in left-to-right order.
inline void collect_leaves(const std::vector<HenselNode>& tree, int idx, std::vector<zx::ZV>& out) {
    const HenselNode& node = tree[static_cast<std::size_t>(idx)];
    if (node.leaf()) {
        out.push_back(node.poly);
        return;
    }
    collect_leaves(tree, node.left, out);
    collect_leaves(tree, node.right, out);
}

// 2-adic style bound: any monic factor of monic f has |coeff| <= 2^deg(f) * (||f||_2 + 1).
inline mpz_class mignotte_bound(const IntPoly& f) {
    mpz_class s = 0;
    for (const auto& z : f.c) s += z * z;
    mpz_class root;
    mpz_sqrt(root.get_mpz_t(), s.get_mpz_t());
    root += 2;
    mpz_class b = root << static_cast<unsigned>(f.degree());
    return b;
}

} // namespace detail

// True iff the monic polynomial a is irreducible over Q. Squarefree check, a
// factor-degree sieve across several good primes as fast paths, then Hensel
// lifting with exhaustive recombination as the complete decision path.
// Degrees above 32 are rejected.
inline bool is_irreducible_q(const IntPoly& a) {
    if (!a.is_monic()) throw not_monic("is_irreducible_q requires a monic polynomial");
    const int n = a.degree();
    check_internal(n >= 1, "is_irreducible_q requires degree >= 1");
    if (n > 32) throw degree_cap("is_irreducible_q capped at degree 32");
    if (n == 1) return true;
    if (a.c[0] == 0) return false; // divisible by x
    if (discriminant(a) == 0) return false; // repeated factor

    // factor mod several good primes; intersect achievable proper factor degrees
    static const unsigned long prime_pool[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29,
                                               31, 37, 41, 43, 47, 53, 59, 61, 67, 71};
    struct ModFactorization {
        FqPtr Fp;
        std::vector<std::pair<FqPoly, unsigned>> factors;
    };
    std::vector<ModFactorization> good;
    std::uint64_t degree_mask = ~0ULL; // bit d set: some factor-subset of degree d possible mod every prime tried
    for (unsigned long p : prime_pool) {
        if (good.size() >= 5) break;
        FqPtr Fp = fq_make(mpz_class(p), 1);
        FqPoly ab = reduce_mod_p(a, Fp);
        if (ab.degree() != n) continue; // cannot happen for monic a, kept for clarity
        if (fq_poly_gcd(ab, fq_poly_derivative(ab)).degree() != 0) continue; // not squarefree mod p
        auto fac = factor_fq(ab);
        if (fac.size() == 1) return true; // irreducible mod a good prime
        std::uint64_t mask = 1; // degree-0 subset
        for (const auto& [g, e] : fac) {
            check_internal(e == 1, "squarefree mod p");
            mask |= mask << static_cast<unsigned>(g.degree());
        }
        degree_mask &= mask;
        good.push_back({Fp, std::move(fac)});
        bool proper = false;
        for (int d = 1; d < n; ++d)
            if (degree_mask >> d & 1) proper = true;
        if (!proper) return true; // no compatible proper factor degree
    }
    check_internal(!good.empty(), "no good prime found for irreducibility test");

    // Zassenhaus: lift the factorization with the fewest modular factors
    const ModFactorization* best = &good[0];
    for (const auto& g : good)
        if (g.factors.size() < best->factors.size()) best = &g;
    std::vector<FqPoly> leaves;
    for (const auto& [g, e] : best->factors) leaves.push_back(g);
    const mpz_class p = static_cast<unsigned long>(best->Fp->p);
    mpz_class target = 2 * detail::mignotte_bound(a) + 1;

    std::vector<detail::HenselNode> tree;
    int root = detail::build_hensel_tree(tree, leaves, 0, leaves.size(), best->Fp);
    tree[static_cast<std::size_t>(root)].poly = a.c; // exact integer polynomial at the root
    mpz_class m = p;
    while (m < target) {
        detail::lift_tree(tree, root, m);
        m *= m;
    }
    std::vector<zx::ZV> lifted;
    detail::collect_leaves(tree, root, lifted);
    const std::size_t r = lifted.size();
    std::vector<int> degs(r);
    for (std::size_t i = 0; i < r; ++i) degs[i] = static_cast<int>(lifted[i].size()) - 1;

    // exhaustive recombination: any monic proper divisor must appear as a
    // subset product with degree <= n/2 and centered coefficients
    check_internal(r <= 63, "too many modular factors");
    for (int card = 1; card <= static_cast<int>(r) - 1; ++card) {
        std::uint64_t mask = (1ULL << card) - 1;
        const std::uint64_t limit = r == 64 ? ~0ULL : (1ULL << r);
        while (mask < limit) {
            int dsum = 0;
            for (std::size_t i = 0; i < r; ++i)
                if (mask >> i & 1) dsum += degs[i];
            if (dsum * 2 <= n && (degree_mask >> dsum & 1)) {
                zx::ZV prod{1};
                for (std::size_t i = 0; i < r; ++i)
                    if (mask >> i & 1) prod = zx::mul(prod, lifted[i], m);
                IntPoly cand(zx::center(prod, m));
                auto [q, rem] = divrem_monic(a, cand);
                if (rem.is_zero()) return false;
            }
            // Gosper: next mask with the same popcount
            std::uint64_t c = mask & -mask, rp = mask + c;
            mask = (((rp ^ mask) >> 2) / c) | rp;
        }
    }
    return true;
}

} // namespace monogen
