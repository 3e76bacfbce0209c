#pragma once

// Dense univariate polynomial algorithms over a commutative ring with exact
// division, parameterized by a ring-context object. Instantiated with
// integers (Z[x]) and with number-field integers (O_L[x]); both resultant
// routes in the test suites go through the same subresultant code.

#include <gmpxx.h>

#include <utility>
#include <vector>

#include "monogen/errors.hpp"

namespace monogen {

template <class Ring>
concept RingContext = requires(const Ring r, const typename Ring::Elem a, const typename Ring::Elem b) {
    { r.zero() } -> std::convertible_to<typename Ring::Elem>;
    { r.one() } -> std::convertible_to<typename Ring::Elem>;
    { r.from_ulong(1ul) } -> std::convertible_to<typename Ring::Elem>;
    { r.is_zero(a) } -> std::convertible_to<bool>;
    { r.add(a, b) } -> std::convertible_to<typename Ring::Elem>;
    { r.sub(a, b) } -> std::convertible_to<typename Ring::Elem>;
    { r.mul(a, b) } -> std::convertible_to<typename Ring::Elem>;
    { r.neg(a) } -> std::convertible_to<typename Ring::Elem>;
    { r.divexact(a, b) } -> std::convertible_to<typename Ring::Elem>;
};

struct MpzRing {
    using Elem = mpz_class;
    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    Elem from_ulong(unsigned long n) const { return mpz_class(n); }
    bool is_zero(const Elem& a) const { return a == 0; }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem divexact(const Elem& a, const Elem& b) const {
        mpz_class q, r;
        mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        check_internal(r == 0, "inexact ring division");
        return q;
    }
};

template <RingContext Ring>
using PolyVec = std::vector<typename Ring::Elem>;

template <RingContext Ring>
void pr_trim(const Ring& R, PolyVec<Ring>& v) {
    while (!v.empty() && R.is_zero(v.back())) v.pop_back();
}

template <RingContext Ring>
int pr_degree(const PolyVec<Ring>& v) {
    return static_cast<int>(v.size()) - 1;
}

template <RingContext Ring>
PolyVec<Ring> pr_add(const Ring& R, const PolyVec<Ring>& a, const PolyVec<Ring>& b) {
    PolyVec<Ring> r(std::max(a.size(), b.size()), R.zero());
    for (std::size_t i = 0; i < r.size(); ++i) {
        if (i < a.size()) r[i] = R.add(r[i], a[i]);
        if (i < b.size()) r[i] = R.add(r[i], b[i]);
    }
    pr_trim(R, r);
    return r;
}

template <RingContext Ring>
PolyVec<Ring> pr_sub(const Ring& R, const PolyVec<Ring>& a, const PolyVec<Ring>& b) {
    PolyVec<Ring> r(std::max(a.size(), b.size()), R.zero());
    for (std::size_t i = 0; i < r.size(); ++i) {
        typename Ring::Elem x = i < a.size() ? a[i] : R.zero();
        typename Ring::Elem y = i < b.size() ? b[i] : R.zero();
        r[i] = R.sub(x, y);
    }
    pr_trim(R, r);
    return r;
}

template <RingContext Ring>
PolyVec<Ring> pr_mul(const Ring& R, const PolyVec<Ring>& a, const PolyVec<Ring>& b) {
    if (a.empty() || b.empty()) return {};
    PolyVec<Ring> r(a.size() + b.size() - 1, R.zero());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (R.is_zero(a[i])) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = R.add(r[i + j], R.mul(a[i], b[j]));
    }
    pr_trim(R, r);
    return r;
}

template <RingContext Ring>
PolyVec<Ring> pr_scale(const Ring& R, const typename Ring::Elem& s, const PolyVec<Ring>& a) {
    PolyVec<Ring> r(a.size(), R.zero());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = R.mul(s, a[i]);
    pr_trim(R, r);
    return r;
}

template <RingContext Ring>
PolyVec<Ring> pr_pow(const Ring& R, PolyVec<Ring> a, unsigned long e) {
    PolyVec<Ring> r{R.one()};
    while (e) {
        if (e & 1) r = pr_mul(R, r, a);
        a = pr_mul(R, a, a);
        e >>= 1;
    }
    return r;
}

template <RingContext Ring>
typename Ring::Elem pr_eval(const Ring& R, const PolyVec<Ring>& a, const typename Ring::Elem& x) {
    typename Ring::Elem r = R.zero();
    for (std::size_t i = a.size(); i-- > 0;) r = R.add(R.mul(r, x), a[i]);
    return r;
}

template <RingContext Ring>
PolyVec<Ring> pr_derivative(const Ring& R, const PolyVec<Ring>& a) {
    if (a.size() < 2) return {};
    PolyVec<Ring> r(a.size() - 1, R.zero());
    for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = R.mul(R.from_ulong(i), a[i]);
    pr_trim(R, r);
    return r;
}

// Division by a monic divisor: exact in any ring.
template <RingContext Ring>
std::pair<PolyVec<Ring>, PolyVec<Ring>> pr_divrem_monic(const Ring& R, PolyVec<Ring> a, const PolyVec<Ring>& b) {
    check_internal(!b.empty(), "division by zero polynomial");
    const int db = pr_degree<Ring>(b);
    if (pr_degree<Ring>(a) < db) return {{}, std::move(a)};
    PolyVec<Ring> q(a.size() - b.size() + 1, R.zero());
    for (int i = pr_degree<Ring>(a); i >= db; --i) {
        const std::size_t ii = static_cast<std::size_t>(i);
        if (R.is_zero(a[ii])) continue;
        typename Ring::Elem qc = a[ii];
        q[ii - static_cast<std::size_t>(db)] = qc;
        for (int j = 0; j <= db; ++j) {
            const std::size_t k = ii - static_cast<std::size_t>(db) + static_cast<std::size_t>(j);
            a[k] = R.sub(a[k], R.mul(qc, b[static_cast<std::size_t>(j)]));
        }
    }
    a.resize(static_cast<std::size_t>(db));
    pr_trim(R, a);
    pr_trim(R, q);
    return {std::move(q), std::move(a)};
}

// Pseudo-remainder: returns lc(b)^(deg a - deg b + 1) * a mod b.
template <RingContext Ring>
PolyVec<Ring> pr_prem(const Ring& R, PolyVec<Ring> a, const PolyVec<Ring>& b) {
    check_internal(!b.empty(), "prem by zero polynomial");
    const int db = pr_degree<Ring>(b);
    int e = pr_degree<Ring>(a) - db + 1;
    const typename Ring::Elem& lb = b.back();
    while (!a.empty() && pr_degree<Ring>(a) >= db) {
        const std::size_t shift = a.size() - b.size();
        typename Ring::Elem la = a.back();
        PolyVec<Ring> next(a.size() - 1, R.zero());
        // next = lb*a - la*x^shift*b, top terms cancel
        for (std::size_t i = 0; i + 1 < a.size(); ++i) next[i] = R.mul(lb, a[i]);
        for (std::size_t j = 0; j + 1 < b.size(); ++j)
            next[shift + j] = R.sub(next[shift + j], R.mul(la, b[j]));
        pr_trim(R, next);
        a = std::move(next);
        --e;
    }
    typename Ring::Elem mult = R.one();
    for (int i = 0; i < e; ++i) mult = R.mul(mult, lb);
    return pr_scale(R, mult, a);
}

// Resultant by the subresultant polynomial remainder sequence.
template <RingContext Ring>
typename Ring::Elem pr_resultant(const Ring& R, PolyVec<Ring> a, PolyVec<Ring> b) {
    check_internal(!a.empty() && !b.empty(), "resultant of zero polynomial");
    bool negate = false;
    if (pr_degree<Ring>(a) < pr_degree<Ring>(b)) {
        if ((pr_degree<Ring>(a) & 1) && (pr_degree<Ring>(b) & 1)) negate = !negate;
        std::swap(a, b);
    }
    typename Ring::Elem g = R.one(), h = R.one();
    while (pr_degree<Ring>(b) > 0) {
        const int da = pr_degree<Ring>(a), db = pr_degree<Ring>(b);
        const int d = da - db;
        if ((da & 1) && (db & 1)) negate = !negate;
        PolyVec<Ring> rem = pr_prem(R, a, b);
        if (rem.empty()) return R.zero(); // nontrivial common factor
        typename Ring::Elem denom = g;
        for (int i = 0; i < d; ++i) denom = R.mul(denom, h);
        a = std::move(b);
        b.clear();
        b.reserve(rem.size());
        for (auto& cc : rem) b.push_back(R.divexact(cc, denom));
        g = a.back();
        if (d > 0) {
            typename Ring::Elem gd = R.one();
            for (int i = 0; i < d; ++i) gd = R.mul(gd, g);
            typename Ring::Elem hd = R.one();
            for (int i = 0; i + 1 < d; ++i) hd = R.mul(hd, h);
            h = R.divexact(gd, hd);
        }
    }
    // deg b == 0 here
    const int da = pr_degree<Ring>(a);
    typename Ring::Elem num = R.one();
    for (int i = 0; i < da; ++i) num = R.mul(num, b.back());
    typename Ring::Elem den = R.one();
    for (int i = 0; i + 1 < da; ++i) den = R.mul(den, h);
    typename Ring::Elem res = R.divexact(num, den);
    return negate ? R.neg(res) : res;
}

// Discriminant of a monic polynomial of degree >= 2:
// (-1)^(d(d-1)/2) * Res(a, a').
template <RingContext Ring>
typename Ring::Elem pr_discriminant_monic(const Ring& R, const PolyVec<Ring>& a) {
    const int d = pr_degree<Ring>(a);
    check_internal(d >= 2, "discriminant needs degree >= 2");
    PolyVec<Ring> da = pr_derivative(R, a);
    if (da.empty()) return R.zero();
    typename Ring::Elem res = pr_resultant(R, a, da);
    return (static_cast<unsigned long>(d) * (d - 1) / 2) % 2 ? R.neg(res) : res;
}

} // namespace monogen
