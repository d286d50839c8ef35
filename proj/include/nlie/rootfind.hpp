#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <vector>

#include "nlie/poly.hpp"

namespace nlie {
namespace detail {

/// Polynomial over F_p, coefficients as nonnegative mpz below the modulus.
using ModPoly = std::vector<mpz_class>;

inline void mp_trim(ModPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

inline ModPoly mp_mul(const ModPoly& a, const ModPoly& b, const mpz_class& m) {
    if (a.empty() || b.empty()) return {};
    ModPoly r(a.size() + b.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            r[i + j] += a[i] * b[j];
            r[i + j] %= m;
        }
    }
    mp_trim(r);
    return r;
}

inline ModPoly mp_mod(ModPoly a, const ModPoly& den, const mpz_class& m) {
    mp_trim(a);
    if (den.empty()) throw InternalError("mod by zero polynomial");
    mpz_class lead_inv;
    if (mpz_invert(lead_inv.get_mpz_t(), den.back().get_mpz_t(), m.get_mpz_t()) == 0)
        throw InternalError("non-invertible leading coefficient mod p");
    while (a.size() >= den.size()) {
        mpz_class c = (a.back() * lead_inv) % m;
        std::size_t shift = a.size() - den.size();
        for (std::size_t i = 0; i < den.size(); ++i) {
            a[shift + i] -= c * den[i];
            a[shift + i] %= m;
            if (a[shift + i] < 0) a[shift + i] += m;
        }
        mp_trim(a);
    }
    return a;
}

inline ModPoly mp_gcd(ModPoly a, ModPoly b, const mpz_class& m) {
    mp_trim(a);
    mp_trim(b);
    while (!b.empty()) {
        ModPoly r = mp_mod(a, b, m);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) { // make monic
        mpz_class inv;
        mpz_invert(inv.get_mpz_t(), a.back().get_mpz_t(), m.get_mpz_t());
        for (auto& c : a) c = (c * inv) % m;
    }
    return a;
}

/// (base^exp) mod (den, m)
inline ModPoly mp_powmod(ModPoly base, const mpz_class& exp, const ModPoly& den,
                         const mpz_class& m) {
    ModPoly result{mpz_class(1)};
    base = mp_mod(std::move(base), den, m);
    for (std::size_t bit = mpz_sizeinbase(exp.get_mpz_t(), 2); bit-- > 0;) {
        result = mp_mod(mp_mul(result, result, m), den, m);
        if (mpz_tstbit(exp.get_mpz_t(), bit))
            result = mp_mod(mp_mul(result, base, m), den, m);
    }
    return result;
}

/// Exact quotient num/den in F_p[x]; den must divide num.
inline ModPoly mp_divexact(ModPoly num, const ModPoly& den, const mpz_class& p) {
    mp_trim(num);
    if (num.size() < den.size()) return {};
    mpz_class lead_inv;
    mpz_invert(lead_inv.get_mpz_t(), den.back().get_mpz_t(), p.get_mpz_t());
    ModPoly quo(num.size() - den.size() + 1, mpz_class(0));
    for (std::size_t shift = quo.size(); shift-- > 0;) {
        mpz_class c = (num[shift + den.size() - 1] * lead_inv) % p;
        quo[shift] = c;
        if (c == 0) continue;
        for (std::size_t i = 0; i < den.size(); ++i) {
            num[shift + i] -= c * den[i];
            num[shift + i] %= p;
            if (num[shift + i] < 0) num[shift + i] += p;
        }
    }
    mp_trim(quo);
    return quo;
}

/// Roots in F_p of a product of distinct linear factors, by deterministic
/// shift splitting: gcd with (x+s)^((p-1)/2) - 1 separates roots by the
/// quadratic character of root+s.
inline void mp_linear_roots(ModPoly g, const mpz_class& p,
                            std::vector<mpz_class>& out) {
    mp_trim(g);
    if (g.size() <= 1) return;
    if (g.size() == 2) {
        mpz_class inv;
        mpz_invert(inv.get_mpz_t(), g[1].get_mpz_t(), p.get_mpz_t());
        mpz_class r = ((-g[0] * inv) % p + p) % p;
        out.push_back(r);
        return;
    }
    mpz_class half = (p - 1) / 2;
    for (unsigned long s = 0;; ++s) {
        ModPoly xs{mpz_class(s), mpz_class(1)};
        ModPoly h = mp_powmod(xs, half, g, p);
        if (h.empty()) {
            h = ModPoly{p - 1};
        } else {
            h[0] -= 1;
            if (h[0] < 0) h[0] += p;
            mp_trim(h);
        }
        ModPoly d = mp_gcd(h, g, p);
        if (d.size() > 1 && d.size() < g.size()) {
            ModPoly quo = mp_divexact(g, d, p);
            mp_linear_roots(std::move(d), p, out);
            mp_linear_roots(std::move(quo), p, out);
            return;
        }
    }
}

/// Rational reconstruction: the unique n/d with n = r*d mod p and
/// |n|, |d| <= sqrt((p-1)/2), when it exists.
inline bool rational_reconstruct(const mpz_class& r, const mpz_class& p,
                                 Rational& out) {
    mpz_class bound;
    mpz_sqrt(bound.get_mpz_t(), mpz_class((p - 1) / 2).get_mpz_t());
    mpz_class r0 = p, r1 = r % p;
    if (r1 < 0) r1 += p;
    mpz_class t0 = 0, t1 = 1;
    while (r1 > bound) {
        if (r1 == 0) return false;
        mpz_class q = r0 / r1;
        mpz_class tmp = r0 - q * r1;
        r0 = r1;
        r1 = tmp;
        tmp = t0 - q * t1;
        t0 = t1;
        t1 = tmp;
    }
    if (t1 == 0) return false;
    mpz_class den = t1, num = r1;
    if (den < 0) {
        den = -den;
        num = -num;
    }
    if (den > bound) return false;
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (g != 1 && !(num == 0 && den == 1)) return false;
    out = Rational(num, den);
    return true;
}

} // namespace detail

/// All rational roots of p, exactly. Roots mod an oversized prime are lifted
/// by rational reconstruction and verified in Q, so the result never contains
/// a spurious root; a root is only ever missed if its height exceeds the
/// largest prime tried, in which case larger primes are scheduled first.
inline std::vector<Rational> rational_roots(const Poly& input) {
    Poly sf = poly_squarefree(input);
    if (poly_degree(sf) < 1) return {};
    if (poly_degree(sf) == 1) return {-sf[0] / sf[1]};

    // clear denominators to an integer polynomial
    mpz_class scale = 1;
    for (const auto& c : sf)
        mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), c.denominator().get_mpz_t());
    std::vector<mpz_class> zp;
    for (const auto& c : sf)
        zp.push_back(c.numerator() * (scale / c.denominator()));

    std::vector<Rational> found;
    const std::size_t want = sf.size() - 1;
    for (unsigned bits : {128u, 256u, 512u, 1024u, 2048u}) {
        mpz_class prime = mpz_class(1) << bits;
        mpz_nextprime(prime.get_mpz_t(), prime.get_mpz_t());
        while (zp.back() % prime == 0)
            mpz_nextprime(prime.get_mpz_t(), prime.get_mpz_t());

        detail::ModPoly pm;
        for (const auto& c : zp) {
            mpz_class v = c % prime;
            if (v < 0) v += prime;
            pm.push_back(v);
        }
        // distinct-root part: gcd(x^p - x, pm)
        detail::ModPoly x{mpz_class(0), mpz_class(1)};
        detail::ModPoly xp = detail::mp_powmod(x, prime, pm, prime);
        // xp - x
        if (xp.size() < 2) xp.resize(2, mpz_class(0));
        xp[1] -= 1;
        if (xp[1] < 0) xp[1] += prime;
        detail::mp_trim(xp);
        detail::ModPoly g = detail::mp_gcd(xp, pm, prime);

        std::vector<mpz_class> mod_roots;
        detail::mp_linear_roots(g, prime, mod_roots);

        found.clear();
        for (const auto& r : mod_roots) {
            Rational cand;
            if (!detail::rational_reconstruct(r, prime, cand)) continue;
            if (poly_eval(sf, cand).is_zero()) found.push_back(cand);
        }
        std::sort(found.begin(), found.end());
        found.erase(std::unique(found.begin(), found.end()), found.end());
        if (found.size() == want) break;
    }
    return found;
}

} // namespace nlie
