#pragma once

#include <vector>

#include "nlie/rational.hpp"

namespace nlie {

/// Dense univariate polynomial over Q, coefficients in ascending degree.
/// Normal form has no trailing zero coefficients; the zero polynomial is {}.
using Poly = std::vector<Rational>;

inline void poly_trim(Poly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

inline std::ptrdiff_t poly_degree(const Poly& p) {
    return static_cast<std::ptrdiff_t>(p.size()) - 1;
}

inline Rational poly_eval(const Poly& p, const Rational& x) {
    Rational acc;
    for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
    return acc;
}

inline Poly poly_derivative(const Poly& p) {
    Poly d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(Rational(static_cast<long>(i)) * p[i]);
    poly_trim(d);
    return d;
}

/// Quotient and remainder with remainder degree below the divisor's.
inline std::pair<Poly, Poly> poly_divmod(Poly num, const Poly& den) {
    if (den.empty()) throw InternalError("polynomial division by zero");
    poly_trim(num);
    if (num.size() < den.size()) return {{}, num};
    Poly quo(num.size() - den.size() + 1);
    const Rational lead_inv = Rational(1) / den.back();
    for (std::size_t shift = quo.size(); shift-- > 0;) {
        Rational c = num[shift + den.size() - 1] * lead_inv;
        if (c.is_zero()) continue;
        quo[shift] = c;
        for (std::size_t i = 0; i < den.size(); ++i) num[shift + i] -= c * den[i];
    }
    poly_trim(quo);
    poly_trim(num);
    return {quo, num};
}

inline Poly poly_monic(Poly p) {
    poly_trim(p);
    if (p.empty()) return p;
    Rational inv = Rational(1) / p.back();
    for (auto& c : p) c *= inv;
    return p;
}

/// Monic gcd over Q.
inline Poly poly_gcd(Poly a, Poly b) {
    poly_trim(a);
    poly_trim(b);
    while (!b.empty()) {
        Poly r = poly_divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return poly_monic(std::move(a));
}

/// The largest squarefree divisor, monic.
inline Poly poly_squarefree(const Poly& p) {
    Poly d = poly_derivative(p);
    if (d.empty()) return poly_monic(p);
    Poly g = poly_gcd(p, d);
    if (poly_degree(g) <= 0) return poly_monic(p);
    return poly_monic(poly_divmod(p, g).first);
}

} // namespace nlie
