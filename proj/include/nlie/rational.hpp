#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "nlie/errors.hpp"

namespace nlie {

/// Arbitrary-precision rational, the only scalar type in the library.
/// Always stored reduced with a positive denominator; zero is 0/1.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(int n) : v_(static_cast<long>(n)) {}

    Rational(long num, long den) : v_(num, den) {
        if (den == 0) throw InternalError("rational with zero denominator");
        v_.canonicalize();
    }

    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }
    explicit Rational(const mpz_class& num, const mpz_class& den) : v_(num, den) {
        if (den == 0) throw InternalError("rational with zero denominator");
        v_.canonicalize();
    }

    const mpz_class& numerator() const { return v_.get_num(); }
    const mpz_class& denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw InternalError("rational division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t()) == 0;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t());
        return c <=> 0;
    }

    Rational abs() const { return sign() < 0 ? -*this : *this; }

    /// Exact square root, present only when *this is the square of a rational.
    std::optional<Rational> exact_sqrt() const {
        if (sign() < 0) return std::nullopt;
        mpz_class n = v_.get_num(), d = v_.get_den();
        if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return std::nullopt;
        if (mpz_perfect_square_p(d.get_mpz_t()) == 0) return std::nullopt;
        mpz_class rn, rd;
        mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
        mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
        return Rational(mpq_class(rn) / mpq_class(rd));
    }

    /// Canonical text form: "p/q" with q > 1, otherwise just "p".
    std::string str() const { return v_.get_str(); }

    /// Strict parser for the canonical literal syntax. Rejects anything the
    /// serializer would not emit: signs on the denominator, q <= 1 written as
    /// a fraction, unreduced fractions, leading zeros, "-0".
    static std::optional<Rational> parse(std::string_view s) {
        auto digits_ok = [](std::string_view t) {
            if (t.empty()) return false;
            for (char c : t)
                if (c < '0' || c > '9') return false;
            if (t.size() > 1 && t.front() == '0') return false;
            return true;
        };
        bool negative = false;
        if (!s.empty() && s.front() == '-') {
            negative = true;
            s.remove_prefix(1);
        }
        std::string_view num = s, den;
        if (auto slash = s.find('/'); slash != std::string_view::npos) {
            num = s.substr(0, slash);
            den = s.substr(slash + 1);
        }
        if (!digits_ok(num)) return std::nullopt;
        if (negative && num == "0") return std::nullopt;
        mpz_class n(std::string(num), 10);
        if (negative) n = -n;
        if (den.data() == nullptr) return Rational(mpq_class(n));
        if (!digits_ok(den)) return std::nullopt;
        mpz_class d(std::string(den), 10);
        if (d <= 1) return std::nullopt;
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
        if (g != 1) return std::nullopt;
        return Rational(n, d);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.str();
    }

private:
    mpq_class v_;
};

} // namespace nlie
