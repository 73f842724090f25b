#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>

#include "ybx/errors.hpp"

namespace ybx {

/// Arbitrary-precision rational number, always held in canonical form:
/// positive denominator and gcd(|numerator|, denominator) = 1. Equality is
/// plain structural equality of the canonical form, so every identity in the
/// library is decided with zero tolerance.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}
    Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}
    Rational(mpz_class num, mpz_class den);
    explicit Rational(mpz_class n) : q_(std::move(n)) {}

    /// Parses "p" or "p/q" (optional sign, base 10).
    static Rational parse(std::string_view text);

    static Rational zero() { return Rational(); }
    static Rational one() { return Rational(1); }

    mpz_class num() const { return q_.get_num(); }
    mpz_class den() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_one() const { return q_ == 1; }
    int sign() const { return sgn(q_); }

    Rational inverse() const;
    Rational pow(long e) const;

    Rational operator-() const;
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

    /// "p/q", or just "p" when the denominator is 1.
    std::string str() const { return q_.get_str(); }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    mpq_class q_; // invariant: canonical
};

} // namespace ybx
