#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "ybx/polynomial.hpp"

namespace ybx {

/// Element of Q(lambda) in canonical form: gcd(num, den) = 1 and the
/// denominator is monic. Two values are equal iff their canonical forms are
/// structurally equal, which makes projective comparisons over Q(lambda)
/// deterministic.
class RationalFunction {
public:
    RationalFunction() : num_(), den_(Polynomial::one()) {}
    RationalFunction(const Rational& constant) : num_(constant), den_(Polynomial::one()) {}
    RationalFunction(long constant) : RationalFunction(Rational(constant)) {}
    RationalFunction(Polynomial num) : num_(std::move(num)), den_(Polynomial::one()) {}
    RationalFunction(Polynomial num, Polynomial den);

    static RationalFunction zero() { return {}; }
    static RationalFunction one() { return RationalFunction(1); }
    static RationalFunction lambda() { return RationalFunction(Polynomial::variable()); }

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == Polynomial::one() && den_ == Polynomial::one(); }
    bool is_constant() const { return num_.is_constant() && den_ == Polynomial::one(); }

    RationalFunction inverse() const;
    /// Value at a rational point; empty when the denominator vanishes there.
    std::optional<Rational> eval(const Rational& x) const;

    RationalFunction operator-() const;
    RationalFunction& operator+=(const RationalFunction& o);
    RationalFunction& operator-=(const RationalFunction& o);
    RationalFunction& operator*=(const RationalFunction& o);
    RationalFunction& operator/=(const RationalFunction& o);
    friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { a += b; return a; }
    friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { a -= b; return a; }
    friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { a *= b; return a; }
    friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { a /= b; return a; }

    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const RationalFunction& f);

private:
    void reduce();
    Polynomial num_;
    Polynomial den_; // invariant: nonzero, monic, coprime to num_
};

/// Canonical fraction of two polynomials (the constructor, as a named op).
inline RationalFunction ratfunc_reduce(Polynomial num, Polynomial den) {
    return RationalFunction(std::move(num), std::move(den));
}

} // namespace ybx
