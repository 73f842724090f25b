#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "ybx/rational.hpp"

namespace ybx {

/// Univariate polynomial in the indeterminate lambda over Q, stored as a dense
/// coefficient vector (index = degree) with no trailing zero coefficients.
/// The zero polynomial has an empty coefficient vector and degree -1.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(const Rational& constant);
    Polynomial(long constant) : Polynomial(Rational(constant)) {}
    explicit Polynomial(std::vector<Rational> coeffs);

    static Polynomial zero() { return {}; }
    static Polynomial one() { return Polynomial(1); }
    /// The polynomial "lambda".
    static Polynomial variable();

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_constant() const { return coeffs_.size() <= 1; }

    /// Coefficient of lambda^i; zero beyond the degree.
    Rational coeff(std::size_t i) const;
    const Rational& leading() const; // requires a nonzero polynomial
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    Rational eval(const Rational& x) const;
    Polynomial monic() const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { a += b; return a; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { a -= b; return a; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Rational& c, const Polynomial& p);

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    /// Quotient and remainder; divisor must be nonzero.
    static std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
    /// Monic gcd via the Euclidean algorithm (gcd(0,0) = 0).
    static Polynomial gcd(Polynomial a, Polynomial b);

    /// Human-readable form, highest degree first, e.g. "-l + 15".
    std::string str() const;
    /// Dense coefficient list "[c0, c1, ...]", lowest degree first.
    std::string coeff_list_str() const;

    friend std::ostream& operator<<(std::ostream& os, const Polynomial& p);

private:
    void trim();
    std::vector<Rational> coeffs_;
};

} // namespace ybx
