#include "ybx/polynomial.hpp"

#include <ostream>
#include <sstream>

namespace ybx {

Polynomial::Polynomial(const Rational& constant) {
    if (!constant.is_zero())
        coeffs_.push_back(constant);
}

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
}

Polynomial Polynomial::variable() {
    return Polynomial(std::vector<Rational>{Rational(0), Rational(1)});
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero())
        coeffs_.pop_back();
}

Rational Polynomial::coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : Rational(0);
}

const Rational& Polynomial::leading() const {
    if (is_zero())
        throw ZeroDenominator("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

Rational Polynomial::eval(const Rational& x) const {
    Rational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

Polynomial Polynomial::monic() const {
    if (is_zero())
        return {};
    return leading().inverse() * *this;
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& c : r.coeffs_)
        c = -c;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    if (coeffs_.size() < o.coeffs_.size())
        coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
        coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    if (coeffs_.size() < o.coeffs_.size())
        coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
        coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero())
        return {};
    std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(c));
}

Polynomial operator*(const Rational& c, const Polynomial& p) {
    if (c.is_zero())
        return {};
    Polynomial r = p;
    for (auto& x : r.coeffs_)
        x *= c;
    return r;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero())
        throw ZeroDenominator("polynomial division by zero");
    Polynomial rem = a;
    if (a.degree() < b.degree())
        return {Polynomial(), rem};
    std::vector<Rational> q(static_cast<std::size_t>(a.degree() - b.degree()) + 1);
    const Rational lead_inv = b.leading().inverse();
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        const std::size_t shift = static_cast<std::size_t>(rem.degree() - b.degree());
        const Rational f = rem.leading() * lead_inv;
        q[shift] = f;
        // rem -= f * lambda^shift * b
        for (std::size_t i = 0; i < b.coeffs_.size(); ++i)
            rem.coeffs_[shift + i] -= f * b.coeffs_[i];
        rem.trim();
    }
    return {Polynomial(std::move(q)), rem};
}

Polynomial Polynomial::gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        Polynomial r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

std::string Polynomial::str() const {
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (int d = degree(); d >= 0; --d) {
        const Rational& c = coeffs_[static_cast<std::size_t>(d)];
        if (c.is_zero())
            continue;
        const Rational mag = c.sign() < 0 ? -c : c;
        if (first) {
            if (c.sign() < 0)
                os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        if (d == 0 || !mag.is_one())
            os << mag.str();
        if (d > 0) {
            if (!mag.is_one())
                os << "*";
            os << "l";
            if (d > 1)
                os << "^" << d;
        }
    }
    return os.str();
}

std::string Polynomial::coeff_list_str() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        os << (i ? ", " : "") << coeffs_[i].str();
    os << "]";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
    return os << p.str();
}

} // namespace ybx
