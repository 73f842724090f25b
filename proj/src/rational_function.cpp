#include "ybx/rational_function.hpp"

#include <ostream>

namespace ybx {

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero())
        throw ZeroDenominator("rational function with zero denominator");
    reduce();
}

void RationalFunction::reduce() {
    if (num_.is_zero()) {
        den_ = Polynomial::one();
        return;
    }
    const Polynomial g = Polynomial::gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = Polynomial::divmod(num_, g).first;
        den_ = Polynomial::divmod(den_, g).first;
    }
    const Rational lead = den_.leading();
    if (!lead.is_one()) {
        const Rational inv = lead.inverse();
        num_ = inv * num_;
        den_ = inv * den_;
    }
}

RationalFunction RationalFunction::inverse() const {
    if (is_zero())
        throw ZeroDenominator("inverse of the zero rational function");
    return RationalFunction(den_, num_);
}

std::optional<Rational> RationalFunction::eval(const Rational& x) const {
    const Rational d = den_.eval(x);
    if (d.is_zero())
        return std::nullopt;
    return num_.eval(x) / d;
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    reduce();
    return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ = den_ * o.den_;
    reduce();
    return *this;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
    num_ = num_ * o.num_;
    den_ = den_ * o.den_;
    reduce();
    return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
    if (o.is_zero())
        throw ZeroDenominator("division by the zero rational function");
    num_ = num_ * o.den_;
    den_ = den_ * o.num_;
    if (den_.is_zero())
        throw ZeroDenominator("division by the zero rational function");
    reduce();
    return *this;
}

std::string RationalFunction::str() const {
    if (den_ == Polynomial::one())
        return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

std::ostream& operator<<(std::ostream& os, const RationalFunction& f) {
    return os << f.str();
}

} // namespace ybx
