#include "ybx/rational.hpp"

#include <cctype>
#include <ostream>

namespace ybx {

Rational::Rational(mpz_class num, mpz_class den) {
    if (sgn(den) == 0)
        throw ZeroDenominator("rational with zero denominator");
    q_ = mpq_class(std::move(num), std::move(den));
    q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
        return s;
    };
    auto parse_int = [&trim](std::string_view s) -> mpz_class {
        s = trim(s);
        if (s.empty())
            throw ParseError("empty integer");
        std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
        if (i == s.size())
            throw ParseError("sign without digits");
        for (std::size_t k = i; k < s.size(); ++k)
            if (!std::isdigit(static_cast<unsigned char>(s[k])))
                throw ParseError("bad integer: " + std::string(s));
        return mpz_class(std::string(s), 10);
    };

    text = trim(text);
    const auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_int(text));
    mpz_class num = parse_int(text.substr(0, slash));
    mpz_class den = parse_int(text.substr(slash + 1));
    return Rational(std::move(num), std::move(den));
}

Rational Rational::inverse() const {
    if (is_zero())
        throw ZeroDenominator("inverse of zero");
    Rational r;
    r.q_ = 1 / q_;
    return r;
}

Rational Rational::pow(long e) const {
    if (e == 0)
        return one();
    const Rational base = e > 0 ? *this : inverse();
    const unsigned long k = e > 0 ? static_cast<unsigned long>(e)
                                  : static_cast<unsigned long>(-(e + 1)) + 1;
    Rational r;
    mpz_pow_ui(mpq_numref(r.q_.get_mpq_t()), mpq_numref(base.q_.get_mpq_t()), k);
    mpz_pow_ui(mpq_denref(r.q_.get_mpq_t()), mpq_denref(base.q_.get_mpq_t()), k);
    return r; // powers of a canonical fraction stay canonical
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero())
        throw ZeroDenominator("division by zero");
    q_ /= o.q_;
    return *this;
}

Rational Rational::operator-() const {
    Rational r;
    r.q_ = -q_;
    return r;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.q_.get_str();
}

} // namespace ybx
