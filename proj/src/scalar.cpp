#include "gramcalc/scalar.hpp"

#include "gramcalc/error.hpp"

#include <cctype>
#include <ostream>

namespace gramcalc {

namespace {

bool is_digits(std::string_view s)
{
    if (s.empty())
        return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c)))
            return false;
    return true;
}

} // namespace

Scalar Scalar::parse_rational(std::string_view text)
{
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    auto slash = body.find('/');
    std::string_view num = body.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
    if (!is_digits(num))
        throw ParseError("malformed rational '" + std::string(text) + "'", 0);
    if (slash != std::string_view::npos && !is_digits(den))
        throw ParseError("malformed rational '" + std::string(text) + "'", text.size() - body.size() + slash + 1);

    Integer n(std::string(num), 10);
    Integer d = den.empty() ? Integer(1) : Integer(std::string(den), 10);
    if (d == 0)
        throw DivisionByZero("zero denominator in '" + std::string(text) + "'");
    if (negative)
        n = -n;
    Rational q(n, d);
    return Scalar(std::move(q));
}

Scalar& Scalar::operator+=(const Scalar& o)
{
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o)
{
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o)
{
    if (is_real() && o.is_real()) {
        re_ *= o.re_;
        return *this;
    }
    Rational r = re_ * o.re_ - im_ * o.im_;
    Rational i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
}

Scalar Scalar::inverse() const
{
    if (is_zero())
        throw DivisionByZero("inverse of zero scalar");
    if (is_real())
        return Scalar(Rational(1) / re_);
    Rational n = norm();
    return Scalar(re_ / n, -im_ / n);
}

Scalar& Scalar::operator/=(const Scalar& o)
{
    if (o.is_zero())
        throw DivisionByZero("division by zero scalar");
    if (is_real() && o.is_real()) {
        re_ /= o.re_;
        return *this;
    }
    return *this *= o.inverse();
}

Scalar Scalar::pow(long e) const
{
    if (e < 0)
        return inverse().pow(-e);
    Scalar result(1);
    Scalar base = *this;
    while (e > 0) {
        if (e & 1)
            result *= base;
        e >>= 1;
        if (e)
            base *= base;
    }
    return result;
}

std::string Scalar::rational_string(const Rational& q)
{
    return q.get_str(10);
}

std::string Scalar::to_string() const
{
    if (is_real())
        return rational_string(re_);
    std::string out = "(";
    if (sgn(re_) != 0) {
        out += rational_string(re_);
        out += sgn(im_) < 0 ? " - " : " + ";
    } else if (sgn(im_) < 0) {
        out += "-";
    }
    Rational mag = abs(im_);
    if (mag != 1)
        out += rational_string(mag) + "*";
    out += "I)";
    return out;
}

std::ostream& operator<<(std::ostream& os, const Scalar& s)
{
    return os << s.to_string();
}

Integer binomial(long n, long k)
{
    if (n < 0 || k < 0 || k > n)
        return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Integer factorial(long n)
{
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n < 0 ? 0 : n));
    return r;
}

} // namespace gramcalc
