#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace gramcalc {

using Rational = mpq_class;
using Integer = mpz_class;

/// Exact Gaussian rational re + im*i. A scalar with a zero imaginary part is
/// an ordinary rational; both parts are always kept in lowest terms.
class Scalar {
public:
    Scalar() = default;
    Scalar(long v) : re_(v) {}
    Scalar(int v) : re_(v) {}
    Scalar(const Integer& v) : re_(v) {}
    Scalar(Rational re) : re_(std::move(re)) { re_.canonicalize(); }
    Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im))
    {
        re_.canonicalize();
        im_.canonicalize();
    }

    static Scalar i() { return Scalar(Rational(0), Rational(1)); }

    /// Parses "p", "-p", or "p/q". Throws ParseError on malformed input and
    /// DivisionByZero on a zero denominator.
    static Scalar parse_rational(std::string_view text);

    const Rational& re() const noexcept { return re_; }
    const Rational& im() const noexcept { return im_; }

    bool is_zero() const noexcept { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_one() const noexcept { return re_ == 1 && sgn(im_) == 0; }
    bool is_real() const noexcept { return sgn(im_) == 0; }
    bool is_integer() const noexcept { return is_real() && re_.get_den() == 1; }

    Scalar conj() const { return Scalar(re_, -im_); }
    /// |z|^2, always rational.
    Rational norm() const { return re_ * re_ + im_ * im_; }
    Scalar inverse() const;
    Scalar pow(long e) const;

    Scalar operator-() const { return Scalar(-re_, -im_); }
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    friend bool operator==(const Scalar& a, const Scalar& b)
    {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

    /// Rational part as "p" or "p/q".
    static std::string rational_string(const Rational& q);
    /// "p/q" for reals; "(a + b*I)" style for Gaussian values.
    std::string to_string() const;

private:
    Rational re_{0};
    Rational im_{0};
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// Binomial coefficient C(n, k) as an exact integer; zero outside 0 <= k <= n.
Integer binomial(long n, long k);
Integer factorial(long n);

} // namespace gramcalc
