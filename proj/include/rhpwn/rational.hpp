#pragma once

#include <complex>
#include <compare>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace rhpwn {

using Integer = mpz_class;
using Rational = mpq_class;

/// num/den in lowest terms. mpq_class(num, den) does not canonicalize, so
/// every two-argument construction goes through here. den must be nonzero.
Rational ratio(const Integer& num, const Integer& den);

/// Parses "p", "p/q" or "-p/q". Throws DomainError on malformed text or q == 0.
Rational parse_rational(std::string_view text);

/// Canonical "p/q" text, or "p" when the denominator is 1.
std::string to_string(const Rational& q);

std::strong_ordering compare(const Rational& a, const Rational& b);

/// Exact Gaussian rational re + i*im.
class ComplexRational {
public:
    ComplexRational() = default;
    ComplexRational(Rational re) : re_(std::move(re)) {}  // NOLINT(implicit)
    ComplexRational(long v) : re_(v) {}                    // NOLINT(implicit)
    ComplexRational(int v) : re_(v) {}                     // NOLINT(implicit)
    ComplexRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    static ComplexRational i() { return {Rational(0), Rational(1)}; }

    const Rational& re() const noexcept { return re_; }
    const Rational& im() const noexcept { return im_; }

    bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_real() const { return sgn(im_) == 0; }

    ComplexRational conj() const { return {re_, -im_}; }
    /// |z|^2, exact.
    Rational norm2() const { return re_ * re_ + im_ * im_; }

    ComplexRational& operator+=(const ComplexRational& o);
    ComplexRational& operator-=(const ComplexRational& o);
    ComplexRational& operator*=(const ComplexRational& o);
    ComplexRational& operator/=(const ComplexRational& o);

    friend ComplexRational operator+(ComplexRational a, const ComplexRational& b) { return a += b; }
    friend ComplexRational operator-(ComplexRational a, const ComplexRational& b) { return a -= b; }
    friend ComplexRational operator*(ComplexRational a, const ComplexRational& b) { return a *= b; }
    friend ComplexRational operator/(ComplexRational a, const ComplexRational& b) { return a /= b; }
    ComplexRational operator-() const { return {-re_, -im_}; }

    friend bool operator==(const ComplexRational& a, const ComplexRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend std::strong_ordering operator<=>(const ComplexRational& a, const ComplexRational& b) {
        if (auto c = compare(a.re_, b.re_); c != 0) return c;
        return compare(a.im_, b.im_);
    }

    std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

private:
    Rational re_{0};
    Rational im_{0};
};

std::string to_string(const ComplexRational& z);

}  // namespace rhpwn
