#pragma once

#include <complex>
#include <initializer_list>
#include <string>
#include <vector>

#include "rhpwn/rational.hpp"

namespace rhpwn {

/// Polynomial in the symbolic interval measure μ with exact complex-rational
/// coefficients. coeffs()[i] multiplies μ^i; the zero polynomial has no
/// coefficients.
class MuPolynomial {
public:
    MuPolynomial() = default;
    MuPolynomial(ComplexRational c);  // NOLINT(implicit): constants
    MuPolynomial(int c) : MuPolynomial(ComplexRational(c)) {}  // NOLINT(implicit)
    explicit MuPolynomial(std::vector<ComplexRational> coeffs);
    MuPolynomial(std::initializer_list<long> coeffs);

    /// The monomial μ.
    static MuPolynomial mu();

    const std::vector<ComplexRational>& coeffs() const noexcept { return coeffs_; }
    ComplexRational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : ComplexRational{}; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_real() const;

    MuPolynomial conj() const;

    MuPolynomial& operator+=(const MuPolynomial& o);
    MuPolynomial& operator-=(const MuPolynomial& o);
    MuPolynomial& operator*=(const MuPolynomial& o);
    MuPolynomial& operator*=(const ComplexRational& c);

    friend MuPolynomial operator+(MuPolynomial a, const MuPolynomial& b) { return a += b; }
    friend MuPolynomial operator-(MuPolynomial a, const MuPolynomial& b) { return a -= b; }
    friend MuPolynomial operator*(MuPolynomial a, const MuPolynomial& b) { return a *= b; }
    friend MuPolynomial operator*(MuPolynomial a, const ComplexRational& c) { return a *= c; }
    friend MuPolynomial operator*(const ComplexRational& c, MuPolynomial a) { return a *= c; }
    MuPolynomial operator-() const { return *this * ComplexRational(-1); }

    friend bool operator==(const MuPolynomial&, const MuPolynomial&) = default;

    ComplexRational evaluate(const Rational& mu) const;
    std::complex<double> evaluate(double mu) const;

    /// Human-readable, e.g. "8μ^2+16μ".
    std::string pretty() const;

private:
    void trim();
    std::vector<ComplexRational> coeffs_;
};

}  // namespace rhpwn
