#pragma once

#include <vector>

#include "rhpwn/errors.hpp"
#include "rhpwn/mu_polynomial.hpp"
#include "rhpwn/rational.hpp"

// Exact truncated power series in one variable. A series of order N is the
// coefficient vector [c_0, ..., c_N].
namespace rhpwn::series {

inline Rational scale(const Rational& x, const Rational& r) { return x * r; }
inline MuPolynomial scale(const MuPolynomial& x, const Rational& r) { return x * ComplexRational(r); }

template <class T>
std::vector<T> zeros(int order) {
    return std::vector<T>(order + 1, T(0));
}

template <class T>
std::vector<T> mul(const std::vector<T>& a, const std::vector<T>& b, int order) {
    auto out = zeros<T>(order);
    for (int i = 0; i <= order && i < static_cast<int>(a.size()); ++i) {
        if (a[i] == T(0)) continue;
        for (int j = 0; i + j <= order && j < static_cast<int>(b.size()); ++j) out[i + j] += T(a[i] * b[j]);
    }
    return out;
}

template <class T>
std::vector<T> derivative(const std::vector<T>& a) {
    std::vector<T> out;
    for (std::size_t i = 1; i < a.size(); ++i) out.push_back(scale(a[i], Rational(static_cast<long>(i))));
    return out;
}

/// exp(a) for a[0] == 0, from E' = a' E.
template <class T>
std::vector<T> exp(const std::vector<T>& a, int order) {
    if (!a.empty() && !(a[0] == T(0))) throw DomainError("series exp needs a vanishing constant term");
    auto e = zeros<T>(order);
    e[0] = T(1);
    for (int m = 1; m <= order; ++m) {
        T acc(0);
        for (int j = 1; j <= m && j < static_cast<int>(a.size()); ++j)
            acc += T(scale(a[j], Rational(j)) * e[m - j]);
        e[m] = scale(acc, ratio(1, m));
    }
    return e;
}

/// 1/a for a[0] == 1.
inline std::vector<Rational> inverse(const std::vector<Rational>& a, int order) {
    if (a.empty() || a[0] != 1) throw DomainError("series inverse needs constant term 1");
    auto r = zeros<Rational>(order);
    r[0] = 1;
    for (int m = 1; m <= order; ++m) {
        Rational acc = 0;
        for (int j = 1; j <= m && j < static_cast<int>(a.size()); ++j) acc += a[j] * r[m - j];
        r[m] = -acc;
    }
    return r;
}

/// log(a) for a[0] == 1, from L' = a'/a.
inline std::vector<Rational> log(const std::vector<Rational>& a, int order) {
    if (a.empty() || a[0] != 1) throw DomainError("series log needs constant term 1");
    auto l = zeros<Rational>(order);
    for (int m = 1; m <= order; ++m) {
        Rational acc = m < static_cast<int>(a.size()) ? Rational(m * a[m]) : Rational(0);
        for (int j = 1; j < m; ++j)
            if (m - j < static_cast<int>(a.size())) acc -= j * l[j] * a[m - j];
        l[m] = acc / m;
    }
    return l;
}

/// sin and cos of (c·s) where c^2 = csq, i.e. only even powers of c appear
/// once the odd factor is stripped: returns cos(c s) and sin(c s)/c.
inline std::vector<Rational> cos_scaled(const Rational& csq, int order) {
    auto out = zeros<Rational>(order);
    Rational term = 1;  // (-csq)^j / (2j)!
    for (int j = 0; 2 * j <= order; ++j) {
        out[2 * j] = term;
        term *= -csq / Rational((2 * j + 1) * (2 * j + 2));
    }
    return out;
}

inline std::vector<Rational> sin_over_c(const Rational& csq, int order) {
    auto out = zeros<Rational>(order);
    Rational term = 1;  // (-csq)^j / (2j+1)!
    for (int j = 0; 2 * j + 1 <= order; ++j) {
        out[2 * j + 1] = term;
        term *= -csq / Rational((2 * j + 2) * (2 * j + 3));
    }
    return out;
}

}  // namespace rhpwn::series
