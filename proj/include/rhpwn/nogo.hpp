#pragma once

#include <array>
#include <optional>

#include "rhpwn/mu_polynomial.hpp"
#include "rhpwn/rational.hpp"

namespace rhpwn {

/// Gram matrix of {B^{2n}_0 Φ, (B^n_0)^2 Φ} on an interval of measure μ.
struct NoGoReport {
    int n = 3;
    std::array<std::array<MuPolynomial, 2>, 2> entries;
    MuPolynomial d1;
    MuPolynomial d2;
    /// n^2 (n+1) / 2: the matrix is PSD iff μ >= threshold.
    Rational threshold;

    std::optional<Rational> mu;
    std::optional<Rational> d2_value;
    std::optional<bool> psd;
};

/// Entries come from the rewrite engine and are asserted equal to
/// [[2nμ, 2n^3μ], [2n^3μ, 2n^2μ^2 + n^4(n-1)μ]] (InternalError otherwise).
/// n < 3 is out of scope; μ, if given, must be > 0.
NoGoReport nogo_report(int n, std::optional<Rational> mu = std::nullopt);

}  // namespace rhpwn
