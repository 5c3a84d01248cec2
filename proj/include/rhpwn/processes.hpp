#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rhpwn/algebra.hpp"
#include "rhpwn/mu_polynomial.hpp"
#include "rhpwn/rational.hpp"

namespace rhpwn {

// ---- splitting formula -----------------------------------------------------

/// e^{s(B^n_0 + B^0_n)}Φ = e^{W(s)} e^{V(s) B^n_0}Φ with
///   V' = 1 + a V^2,  W' = n μ V,  a = n^3(n-1)/2,  V(0) = W(0) = 0.
/// V[j], W[j] are the exact coefficients of s^j for j <= order.
struct SplittingSolution {
    int n = 1;
    std::vector<Rational> V;
    std::vector<MuPolynomial> W;

    /// Closed forms: V = tan(σs)/σ, W = -(nμ/a) ln cos(σs), σ = sqrt(a)
    /// (V = s, W = s^2 μ/2 for n = 1).
    double V_eval(double s) const;
    double W_eval(double s, double mu) const;
};

SplittingSolution riccati_split(int n, int order);

/// V' - 1 - a V^2 through s^{order-1}; all zero when the series is right.
std::vector<Rational> riccati_residual(const SplittingSolution& sol);

struct SplitCheckReport {
    int n = 1;
    int order = 0;
    bool match = true;
    /// (power of s, power of B^n_0) of the first differing coefficient.
    std::optional<std::pair<int, int>> first_mismatch;
    MuPolynomial lhs_at_mismatch;
    MuPolynomial rhs_at_mismatch;
    /// Coefficients of s^j Φ on the left side, i.e. of ⟨Φ, e^{s(B^n_0+B^0_n)}Φ⟩.
    std::vector<MuPolynomial> vacuum_series;
};

/// Left side by the truncated engine (exponential series in s), right side
/// by exact series composition; compared coefficient by coefficient.
SplitCheckReport splitting_series_check(int n, int order);

/// Taylor coefficients of the moment generating function of the order-n
/// process with t replaced by the symbolic μ, through s^order. For n >= 2 they
/// come from the binomial series of (1 + (cos σs - 1))^{-nμ/a}.
std::vector<MuPolynomial> mgf_taylor_series(int n, int order);

/// n = 1: e^{s^2 t/2}; n >= 2: sec(σs)^{2nt/(n^3(n-1))}, needs |σs| < π/2.
double mgf_eval(int n, double s, double t);

/// (sec s)^t, the moment generating function of X_t.
double sec_power(double t, double s);

// ---- continuous binomial / Beta law ----------------------------------------

/// Principal log Γ(z) for Re z > 0 (continuous from the positive real axis).
std::complex<double> complex_log_gamma(std::complex<double> z);

/// p_t(x) = 2^{t-1}/(2π) Γ((t+ix)/2) Γ((t-ix)/2) / Γ(t).
double density_p(double t, double x);

/// Density of σ X_τ with σ = sqrt(n^3(n-1)/2), τ = 2nt/(n^3(n-1)).
double density_q_scaled(int n, double t, double y);

/// X with ∫_{|x|>X} p_t < eps, from the e^{-π|x|/2} |x|^{t-1} tail.
double tail_cutoff(double t, double eps);

struct MgfCheck {
    double numeric;
    double closed_form;
    double rel_err;
};

/// ∫ e^{sx} p_t(x) dx against (sec s)^t.
MgfCheck mgf_numeric_check(double t, double s);

/// ∫ e^{sy} q(y) dy for the scaled density against mgf_eval(n, s, t).
MgfCheck scaled_mgf_numeric_check(int n, double t, double s);

/// Second derivative at 0 of mgf_eval (n >= 1) by Richardson-extrapolated
/// central differences; equals the variance n·t of the order-n process.
double variance_from_mgf(int n, double t);
/// Same for (sec s)^t, whose variance is t.
double variance_from_sec_power(double t);

/// Tabulated CDF of p_t on an adaptive grid out to the 1e-12 tails.
class CdfTable {
public:
    explicit CdfTable(double t);

    double t() const noexcept { return t_; }
    const std::vector<double>& knots() const noexcept { return x_; }
    const std::vector<double>& values() const noexcept { return F_; }

    /// Piecewise linear, monotone.
    double cdf(double x) const;
    double quantile(double u) const;

private:
    double t_;
    std::vector<double> x_;
    std::vector<double> F_;
};

/// Inverse-CDF samples of X_t from a mt19937_64 stream seeded with `seed`.
std::vector<double> sample_X(double t, std::size_t count, std::uint64_t seed);

/// sup |F_emp - F| over the samples (sorted internally).
double ks_statistic(std::vector<double> samples, const std::function<double(double)>& cdf);

// ---- classical processes ---------------------------------------------------

using CoefficientMap = std::map<std::pair<int, int>, ComplexRational>;

struct ClassicalVerdict {
    bool self_adjoint = true;
    bool commuting = true;
    bool classical() const noexcept { return self_adjoint && commuting; }
    /// Human-readable witness of the first failure.
    std::optional<std::string> witness;
    /// Generator index and coefficient of the witness term.
    std::optional<GeneratorIndex> witness_index;
    ComplexRational witness_coefficient;
};

/// x(t) = Σ c_{n,k} B^n_k(χ_(0,t]). Checks c_{n,k} = conj(c_{k,n}) and that
/// [x(t), x(s)] vanishes exactly for all t, s in the horizon.
ClassicalVerdict classical_check(const CoefficientMap& coeffs, const std::vector<Rational>& horizon);

/// x(t) as an algebra element.
AlgebraElement process_at(const CoefficientMap& coeffs, const Rational& t);

}  // namespace rhpwn
