#pragma once

#include <complex>
#include <optional>
#include <span>

#include <Eigen/Dense>

#include "rhpwn/mu_polynomial.hpp"
#include "rhpwn/step_function.hpp"

namespace rhpwn {

/// π_{n,k}(μ) = ⟨(B^n_0)^kΦ, (B^n_0)^kΦ⟩ and h_{n,k} = π_{n,k}/k!.
struct KernelValues {
    MuPolynomial pi;
    MuPolynomial h;
};

/// Closed form k! n^k Π_{i<k} (μ + i n^2(n-1)/2).
KernelValues kernel_values(int n, int k);

/// π_{n,k} from the one-step recursion a_{j+1} = n (j+1)(μ + j n^2(n-1)/2) a_j.
MuPolynomial kernel_recursion(int n, int k);

/// n^3 (n-1) / 2, the coupling that appears in every order-n formula.
Rational order_coupling(int n);

/// G_n(u, μ) = Σ_k u^k h_{n,k}(μ) / k!. For n >= 2 needs |n^3(n-1)/2 · u| < 1.
std::complex<double> G_eval(int n, std::complex<double> u, double mu);
/// Ĝ_n with G_n = exp(μ Ĝ_n).
std::complex<double> Ghat_eval(int n, std::complex<double> u);

/// k-th derivative of G_n(·, μ) at u = 0, from the binomial series of
/// (1 - a u)^{-b}: a^k b (b+1) ... (b+k-1).
MuPolynomial G_taylor_coeff(int n, int k);

/// Strict sup-norm bound |f| < (1/n) sqrt(2/(n(n-1))) for n >= 2.
bool is_admissible(int n, const StepFunction& f);
/// Throws DomainError naming the first piece that violates the bound.
void require_admissible(int n, const StepFunction& f);

struct KernelValue {
    std::complex<double> value;
    /// For n = 1 the exponent ∫ f̄ g is exact.
    std::optional<ComplexRational> exact_exponent;
};

/// ⟨ψ_n(f), ψ_n(g)⟩, antilinear in f.
KernelValue exp_inner_product(int n, const StepFunction& f, const StepFunction& g);

struct GramReport {
    Eigen::MatrixXcd matrix;
    double min_eigenvalue = 0.0;
    bool psd = false;
};

/// Gram matrix of {ψ_n(f_i)}; verdict PSD iff the smallest eigenvalue >= -tol.
GramReport gram_psd_check(int n, std::span<const StepFunction> fs, double tol);

}  // namespace rhpwn
