#include "rhpwn/fock.hpp"

#include <cmath>
#include <string>

#include "rhpwn/errors.hpp"
#include "rhpwn/kernels.hpp"

namespace rhpwn {

namespace {

void require_order(int n) {
    if (n < 1) throw IndexError("Fock order n must be >= 1, got " + std::to_string(n));
}

/// n^2 (n-1) / 2, the spacing of the roots of π_{n,k}.
MuPolynomial root_spacing(int n, int i) { return MuPolynomial(ComplexRational(ratio(long(n) * n * (n - 1) * i, 2))); }

}  // namespace

Rational order_coupling(int n) { return ratio(long(n) * n * n * (n - 1), 2); }

KernelValues kernel_values(int n, int k) {
    require_order(n);
    if (k < 0) throw IndexError("kernel needs k >= 0");
    MuPolynomial h(1);
    for (int i = 0; i < k; ++i) h *= (MuPolynomial::mu() + root_spacing(n, i)) * ComplexRational(n);
    Integer fact = 1;
    for (int i = 2; i <= k; ++i) fact *= i;
    return {h * ComplexRational(Rational(fact)), h};
}

MuPolynomial kernel_recursion(int n, int k) {
    require_order(n);
    if (k < 0) throw IndexError("kernel needs k >= 0");
    MuPolynomial a(1);
    for (int j = 0; j < k; ++j) a *= (MuPolynomial::mu() + root_spacing(n, j)) * ComplexRational(long(n) * (j + 1));
    return a;
}

std::complex<double> Ghat_eval(int n, std::complex<double> u) {
    require_order(n);
    if (n == 1) return u;
    const double a = order_coupling(n).get_d();
    if (std::abs(a * u) >= 1.0)
        throw DomainError("G_n needs |n^3(n-1)/2 * u| < 1 (principal branch of log)");
    return -2.0 / (double(n) * n * (n - 1)) * std::log(1.0 - a * u);
}

std::complex<double> G_eval(int n, std::complex<double> u, double mu) {
    require_order(n);
    if (n == 1) return std::exp(u * mu);
    const double a = order_coupling(n).get_d();
    if (std::abs(a * u) >= 1.0)
        throw DomainError("G_n needs |n^3(n-1)/2 * u| < 1 (principal branch of log)");
    return std::pow(1.0 - a * u, -2.0 * mu / (double(n) * n * (n - 1)));
}

MuPolynomial G_taylor_coeff(int n, int k) {
    require_order(n);
    if (k < 0) throw IndexError("Taylor order must be >= 0");
    if (n == 1) {
        MuPolynomial p(1);
        for (int i = 0; i < k; ++i) p *= MuPolynomial::mu();
        return p;
    }
    // (1 - a u)^{-b}, b = 2μ / (n^2 (n-1)): k-th derivative a^k (b)_k (rising factorial)
    const ComplexRational a(order_coupling(n));
    const MuPolynomial b = MuPolynomial::mu() * ComplexRational(ratio(2, long(n) * n * (n - 1)));
    MuPolynomial d(1);
    for (int i = 0; i < k; ++i) d *= (b + MuPolynomial(i)) * a;
    return d;
}

bool is_admissible(int n, const StepFunction& f) {
    require_order(n);
    if (n == 1) return true;
    const Rational bound = ratio(2, long(n) * n * n * (n - 1));
    return f.sup_norm2() < bound;
}

void require_admissible(int n, const StepFunction& f) {
    require_order(n);
    if (n == 1) return;
    const Rational bound = ratio(2, long(n) * n * n * (n - 1));
    for (const auto& p : f.pieces())
        if (!(p.value.norm2() < bound))
            throw DomainError("piece (" + to_string(p.lo) + ", " + to_string(p.hi) + "] with value " +
                              to_string(p.value) + " violates |f| < (1/n)sqrt(2/(n(n-1))) for n = " +
                              std::to_string(n));
}

KernelValue exp_inner_product(int n, const StepFunction& f, const StepFunction& g) {
    require_admissible(n, f);
    require_admissible(n, g);
    if (n == 1) {
        const ComplexRational e = (f.conj() * g).integral();
        return {std::exp(e.to_complex()), e};
    }
    const double a = order_coupling(n).get_d();
    const double c = -2.0 / (double(n) * n * (n - 1));
    std::complex<double> exponent = 0.0;
    const StepFunction* fs[] = {&f, &g};
    for (const auto& cell : common_refinement(fs)) {
        const std::complex<double> z = (cell.values[0].conj() * cell.values[1]).to_complex();
        exponent += Rational(cell.hi - cell.lo).get_d() * c * std::log(1.0 - a * z);
    }
    return {std::exp(exponent), std::nullopt};
}

GramReport gram_psd_check(int n, std::span<const StepFunction> fs, double tol) {
    for (const auto& f : fs) require_admissible(n, f);
    GramReport r;
    r.matrix = kernels::gram_matrix(n, fs);
    if (fs.empty()) {
        r.psd = true;
        return r;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(r.matrix, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) throw InternalError("Hermitian eigensolver did not converge");
    r.min_eigenvalue = solver.eigenvalues().minCoeff();
    r.psd = r.min_eigenvalue >= -tol;
    return r;
}

}  // namespace rhpwn
