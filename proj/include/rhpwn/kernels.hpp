#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "rhpwn/step_function.hpp"

// Data-parallel numeric kernels. Every kernel has a serial reference and an
// OpenMP variant; both produce bit-identical results because each output slot
// is computed independently and all reductions run serially in a fixed order.
namespace rhpwn::kernels {

/// Gram matrix G_ij = ⟨ψ_n(f_i), ψ_n(f_j)⟩ (Hermitian, lower half mirrored).
Eigen::MatrixXcd gram_matrix_serial(int n, std::span<const StepFunction> fs);
Eigen::MatrixXcd gram_matrix_parallel(int n, std::span<const StepFunction> fs);
Eigen::MatrixXcd gram_matrix(int n, std::span<const StepFunction> fs);

/// p_t at each grid point.
std::vector<double> density_grid_serial(double t, std::span<const double> xs);
std::vector<double> density_grid_parallel(double t, std::span<const double> xs);
std::vector<double> density_grid(double t, std::span<const double> xs);

/// ∫_lo^hi f split into `panels` equal panels, each integrated by adaptive
/// Gauss–Kronrod. f must be safe to call concurrently.
using Integrand = std::function<double(double)>;
double integrate_panels_serial(const Integrand& f, double lo, double hi, int panels);
double integrate_panels_parallel(const Integrand& f, double lo, double hi, int panels);
double integrate_panels(const Integrand& f, double lo, double hi, int panels);

/// Mass of p_t on each cell (x_i, x_{i+1}] by fixed-order Gauss–Legendre.
std::vector<double> cell_masses_serial(double t, std::span<const double> breaks);
std::vector<double> cell_masses_parallel(double t, std::span<const double> breaks);
std::vector<double> cell_masses(double t, std::span<const double> breaks);

}  // namespace rhpwn::kernels
