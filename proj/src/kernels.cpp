#include "rhpwn/kernels.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "rhpwn/errors.hpp"
#include "rhpwn/fock.hpp"
#include "rhpwn/processes.hpp"

namespace rhpwn::kernels {

namespace {

constexpr unsigned kronrod_depth = 10;
constexpr double kronrod_tol = 1e-11;

std::complex<double> gram_entry(int n, std::span<const StepFunction> fs, long i, long j) {
    return exp_inner_product(n, fs[i], fs[j]).value;
}

Eigen::MatrixXcd mirrored(Eigen::MatrixXcd g) {
    for (long i = 0; i < g.rows(); ++i)
        for (long j = 0; j < i; ++j) g(i, j) = std::conj(g(j, i));
    return g;
}

double panel_integral(const Integrand& f, double a, double b) {
    return boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, a, b, kronrod_depth, kronrod_tol);
}

double cell_mass(double t, double a, double b) {
    return boost::math::quadrature::gauss<double, 20>::integrate([t](double x) { return density_p(t, x); }, a, b);
}

void check_panels(int panels, double lo, double hi) {
    if (panels < 1) throw DomainError("need at least one panel");
    if (!(lo <= hi)) throw DomainError("integration bounds out of order");
}

}  // namespace

Eigen::MatrixXcd gram_matrix_serial(int n, std::span<const StepFunction> fs) {
    const long m = static_cast<long>(fs.size());
    Eigen::MatrixXcd g = Eigen::MatrixXcd::Zero(m, m);
    for (long i = 0; i < m; ++i)
        for (long j = i; j < m; ++j) g(i, j) = gram_entry(n, fs, i, j);
    return mirrored(std::move(g));
}

Eigen::MatrixXcd gram_matrix_parallel(int n, std::span<const StepFunction> fs) {
    // exceptions must not escape the parallel region
    for (const auto& f : fs) require_admissible(n, f);
    const long m = static_cast<long>(fs.size());
    Eigen::MatrixXcd g = Eigen::MatrixXcd::Zero(m, m);
    // upper triangle flattened so the work is balanced
    const long pairs = m * (m + 1) / 2;
#pragma omp parallel for schedule(dynamic)
    for (long p = 0; p < pairs; ++p) {
        long i = 0, rem = p;
        while (rem >= m - i) rem -= m - i++;
        g(i, i + rem) = gram_entry(n, fs, i, i + rem);
    }
    return mirrored(std::move(g));
}

Eigen::MatrixXcd gram_matrix(int n, std::span<const StepFunction> fs) {
    return fs.size() < 8 ? gram_matrix_serial(n, fs) : gram_matrix_parallel(n, fs);
}

std::vector<double> density_grid_serial(double t, std::span<const double> xs) {
    std::vector<double> out(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) out[i] = density_p(t, xs[i]);
    return out;
}

std::vector<double> density_grid_parallel(double t, std::span<const double> xs) {
    if (!(t > 0)) throw DomainError("density needs t > 0");
    std::vector<double> out(xs.size());
    const long m = static_cast<long>(xs.size());
#pragma omp parallel for schedule(static)
    for (long i = 0; i < m; ++i) out[i] = density_p(t, xs[i]);
    return out;
}

std::vector<double> density_grid(double t, std::span<const double> xs) { return density_grid_parallel(t, xs); }

double integrate_panels_serial(const Integrand& f, double lo, double hi, int panels) {
    check_panels(panels, lo, hi);
    const double h = (hi - lo) / panels;
    double sum = 0.0;
    for (int i = 0; i < panels; ++i) sum += panel_integral(f, lo + i * h, i + 1 == panels ? hi : lo + (i + 1) * h);
    return sum;
}

double integrate_panels_parallel(const Integrand& f, double lo, double hi, int panels) {
    check_panels(panels, lo, hi);
    const double h = (hi - lo) / panels;
    std::vector<double> parts(panels);
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < panels; ++i) parts[i] = panel_integral(f, lo + i * h, i + 1 == panels ? hi : lo + (i + 1) * h);
    double sum = 0.0;
    for (double p : parts) sum += p;
    return sum;
}

double integrate_panels(const Integrand& f, double lo, double hi, int panels) {
    return integrate_panels_parallel(f, lo, hi, panels);
}

std::vector<double> cell_masses_serial(double t, std::span<const double> breaks) {
    if (breaks.size() < 2) return {};
    std::vector<double> out(breaks.size() - 1);
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) out[i] = cell_mass(t, breaks[i], breaks[i + 1]);
    return out;
}

std::vector<double> cell_masses_parallel(double t, std::span<const double> breaks) {
    if (!(t > 0)) throw DomainError("density needs t > 0");
    if (breaks.size() < 2) return {};
    const long m = static_cast<long>(breaks.size()) - 1;
    std::vector<double> out(m);
#pragma omp parallel for schedule(static)
    for (long i = 0; i < m; ++i) out[i] = cell_mass(t, breaks[i], breaks[i + 1]);
    return out;
}

std::vector<double> cell_masses(double t, std::span<const double> breaks) { return cell_masses_parallel(t, breaks); }

}  // namespace rhpwn::kernels
