#include <doctest.h>

#include <omp.h>

#include <cmath>

#include "../support/generators.hpp"
#include "rhpwn/errors.hpp"
#include "rhpwn/fock.hpp"
#include "rhpwn/kernels.hpp"
#include "rhpwn/processes.hpp"

using namespace rhpwn;

namespace {

/// Force several threads even on a single-core host so the parallel paths really split work.
struct Threads {
    int saved = omp_get_max_threads();
    explicit Threads(int n) { omp_set_num_threads(n); }
    ~Threads() { omp_set_num_threads(saved); }
};

}  // namespace

TEST_CASE("Gram kernel: serial and parallel agree bit for bit") {
    Threads guard(4);
    gen::Gen g(123);
    for (int rep = 0; rep < 10; ++rep) {
        const int n = g.uniform_int(1, 4);
        std::vector<StepFunction> fs;
        for (int i = 0; i < 12; ++i) fs.push_back(g.admissible(n));
        const auto a = kernels::gram_matrix_serial(n, fs);
        const auto b = kernels::gram_matrix_parallel(n, fs);
        CHECK(a == b);
        CHECK(kernels::gram_matrix(n, fs) == a);
        for (int i = 0; i < 12; ++i)
            for (int j = 0; j < 12; ++j) CHECK(a(i, j) == exp_inner_product(n, fs[i], fs[j]).value);
    }
    const std::vector<StepFunction> bad{StepFunction{}, StepFunction::indicator(1, 2, 1)};
    CHECK_THROWS_AS(kernels::gram_matrix_parallel(3, bad), DomainError);
}

TEST_CASE("density and quadrature kernels agree") {
    Threads guard(4);
    std::vector<double> xs;
    for (int i = -500; i <= 500; ++i) xs.push_back(i * 0.05);
    const auto a = kernels::density_grid_serial(1.5, xs);
    CHECK(a == kernels::density_grid_parallel(1.5, xs));
    for (std::size_t i = 0; i < xs.size(); i += 97) CHECK(a[i] == density_p(1.5, xs[i]));

    const kernels::Integrand f = [](double x) { return density_p(2.0, x); };
    const double s = kernels::integrate_panels_serial(f, -40, 40, 16);
    CHECK(s == kernels::integrate_panels_parallel(f, -40, 40, 16));
    CHECK(std::abs(s - 1) < 1e-10);

    const auto m = kernels::cell_masses_serial(2.0, xs);
    CHECK(m == kernels::cell_masses_parallel(2.0, xs));
    CHECK(m.size() == xs.size() - 1);
}
