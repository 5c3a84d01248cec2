// Acceptance run: one PASS/FAIL line per criterion. Tolerances are pinned
// below; every numeric check prints the measured worst case next to it.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <numbers>
#include <numeric>
#include <sstream>
#include <string>

#include "../support/generators.hpp"
#include "rhpwn/algebra.hpp"
#include "rhpwn/errors.hpp"
#include "rhpwn/fock.hpp"
#include "rhpwn/jets.hpp"
#include "rhpwn/nogo.hpp"
#include "rhpwn/processes.hpp"
#include "rhpwn/rewrite.hpp"

using namespace rhpwn;

namespace tol {
constexpr double generating_function = 1e-12;
constexpr double gram_min_eigenvalue = -1e-10;
constexpr double representation = 1e-8;
constexpr double variance = 1e-6;
constexpr double normalization = 1e-8;
constexpr double secant_density = 1e-10;
constexpr double mgf = 1e-6;
constexpr double sample_variance = 0.05;
constexpr double ks_one_percent = 1.628;  // asymptotic Kolmogorov 1% critical value × sqrt(N)
}  // namespace tol

namespace {

constexpr double pi = std::numbers::pi;

struct Outcome {
    bool ok = true;
    std::ostringstream detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) detail << "first failure: " << what << "; ";
        ok = ok && cond;
    }
};

double rel(std::complex<double> a, std::complex<double> b) {
    return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
}

MuPolynomial mu_poly(std::initializer_list<long> c) { return MuPolynomial(c); }

// 1. antisymmetry, Jacobi and the *-anti-homomorphism, exactly
void algebra_axioms(Outcome& o) {
    int checked = 0;
    for (auto tag : {AlgebraTag::rhpwn, AlgebraTag::winfty}) {
        gen::Gen g(tag == AlgebraTag::rhpwn ? 1001 : 1002);
        for (int i = 0; i < 500; ++i) {
            const auto a = g.element(tag, 6), b = g.element(tag, 6), c = g.element(tag, 6);
            const auto ab = commutator(a, b);
            o.require((ab + commutator(b, a)).is_zero(), "antisymmetry");
            o.require((commutator(a, commutator(b, c)) + commutator(b, commutator(c, a)) +
                       commutator(c, commutator(a, b)))
                          .is_zero(),
                      "Jacobi");
            o.require(involution(ab) == commutator(involution(b), involution(a)), "involution");
            ++checked;
        }
    }
    o.detail << checked << " triples, exact";
}

// 2. no-go moments and the d2 sign change
void nogo_reproduction(Outcome& o) {
    for (long n = 3; n <= 5; ++n) {
        const int m = int(n);
        const long n2 = n * n, n3 = n2 * n, n4 = n3 * n;
        o.require(vacuum_expectation(single_interval_word({{0, 2 * m}, {2 * m, 0}})) == mu_poly({0, 2 * n}),
                  "<B^0_2n B^2n_0>");
        o.require(vacuum_expectation(single_interval_word({{0, 2 * m}, {m, 0}, {m, 0}})) == mu_poly({0, 2 * n3}),
                  "<B^0_2n (B^n_0)^2>");
        o.require(vacuum_expectation(single_interval_word({{0, m}, {0, m}, {m, 0}, {m, 0}})) ==
                      mu_poly({0, n4 * (n - 1), 2 * n2}),
                  "<(B^0_n)^2 (B^n_0)^2>");
        const auto chi = reference_indicator();
        VacuumState cubic;
        cubic.add({Creator{m, chi}, Creator{m, chi}}, mu_poly({3 * n3 * (n - 1), 3 * n}));
        cubic.add({Creator{2 * m, chi}}, mu_poly({n4 * (n - 1) * (n - 2)}));
        o.require(reduce_untruncated(single_interval_word({{0, m}, {m, 0}, {m, 0}, {m, 0}})) == cubic,
                  "B^0_n (B^n_0)^3 Φ");

        const auto rep = nogo_report(m);
        const Rational th = ratio(n2 * (n + 1), 2);
        const Rational step = ratio(1, 1000);
        o.require(rep.threshold == th, "threshold");
        o.require(rep.d2 == mu_poly({0, 0, -2 * n3 * (n2 + n3), 4 * n3}), "d2 polynomial");
        o.require(rep.d2.evaluate(th).is_zero(), "d2 root");
        o.require(rep.d2.evaluate(Rational(th - step)).re() < 0 && rep.d2.evaluate(Rational(th + step)).re() > 0,
                  "d2 sign change");
        o.require(!*nogo_report(m, Rational(th - step)).psd && *nogo_report(m, th).psd, "verdict at threshold");
    }
    o.detail << "n = 3, 4, 5; threshold(3) = " << to_string(nogo_report(3).threshold);
}

// 3. closed form = recursion = brute force
void kernel_triple(Outcome& o) {
    for (int n = 1; n <= 5; ++n)
        for (int k = 0; k <= 8; ++k) {
            const auto closed = kernel_values(n, k).pi;
            o.require(closed == kernel_recursion(n, k), "recursion n=" + std::to_string(n) + " k=" + std::to_string(k));
            o.require(closed == kernel_bruteforce(n, k), "brute force n=" + std::to_string(n) + " k=" + std::to_string(k));
        }
    o.detail << "n <= 5, k <= 8, exact";
}

// 4. truncated and untruncated reductions agree for n = 1, 2
void truncation_vacuity(Outcome& o) {
    int words = 0;
    for (int n = 1; n <= 2; ++n) {
        gen::Gen g(4000 + n);
        for (int i = 0; i < 100; ++i, ++words) {
            const auto w = g.truncated_word(n, 6);
            const auto trunc = reduce_truncated(n, w);
            const auto full = to_number_basis(reduce_untruncated(w), n, reference_indicator());
            o.require(full.has_value() && NumberState(trunc.begin(), trunc.end()) == *full, "word mismatch");
        }
    }
    o.detail << words << " words, exact";
}

// 5. Taylor coefficients and G = exp(μ Ĝ)
void generating_functions(Outcome& o) {
    for (int n = 1; n <= 5; ++n)
        for (int k = 0; k <= 10; ++k) o.require(G_taylor_coeff(n, k) == kernel_values(n, k).h, "Taylor coefficient");
    gen::Gen g(5000);
    double worst = 0;
    for (int i = 0; i < 100; ++i) {
        const int n = g.uniform_int(1, 5);
        const double a = order_coupling(n).get_d();
        const double r = (n == 1 ? 2.0 : 0.95 / a) * g.uniform(0, 1);
        const auto u = std::polar(r, g.uniform(0, 2 * pi));
        const double mu = g.uniform(0.01, 5);
        worst = std::max(worst, rel(G_eval(n, u, mu), std::exp(mu * Ghat_eval(n, u))));
    }
    o.require(worst <= tol::generating_function, "G vs exp(μĜ)");
    o.detail << "max rel err " << worst << " (tol " << tol::generating_function << ")";
}

// 6. Gram matrices of admissible families are PSD
void gram_positivity(Outcome& o) {
    gen::Gen g(6000);
    double worst = 1e300;
    for (int i = 0; i < 100; ++i) {
        const int n = g.uniform_int(2, 4);
        std::vector<StepFunction> fs;
        const int m = g.uniform_int(1, 5);
        for (int j = 0; j < m; ++j) fs.push_back(g.admissible(n));
        worst = std::min(worst, gram_psd_check(n, fs, -tol::gram_min_eigenvalue).min_eigenvalue);
    }
    o.require(worst >= tol::gram_min_eigenvalue, "min eigenvalue");
    o.detail << "min eigenvalue " << worst << " (tol " << tol::gram_min_eigenvalue << ")";
}

// 7. adjointness and the represented commutator
void representation_duality(Outcome& o) {
    gen::Gen g(7000);
    double worst = 0;
    for (int i = 0; i < 100; ++i) {
        const int n = g.uniform_int(1, 4);
        const auto f = g.admissible(n), h = g.admissible(n), p = g.admissible(n);
        const JetSum psi_h = JetVector::exponential(n, h), psi_p = JetVector::exponential(n, p);
        // ⟨B^n_0(f) ψ(h), ψ(p)⟩ = ⟨ψ(h), B^0_n(f̄) ψ(p)⟩
        worst = std::max(worst, rel(inner_product(apply_creator(n, f, psi_h), psi_p),
                                    inner_product(psi_h, apply_annihilator(n, f.conj(), psi_p))));
        // [B^0_n(f), B^n_0(p)] = n^2 B^{n-1}_{n-1}(fp)
        const auto cre = RepresentedOperator::creator(n, p);
        const auto ann = RepresentedOperator::annihilator(n, f);
        const auto comm = ann.apply(cre.apply(psi_h)) - cre.apply(ann.apply(psi_h));
        const auto number = apply_number(n, f, p, JetVector::exponential(n, h)).scaled(ComplexRational(long(n) * n));
        worst = std::max(worst, rel(inner_product(comm, psi_p), inner_product(number, psi_p)));
    }
    o.require(worst <= tol::representation, "relative error");
    o.detail << "max rel err " << worst << " (tol " << tol::representation << ")";
}

// 8. splitting formula, MGF bridge and variances
void splitting_formula(Outcome& o) {
    double worst_series = 0, worst_var = 0;
    for (int n = 1; n <= 4; ++n) {
        const auto rep = splitting_series_check(n, 8);
        o.require(rep.match, "series match n=" + std::to_string(n));
        o.require(rep.vacuum_series == mgf_taylor_series(n, 8), "MGF bridge n=" + std::to_string(n));
        // the exact series evaluated near 0 agrees with the closed-form MGF
        const double sigma = std::sqrt(std::max(1.0, n * n * n * (n - 1) / 2.0));
        const double s = 0.02 / sigma, mu = 1.5;
        double sum = 0, power = 1;
        for (const auto& c : rep.vacuum_series) sum += c.evaluate(mu).real() * power, power *= s;
        worst_series = std::max(worst_series, rel(sum, mgf_eval(n, s, mu)));
        if (n >= 2) worst_var = std::max(worst_var, std::abs(variance_from_mgf(n, 1.5) - 1.5 * n) / n);
    }
    for (double t : {0.5, 1.0, 2.0, 5.0}) worst_var = std::max(worst_var, std::abs(variance_from_sec_power(t) - t));
    o.require(worst_series < 1e-12, "series vs closed form");
    o.require(worst_var <= tol::variance, "variance");
    o.detail << "exact through s^8 for n = 1..4; variance err " << worst_var << " (tol " << tol::variance << ")";
}

/// Composite Simpson, kept separate from the library quadrature.
double simpson(const std::function<double(double)>& f, double lo, double hi, int steps) {
    const double h = (hi - lo) / steps;
    double s = f(lo) + f(hi);
    for (int i = 1; i < steps; ++i) s += (i % 2 ? 4 : 2) * f(lo + i * h);
    return s * h / 3;
}

// 9. density normalization, p_1, MGFs of p_t and of the scaled density
void density_suite(Outcome& o) {
    double norm = 0, p1 = 0, mgf = 0, scaled = 0;
    for (double t : {0.5, 1.0, 2.0, 5.0}) {
        const double L = 60 + 10 * t;
        norm = std::max(norm, std::abs(simpson([t](double x) { return density_p(t, x); }, -L, L, 24000) - 1));
    }
    for (double x : {0.0, 1.0, 2.0}) p1 = std::max(p1, rel(density_p(1, x), 1 / (2 * std::cosh(pi * x / 2))));
    for (double t : {0.5, 1.0, 2.0, 5.0})
        for (double s : {0.25, 0.75, 1.3}) mgf = std::max(mgf, mgf_numeric_check(t, s).rel_err);
    for (int n = 2; n <= 3; ++n) {
        const double sigma = std::sqrt(n * n * n * (n - 1) / 2.0);
        for (double t : {0.5, 2.0})
            for (double frac : {-0.5, 0.3, 0.8}) scaled = std::max(scaled, scaled_mgf_numeric_check(n, t, frac * (pi / 2) / sigma).rel_err);
    }
    o.require(norm < tol::normalization, "normalization");
    o.require(p1 < tol::secant_density, "p_1");
    o.require(mgf < tol::mgf, "MGF of p_t");
    o.require(scaled < tol::mgf, "MGF of scaled density");
    o.detail << "norm " << norm << ", p1 " << p1 << ", mgf " << mgf << ", scaled " << scaled;
}

// 10. sampler: KS, variance, determinism
void sampler(Outcome& o) {
    const std::size_t N = 100000;
    const double t = 2.0;
    const auto xs = sample_X(t, N, 7);
    const CdfTable table(t);
    const double ks = ks_statistic(xs, [&](double x) { return table.cdf(x); });
    const double crit = tol::ks_one_percent / std::sqrt(double(N));
    const double mean = std::accumulate(xs.begin(), xs.end(), 0.0) / N;
    double var = 0;
    for (double x : xs) var += (x - mean) * (x - mean);
    var /= N - 1;
    const auto again = sample_X(t, N, 7);
    const bool identical = std::memcmp(xs.data(), again.data(), N * sizeof(double)) == 0;
    o.require(ks < crit, "KS");
    o.require(std::abs(var - t) / t < tol::sample_variance, "variance");
    o.require(identical, "determinism");
    o.detail << "KS " << ks << " (crit " << crit << "), variance " << var << ", byte-identical "
             << (identical ? "yes" : "no");
}

// 11. classicality
void classicality(Outcome& o) {
    gen::Gen g(11000);
    const std::vector<Rational> horizon{ratio(1, 2), 1, 2, ratio(7, 2)};
    int detected = 0;
    for (int i = 0; i < 50; ++i) {
        CoefficientMap c;
        const int terms = g.uniform_int(1, 4);
        for (int j = 0; j < terms; ++j) {
            const int n = g.uniform_int(0, 5), k = g.uniform_int(0, 5);
            const auto z = n == k ? ComplexRational(g.rational()) : g.complex();
            c[{n, k}] = z;
            c[{k, n}] = z.conj();
        }
        o.require(classical_check(c, horizon).classical(), "Hermitian family");
        for (const auto& t : horizon)
            for (const auto& s : horizon)
                o.require(commutator(process_at(c, t), process_at(c, s)).is_zero(), "[x(t), x(s)] = 0");
        auto broken = c;
        const auto victim = std::next(broken.begin(), g.uniform_int(0, int(broken.size()) - 1));
        victim->second += ComplexRational(ratio(1, 3), 1);
        const auto v = classical_check(broken, horizon);
        const bool found = !v.classical() && v.witness.has_value() && v.witness_index.has_value();
        o.require(found, "broken symmetry detected");
        detected += found;
    }
    o.detail << "50 families commute exactly, " << detected << "/50 breaks detected with a witness";
}

}  // namespace

int main() {
    const std::pair<const char*, void (*)(Outcome&)> criteria[] = {
        {"algebra axioms", algebra_axioms},
        {"no-go reproduction", nogo_reproduction},
        {"kernel triple agreement", kernel_triple},
        {"truncation vacuity for n = 1, 2", truncation_vacuity},
        {"generating-function identity", generating_functions},
        {"Gram positivity", gram_positivity},
        {"representation duality", representation_duality},
        {"splitting formula", splitting_formula},
        {"density suite", density_suite},
        {"sampler", sampler},
        {"classicality", classicality},
    };
    int failed = 0, index = 0;
    for (const auto& [name, run] : criteria) {
        ++index;
        Outcome o;
        const auto start = std::chrono::steady_clock::now();
        try {
            run(o);
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail << "exception: " << e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s %2d %s: %s [%.2fs]\n", o.ok ? "PASS" : "FAIL", index, name, o.detail.str().c_str(), secs);
        failed += !o.ok;
    }
    std::fflush(stdout);
    return failed == 0 ? 0 : 1;
}
