#include <doctest.h>

#include "../support/generators.hpp"
#include "rhpwn/errors.hpp"
#include "rhpwn/fock.hpp"
#include "rhpwn/rewrite.hpp"

using namespace rhpwn;

namespace {

MuPolynomial mu_poly(std::initializer_list<long> c) { return MuPolynomial(c); }

/// The word read right to left, each factor involuted: w* for w = X_1 ... X_m.
Word adjoint(const Word& w) {
    Word out;
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back({it->k, it->n, it->f.conj()});
    return out;
}

}  // namespace

TEST_CASE("vacuum action of single generators") {
    for (int n = 1; n <= 5; ++n) {
        CHECK(vacuum_expectation(single_interval_word({{0, n}, {n, 0}})) == mu_poly({0, n}));
        // B^k_k Φ = μ/(k+1) Φ
        const auto s = reduce_untruncated(single_interval_word({{n, n}}));
        CHECK(s.vacuum_coefficient() == MuPolynomial::mu() * ComplexRational(ratio(1, n + 1)));
        CHECK(s.terms().size() == 1);
        // B^k_n Φ = 0 for k < n
        CHECK(reduce_untruncated(single_interval_word({{n - 1, n}})).is_zero());
    }
    CHECK(vacuum_expectation({}) == MuPolynomial(1));
    // B^5_2 Φ = B^3_0 Φ
    const auto s = reduce_untruncated(single_interval_word({{5, 2}}));
    REQUIRE(s.terms().size() == 1);
    CHECK(s.terms().begin()->first == Monomial{Creator{3, reference_indicator()}});
}

TEST_CASE("no-go moments reproduce the closed forms") {
    for (long n = 3; n <= 5; ++n) {
        const int m = static_cast<int>(2 * n), ni = static_cast<int>(n);
        CHECK(vacuum_expectation(single_interval_word({{0, m}, {m, 0}})) == mu_poly({0, 2 * n}));
        CHECK(vacuum_expectation(single_interval_word({{0, m}, {ni, 0}, {ni, 0}})) == mu_poly({0, 2 * n * n * n}));
        CHECK(vacuum_expectation(single_interval_word({{0, ni}, {0, ni}, {ni, 0}, {ni, 0}})) ==
              mu_poly({0, n * n * n * n * (n - 1), 2 * n * n}));

        // B^0_n (B^n_0)^3 Φ = 3n(μ + n^2(n-1)) (B^n_0)^2 Φ + n^4(n-1)(n-2) B^{2n}_0 Φ
        const auto s = reduce_untruncated(single_interval_word({{0, ni}, {ni, 0}, {ni, 0}, {ni, 0}}));
        const auto chi = reference_indicator();
        VacuumState expect;
        expect.add({Creator{ni, chi}, Creator{ni, chi}}, mu_poly({3 * n * n * n * (n - 1), 3 * n}));
        expect.add({Creator{m, chi}}, mu_poly({n * n * n * n * (n - 1) * (n - 2)}));
        CHECK(s == expect);
    }
}

TEST_CASE("multi-interval words multiply functions inside the bracket") {
    const auto f = StepFunction::indicator(1, 3, 2);
    const auto g = StepFunction::indicator(2, 5);
    // ⟨B^0_1(f) B^1_0(g)⟩ = ∫fg, in units of μ
    const Word w{{0, 1, f}, {1, 0, g}};
    CHECK(vacuum_expectation(w) == MuPolynomial::mu() * ComplexRational(2));
    CHECK(vacuum_expectation(w, Measure::concrete) == MuPolynomial(2));
    // disjoint supports commute: ⟨B^0_1(f) B^1_0(h)⟩ = 0
    CHECK(vacuum_expectation(Word{{0, 1, f}, {1, 0, StepFunction::indicator(4, 5)}}).is_zero());
}

TEST_CASE("truncated action") {
    for (int n = 1; n <= 5; ++n) {
        const auto chi = reference_indicator();
        for (int k = 0; k <= 4; ++k) {
            NumberState s{{k, MuPolynomial(1)}};
            const auto out = apply_truncated(n, Factor{n - 1, n - 1, chi}, s, chi);
            const auto ev = MuPolynomial::mu() * ComplexRational(ratio(1, n)) + MuPolynomial(k * n * (n - 1));
            CHECK(out == NumberState{{k, ev}});
        }
        CHECK(reduce_truncated(n, single_interval_word({{0, n}, {n, 0}})) ==
              std::vector<std::pair<int, MuPolynomial>>{{0, mu_poly({0, n})}});
        CHECK(reduce_truncated(n, single_interval_word({{0, n}})).empty());
    }
    CHECK_THROWS_AS(reduce_truncated(3, single_interval_word({{2, 1}})), UnsupportedGeneratorError);
    CHECK_THROWS_AS(reduce_truncated(2, Word{{2, 0, StepFunction::indicator(1, 2)}, {0, 2, StepFunction::indicator(1, 3)}}),
                    UnsupportedGeneratorError);
    CHECK_THROWS_AS(reduce_truncated(0, {}), IndexError);
}

TEST_CASE("brute-force kernels") {
    CHECK(kernel_bruteforce(3, 0) == MuPolynomial(1));
    for (int n = 1; n <= 5; ++n) CHECK(kernel_bruteforce(n, 1) == mu_poly({0, n}));
    CHECK(kernel_bruteforce(2, 2) == mu_poly({0, 16, 8}));
    for (int n = 1; n <= 5; ++n)
        for (int k = 0; k <= 8; ++k) CHECK(kernel_bruteforce(n, k) == kernel_values(n, k).pi);
}

TEST_CASE("truncation is vacuous for n = 1, 2") {
    for (int n = 1; n <= 2; ++n) {
        gen::Gen g(100 + n);
        for (int i = 0; i < 80; ++i) {
            const auto w = g.truncated_word(n);
            const auto trunc = reduce_truncated(n, w);
            const auto full = to_number_basis(reduce_untruncated(w), n, reference_indicator());
            REQUIRE(full.has_value());
            CHECK(NumberState(trunc.begin(), trunc.end()) == *full);
        }
    }
}

TEST_CASE("truncation changes the action for n >= 3") {
    // B^0_3 (B^3_0)^3 Φ produces a B^6_0 Φ term untruncated
    const auto w = single_interval_word({{0, 3}, {3, 0}, {3, 0}, {3, 0}});
    CHECK_FALSE(to_number_basis(reduce_untruncated(w), 3, reference_indicator()).has_value());
    CHECK(reduce_truncated(3, w) == std::vector<std::pair<int, MuPolynomial>>{{2, mu_poly({162, 9})}});
}

TEST_CASE("moments are Hermitian and reduction terminates within the bound") {
    gen::Gen g(7);
    for (int i = 0; i < 60; ++i) {
        Word w;
        const int len = g.uniform_int(0, 5);
        for (int j = 0; j < len; ++j) w.push_back({g.uniform_int(0, 3), g.uniform_int(0, 3), g.step_function(2)});
        CHECK(vacuum_expectation(adjoint(w)) == vacuum_expectation(w).conj());
        ReductionStats stats;
        reduce_untruncated(w, Measure::symbolic, &stats);
        CHECK(stats.steps <= reduction_step_bound(w.size()));
    }
    CHECK(reduction_step_bound(0) == 0);
    CHECK(reduction_step_bound(1) == 1);
}
