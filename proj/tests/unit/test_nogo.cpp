#include <doctest.h>

#include "rhpwn/errors.hpp"
#include "rhpwn/nogo.hpp"

using namespace rhpwn;

namespace {

MuPolynomial mu_poly(std::initializer_list<long> c) { return MuPolynomial(c); }

}  // namespace

TEST_CASE("no-go Gram matrix") {
    for (long n = 3; n <= 5; ++n) {
        const auto r = nogo_report(int(n));
        CHECK(r.entries[0][0] == mu_poly({0, 2 * n}));
        CHECK(r.entries[0][1] == mu_poly({0, 2 * n * n * n}));
        CHECK(r.entries[1][0] == r.entries[0][1]);
        CHECK(r.entries[1][1] == mu_poly({0, n * n * n * n * (n - 1), 2 * n * n}));
        CHECK(r.d1 == r.entries[0][0]);
        // d2 = 2n^3 μ^2 (2μ - n^2 - n^3)
        CHECK(r.d2 == mu_poly({0, 0, -2 * n * n * n * (n * n + n * n * n), 4 * n * n * n}));
        CHECK(r.threshold == ratio(n * n * (n + 1), 2));
        CHECK_FALSE(r.psd.has_value());
        // sign change exactly at the threshold
        const Rational th = r.threshold;
        CHECK(r.d2.evaluate(th).is_zero());
        CHECK(r.d2.evaluate(Rational(th - ratio(1, 1000))).re() < 0);
        CHECK(r.d2.evaluate(Rational(th + ratio(1, 1000))).re() > 0);
        CHECK_FALSE(*nogo_report(int(n), Rational(th - ratio(1, 1000))).psd);
        CHECK(*nogo_report(int(n), th).psd);
    }
    CHECK(nogo_report(3).threshold == 18);
    const auto r1 = nogo_report(3, Rational(1));
    CHECK(*r1.d2_value == -1836);
    CHECK_FALSE(*r1.psd);
    const auto r18 = nogo_report(3, Rational(18));
    CHECK(*r18.d2_value == 0);
    CHECK(*r18.psd);
}

TEST_CASE("no-go errors") {
    CHECK_THROWS_AS(nogo_report(2), OutOfScopeError);
    CHECK_THROWS_AS(nogo_report(1), OutOfScopeError);
    CHECK_THROWS_AS(nogo_report(3, Rational(0)), DomainError);
    CHECK_THROWS_AS(nogo_report(3, Rational(-1)), DomainError);
}
