#include "rhpwn/nogo.hpp"

#include <string>

#include "rhpwn/errors.hpp"
#include "rhpwn/rewrite.hpp"

namespace rhpwn {

namespace {

MuPolynomial poly(std::initializer_list<Integer> c) {
    std::vector<ComplexRational> v;
    for (const auto& x : c) v.emplace_back(Rational(x));
    return MuPolynomial(std::move(v));
}

}  // namespace

NoGoReport nogo_report(int n, std::optional<Rational> mu) {
    if (n < 3) throw OutOfScopeError("the no-go criterion is stated for n >= 3, got n = " + std::to_string(n));
    if (mu && *mu <= 0) throw DomainError("interval measure μ must be > 0");
    NoGoReport r;
    r.n = n;
    const int m = 2 * n;
    // rows/columns: B^{2n}_0 Φ, (B^n_0)^2 Φ; entry (i,j) = ⟨v_i, v_j⟩ = ⟨v_i* v_j⟩
    r.entries[0][0] = vacuum_expectation(single_interval_word({{0, m}, {m, 0}}));
    r.entries[0][1] = vacuum_expectation(single_interval_word({{0, m}, {n, 0}, {n, 0}}));
    r.entries[1][0] = vacuum_expectation(single_interval_word({{0, n}, {0, n}, {m, 0}}));
    r.entries[1][1] = vacuum_expectation(single_interval_word({{0, n}, {0, n}, {n, 0}, {n, 0}}));

    const Integer N = n;
    const Integer n2 = N * N, n3 = n2 * N, n4 = n3 * N;
    const MuPolynomial e00 = poly({0, 2 * N});
    const MuPolynomial e01 = poly({0, 2 * n3});
    const MuPolynomial e11 = poly({0, n4 * (N - 1), 2 * n2});
    if (r.entries[0][0] != e00 || r.entries[0][1] != e01 || r.entries[1][0] != e01 || r.entries[1][1] != e11)
        throw InternalError("rewrite engine disagrees with the closed-form no-go matrix for n = " + std::to_string(n));

    r.d1 = r.entries[0][0];
    r.d2 = r.entries[0][0] * r.entries[1][1] - r.entries[0][1] * r.entries[1][0];
    // 2n^3 μ^2 (2μ - n^2 - n^3)
    if (r.d2 != poly({0, 0, -2 * n3 * (n2 + n3), 4 * n3}))
        throw InternalError("determinant disagrees with its factored form");
    r.threshold = ratio(n2 * (N + 1), 2);
    if (mu) {
        r.mu = mu;
        r.d2_value = r.d2.evaluate(*mu).re();
        // μ > 0 makes d1 and the (1,1) entry positive, so PSD iff d2 >= 0
        r.psd = *r.d2_value >= 0;
        if (*r.psd != (*mu >= r.threshold)) throw InternalError("d2 sign change away from the threshold");
    }
    return r;
}

}  // namespace rhpwn
