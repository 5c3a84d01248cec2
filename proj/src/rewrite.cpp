#include "rhpwn/rewrite.hpp"

#include <algorithm>
#include <span>
#include <string>

#include "rhpwn/algebra.hpp"
#include "rhpwn/errors.hpp"

namespace rhpwn {

StepFunction reference_indicator() { return StepFunction::indicator(1, 2); }

Word single_interval_word(std::initializer_list<std::pair<int, int>> factors) {
    Word w;
    const auto chi = reference_indicator();
    for (auto [n, k] : factors) w.push_back(Factor{n, k, chi});
    return w;
}

MuPolynomial measure_of(const StepFunction& f, Measure mode) {
    const auto integral = f.integral();
    if (mode == Measure::concrete) return MuPolynomial(integral);
    return MuPolynomial(std::vector<ComplexRational>{ComplexRational{}, integral});
}

VacuumState VacuumState::vacuum() {
    VacuumState s;
    s.add({}, MuPolynomial(1));
    return s;
}

MuPolynomial VacuumState::vacuum_coefficient() const {
    auto it = terms_.find(Monomial{});
    return it == terms_.end() ? MuPolynomial{} : it->second;
}

void VacuumState::add(Monomial m, const MuPolynomial& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(std::move(m), c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

VacuumState& VacuumState::operator+=(const VacuumState& o) {
    for (const auto& [m, c] : o.terms_) add(m, c);
    return *this;
}

std::size_t reduction_step_bound(std::size_t word_length) {
    // A factor acting on r creators costs at most 2^{r+1} - 1 steps and
    // splits one monomial into at most 2^r; before factor i there are at
    // most i-1 creators and 2^{(i-1)(i-2)/2} monomials.
    std::size_t bound = 0;
    for (std::size_t i = 1; i <= word_length; ++i)
        bound += (std::size_t{1} << ((i - 1) * (i - 2) / 2)) * ((std::size_t{1} << i) - 1);
    return bound;
}

namespace {

/// B^m_0(f) = scale * B^m_0(normalized f).
std::pair<Creator, ComplexRational> normalized_creator(int m, const StepFunction& f) {
    const ComplexRational lead = f.pieces().front().value;
    return {Creator{m, f.scaled(ComplexRational(1) / lead)}, lead};
}

Monomial with_creator(const Monomial& m, Creator c) {
    Monomial out = m;
    out.insert(std::upper_bound(out.begin(), out.end(), c), std::move(c));
    return out;
}

struct Reducer {
    Measure mode;
    std::size_t steps = 0;

    // B^x_y(f) applied to (creators) Φ.
    VacuumState act(int x, int y, const StepFunction& f, std::span<const Creator> creators) {
        ++steps;
        VacuumState out;
        if (f.is_zero() || x < 0 || y < 0) return out;
        const Monomial rest_all(creators.begin(), creators.end());
        if (y == 0) {
            if (x == 0) {
                out.add(rest_all, measure_of(f, mode));
            } else {
                auto [c, scale] = normalized_creator(x, f);
                out.add(with_creator(rest_all, std::move(c)), MuPolynomial(scale));
            }
            return out;
        }
        if (creators.empty()) {
            if (x > y) {
                auto [c, scale] = normalized_creator(x - y, f);
                out.add(Monomial{std::move(c)}, MuPolynomial(scale));
            } else if (x == y) {
                out.add({}, measure_of(f, mode) * ComplexRational(ratio(1, x + 1)));
            }
            return out;
        }
        // B C_1 C_2... Φ = C_1 (B C_2... Φ) + [B, C_1] C_2... Φ
        const Creator& head = creators.front();
        const auto tail = creators.subspan(1);
        const auto commuted = act(x, y, f, tail);
        for (const auto& [m, c] : commuted.terms()) out.add(with_creator(m, head), c);
        const auto term = bracket({AlgebraTag::rhpwn, x, y}, {AlgebraTag::rhpwn, head.m, 0});
        if (term) {
            const auto sub = act(term->index.n, term->index.k, f * head.f, tail);
            const MuPolynomial scale(ComplexRational(Rational(term->coefficient)));
            for (const auto& [m, c] : sub.terms()) out.add(m, c * scale);
        }
        return out;
    }
};

}  // namespace

VacuumState reduce_untruncated(const Word& w, Measure mode, ReductionStats* stats) {
    Reducer r{mode};
    VacuumState state = VacuumState::vacuum();
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        VacuumState next;
        for (const auto& [m, c] : state.terms()) {
            const auto part = r.act(it->n, it->k, it->f, m);
            for (const auto& [m2, c2] : part.terms()) next.add(m2, c2 * c);
        }
        state = std::move(next);
    }
    if (stats) stats->steps = r.steps;
    return state;
}

MuPolynomial vacuum_expectation(const Word& w, Measure mode) { return reduce_untruncated(w, mode).vacuum_coefficient(); }

namespace {

enum class TruncatedKind { creator, annihilator, number };

TruncatedKind classify(int n, const Factor& f) {
    if (f.n == n && f.k == 0) return TruncatedKind::creator;
    if (f.n == 0 && f.k == n) return TruncatedKind::annihilator;
    if (f.n == n - 1 && f.k == n - 1) return TruncatedKind::number;
    throw UnsupportedGeneratorError("truncated action of order " + std::to_string(n) + " is undefined for B^" +
                                    std::to_string(f.n) + "_" + std::to_string(f.k));
}

/// c with f == c * indicator.
ComplexRational multiple_of(const StepFunction& f, const StepFunction& indicator) {
    if (f.is_zero()) return {};
    const Piece* p = f.single_piece();
    const Piece* q = indicator.single_piece();
    if (!p || !q || p->lo != q->lo || p->hi != q->hi)
        throw UnsupportedGeneratorError("truncated words need every factor to be a multiple of one indicator");
    return p->value / q->value;
}

}  // namespace

NumberState apply_truncated(int n, const Factor& factor, const NumberState& state, const StepFunction& indicator,
                            Measure mode) {
    if (n < 1) throw IndexError("truncation order must be >= 1");
    const auto kind = classify(n, factor);
    const ComplexRational c = multiple_of(factor.f, indicator);
    NumberState out;
    if (c.is_zero()) return out;
    const MuPolynomial mu_j = measure_of(indicator, mode);
    const long half_gap = long(n) * n * (n - 1) / 2;  // n^2 (n-1) / 2 is always an integer
    auto add = [&out](int k, const MuPolynomial& v) {
        if (v.is_zero()) return;
        auto& slot = out[k];
        slot += v;
        if (slot.is_zero()) out.erase(k);
    };
    for (const auto& [k, coeff] : state) {
        switch (kind) {
            case TruncatedKind::creator:
                add(k + 1, coeff * c);
                break;
            case TruncatedKind::annihilator:
                // B^0_n (B^n_0)^k Φ = n k (μ + (k-1) n^2(n-1)/2) (B^n_0)^{k-1} Φ
                if (k >= 1)
                    add(k - 1, coeff * c * ComplexRational(long(n) * k) *
                                   (mu_j + MuPolynomial(ComplexRational(long(k - 1) * half_gap))));
                break;
            case TruncatedKind::number:
                // eigenvalue μ/n + k n (n-1)
                add(k, coeff * c *
                           (mu_j * ComplexRational(ratio(1, n)) +
                            MuPolynomial(ComplexRational(long(k) * n * (n - 1)))));
                break;
        }
    }
    return out;
}

std::vector<std::pair<int, MuPolynomial>> reduce_truncated(int n, const Word& w, Measure mode) {
    if (n < 1) throw IndexError("truncation order must be >= 1");
    StepFunction indicator;
    for (const auto& f : w) {
        classify(n, f);
        if (f.f.is_zero()) continue;
        if (indicator.is_zero()) {
            const Piece* p = f.f.single_piece();
            if (!p) throw UnsupportedGeneratorError("truncated words need single-interval factor functions");
            indicator = StepFunction::indicator(p->lo, p->hi);
        } else {
            multiple_of(f.f, indicator);
        }
    }
    NumberState state{{0, MuPolynomial(1)}};
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
        if (state.empty()) break;
        state = apply_truncated(n, *it, state, indicator, mode);
    }
    return {state.begin(), state.end()};
}

MuPolynomial kernel_bruteforce(int n, int k) {
    if (n < 1 || k < 0) throw IndexError("kernel needs n >= 1 and k >= 0");
    const auto chi = reference_indicator();
    NumberState state{{k, MuPolynomial(1)}};
    const Factor lower{0, n, chi};
    for (int i = 0; i < k; ++i) state = apply_truncated(n, lower, state, chi);
    auto it = state.find(0);
    return it == state.end() ? MuPolynomial{} : it->second;
}

std::optional<NumberState> to_number_basis(const VacuumState& s, int n, const StepFunction& indicator) {
    NumberState out;
    for (const auto& [m, c] : s.terms()) {
        for (const auto& cr : m)
            if (cr.m != n || cr.f != indicator) return std::nullopt;
        auto& slot = out[static_cast<int>(m.size())];
        slot += c;
        if (slot.is_zero()) out.erase(static_cast<int>(m.size()));
    }
    return out;
}

}  // namespace rhpwn
