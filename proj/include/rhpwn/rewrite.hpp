#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "rhpwn/mu_polynomial.hpp"
#include "rhpwn/step_function.hpp"

namespace rhpwn {

/// One RHPWN factor B^n_k(f) of a word.
struct Factor {
    int n = 0;
    int k = 0;
    StepFunction f;
};

/// Ordered product of RHPWN generators; the rightmost factor acts first on Φ.
using Word = std::vector<Factor>;

/// The reference interval (1, 2]. In symbolic measure mode it has measure μ.
StepFunction reference_indicator();

/// Word of B^n_k := B^n_k(χ_I) on the reference interval, written left to right.
Word single_interval_word(std::initializer_list<std::pair<int, int>> factors);

/// How integrals of step functions enter scalar coefficients.
///   symbolic: lengths are counted in units of μ, ∫f ↦ (∫f)·μ, so χ_(1,2] has measure μ;
///   concrete: ∫f is the exact rational value (degree-0 polynomial).
enum class Measure { symbolic, concrete };

MuPolynomial measure_of(const StepFunction& f, Measure mode);

/// Pure creator B^m_0(f), m >= 1, with f normalized so that its first piece has value 1.
struct Creator {
    int m = 0;
    StepFunction f;

    friend bool operator==(const Creator&, const Creator&) = default;
    friend std::strong_ordering operator<=>(const Creator& a, const Creator& b) {
        if (auto c = a.m <=> b.m; c != 0) return c;
        return a.f <=> b.f;
    }
};

/// Sorted multiset of creators; creators commute, the empty monomial is Φ.
using Monomial = std::vector<Creator>;

/// Finite combination Σ coeff · (monomial) Φ.
class VacuumState {
public:
    VacuumState() = default;
    static VacuumState vacuum();

    const std::map<Monomial, MuPolynomial>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    /// Coefficient of Φ itself.
    MuPolynomial vacuum_coefficient() const;

    void add(Monomial m, const MuPolynomial& c);
    VacuumState& operator+=(const VacuumState& o);

    friend bool operator==(const VacuumState&, const VacuumState&) = default;

private:
    std::map<Monomial, MuPolynomial> terms_;
};

struct ReductionStats {
    std::size_t steps = 0;
};

/// Proven upper bound on ReductionStats::steps for a word of the given length.
std::size_t reduction_step_bound(std::size_t word_length);

/// Untruncated action: applies the factors right to left, commuting each
/// non-creator past the creators already built and evaluating generators
/// on Φ by B^n_k Φ = 0 (n < k), B^{n-k}_0 Φ (n > k), ∫f/(n+1) Φ (n = k).
VacuumState reduce_untruncated(const Word& w, Measure mode = Measure::symbolic, ReductionStats* stats = nullptr);

/// ⟨Φ, w Φ⟩: the Φ coefficient of reduce_untruncated(w).
MuPolynomial vacuum_expectation(const Word& w, Measure mode = Measure::symbolic);

/// Coefficients on the number vectors (B^n_0(χ_J))^k Φ, keyed by k.
using NumberState = std::map<int, MuPolynomial>;

/// Truncated action of one factor on a number-basis state. The factor must
/// be B^n_0, B^0_n or B^{n-1}_{n-1} with function c·χ_J; `indicator` is χ_J.
NumberState apply_truncated(int n, const Factor& factor, const NumberState& state, const StepFunction& indicator,
                            Measure mode = Measure::symbolic);

/// Truncated reduction of w Φ in the basis {(B^n_0)^k Φ}. Every factor must
/// be one of B^n_0, B^0_n, B^{n-1}_{n-1} and all factor functions must be
/// multiples of one common indicator χ_J (UnsupportedGeneratorError otherwise).
std::vector<std::pair<int, MuPolynomial>> reduce_truncated(int n, const Word& w, Measure mode = Measure::symbolic);

/// ⟨(B^n_0)^k Φ, (B^n_0)^k Φ⟩ by k applications of the truncated annihilator.
MuPolynomial kernel_bruteforce(int n, int k);

/// Re-expresses an untruncated state in the number basis of B^n_0(χ_J).
/// Returns nullopt if some monomial is not a power of that creator.
std::optional<NumberState> to_number_basis(const VacuumState& s, int n, const StepFunction& indicator);

}  // namespace rhpwn
