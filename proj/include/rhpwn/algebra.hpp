#pragma once

#include <compare>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "rhpwn/rational.hpp"
#include "rhpwn/step_function.hpp"

namespace rhpwn {

enum class AlgebraTag { rhpwn, winfty };

const char* to_string(AlgebraTag tag) noexcept;
AlgebraTag parse_algebra_tag(std::string_view text);

/// B^n_k (RHPWN: creation power n, annihilation power k) or
/// B̂^n_k (w∞: conformal weight n >= 2, mode k in Z).
struct GeneratorIndex {
    AlgebraTag tag = AlgebraTag::rhpwn;
    int n = 0;
    int k = 0;

    friend bool operator==(const GeneratorIndex&, const GeneratorIndex&) = default;
    friend auto operator<=>(const GeneratorIndex&, const GeneratorIndex&) = default;
};

/// Structure constant and target of [X_a(g), X_b(f)]. Returns nullopt when
/// the bracket vanishes identically (zero constant or an RHPWN index < 0).
struct BracketTerm {
    long coefficient;
    GeneratorIndex index;
};
std::optional<BracketTerm> bracket(const GeneratorIndex& a, const GeneratorIndex& b);

/// Finite linear combination Σ X_{n,k}(f_{n,k}) of generators of one algebra.
///
/// Coefficients live inside the step functions: c * B^n_k(f) == B^n_k(c f).
/// The map never stores zero functions, so the representation is unique.
/// For RHPWN, B^0_0(f) is the scalar ∫f and is central.
class AlgebraElement {
public:
    explicit AlgebraElement(AlgebraTag tag = AlgebraTag::rhpwn) : tag_(tag) {}

    /// RHPWN indices with n < 0 or k < 0 give the zero element.
    /// w∞ requires n >= 2 (IndexError otherwise).
    static AlgebraElement generator(AlgebraTag tag, int n, int k, const StepFunction& f);
    static AlgebraElement generator(const GeneratorIndex& idx, const StepFunction& f) {
        return generator(idx.tag, idx.n, idx.k, f);
    }

    AlgebraTag tag() const noexcept { return tag_; }
    const std::map<std::pair<int, int>, StepFunction>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }

    /// ∫f of the B^0_0(f) term (RHPWN only; 0 otherwise).
    ComplexRational scalar_part() const;

    AlgebraElement& operator+=(const AlgebraElement& o);
    AlgebraElement& operator-=(const AlgebraElement& o);
    friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
    friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
    AlgebraElement scaled(const ComplexRational& c) const;

    friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;

private:
    void add_term(int n, int k, const StepFunction& f);

    AlgebraTag tag_;
    std::map<std::pair<int, int>, StepFunction> terms_;
};

/// Bilinear extension of the RHPWN / w∞ bracket. Throws TagMismatchError
/// when the operands belong to different algebras.
AlgebraElement commutator(const AlgebraElement& a, const AlgebraElement& b);

/// (B^n_k(f))* = B^k_n(f̄), (B̂^n_k(f))* = B̂^n_{-k}(f̄).
AlgebraElement involution(const AlgebraElement& a);

/// Largest n served by the cached Stirling table.
inline constexpr int stirling_max_n = 128;

/// Signed Stirling number of the first kind s_{n,k}; IndexError unless
/// 0 <= k <= n <= stirling_max_n.
const Integer& stirling_first(int n, int k);

/// (b†)^n b^n = Σ_m s_{n,m} (b†b)^m, returned as the nonzero (m, s_{n,m}).
std::vector<std::pair<int, Integer>> normal_order_expansion(int n);

/// B^n_k(f) = ∫ f (a†)^{n-k} (a†a)^k for n >= k >= 0.
struct WhiteNoiseForm {
    int creator_excess;  // n - k
    int number_power;    // k
};
WhiteNoiseForm white_noise_form(int n, int k);

}  // namespace rhpwn
