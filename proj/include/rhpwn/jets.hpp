#pragma once

#include <complex>
#include <memory>
#include <vector>

#include "rhpwn/algebra.hpp"
#include "rhpwn/rational.hpp"
#include "rhpwn/step_function.hpp"

namespace rhpwn {

inline constexpr int max_jet_order = 2;

/// ∂^p/∂ε_1...∂ε_p ψ_n(base + Σ ε_i d_i) at ε = 0. With no directions this is
/// the exponential vector ψ_n(base); ψ_n(0) = Φ.
struct JetVector {
    int n = 1;
    StepFunction base;
    std::vector<StepFunction> directions;

    static JetVector exponential(int n, StepFunction f) { return {n, std::move(f), {}}; }
    int order() const noexcept { return static_cast<int>(directions.size()); }
};

struct JetTerm {
    ComplexRational coeff;
    JetVector jet;
};

/// Formal finite linear combination of jets.
class JetSum {
public:
    JetSum() = default;
    JetSum(JetVector v) { add(1, std::move(v)); }  // NOLINT(implicit)

    /// Terms with zero coefficient or a zero direction are dropped.
    void add(const ComplexRational& c, JetVector v);
    JetSum& operator+=(const JetSum& o);
    JetSum scaled(const ComplexRational& c) const;
    friend JetSum operator-(JetSum a, const JetSum& b) { return a += b.scaled(-1); }

    const std::vector<JetTerm>& terms() const noexcept { return terms_; }
    int max_order() const noexcept;

private:
    std::vector<JetTerm> terms_;
};

/// B^n_0(f) ψ_n(g) = ∂_ε ψ_n(g + ε f): appends the direction f.
JetSum apply_creator(int n, const StepFunction& f, const JetSum& v);

/// B^0_n(f) ψ_n(g) = n ∫fg ψ_n(g) + n^3(n-1)/2 ∂_ε ψ_n(g + ε f g^2), extended to
/// first-order jets by the product rule.
JetSum apply_annihilator(int n, const StepFunction& f, const JetSum& v);

/// B^{n-1}_{n-1}(fg) ψ_n(h) as the formal second-order jet combination
/// (1/n)∫fg ψ_n(h) + n(n-1)/2 [∂²_{ερ} ψ_n(h + εg + ρ f(h+εg)^2) - ∂²_{ερ} ψ_n(h + ε f h^2 + ρ g)].
JetSum apply_number(int n, const StepFunction& f, const StepFunction& g, const JetVector& v);

/// Iterated directional derivative of the closed-form kernel, computed
/// exactly by Taylor arithmetic in the (at most 4) derivative parameters.
/// Jets of different order n are orthogonal.
std::complex<double> jet_inner_product(const JetVector& u, const JetVector& v);
std::complex<double> inner_product(const JetSum& u, const JetSum& v);

/// An operator on F_m built from creators, annihilators and scalars by the
/// commutator prescription
///   B^{n+N-1}_{k+K-1}(gf) := (kN - Kn)^{-1} (B^n_k(g) B^N_K(f) - B^N_K(f) B^n_k(g)).
class RepresentedOperator {
public:
    static RepresentedOperator creator(int m, StepFunction f);
    static RepresentedOperator annihilator(int m, StepFunction f);
    /// B^0_0(f) = ∫f.
    static RepresentedOperator scalar(int m, StepFunction f);

    int space() const noexcept;
    const GeneratorIndex& index() const noexcept;
    const StepFunction& function() const noexcept;

    JetSum apply(const JetSum& v) const;

    /// Throws PrescriptionError when kN - Kn == 0 and DomainError when the
    /// operands act on different spaces.
    friend RepresentedOperator prescribe(const RepresentedOperator& a, const RepresentedOperator& b);

private:
    struct Node;
    explicit RepresentedOperator(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

/// B^{n+N-1}_{k+K-1}(gf) on F_m from the primitive factors B^n_k(g), B^N_K(f);
/// each factor must be the creator, annihilator or scalar of F_m.
RepresentedOperator generic_rep_build(int m, int n, int k, int N, int K, const StepFunction& g, const StepFunction& f);

}  // namespace rhpwn
