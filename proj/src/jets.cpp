#include "rhpwn/jets.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <string>

#include "rhpwn/errors.hpp"
#include "rhpwn/fock.hpp"

namespace rhpwn {

void JetSum::add(const ComplexRational& c, JetVector v) {
    if (c.is_zero()) return;
    if (std::any_of(v.directions.begin(), v.directions.end(), [](const StepFunction& d) { return d.is_zero(); }))
        return;
    terms_.push_back({c, std::move(v)});
}

JetSum& JetSum::operator+=(const JetSum& o) {
    for (const auto& t : o.terms_) add(t.coeff, t.jet);
    return *this;
}

JetSum JetSum::scaled(const ComplexRational& c) const {
    JetSum out;
    for (const auto& t : terms_) out.add(t.coeff * c, t.jet);
    return out;
}

int JetSum::max_order() const noexcept {
    int m = 0;
    for (const auto& t : terms_) m = std::max(m, t.jet.order());
    return m;
}

namespace {

void require_space(int n, const JetVector& v) {
    if (v.n != n)
        throw DomainError("operator of order " + std::to_string(n) + " applied to a vector of F_" +
                          std::to_string(v.n));
}

JetVector with_directions(const JetVector& v, std::initializer_list<StepFunction> extra) {
    JetVector out = v;
    out.directions.insert(out.directions.end(), extra.begin(), extra.end());
    return out;
}

}  // namespace

JetSum apply_creator(int n, const StepFunction& f, const JetSum& v) {
    JetSum out;
    for (const auto& t : v.terms()) {
        require_space(n, t.jet);
        if (t.jet.order() >= max_jet_order)
            throw UnsupportedOrderError("creator applied to a jet of order " + std::to_string(t.jet.order()) +
                                        " exceeds the order cap " + std::to_string(max_jet_order));
        out.add(t.coeff, with_directions(t.jet, {f}));
    }
    return out;
}

JetSum apply_annihilator(int n, const StepFunction& f, const JetSum& v) {
    const ComplexRational a(order_coupling(n));
    JetSum out;
    for (const auto& t : v.terms()) {
        require_space(n, t.jet);
        require_admissible(n, t.jet.base);
        const StepFunction& h = t.jet.base;
        const JetVector plain = JetVector::exponential(n, h);
        if (t.jet.order() == 0) {
            out.add(t.coeff * ComplexRational(n) * (f * h).integral(), plain);
            out.add(t.coeff * a, with_directions(plain, {f * h * h}));
        } else if (t.jet.order() == 1) {
            // ∂_ε [n ∫f(h+εd) ψ(h+εd) + a ∂_ρ ψ(h+εd + ρ f (h+εd)^2)]
            const StepFunction& d = t.jet.directions.front();
            out.add(t.coeff * ComplexRational(n) * (f * d).integral(), plain);
            out.add(t.coeff * ComplexRational(n) * (f * h).integral(), with_directions(plain, {d}));
            out.add(t.coeff * a, with_directions(plain, {d, f * h * h}));
            out.add(t.coeff * a * ComplexRational(2), with_directions(plain, {f * h * d}));
        } else {
            throw UnsupportedOrderError("annihilator applied to a jet of order " + std::to_string(t.jet.order()) +
                                        " exceeds the order cap " + std::to_string(max_jet_order));
        }
    }
    return out;
}

JetSum apply_number(int n, const StepFunction& f, const StepFunction& g, const JetVector& v) {
    require_space(n, v);
    require_admissible(n, v.base);
    if (v.order() != 0) throw UnsupportedOrderError("number operator is represented on exponential vectors only");
    const StepFunction& h = v.base;
    const ComplexRational pref(ratio(long(n) * (n - 1), 2));
    JetSum out;
    out.add(ComplexRational(ratio(1, n)) * (f * g).integral(), v);
    // ∂²_{ερ} ψ(h + εg + ρ f (h+εg)^2) = D²ψ(h)[g, f h^2] + Dψ(h)[2 f h g]
    out.add(pref, with_directions(v, {g, f * h * h}));
    out.add(pref * ComplexRational(2), with_directions(v, {f * h * g}));
    // ∂²_{ερ} ψ(h + ε f h^2 + ρ g)
    out.add(-pref, with_directions(v, {f * h * h, g}));
    return out;
}

namespace {

constexpr int max_vars = 2 * max_jet_order;
using Multi = std::array<std::complex<double>, 1u << max_vars>;

/// Product in C[x_1..x_m]/(x_i^2): a multilinear truncated Taylor algebra.
Multi multiply(const Multi& a, const Multi& b, unsigned full) {
    Multi r{};
    for (unsigned s = 0; s <= full; ++s) {
        // all submasks t of s
        for (unsigned t = s;; t = (t - 1) & s) {
            r[s] += a[t] * b[s ^ t];
            if (t == 0) break;
        }
    }
    return r;
}

/// Σ_j coef[j] N^j for nilpotent N (N[0] == 0), j <= m.
Multi polynomial_of(const Multi& nil, std::span<const std::complex<double>> coef, unsigned full) {
    Multi result{};
    Multi power{};
    power[0] = 1.0;
    for (std::size_t j = 0; j < coef.size(); ++j) {
        for (unsigned s = 0; s <= full; ++s) result[s] += coef[j] * power[s];
        power = multiply(power, nil, full);
    }
    return result;
}

}  // namespace

std::complex<double> jet_inner_product(const JetVector& u, const JetVector& v) {
    if (u.n != v.n) return 0.0;
    const int n = u.n;
    require_admissible(n, u.base);
    require_admissible(n, v.base);
    const int p = u.order(), q = v.order();
    if (p > max_jet_order || q > max_jet_order)
        throw UnsupportedOrderError("jet order above " + std::to_string(max_jet_order));
    const int m = p + q;
    const unsigned full = (1u << m) - 1;

    std::vector<const StepFunction*> fs{&u.base};
    for (const auto& d : u.directions) fs.push_back(&d);
    fs.push_back(&v.base);
    for (const auto& d : v.directions) fs.push_back(&d);

    const double a = order_coupling(n).get_d();
    const double c = n == 1 ? 0.0 : 2.0 / (double(n) * n * (n - 1));

    Multi exponent{};
    std::vector<std::complex<double>> coef(m + 1);
    for (const auto& cell : common_refinement(fs)) {
        Multi left{}, right{};
        left[0] = cell.values[0].conj().to_complex();
        for (int i = 0; i < p; ++i) left[1u << i] = cell.values[1 + i].conj().to_complex();
        right[0] = cell.values[1 + p].to_complex();
        for (int j = 0; j < q; ++j) right[1u << (p + j)] = cell.values[2 + p + j].to_complex();
        Multi z = multiply(left, right, full);
        const std::complex<double> z0 = z[0];
        z[0] = 0.0;
        // Taylor coefficients L^{(j)}(z0)/j! of the per-point log-kernel L
        std::fill(coef.begin(), coef.end(), 0.0);
        if (n == 1) {
            coef[0] = z0;
            if (m >= 1) coef[1] = 1.0;
        } else {
            const std::complex<double> w = 1.0 - a * z0;
            coef[0] = -c * std::log(w);
            std::complex<double> ratio = 1.0;
            for (int j = 1; j <= m; ++j) {
                ratio *= a / w;
                coef[j] = c * ratio / double(j);
            }
        }
        const Multi piece = polynomial_of(z, coef, full);
        const double len = Rational(cell.hi - cell.lo).get_d();
        for (unsigned s = 0; s <= full; ++s) exponent[s] += len * piece[s];
    }
    const std::complex<double> base = std::exp(exponent[0]);
    exponent[0] = 0.0;
    std::vector<std::complex<double>> exp_coef(m + 1);
    double fact = 1.0;
    for (int j = 0; j <= m; ++j) {
        if (j > 0) fact *= j;
        exp_coef[j] = 1.0 / fact;
    }
    return base * polynomial_of(exponent, exp_coef, full)[full];
}

std::complex<double> inner_product(const JetSum& u, const JetSum& v) {
    std::complex<double> sum = 0.0;
    for (const auto& s : u.terms())
        for (const auto& t : v.terms())
            sum += std::conj(s.coeff.to_complex()) * t.coeff.to_complex() * jet_inner_product(s.jet, t.jet);
    return sum;
}

struct RepresentedOperator::Node {
    enum class Kind { creator, annihilator, scalar, commutator } kind;
    int space;
    GeneratorIndex index;
    StepFunction f;
    ComplexRational scale;  // commutator only
    std::optional<RepresentedOperator> left;
    std::optional<RepresentedOperator> right;
};

RepresentedOperator RepresentedOperator::creator(int m, StepFunction f) {
    return RepresentedOperator(std::make_shared<const Node>(
        Node{Node::Kind::creator, m, {AlgebraTag::rhpwn, m, 0}, std::move(f), {}, {}, {}}));
}

RepresentedOperator RepresentedOperator::annihilator(int m, StepFunction f) {
    return RepresentedOperator(std::make_shared<const Node>(
        Node{Node::Kind::annihilator, m, {AlgebraTag::rhpwn, 0, m}, std::move(f), {}, {}, {}}));
}

RepresentedOperator RepresentedOperator::scalar(int m, StepFunction f) {
    return RepresentedOperator(std::make_shared<const Node>(
        Node{Node::Kind::scalar, m, {AlgebraTag::rhpwn, 0, 0}, std::move(f), {}, {}, {}}));
}

int RepresentedOperator::space() const noexcept { return node_->space; }
const GeneratorIndex& RepresentedOperator::index() const noexcept { return node_->index; }
const StepFunction& RepresentedOperator::function() const noexcept { return node_->f; }

JetSum RepresentedOperator::apply(const JetSum& v) const {
    const Node& node = *node_;
    switch (node.kind) {
        case Node::Kind::creator:
            return apply_creator(node.space, node.f, v);
        case Node::Kind::annihilator:
            return apply_annihilator(node.space, node.f, v);
        case Node::Kind::scalar:
            return v.scaled(node.f.integral());
        case Node::Kind::commutator:
            break;
    }
    const JetSum ab = node.left->apply(node.right->apply(v));
    const JetSum ba = node.right->apply(node.left->apply(v));
    return (ab - ba).scaled(node.scale);
}

RepresentedOperator prescribe(const RepresentedOperator& a, const RepresentedOperator& b) {
    if (a.space() != b.space()) throw DomainError("prescription factors act on different Fock spaces");
    const auto& [tag_a, n, k] = a.index();
    const auto& [tag_b, N, K] = b.index();
    const long denom = long(k) * N - long(K) * n;
    if (denom == 0)
        throw PrescriptionError("kN - Kn = 0 for (n,k,N,K) = (" + std::to_string(n) + "," + std::to_string(k) + "," +
                                std::to_string(N) + "," + std::to_string(K) + ")");
    return RepresentedOperator(std::make_shared<const RepresentedOperator::Node>(RepresentedOperator::Node{
        RepresentedOperator::Node::Kind::commutator, a.space(), {AlgebraTag::rhpwn, n + N - 1, k + K - 1},
        a.function() * b.function(), ComplexRational(ratio(1, denom)), a, b}));
}

namespace {

RepresentedOperator primitive(int m, int n, int k, const StepFunction& f) {
    if (n == m && k == 0) return RepresentedOperator::creator(m, f);
    if (n == 0 && k == m) return RepresentedOperator::annihilator(m, f);
    if (n == 0 && k == 0) return RepresentedOperator::scalar(m, f);
    throw DomainError("B^" + std::to_string(n) + "_" + std::to_string(k) + " is not a primitive operator on F_" +
                      std::to_string(m));
}

}  // namespace

RepresentedOperator generic_rep_build(int m, int n, int k, int N, int K, const StepFunction& g, const StepFunction& f) {
    if (long(k) * N - long(K) * n == 0)
        throw PrescriptionError("kN - Kn = 0, the prescription cannot be inverted");
    return prescribe(primitive(m, n, k, g), primitive(m, N, K, f));
}

}  // namespace rhpwn
