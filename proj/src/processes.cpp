#include "rhpwn/processes.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "rhpwn/errors.hpp"
#include "rhpwn/fock.hpp"
#include "rhpwn/kernels.hpp"
#include "rhpwn/rewrite.hpp"
#include "rhpwn/series.hpp"

namespace rhpwn {

namespace {

constexpr double pi = std::numbers::pi;

void require_order(int n) {
    if (n < 1) throw IndexError("process order n must be >= 1, got " + std::to_string(n));
}

void require_time(double t) {
    if (!(t > 0)) throw DomainError("t must be > 0, got " + std::to_string(t));
}

Rational rational_pow(const Rational& a, int e) {
    Rational r = 1;
    for (int i = 0; i < e; ++i) r *= a;
    return r;
}

double sigma(int n) { return std::sqrt(order_coupling(n).get_d()); }

}  // namespace

// ---- splitting formula -----------------------------------------------------

SplittingSolution riccati_split(int n, int order) {
    require_order(n);
    if (order < 0) throw IndexError("series order must be >= 0");
    const Rational a = order_coupling(n);
    SplittingSolution sol;
    sol.n = n;
    // tan(σs)/σ = (sin(σs)/σ) / cos(σs)
    sol.V = series::mul(series::sin_over_c(a, order), series::inverse(series::cos_scaled(a, order), order), order);
    // ln cos x = Σ ℓ_{2j} x^{2j}, so -(nμ/a) ln cos(σs) has s^{2j} coefficient -nμ ℓ_{2j} a^{j-1}
    const auto logcos = series::log(series::cos_scaled(1, order), order);
    sol.W = series::zeros<MuPolynomial>(order);
    for (int j = 1; 2 * j <= order; ++j)
        sol.W[2 * j] = MuPolynomial::mu() * ComplexRational(Rational(-n * logcos[2 * j] * rational_pow(a, j - 1)));
    return sol;
}

double SplittingSolution::V_eval(double s) const {
    if (n == 1) return s;
    const double sg = sigma(n);
    if (std::abs(sg * s) >= pi / 2) throw DomainError("V(s) needs |σ s| < π/2");
    return std::tan(sg * s) / sg;
}

double SplittingSolution::W_eval(double s, double mu) const {
    if (n == 1) return s * s * mu / 2;
    const double sg = sigma(n);
    if (std::abs(sg * s) >= pi / 2) throw DomainError("W(s) needs |σ s| < π/2");
    return -(n * mu / order_coupling(n).get_d()) * std::log(std::cos(sg * s));
}

std::vector<Rational> riccati_residual(const SplittingSolution& sol) {
    const int order = static_cast<int>(sol.V.size()) - 1;
    if (order < 1) return {};
    const Rational a = order_coupling(sol.n);
    auto res = series::derivative(sol.V);
    const auto v2 = series::mul(sol.V, sol.V, order - 1);
    res[0] -= 1;
    for (int j = 0; j < order; ++j) res[j] -= a * v2[j];
    return res;
}

SplitCheckReport splitting_series_check(int n, int order) {
    require_order(n);
    if (order < 0 || order > 12) throw DomainError("split check order must lie in [0, 12]");
    SplitCheckReport rep;
    rep.n = n;
    rep.order = order;

    // left: Σ_j s^j/j! (B^n_0 + B^0_n)^j Φ by the truncated engine
    const auto chi = reference_indicator();
    const Factor up{n, 0, chi}, down{0, n, chi};
    std::vector<NumberState> lhs{NumberState{{0, MuPolynomial(1)}}};
    Rational fact = 1;
    for (int j = 1; j <= order; ++j) {
        NumberState next = apply_truncated(n, up, lhs.back(), chi);
        for (const auto& [k, c] : apply_truncated(n, down, lhs.back(), chi)) {
            auto& slot = next[k];
            slot += c;
            if (slot.is_zero()) next.erase(k);
        }
        lhs.push_back(std::move(next));
    }
    for (int j = 0; j <= order; ++j) {
        if (j > 0) fact *= j;
        for (auto& [k, c] : lhs[j]) c *= ComplexRational(Rational(1 / fact));
    }

    // right: e^{W(s)} Σ_k V(s)^k/k! (B^n_0)^k Φ
    const auto sol = riccati_split(n, order);
    const auto ew = series::exp(sol.W, order);
    std::vector<Rational> vk = series::zeros<Rational>(order);
    vk[0] = 1;
    Rational kfact = 1;
    for (int k = 0; k <= order; ++k) {
        if (k > 0) {
            vk = series::mul(vk, sol.V, order);
            kfact *= k;
        }
        std::vector<MuPolynomial> term(order + 1);
        for (int j = 0; j <= order; ++j) term[j] = MuPolynomial(ComplexRational(Rational(vk[j] / kfact)));
        const auto rhs = series::mul(ew, term, order);
        for (int j = 0; j <= order; ++j) {
            auto it = lhs[j].find(k);
            const MuPolynomial left = it == lhs[j].end() ? MuPolynomial{} : it->second;
            if (rep.match && left != rhs[j]) {
                rep.match = false;
                rep.first_mismatch = {j, k};
                rep.lhs_at_mismatch = left;
                rep.rhs_at_mismatch = rhs[j];
            }
        }
    }
    // terms with k > order would need s^{>order}; the left side never produces them
    for (int j = 0; j <= order; ++j) {
        auto it = lhs[j].find(0);
        rep.vacuum_series.push_back(it == lhs[j].end() ? MuPolynomial{} : it->second);
    }
    return rep;
}

std::vector<MuPolynomial> mgf_taylor_series(int n, int order) {
    require_order(n);
    if (order < 0) throw IndexError("series order must be >= 0");
    auto out = series::zeros<MuPolynomial>(order);
    if (n == 1) {
        // e^{s^2 μ/2}
        MuPolynomial term(1);
        for (int m = 0; 2 * m <= order; ++m) {
            out[2 * m] = term;
            term = term * MuPolynomial::mu() * ComplexRational(ratio(1, 2 * (m + 1)));
        }
        return out;
    }
    // sec(σs)^p = (1 + c)^{-p}, c = cos(σs) - 1, p = nμ/a
    const Rational a = order_coupling(n);
    auto c = series::cos_scaled(a, order);
    c[0] = 0;
    const MuPolynomial p = MuPolynomial::mu() * ComplexRational(Rational(n / a));
    std::vector<Rational> cm = series::zeros<Rational>(order);
    cm[0] = 1;
    MuPolynomial binom(1);  // binom(-p, m)
    for (int m = 0; 2 * m <= order; ++m) {
        if (m > 0) {
            cm = series::mul(cm, c, order);
            binom = binom * (-p - MuPolynomial(m - 1)) * ComplexRational(ratio(1, m));
        }
        for (int j = 0; j <= order; ++j)
            if (cm[j] != 0) out[j] += binom * ComplexRational(cm[j]);
    }
    return out;
}

double mgf_eval(int n, double s, double t) {
    require_order(n);
    require_time(t);
    if (n == 1) return std::exp(s * s * t / 2);
    const double arg = sigma(n) * std::abs(s);
    if (arg >= pi / 2)
        throw DomainError("mgf of order " + std::to_string(n) + " needs |s| sqrt(n^3(n-1)/2) < π/2");
    return std::pow(1.0 / std::cos(arg), n * t / order_coupling(n).get_d());
}

double sec_power(double t, double s) {
    require_time(t);
    if (std::abs(s) >= pi / 2) throw DomainError("(sec s)^t needs |s| < π/2");
    return std::pow(1.0 / std::cos(s), t);
}

// ---- continuous binomial / Beta law ----------------------------------------

std::complex<double> complex_log_gamma(std::complex<double> z) {
    if (!(z.real() > 0)) throw DomainError("log Γ implemented for Re z > 0 only");
    // Lanczos, g = 7, 9 terms
    static constexpr double g = 7.0;
    static constexpr double coef[] = {0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
                                      771.32342877765313,   -176.61502916214059,   12.507343278686905,
                                      -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
    std::complex<double> shift = 0.0;
    while (z.real() < 8.0) {
        shift += std::log(z);
        z += 1.0;
    }
    const std::complex<double> w = z - 1.0;
    std::complex<double> x = coef[0];
    for (int i = 1; i < 9; ++i) x += coef[i] / (w + double(i));
    const std::complex<double> tt = w + g + 0.5;
    return 0.5 * std::log(2 * pi) + (w + 0.5) * std::log(tt) - tt + std::log(x) - shift;
}

double density_p(double t, double x) {
    require_time(t);
    const std::complex<double> z(t / 2, x / 2);
    const std::complex<double> s = complex_log_gamma(z) + complex_log_gamma(std::conj(z)) - complex_log_gamma(t);
    const std::complex<double> v = std::exp(s) * (std::pow(2.0, t - 1) / (2 * pi));
    if (std::abs(v.imag()) > 1e-12 * std::max(1.0, std::abs(v.real())))
        throw InternalError("density has a non-negligible imaginary part");
    return v.real();
}

double density_q_scaled(int n, double t, double y) {
    require_order(n);
    if (n < 2) throw OutOfScopeError("scaled density is defined for n >= 2; n = 1 is Gaussian");
    require_time(t);
    const double sg = sigma(n);
    const double tau = n * t / order_coupling(n).get_d();
    return density_p(tau, y / sg) / sg;
}

double tail_cutoff(double t, double eps) {
    require_time(t);
    if (!(eps > 0)) throw DomainError("tail tolerance must be > 0");
    // beyond X >= 4|t-1|/π the log-density slope is below -π/4, so the
    // one-sided tail is at most p(X) · 4/π
    double x = std::max(1.0, std::ceil(4 * std::abs(t - 1) / pi));
    while (2 * density_p(t, x) * 4 / pi >= eps) x += 1.0;
    return x;
}

namespace {

/// Symmetric cutoff where e^{|s| x} p(x) has decayed below `floor` and is
/// decreasing at rate at least (π/2 - |s|)/2.
double weighted_cutoff(const std::function<double(double)>& p, double rate, double t, double s, double floor) {
    double x = std::max(1.0, std::ceil(2 * std::abs(t - 1) / rate));
    while (std::exp(std::abs(s) * x) * p(x) >= floor) x += 1.0;
    return x;
}

}  // namespace

MgfCheck mgf_numeric_check(double t, double s) {
    const double closed = sec_power(t, s);
    auto p = [t](double x) { return density_p(t, x); };
    const double x_max = weighted_cutoff(p, pi / 2 - std::abs(s), t, s, 1e-16);
    const double num = kernels::integrate_panels([t, s](double x) { return std::exp(s * x) * density_p(t, x); },
                                                 -x_max, x_max, static_cast<int>(2 * x_max));
    return {num, closed, std::abs(num - closed) / closed};
}

MgfCheck scaled_mgf_numeric_check(int n, double t, double s) {
    const double closed = mgf_eval(n, s, t);
    if (n < 2) throw OutOfScopeError("scaled density is defined for n >= 2");
    const double sg = sigma(n);
    auto q = [n, t](double y) { return density_q_scaled(n, t, y); };
    const double tau = n * t / order_coupling(n).get_d();
    const double y_max = weighted_cutoff(q, (pi / 2 - sg * std::abs(s)) / sg, tau, s, 1e-16);
    const double num = kernels::integrate_panels(
        [n, t, s](double y) { return std::exp(s * y) * density_q_scaled(n, t, y); }, -y_max, y_max,
        static_cast<int>(std::ceil(2 * y_max / sg)));
    return {num, closed, std::abs(num - closed) / closed};
}

namespace {

double second_derivative_at_zero(const std::function<double(double)>& m, double h) {
    auto d = [&](double step) { return (m(step) - 2 * m(0) + m(-step)) / (step * step); };
    return (4 * d(h / 2) - d(h)) / 3;
}

}  // namespace

double variance_from_mgf(int n, double t) {
    require_order(n);
    return second_derivative_at_zero([n, t](double s) { return mgf_eval(n, s, t); }, 0.02 / std::max(1.0, sigma(n)));
}

double variance_from_sec_power(double t) {
    return second_derivative_at_zero([t](double s) { return sec_power(t, s); }, 0.02);
}

CdfTable::CdfTable(double t) : t_(t) {
    require_time(t);
    const double x_max = tail_cutoff(t, 1e-12);
    // refine each unit-half cell until the density varies by at most 1e-6/h across it
    const double step = 0.5;
    const int cells = static_cast<int>(std::ceil(2 * x_max / step));
    std::vector<double> knots{-x_max};
    double p_lo = density_p(t, -x_max);
    struct Pending {
        double hi;
        double p_hi;
    };
    for (int i = 1; i <= cells; ++i) {
        const double hi = i == cells ? x_max : -x_max + i * step;
        std::vector<Pending> stack{{hi, density_p(t, hi)}};
        while (!stack.empty()) {
            const double lo = knots.back();
            const auto [b, p_b] = stack.back();
            const double h = b - lo;
            if (std::abs(p_b - p_lo) * h > 1e-6 && h > 1e-6) {
                const double mid = lo + h / 2;
                stack.push_back({mid, density_p(t, mid)});
                continue;
            }
            knots.push_back(b);
            p_lo = p_b;
            stack.pop_back();
        }
    }
    const auto masses = kernels::cell_masses(t, knots);
    double total = 0.0;
    for (double m : masses) total += m;
    F_.reserve(knots.size());
    double acc = std::max(0.0, (1.0 - total) / 2);
    F_.push_back(acc);
    for (double m : masses) F_.push_back(acc += m);
    x_ = std::move(knots);
}

double CdfTable::cdf(double x) const {
    if (x <= x_.front()) return 0.0;
    if (x >= x_.back()) return 1.0;
    const auto i = static_cast<std::size_t>(std::upper_bound(x_.begin(), x_.end(), x) - x_.begin()) - 1;
    const double w = (x - x_[i]) / (x_[i + 1] - x_[i]);
    return F_[i] + w * (F_[i + 1] - F_[i]);
}

double CdfTable::quantile(double u) const {
    if (u <= F_.front()) return x_.front();
    if (u >= F_.back()) return x_.back();
    const auto i = static_cast<std::size_t>(std::upper_bound(F_.begin(), F_.end(), u) - F_.begin()) - 1;
    const double dF = F_[i + 1] - F_[i];
    if (dF <= 0) return x_[i];
    return x_[i] + (u - F_[i]) / dF * (x_[i + 1] - x_[i]);
}

std::vector<double> sample_X(double t, std::size_t count, std::uint64_t seed) {
    require_time(t);
    if (count == 0) throw DomainError("sample count must be >= 1");
    const CdfTable table(t);
    std::mt19937_64 rng(seed);
    std::vector<double> out(count);
    for (auto& x : out) {
        // uniform in (0, 1) on the 2^-53 grid, shifted off both endpoints
        const double u = static_cast<double>(rng() >> 11) * 0x1p-53 + 0x1p-54;
        x = table.quantile(u);
    }
    return out;
}

double ks_statistic(std::vector<double> samples, const std::function<double(double)>& cdf) {
    if (samples.empty()) throw DomainError("KS statistic needs samples");
    std::sort(samples.begin(), samples.end());
    const double n = static_cast<double>(samples.size());
    double d = 0.0;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const double f = cdf(samples[i]);
        d = std::max({d, f - i / n, (i + 1) / n - f});
    }
    return d;
}

// ---- classical processes ---------------------------------------------------

AlgebraElement process_at(const CoefficientMap& coeffs, const Rational& t) {
    if (t <= 0) throw DomainError("process times must be > 0");
    const auto chi = StepFunction::indicator(0, t);
    AlgebraElement x(AlgebraTag::rhpwn);
    for (const auto& [nk, c] : coeffs) {
        if (nk.first < 0 || nk.second < 0) throw IndexError("process coefficients need n, k >= 0");
        x += AlgebraElement::generator(AlgebraTag::rhpwn, nk.first, nk.second, chi.scaled(c));
    }
    return x;
}

ClassicalVerdict classical_check(const CoefficientMap& coeffs, const std::vector<Rational>& horizon) {
    ClassicalVerdict v;
    for (const auto& [nk, c] : coeffs) {
        const auto [n, k] = nk;
        if (n < 0 || k < 0) throw IndexError("process coefficients need n, k >= 0");
        auto it = coeffs.find({k, n});
        const ComplexRational partner = it == coeffs.end() ? ComplexRational{} : it->second;
        if (c != partner.conj() && v.self_adjoint) {
            v.self_adjoint = false;
            v.witness_index = GeneratorIndex{AlgebraTag::rhpwn, n, k};
            v.witness_coefficient = c - partner.conj();
            v.witness = "x(t) - x(t)* contains " + to_string(v.witness_coefficient) + " B^" + std::to_string(n) + "_" +
                        std::to_string(k) + "(χ_(0,t]): c_{" + std::to_string(n) + "," + std::to_string(k) +
                        "} != conj(c_{" + std::to_string(k) + "," + std::to_string(n) + "})";
        }
    }
    std::vector<AlgebraElement> xs;
    for (const auto& t : horizon) xs.push_back(process_at(coeffs, t));
    for (std::size_t i = 0; i < xs.size() && v.commuting; ++i) {
        for (std::size_t j = i + 1; j < xs.size(); ++j) {
            const auto c = commutator(xs[i], xs[j]);
            if (c.is_zero()) continue;
            v.commuting = false;
            const auto& [nk, f] = *c.terms().begin();
            if (!v.witness) {
                v.witness_index = GeneratorIndex{AlgebraTag::rhpwn, nk.first, nk.second};
                v.witness_coefficient = f.integral();
                v.witness = "[x(" + to_string(horizon[i]) + "), x(" + to_string(horizon[j]) + ")] contains B^" +
                            std::to_string(nk.first) + "_" + std::to_string(nk.second) + " with ∫f = " +
                            to_string(f.integral());
            }
            break;
        }
    }
    return v;
}

}  // namespace rhpwn
