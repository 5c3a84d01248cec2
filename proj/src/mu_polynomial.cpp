#include "rhpwn/mu_polynomial.hpp"

#include <algorithm>

namespace rhpwn {

MuPolynomial::MuPolynomial(ComplexRational c) {
    if (!c.is_zero()) coeffs_.push_back(std::move(c));
}

MuPolynomial::MuPolynomial(std::vector<ComplexRational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

MuPolynomial::MuPolynomial(std::initializer_list<long> coeffs) {
    for (long c : coeffs) coeffs_.emplace_back(c);
    trim();
}

MuPolynomial MuPolynomial::mu() { return MuPolynomial({0L, 1L}); }

void MuPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

bool MuPolynomial::is_real() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const ComplexRational& c) { return c.is_real(); });
}

MuPolynomial MuPolynomial::conj() const {
    auto cs = coeffs_;
    for (auto& c : cs) c = c.conj();
    return MuPolynomial(std::move(cs));
}

MuPolynomial& MuPolynomial::operator+=(const MuPolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

MuPolynomial& MuPolynomial::operator-=(const MuPolynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

MuPolynomial& MuPolynomial::operator*=(const MuPolynomial& o) {
    if (is_zero() || o.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<ComplexRational> out(coeffs_.size() + o.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
    coeffs_ = std::move(out);
    trim();
    return *this;
}

MuPolynomial& MuPolynomial::operator*=(const ComplexRational& c) {
    for (auto& x : coeffs_) x *= c;
    trim();
    return *this;
}

ComplexRational MuPolynomial::evaluate(const Rational& mu) const {
    ComplexRational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * ComplexRational(mu) + *it;
    return acc;
}

std::complex<double> MuPolynomial::evaluate(double mu) const {
    std::complex<double> acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * mu + it->to_complex();
    return acc;
}

std::string MuPolynomial::pretty() const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const auto& c = coeffs_[i];
        if (c.is_zero()) continue;
        std::string body;
        const bool unit = c == ComplexRational(1) || c == ComplexRational(-1);
        if (c.is_real()) {
            const bool neg = sgn(c.re()) < 0;
            if (!out.empty()) out += neg ? "-" : "+";
            else if (neg) out += "-";
            body = (unit && i > 0) ? "" : to_string(Rational(abs(c.re())));
        } else {
            if (!out.empty()) out += "+";
            body = "(" + to_string(c) + ")";
        }
        out += body;
        if (i >= 1) out += "μ";
        if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
}

}  // namespace rhpwn
