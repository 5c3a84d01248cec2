#include "rhpwn/rational.hpp"

#include <cctype>

#include "rhpwn/errors.hpp"

namespace rhpwn {

Rational ratio(const Integer& num, const Integer& den) {
    if (den == 0) throw DomainError("zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

namespace {

bool is_integer_literal(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    const auto num = text.substr(0, slash);
    const auto den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' || den.front() == '+')
        throw DomainError("malformed rational '" + std::string(text) + "'");
    std::string n(num);
    if (n.front() == '+') n.erase(0, 1);
    Integer p(n, 10), q(std::string(den), 10);
    if (sgn(q) == 0) throw DomainError("zero denominator in '" + std::string(text) + "'");
    Rational r(p, q);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& q) { return q.get_str(10); }

std::strong_ordering compare(const Rational& a, const Rational& b) {
    const int c = cmp(a, b);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

ComplexRational& ComplexRational::operator+=(const ComplexRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

ComplexRational& ComplexRational::operator-=(const ComplexRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

ComplexRational& ComplexRational::operator*=(const ComplexRational& o) {
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

ComplexRational& ComplexRational::operator/=(const ComplexRational& o) {
    const Rational d = o.norm2();
    if (sgn(d) == 0) throw DomainError("division by zero complex rational");
    *this *= o.conj();
    re_ /= d;
    im_ /= d;
    return *this;
}

std::string to_string(const ComplexRational& z) {
    if (z.is_real()) return to_string(z.re());
    if (sgn(z.re()) == 0) return to_string(z.im()) + "i";
    const std::string sign = sgn(z.im()) < 0 ? "" : "+";
    return to_string(z.re()) + sign + to_string(z.im()) + "i";
}

}  // namespace rhpwn
