#include "rhpwn/algebra.hpp"

#include <string>

#include "rhpwn/errors.hpp"

namespace rhpwn {

const char* to_string(AlgebraTag tag) noexcept { return tag == AlgebraTag::rhpwn ? "RHPWN" : "WINFTY"; }

AlgebraTag parse_algebra_tag(std::string_view text) {
    if (text == "RHPWN") return AlgebraTag::rhpwn;
    if (text == "WINFTY") return AlgebraTag::winfty;
    throw DomainError("unknown algebra tag '" + std::string(text) + "'");
}

std::optional<BracketTerm> bracket(const GeneratorIndex& a, const GeneratorIndex& b) {
    if (a.tag != b.tag) throw TagMismatchError("bracket of generators from different algebras");
    long c = 0;
    GeneratorIndex out{a.tag, 0, 0};
    if (a.tag == AlgebraTag::rhpwn) {
        // [B^n_k, B^N_K] = (kN - Kn) B^{n+N-1}_{k+K-1}
        c = long(a.k) * b.n - long(b.k) * a.n;
        out.n = a.n + b.n - 1;
        out.k = a.k + b.k - 1;
        if (out.n < 0 || out.k < 0) return std::nullopt;
    } else {
        // [B̂^n_k, B̂^N_K] = ((N-1)k - (n-1)K) B̂^{n+N-2}_{k+K}
        c = long(b.n - 1) * a.k - long(a.n - 1) * b.k;
        out.n = a.n + b.n - 2;
        out.k = a.k + b.k;
    }
    if (c == 0) return std::nullopt;
    return BracketTerm{c, out};
}

AlgebraElement AlgebraElement::generator(AlgebraTag tag, int n, int k, const StepFunction& f) {
    AlgebraElement e(tag);
    if (tag == AlgebraTag::rhpwn) {
        if (n < 0 || k < 0) return e;
    } else if (n < 2) {
        throw IndexError("w-infinity generators need weight n >= 2, got " + std::to_string(n));
    }
    e.add_term(n, k, f);
    return e;
}

void AlgebraElement::add_term(int n, int k, const StepFunction& f) {
    if (f.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace({n, k}, f);
    if (inserted) return;
    it->second = it->second + f;
    if (it->second.is_zero()) terms_.erase(it);
}

ComplexRational AlgebraElement::scalar_part() const {
    if (tag_ != AlgebraTag::rhpwn) return {};
    auto it = terms_.find({0, 0});
    return it == terms_.end() ? ComplexRational{} : it->second.integral();
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
    if (o.tag_ != tag_) throw TagMismatchError("cannot add elements of different algebras");
    for (const auto& [idx, f] : o.terms_) add_term(idx.first, idx.second, f);
    return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) { return *this += o.scaled(-1); }

AlgebraElement AlgebraElement::scaled(const ComplexRational& c) const {
    AlgebraElement e(tag_);
    for (const auto& [idx, f] : terms_) e.add_term(idx.first, idx.second, f.scaled(c));
    return e;
}

AlgebraElement commutator(const AlgebraElement& a, const AlgebraElement& b) {
    if (a.tag() != b.tag()) throw TagMismatchError("commutator of elements from different algebras");
    AlgebraElement out(a.tag());
    for (const auto& [ia, g] : a.terms())
        for (const auto& [ib, f] : b.terms()) {
            const auto term = bracket({a.tag(), ia.first, ia.second}, {b.tag(), ib.first, ib.second});
            if (!term) continue;
            out += AlgebraElement::generator(term->index, (g * f).scaled(Rational(term->coefficient)));
        }
    return out;
}

AlgebraElement involution(const AlgebraElement& a) {
    AlgebraElement out(a.tag());
    for (const auto& [idx, f] : a.terms()) {
        const auto [n, k] = idx;
        if (a.tag() == AlgebraTag::rhpwn)
            out += AlgebraElement::generator(AlgebraTag::rhpwn, k, n, f.conj());
        else
            out += AlgebraElement::generator(AlgebraTag::winfty, n, -k, f.conj());
    }
    return out;
}

namespace {

std::vector<std::vector<Integer>> build_stirling_table() {
    // s_{n+1,k} = s_{n,k-1} - n s_{n,k}
    std::vector<std::vector<Integer>> s(stirling_max_n + 1);
    s[0] = {Integer(1)};
    for (int n = 0; n < stirling_max_n; ++n) {
        s[n + 1].assign(n + 2, Integer(0));
        for (int k = 1; k <= n + 1; ++k) {
            Integer v = k - 1 <= n ? s[n][k - 1] : Integer(0);
            if (k <= n) v -= n * s[n][k];
            s[n + 1][k] = v;
        }
    }
    return s;
}

}  // namespace

const Integer& stirling_first(int n, int k) {
    static const auto table = build_stirling_table();
    if (n < 0 || k < 0 || k > n || n > stirling_max_n)
        throw IndexError("Stirling index (" + std::to_string(n) + ", " + std::to_string(k) +
                         ") outside 0 <= k <= n <= " + std::to_string(stirling_max_n));
    return table[n][k];
}

std::vector<std::pair<int, Integer>> normal_order_expansion(int n) {
    if (n < 0) throw IndexError("normal-order expansion needs n >= 0");
    std::vector<std::pair<int, Integer>> out;
    for (int m = 0; m <= n; ++m)
        if (const auto& s = stirling_first(n, m); sgn(s) != 0) out.emplace_back(m, s);
    return out;
}

WhiteNoiseForm white_noise_form(int n, int k) {
    if (k < 0 || n < k) throw IndexError("white-noise form needs n >= k >= 0");
    return {n - k, k};
}

}  // namespace rhpwn
