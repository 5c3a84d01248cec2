#include "rhpwn/step_function.hpp"

#include <algorithm>

#include "rhpwn/errors.hpp"

namespace rhpwn {

StepFunction::StepFunction(std::vector<Piece> pieces) : pieces_(std::move(pieces)) {
    for (const auto& p : pieces_) {
        if (!(p.lo < p.hi))
            throw DomainError("step function piece (" + to_string(p.lo) + ", " + to_string(p.hi) +
                              "] has non-positive length");
        if (p.lo < 0 && p.hi >= 0)
            throw DomainError("test functions must vanish at 0, but piece (" + to_string(p.lo) + ", " +
                              to_string(p.hi) + "] contains 0");
    }
    std::sort(pieces_.begin(), pieces_.end(),
              [](const Piece& a, const Piece& b) { return a.lo < b.lo; });
    for (std::size_t i = 1; i < pieces_.size(); ++i)
        if (pieces_[i].lo < pieces_[i - 1].hi)
            throw DomainError("step function pieces overlap near " + to_string(pieces_[i].lo));
    canonicalize();
}

StepFunction::StepFunction(Trusted, std::vector<Piece> pieces) : pieces_(std::move(pieces)) {
    canonicalize();
}

StepFunction StepFunction::indicator(Rational lo, Rational hi, ComplexRational value) {
    return StepFunction({Piece{std::move(lo), std::move(hi), std::move(value)}});
}

void StepFunction::canonicalize() {
    std::vector<Piece> out;
    out.reserve(pieces_.size());
    for (auto& p : pieces_) {
        if (p.value.is_zero()) continue;
        if (!out.empty() && out.back().hi == p.lo && out.back().value == p.value) {
            out.back().hi = std::move(p.hi);
            continue;
        }
        out.push_back(std::move(p));
    }
    pieces_ = std::move(out);
}

ComplexRational StepFunction::integral() const {
    ComplexRational sum;
    for (const auto& p : pieces_) sum += p.value * ComplexRational(Rational(p.hi - p.lo));
    return sum;
}

Rational StepFunction::support_measure() const {
    Rational m = 0;
    for (const auto& p : pieces_) m += p.hi - p.lo;
    return m;
}

Rational StepFunction::sup_norm2() const {
    Rational m = 0;
    for (const auto& p : pieces_) m = std::max(m, p.value.norm2());
    return m;
}

StepFunction StepFunction::conj() const {
    auto ps = pieces_;
    for (auto& p : ps) p.value = p.value.conj();
    return StepFunction(Trusted{}, std::move(ps));
}

StepFunction StepFunction::scaled(const ComplexRational& c) const {
    if (c.is_zero()) return {};
    auto ps = pieces_;
    for (auto& p : ps) p.value *= c;
    return StepFunction(Trusted{}, std::move(ps));
}

namespace {

template <class Op>
StepFunction combine(const StepFunction& f, const StepFunction& g, Op op) {
    const StepFunction* fs[] = {&f, &g};
    std::vector<Piece> out;
    for (auto& cell : common_refinement(fs))
        out.push_back(Piece{std::move(cell.lo), std::move(cell.hi), op(cell.values[0], cell.values[1])});
    return StepFunction(std::move(out));
}

}  // namespace

StepFunction operator*(const StepFunction& f, const StepFunction& g) {
    if (f.is_zero() || g.is_zero()) return {};
    return combine(f, g, [](const ComplexRational& a, const ComplexRational& b) { return a * b; });
}

StepFunction operator+(const StepFunction& f, const StepFunction& g) {
    if (f.is_zero()) return g;
    if (g.is_zero()) return f;
    return combine(f, g, [](const ComplexRational& a, const ComplexRational& b) { return a + b; });
}

StepFunction operator-(const StepFunction& f, const StepFunction& g) {
    return f + g.scaled(ComplexRational(-1));
}

std::strong_ordering operator<=>(const StepFunction& a, const StepFunction& b) {
    return std::lexicographical_compare_three_way(a.pieces_.begin(), a.pieces_.end(), b.pieces_.begin(),
                                                  b.pieces_.end());
}

std::vector<RefinementCell> common_refinement(std::span<const StepFunction* const> fs) {
    std::vector<Rational> cuts;
    for (const auto* f : fs)
        for (const auto& p : f->pieces()) {
            cuts.push_back(p.lo);
            cuts.push_back(p.hi);
        }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    std::vector<std::size_t> cursor(fs.size(), 0);
    std::vector<RefinementCell> cells;
    for (std::size_t c = 0; c + 1 < cuts.size(); ++c) {
        const Rational& lo = cuts[c];
        const Rational& hi = cuts[c + 1];
        RefinementCell cell{lo, hi, std::vector<ComplexRational>(fs.size())};
        bool any = false;
        for (std::size_t i = 0; i < fs.size(); ++i) {
            const auto& ps = fs[i]->pieces();
            auto& j = cursor[i];
            while (j < ps.size() && ps[j].hi <= lo) ++j;
            if (j < ps.size() && ps[j].lo <= lo && hi <= ps[j].hi) {
                cell.values[i] = ps[j].value;
                any = true;
            }
        }
        if (any) cells.push_back(std::move(cell));
    }
    return cells;
}

}  // namespace rhpwn
