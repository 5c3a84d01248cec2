#pragma once

#include <compare>
#include <span>
#include <vector>

#include "rhpwn/rational.hpp"

namespace rhpwn {

/// One constant piece value * χ_(lo, hi].
struct Piece {
    Rational lo;
    Rational hi;
    ComplexRational value;

    friend bool operator==(const Piece&, const Piece&) = default;
    friend std::strong_ordering operator<=>(const Piece& a, const Piece& b) {
        if (auto c = compare(a.lo, b.lo); c != 0) return c;
        if (auto c = compare(a.hi, b.hi); c != 0) return c;
        return a.value <=> b.value;
    }
};

/// Finitely supported complex step function with rational breakpoints.
///
/// Intervals are left-open, (lo, hi]. A test function must vanish at 0, so
/// no piece may contain 0; χ_(0,t] is the representative of χ_[0,t].
///
/// The stored form is canonical: pieces sorted, zero pieces dropped and
/// touching pieces with equal value merged. Two step functions are equal
/// as functions iff they compare equal.
class StepFunction {
public:
    StepFunction() = default;
    /// Validates (lo < hi, pairwise disjoint, 0 outside) and canonicalizes.
    explicit StepFunction(std::vector<Piece> pieces);

    static StepFunction indicator(Rational lo, Rational hi, ComplexRational value = 1);

    const std::vector<Piece>& pieces() const noexcept { return pieces_; }
    bool is_zero() const noexcept { return pieces_.empty(); }

    ComplexRational integral() const;
    /// Lebesgue measure of the support.
    Rational support_measure() const;
    /// max |f|^2 over the support (0 for the zero function).
    Rational sup_norm2() const;

    /// If f == c * χ_(lo,hi] for a single interval, returns that piece.
    const Piece* single_piece() const noexcept { return pieces_.size() == 1 ? &pieces_.front() : nullptr; }

    StepFunction conj() const;
    StepFunction scaled(const ComplexRational& c) const;

    friend StepFunction operator*(const StepFunction& f, const StepFunction& g);
    friend StepFunction operator+(const StepFunction& f, const StepFunction& g);
    friend StepFunction operator-(const StepFunction& f, const StepFunction& g);

    friend bool operator==(const StepFunction&, const StepFunction&) = default;
    friend std::strong_ordering operator<=>(const StepFunction& a, const StepFunction& b);

private:
    struct Trusted {};
    StepFunction(Trusted, std::vector<Piece> pieces);
    void canonicalize();

    std::vector<Piece> pieces_;
};

/// Cell of a common refinement: on (lo, hi] every input function is constant.
struct RefinementCell {
    Rational lo;
    Rational hi;
    std::vector<ComplexRational> values;  // one per input function
};

/// Common refinement of several step functions over the union of their
/// supports. Cells where all inputs vanish are omitted.
std::vector<RefinementCell> common_refinement(std::span<const StepFunction* const> fs);

}  // namespace rhpwn
