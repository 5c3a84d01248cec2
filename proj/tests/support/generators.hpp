#pragma once

// Hand-rolled random generators for property tests. Everything is driven by
// an explicit mt19937_64 so failures reproduce from the seed.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "rhpwn/algebra.hpp"
#include "rhpwn/fock.hpp"
#include "rhpwn/rational.hpp"
#include "rhpwn/rewrite.hpp"
#include "rhpwn/step_function.hpp"

namespace gen {

using rhpwn::ComplexRational;
using rhpwn::Rational;
using rhpwn::StepFunction;

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    int uniform_int(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
    bool coin() { return uniform_int(0, 1) == 1; }

    Rational rational(int max_num = 9, int max_den = 6) {
        return rhpwn::ratio(uniform_int(-max_num, max_num), uniform_int(1, max_den));
    }

    ComplexRational complex(int max_num = 9, int max_den = 6) {
        return {rational(max_num, max_den), coin() ? rational(max_num, max_den) : Rational(0)};
    }

    /// Disjoint pieces on a grid of quarter points in (-4, 0] ∪ (0, 8].
    StepFunction step_function(int max_pieces = 3) {
        const int pieces = uniform_int(1, max_pieces);
        std::vector<rhpwn::Piece> out;
        int cursor = uniform_int(-16, 8);  // quarters
        for (int i = 0; i < pieces; ++i) {
            int lo = cursor + uniform_int(0, 3);
            int hi = lo + uniform_int(1, 6);
            if (lo < 0 && hi >= 0) {
                // keep 0 outside: either end at -1/4 or restart just after 0
                if (coin() && lo < -1) hi = -1;
                else lo = 0, hi = std::max(hi, 1);
            }
            out.push_back({rhpwn::ratio(lo, 4), rhpwn::ratio(hi, 4), complex()});
            cursor = hi;
        }
        return StepFunction(std::move(out));
    }

    /// Up to max_pieces pieces in (1/4, ∞) with |c|^2 strictly inside the order-n bound.
    StepFunction admissible(int n, int max_pieces = 3) {
        const Rational bound = n == 1 ? Rational(4) : rhpwn::ratio(2, long(n) * n * n * (n - 1));
        std::vector<rhpwn::Piece> pieces;
        int cursor = uniform_int(1, 6);
        const int count = uniform_int(1, max_pieces);
        for (int i = 0; i < count; ++i) {
            const int lo = cursor, hi = lo + uniform_int(1, 6);
            // |c|^2 <= (re^2 + im^2) with re, im in [-0.68, 0.68]·sqrt(bound/2) keeps a safe margin
            const double scale = std::sqrt(bound.get_d() / 2) * 0.68;
            const Rational re = Rational(std::floor(uniform(-1, 1) * scale * 64)) / 64;
            const Rational im = Rational(std::floor(uniform(-1, 1) * scale * 64)) / 64;
            pieces.push_back({rhpwn::ratio(lo, 4), rhpwn::ratio(hi, 4), ComplexRational(re, im)});
            cursor = hi + uniform_int(0, 2);
        }
        return StepFunction(std::move(pieces));
    }

    rhpwn::AlgebraElement element(rhpwn::AlgebraTag tag, int max_index = 6, int max_terms = 3) {
        rhpwn::AlgebraElement a(tag);
        const int terms = uniform_int(1, max_terms);
        for (int i = 0; i < terms; ++i) {
            const int n = tag == rhpwn::AlgebraTag::rhpwn ? uniform_int(0, max_index) : uniform_int(2, max_index);
            const int k = tag == rhpwn::AlgebraTag::rhpwn ? uniform_int(0, max_index) : uniform_int(-max_index, max_index);
            a += rhpwn::AlgebraElement::generator(tag, n, k, step_function());
        }
        return a;
    }

    /// Word over {B^n_0, B^0_n, B^{n-1}_{n-1}} with scalar multiples of χ_(1,2].
    rhpwn::Word truncated_word(int n, int max_len = 6) {
        rhpwn::Word w;
        const int len = uniform_int(0, max_len);
        const auto chi = rhpwn::reference_indicator();
        for (int i = 0; i < len; ++i) {
            const int which = uniform_int(0, 2);
            const ComplexRational c = coin() ? ComplexRational(1) : complex(3, 2);
            const auto f = c.is_zero() ? chi : chi.scaled(c);
            if (which == 0) w.push_back({n, 0, f});
            else if (which == 1) w.push_back({0, n, f});
            else w.push_back({n - 1, n - 1, f});
        }
        return w;
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

}  // namespace gen
