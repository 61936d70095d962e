#pragma once

/**
 * @file refine.hpp
 * @brief Fractional part of a square root by exact rational correction.
 *
 * Starting from an integer a with residual r = N - a^2 the first correction
 * is a1 = a + r/(2a). Every later step corrects a_i by subtracting
 * (a_i^2 - N)/(2 a_i). The same iterates come out of Heron's averaging and
 * of Newton's method on x^2 - N; heron_step() and newton_step() are written
 * out separately so the equality can be checked rather than assumed.
 */

#include "fibroot/exactnum.hpp"
#include "fibroot/rational.hpp"

#include <stdexcept>
#include <vector>

namespace fibroot {

struct RefinementStep {
    Rational approx;      ///< a_{i+1}
    Rational residual;    ///< N - approx^2
    Rational correction;  ///< signed term added to a_i to reach approx

    friend bool operator==(const RefinementStep&, const RefinementStep&) = default;
};

enum class StartChoice { Floor, Ceil };

/// First correction from an integer start. r may be negative (ceiling start).
inline RefinementStep refine_once(const Integer& a, const Integer& r, const Natural& n) {
    if (a <= 0) throw std::domain_error("refinement needs a positive starting root");
    require_natural(n, "radicand");
    if (r != n - a * a) throw std::invalid_argument("residual does not match radicand");
    const Rational c(r, 2 * a);
    return RefinementStep{Rational(a) + c, -(c * c), c};
}

/// Later corrections: a2 = a1 - (a1^2 - N)/(2 a1).
inline RefinementStep refine_second(const Rational& a1, const Natural& n) {
    if (a1.sign() <= 0) throw std::domain_error("refinement needs a positive approximation");
    const Rational excess = a1 * a1 - Rational(n);
    const Rational c = -(excess / (Rational(2) * a1));
    return RefinementStep{a1 + c, -(c * c), c};
}

inline Rational heron_step(const Rational& x, const Natural& n) {
    if (x.sign() <= 0) throw std::domain_error("heron_step needs x > 0");
    return (x + Rational(n) / x) / Rational(2);
}

inline Rational newton_step(const Rational& x, const Natural& n) {
    if (x.sign() <= 0) throw std::domain_error("newton_step needs x > 0");
    // p(x) = x^2 - N, p'(x) = 2x
    const Rational p = x * x - Rational(n);
    const Rational dp = Rational(2) * x;
    return x - p / dp;
}

/// 1/ceil(d/r): the largest unit fraction not above r/d. Zero when r is zero.
inline Rational round_unit_fraction(const Natural& r, const Natural& d) {
    require_natural(r, "numerator");
    if (d < 1) throw std::domain_error("round_unit_fraction needs d >= 1");
    if (r == 0) return Rational(0);
    const Natural q = (d + r - 1) / r;
    return Rational(Integer(1), q);
}

inline RefinementStep refine_first(const Natural& n, StartChoice start) {
    const Natural a0 = isqrt_oracle(n).root + (start == StartChoice::Ceil ? 1 : 0);
    return refine_once(a0, n - a0 * a0, n);
}

inline std::vector<RefinementStep> refine_sequence(const Natural& n, StartChoice start, std::size_t count) {
    if (n < 1) throw std::domain_error("refine_sequence needs N >= 1");
    if (count < 1) throw std::invalid_argument("refine_sequence needs count >= 1");
    std::vector<RefinementStep> out;
    out.push_back(refine_first(n, start));
    while (out.size() < count) out.push_back(refine_second(out.back().approx, n));
    return out;
}

}  // namespace fibroot
