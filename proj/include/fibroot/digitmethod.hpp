#pragma once

/**
 * @file digitmethod.hpp
 * @brief Fibonacci's recursive digit-by-digit integer square root.
 *
 * Write N = n*100 + b1*10 + b0 and let a = isqrt(n), r = n - a^2. The root
 * of N is 10a + x where x is the last digit, the largest digit with
 *
 *     r*100 + b1*10 + b0 - 20*a*x - x^2 >= 0                     (bound 1)
 *
 * or equivalently the smallest digit for which that value does not exceed
 * 2*(10a + x) (bound 2). The quotient rules estimate x by a truncated
 * division and then move the estimate until both bounds hold:
 *
 *   q-full      (r*100 + b1*10 + b0) / (20a)
 *   q-tens      (r*10 + b1) / (2a)
 *   q-coarse    r / floor(2a/10)
 *   q-coarsest  floor(r/10) / floor(2a/100)
 *
 * The last two need a large enough partial root; when their denominator is
 * zero the digit is found by the exact smallest-digit search instead and the
 * audit says so.
 */

#include "fibroot/exactnum.hpp"
#include "fibroot/rational.hpp"
#include "fibroot/refine.hpp"
#include "fibroot/trace.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fibroot {

enum class DigitRule { ExactLargest, ExactSmallest, QuotientFull, QuotientTens, QuotientCoarse, QuotientCoarsest };

inline constexpr std::array<DigitRule, 6> kAllRules = {DigitRule::ExactLargest,  DigitRule::ExactSmallest,
                                                       DigitRule::QuotientFull,  DigitRule::QuotientTens,
                                                       DigitRule::QuotientCoarse, DigitRule::QuotientCoarsest};

inline std::string_view rule_name(DigitRule rule) {
    switch (rule) {
        case DigitRule::ExactLargest: return "exact-largest";
        case DigitRule::ExactSmallest: return "exact-smallest";
        case DigitRule::QuotientFull: return "q-full";
        case DigitRule::QuotientTens: return "q-tens";
        case DigitRule::QuotientCoarse: return "q-coarse";
        case DigitRule::QuotientCoarsest: return "q-coarsest";
    }
    return "?";
}

inline std::optional<DigitRule> parse_rule(std::string_view s) {
    for (DigitRule r : kAllRules)
        if (rule_name(r) == s) return r;
    return std::nullopt;
}

inline bool is_quotient_rule(DigitRule rule) {
    return rule != DigitRule::ExactLargest && rule != DigitRule::ExactSmallest;
}

struct PartialRoot {
    Natural root_so_far;
    Natural residual;
    unsigned depth = 0;  ///< digit pairs consumed

    friend bool operator==(const PartialRoot&, const PartialRoot&) = default;
};

struct DigitAudit {
    std::optional<Natural> estimate;  ///< raw quotient; empty for the exact rules and on fallback
    std::uint8_t start = 0;           ///< where the search began (estimate clamped to 9)
    int adjustments = 0;              ///< net increments (+) / decrements (-) from start
    std::uint8_t chosen = 0;
    Integer bound1_value;
    Integer bound2_slack;             ///< 2*(10a + chosen) - bound1_value
    bool fell_back = false;

    friend bool operator==(const DigitAudit&, const DigitAudit&) = default;
};

/// Largest d with d^2 <= leading, for the most significant digit pair.
inline std::uint8_t first_digit(unsigned leading) {
    if (leading < 1 || leading > 99) throw std::invalid_argument("leading digit pair must be in 1..99");
    std::uint8_t d = 9;
    while (static_cast<unsigned>(d) * d > leading) --d;
    return d;
}

inline Integer bound1_value(const Natural& a, const Natural& r, unsigned b1, unsigned b0, unsigned x) {
    return Integer(r * 100 + b1 * 10 + b0) - Integer(20 * a * x) - Integer(x * x);
}

inline bool bound2_holds(const Natural& a, const Natural& r, unsigned b1, unsigned b0, unsigned x) {
    return bound1_value(a, r, b1, b0, x) <= Integer(2 * (10 * a + x));
}

/// Raw quotient for one of the q-* rules; nullopt when the rule's divisor is
/// zero for this partial root.
inline std::optional<Natural> quotient_estimate(const Natural& a, const Natural& r, unsigned b1, unsigned b0,
                                                DigitRule rule) {
    if (!is_quotient_rule(rule)) throw std::invalid_argument("not a quotient rule");
    if (a < 1) throw std::invalid_argument("quotient estimate needs a >= 1");
    switch (rule) {
        case DigitRule::QuotientFull: return Natural((r * 100 + b1 * 10 + b0) / (20 * a));
        case DigitRule::QuotientTens: return Natural((r * 10 + b1) / (2 * a));
        case DigitRule::QuotientCoarse: {
            const Natural den = (2 * a) / 10;
            if (den == 0) return std::nullopt;
            return Natural(r / den);
        }
        case DigitRule::QuotientCoarsest: {
            const Natural den = (2 * a) / 100;
            if (den == 0) return std::nullopt;
            return Natural((r / 10) / den);
        }
        default: break;
    }
    throw std::logic_error("unreachable");
}

/// The digit following the partial root a, given its residual r and the
/// next radicand pair (b1, b0).
inline DigitAudit last_digit(const Natural& a, const Natural& r, unsigned b1, unsigned b0, DigitRule rule) {
    if (a < 1) throw std::invalid_argument("last_digit needs a >= 1");
    if (r > 2 * a) throw std::invalid_argument("residual exceeds twice the partial root");

    DigitAudit audit;
    unsigned x = 0;
    auto exact_smallest = [&] {
        unsigned d = 0;
        while (d < 9 && !bound2_holds(a, r, b1, b0, d)) ++d;
        return d;
    };

    if (rule == DigitRule::ExactLargest) {
        x = 9;
        while (x > 0 && bound1_value(a, r, b1, b0, x) < 0) --x;
    } else if (rule == DigitRule::ExactSmallest) {
        x = exact_smallest();
    } else {
        audit.estimate = quotient_estimate(a, r, b1, b0, rule);
        if (!audit.estimate) {
            audit.fell_back = true;
            x = exact_smallest();
        } else {
            x = *audit.estimate > 9 ? 9u : static_cast<unsigned>(*audit.estimate);
            audit.start = static_cast<std::uint8_t>(x);
            while (x > 0 && bound1_value(a, r, b1, b0, x) < 0) {
                --x;
                --audit.adjustments;
            }
            while (x < 9 && !bound2_holds(a, r, b1, b0, x)) {
                ++x;
                ++audit.adjustments;
            }
        }
    }
    if (!audit.estimate) audit.start = static_cast<std::uint8_t>(x);
    audit.chosen = static_cast<std::uint8_t>(x);
    audit.bound1_value = bound1_value(a, r, b1, b0, x);
    audit.bound2_slack = Integer(2 * (10 * a + x)) - audit.bound1_value;
    return audit;
}

/// One digit decision made during an extraction.
struct Selection {
    PartialRoot before;
    std::uint8_t tens = 0;
    std::uint8_t ones = 0;
    DigitAudit audit;
};

struct Trace {
    Natural radicand;
    DigitRule rule = DigitRule::ExactLargest;
    Procedure procedure = Procedure::Geometrie;
    std::vector<TraceEvent> events;

    unsigned last_step() const { return events.empty() ? 0 : events.back().step; }
};

struct FibonacciRun {
    RootResult result;
    Trace trace;
    std::vector<Selection> selections;
};

namespace detail {

/// Digit pairs of n, most significant first. The leading group may be one digit.
inline std::vector<unsigned> digit_pairs(const Natural& n) {
    const Digits d = digits_of(n);
    const std::size_t k = (d.size() + 1) / 2;
    std::vector<unsigned> pairs;
    for (std::size_t i = k; i-- > 0;) pairs.push_back(d.at_or_zero(2 * i + 1) * 10u + d.at_or_zero(2 * i));
    return pairs;
}

struct Level {
    PartialRoot before;
    unsigned pair = 0;
    DigitAudit audit;
    Natural root;
    Natural residual;
};

/// Runs the recursion bottom-up (leading pair first). levels[0] is the base
/// case; its `before` is empty and audit.chosen is the leading root digit.
inline std::vector<Level> descend(const Natural& n, DigitRule rule) {
    const auto pairs = digit_pairs(n);
    std::vector<Level> levels;
    Level base;
    base.pair = pairs[0];
    unsigned d = 0;
    while ((d + 1) * (d + 1) <= pairs[0]) ++d;
    base.audit.chosen = static_cast<std::uint8_t>(d);
    base.root = d;
    base.residual = pairs[0] - d * d;
    levels.push_back(base);
    for (std::size_t i = 1; i < pairs.size(); ++i) {
        const Level& prev = levels.back();
        Level lv;
        lv.before = PartialRoot{prev.root, prev.residual, static_cast<unsigned>(i)};
        lv.pair = pairs[i];
        lv.audit = last_digit(prev.root, prev.residual, pairs[i] / 10, pairs[i] % 10, rule);
        lv.root = prev.root * 10 + lv.audit.chosen;
        lv.residual = prev.residual * 100 + pairs[i] - (20 * prev.root + lv.audit.chosen) * lv.audit.chosen;
        levels.push_back(lv);
    }
    return levels;
}

inline RawEvent raw(RawEvent::Kind kind, std::vector<TraceCell> cells, std::string note) {
    return RawEvent{kind, std::move(cells), std::move(note)};
}

inline std::vector<TraceCell> remainder_cells(const Natural& rem) {
    if (rem == 0) return {};
    return cells_for(rem, 0, Band::Remainder);
}

/// Subtractions for the last digit written one doubled-root digit at a time.
/// For each digit d_j of D = 2a, from the top down, the running value
/// (M div 10^(j+1)) - x*(D div 10^j) is written with its ones digit at
/// column frame + j + 1. Returns the value left after the last subtraction.
inline Natural cascade(std::vector<RawEvent>& out, const Natural& m, const Natural& doubled, unsigned x,
                       int frame) {
    const Digits dd = digits_of(doubled);
    Natural value = m / 10 - doubled * x;
    for (std::size_t j = dd.size(); j-- > 0;) {
        const Natural scale = pow10(static_cast<unsigned>(j));
        const Natural head = m / (scale * 10);
        const Natural part = doubled / scale;
        const Natural v = head - part * x;
        std::vector<TraceCell> cells;
        if (dd.values[j] * x != 0 && v != 0) cells = cells_for(v, frame + static_cast<int>(j) + 1, Band::Residual);
        out.push_back(raw(RawEvent::Kind::Partial, std::move(cells),
                          head.str() + " - " + std::to_string(x) + "*" + part.str() + " = " + v.str()));
    }
    return value;
}

inline std::vector<RawEvent> standard_events(const Natural& n, const std::vector<Level>& levels,
                                             Procedure procedure) {
    std::vector<RawEvent> out;
    out.push_back(raw(RawEvent::Kind::Radicand, cells_for(n, 0, Band::Radicand), "place " + n.str()));
    const Level& last = levels.back();
    if (levels.size() == 1) {
        out.push_back(raw(RawEvent::Kind::Root, cells_for(last.root, 0, Band::Root),
                          "root of " + n.str() + " is " + last.root.str()));
        out.push_back(raw(RawEvent::Kind::Remainder, remainder_cells(last.residual),
                          "remainder " + last.residual.str()));
        return out;
    }

    const Natural& a = last.before.root_so_far;
    const Natural& r = last.before.residual;
    const Natural prefix = n / 100;
    const unsigned x = last.audit.chosen;
    out.push_back(raw(RawEvent::Kind::Root, cells_for(a, 1, Band::Root),
                      "root of " + prefix.str() + " is " + a.str()));
    out.push_back(raw(RawEvent::Kind::Residual, r == 0 ? std::vector<TraceCell>{} : cells_for(r, 2, Band::Residual),
                      prefix.str() + " - " + Natural(a * a).str() + " = " + r.str()));
    const Natural doubled = 2 * a;
    if (procedure == Procedure::Geometrie)
        out.push_back(raw(RawEvent::Kind::Double, cells_for(doubled, 1, Band::DoubledRoot),
                          "double " + a.str() + " to " + doubled.str()));
    out.push_back(raw(RawEvent::Kind::Digit, cells_for(x, 0, Band::Root), "next digit " + std::to_string(x)));

    const Natural m = r * 100 + last.pair;
    if (procedure == Procedure::Geometrie) {
        cascade(out, m, doubled, x, 0);
    } else {
        const Natural v = m / 10 - doubled * x;
        std::vector<TraceCell> cells;
        if (x != 0 && v != 0) cells = cells_for(v, 1, Band::Residual);
        out.push_back(raw(RawEvent::Kind::Partial, std::move(cells),
                          Natural(m / 10).str() + " - " + doubled.str() + "*" + std::to_string(x) + " = " + v.str()));
    }
    out.push_back(raw(RawEvent::Kind::Remainder, remainder_cells(last.residual), "remainder " + last.residual.str()));
    return out;
}

/// Every level of the recursion worked on one board. Root digit i (weight
/// 10^i) sits in column i; level l of k works in the radicand frame starting
/// at column 2(k-l). The doubled root is extended in place while its digits
/// still agree with the row already written, otherwise rewritten on a new row.
inline std::vector<RawEvent> evolving_events(const Natural& n, const std::vector<Level>& levels) {
    const int k = static_cast<int>(levels.size());
    if (k == 1) return standard_events(n, levels, Procedure::Abaci);

    std::vector<RawEvent> out;
    out.push_back(raw(RawEvent::Kind::Radicand, cells_for(n, 0, Band::Radicand), "place " + n.str()));
    const Level& base = levels.front();
    out.push_back(raw(RawEvent::Kind::Root, cells_for(base.root, k - 1, Band::Root),
                      "root of " + std::to_string(base.pair) + " is " + base.root.str()));
    out.push_back(raw(RawEvent::Kind::Residual,
                      base.residual == 0 ? std::vector<TraceCell>{} : cells_for(base.residual, 2 * (k - 1), Band::Residual),
                      std::to_string(base.pair) + " - " + Natural(base.root * base.root).str() + " = " + base.residual.str()));

    // Digits of the doubled-root row currently on the board, by column.
    std::vector<std::optional<std::uint8_t>> row;
    auto write_double = [&](const Natural& doubled, int ones_col, const std::string& note) {
        std::vector<TraceCell> cells = cells_for(doubled, ones_col, Band::DoubledRoot);
        bool agrees = !row.empty();
        for (const auto& c : cells) {
            const auto col = static_cast<std::size_t>(c.column);
            if (col < row.size() && row[col] && *row[col] != c.digit) agrees = false;
        }
        if (agrees) {
            std::vector<TraceCell> fresh;
            for (const auto& c : cells) {
                const auto col = static_cast<std::size_t>(c.column);
                if (col >= row.size() || !row[col]) fresh.push_back(c);
            }
            cells = std::move(fresh);
        } else {
            row.clear();
        }
        for (const auto& c : cells) {
            const auto col = static_cast<std::size_t>(c.column);
            if (row.size() <= col) row.resize(col + 1);
            row[col] = c.digit;
        }
        out.push_back(raw(RawEvent::Kind::Double, std::move(cells), note));
    };

    for (int l = 2; l <= k; ++l) {
        const Level& lv = levels[static_cast<std::size_t>(l - 1)];
        const int frame = 2 * (k - l);
        const Natural& a = lv.before.root_so_far;
        const Natural doubled = 2 * a;
        const unsigned x = lv.audit.chosen;
        write_double(doubled, k - l + 1, "double " + a.str() + " to " + doubled.str());
        out.push_back(raw(RawEvent::Kind::Digit, cells_for(x, k - l, Band::Root), "next digit " + std::to_string(x)));
        const Natural m = lv.before.residual * 100 + lv.pair;
        cascade(out, m, doubled, x, frame);

        std::vector<TraceCell> cells;
        if (x != 0 && lv.residual != 0) cells = cells_for(lv.residual, frame, Band::Residual);
        std::string note = "left " + lv.residual.str();
        if (l == k) {
            const auto rc = remainder_cells(lv.residual);
            cells.insert(cells.end(), rc.begin(), rc.end());
            note = "remainder " + lv.residual.str();
        }
        out.push_back(raw(l == k ? RawEvent::Kind::Remainder : RawEvent::Kind::Partial, std::move(cells), note));
    }
    const Natural& root = levels.back().root;
    write_double(2 * root, 0, "double " + root.str() + " to " + Natural(2 * root).str());
    return out;
}

}  // namespace detail

/// Integer square root by the digit method, with the full board trace.
inline FibonacciRun isqrt_fibonacci(const Natural& n, DigitRule rule, Procedure procedure = Procedure::Geometrie,
                                    const Layout& layout = {}) {
    require_natural(n, "radicand");
    const auto levels = detail::descend(n, rule);
    FibonacciRun run;
    run.result = RootResult{n, levels.back().root, levels.back().residual};
    for (std::size_t i = 1; i < levels.size(); ++i) {
        const auto& lv = levels[i];
        run.selections.push_back(Selection{lv.before, static_cast<std::uint8_t>(lv.pair / 10),
                                           static_cast<std::uint8_t>(lv.pair % 10), lv.audit});
    }
    auto raw = procedure == Procedure::Evolving ? detail::evolving_events(n, levels)
                                                : detail::standard_events(n, levels, procedure);
    run.trace = Trace{n, rule, procedure, make_trace(std::move(raw), layout)};
    return run;
}

/// Root and remainder only.
inline RootResult isqrt(const Natural& n, DigitRule rule = DigitRule::ExactLargest) {
    require_natural(n, "radicand");
    const auto levels = detail::descend(n, rule);
    return RootResult{n, levels.back().root, levels.back().residual};
}

struct ScaleResult {
    RootResult scaled;  ///< root of N * 10^(2m)
    unsigned pairs = 0;
    Rational descaled;
    /// Display terms: integer part, the decimal digits as a reduced fraction,
    /// the unit-fraction correction. Zero terms are omitted.
    std::vector<Rational> terms;
};

/// Root of N to m extra decimal places, followed by a unit-fraction
/// correction for what remains. With m = 0 the correction is exact.
inline ScaleResult scale_and_root(const Natural& n, unsigned m, DigitRule rule = DigitRule::ExactLargest) {
    require_natural(n, "radicand");
    const Natural unit = pow10(m);
    ScaleResult out;
    out.pairs = m;
    out.scaled = isqrt(n * unit * unit, rule);
    const Natural& root = out.scaled.root;
    const Natural& rem = out.scaled.remainder;
    if (root == 0) {
        out.descaled = Rational(0);
        return out;
    }
    const Rational correction =
        m == 0 ? Rational(Integer(rem), Integer(2 * root)) : round_unit_fraction(rem, 2 * root);
    const Rational denom{Integer(unit)};
    out.descaled = (Rational(root) + correction) / denom;
    const Natural whole = root / unit;
    const Rational places(Integer(root % unit), Integer(unit));
    for (const Rational& t : {Rational(whole), places, correction / denom})
        if (!t.is_zero()) out.terms.push_back(t);
    return out;
}

}  // namespace fibroot
