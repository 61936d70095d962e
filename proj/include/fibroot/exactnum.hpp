#pragma once

/**
 * @file exactnum.hpp
 * @brief Unbounded naturals, decimal decomposition and the reference square root.
 *
 * Every quantity in the library is an exact integer. Values are held in
 * boost::multiprecision::cpp_int so that scaling a radicand by 10^(2m) or
 * squaring a refinement denominator never overflows.
 *
 * isqrt_oracle() is deliberately a plain bisection on the square. It shares
 * no code with the digit method and is what every other routine is checked
 * against.
 */

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fibroot {

/// Signed arbitrary-precision integer.
using Integer = boost::multiprecision::cpp_int;

/// Non-negative arbitrary-precision integer. Same representation as Integer;
/// functions taking a Natural reject negative arguments.
using Natural = boost::multiprecision::cpp_int;

inline void require_natural(const Integer& value, const char* what) {
    if (value < 0) throw std::domain_error(std::string(what) + " must be non-negative");
}

inline std::string to_string(const Integer& value) { return value.str(); }

/// Parses a plain decimal natural ("0", "864", ...). No sign, no whitespace,
/// no separators. Returns nullopt for anything else.
inline std::optional<Natural> parse_natural(std::string_view text) {
    if (text.empty()) return std::nullopt;
    Natural value = 0;
    for (char c : text) {
        if (c < '0' || c > '9') return std::nullopt;
        value *= 10;
        value += static_cast<unsigned>(c - '0');
    }
    return value;
}

inline Natural pow10(unsigned exponent) {
    Natural p = 1;
    for (unsigned i = 0; i < exponent; ++i) p *= 10;
    return p;
}

/// Base-10 digits, least significant first. Zero is the single digit {0}.
struct Digits {
    std::vector<std::uint8_t> values;

    std::size_t size() const noexcept { return values.size(); }
    std::uint8_t operator[](std::size_t i) const { return values.at(i); }
    /// Digit at position i, or 0 beyond the most significant digit.
    std::uint8_t at_or_zero(std::size_t i) const noexcept {
        return i < values.size() ? values[i] : std::uint8_t{0};
    }

    friend bool operator==(const Digits&, const Digits&) = default;
};

inline Digits digits_of(const Natural& n) {
    require_natural(n, "digits_of argument");
    Digits d;
    if (n == 0) {
        d.values.push_back(0);
        return d;
    }
    Natural rest = n;
    while (rest > 0) {
        d.values.push_back(static_cast<std::uint8_t>(static_cast<unsigned>(rest % 10)));
        rest /= 10;
    }
    return d;
}

/// Positional value of a digit list. Accepts non-canonical input (leading zeros).
inline Natural value_of(const Digits& d) {
    Natural v = 0;
    for (auto it = d.values.rbegin(); it != d.values.rend(); ++it) {
        if (*it > 9) throw std::domain_error("digit out of range");
        v = v * 10 + *it;
    }
    return v;
}

/// N = head * 100 + tens * 10 + ones.
struct Partition {
    Natural head;
    std::uint8_t tens = 0;
    std::uint8_t ones = 0;

    Natural value() const { return head * 100 + tens * 10 + ones; }
    friend bool operator==(const Partition&, const Partition&) = default;
};

inline Partition partition(const Natural& n) {
    require_natural(n, "partition argument");
    return Partition{n / 100, static_cast<std::uint8_t>(static_cast<unsigned>((n / 10) % 10)),
                     static_cast<std::uint8_t>(static_cast<unsigned>(n % 10))};
}

/// Integer square root with remainder: root^2 <= radicand < (root+1)^2.
struct RootResult {
    Natural radicand;
    Natural root;
    Natural remainder;

    /// True when every RootResult invariant holds, including remainder <= 2*root.
    bool consistent() const {
        return radicand >= 0 && root >= 0 && remainder >= 0 &&
               remainder == radicand - root * root && remainder <= 2 * root;
    }

    friend bool operator==(const RootResult&, const RootResult&) = default;
};

/// Reference floor square root by bisection on root^2 <= n.
inline RootResult isqrt_oracle(const Natural& n) {
    require_natural(n, "isqrt_oracle argument");
    Natural lo = 0;
    // hi is a strict upper bound: hi^2 > n.
    Natural hi = 1;
    while (hi * hi <= n) hi *= 2;
    while (hi - lo > 1) {
        Natural mid = (lo + hi) / 2;
        if (mid * mid <= n)
            lo = mid;
        else
            hi = mid;
    }
    return RootResult{n, lo, n - lo * lo};
}

}  // namespace fibroot
