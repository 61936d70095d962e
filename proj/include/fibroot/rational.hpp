#pragma once

/**
 * @file rational.hpp
 * @brief Exact fractions in canonical form.
 *
 * - sign lives in the numerator, denominator is always positive
 * - numerator and denominator are coprime
 * - zero is 0/1
 *
 * The operators throw DivisionByZero. rational_arith() is the non-throwing
 * entry point and reports the same condition as an ArithError value.
 */

#include "fibroot/exactnum.hpp"

#include <compare>
#include <ostream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace fibroot {

class DivisionByZero : public std::domain_error {
public:
    DivisionByZero() : std::domain_error("division by zero") {}
};

class Rational {
public:
    Rational() = default;
    Rational(Integer numerator) : num_(std::move(numerator)) {}  // NOLINT: implicit by intent
    Rational(long long numerator) : num_(numerator) {}           // NOLINT
    Rational(Integer numerator, Integer denominator)
        : num_(std::move(numerator)), den_(std::move(denominator)) {
        normalize();
    }

    const Integer& numerator() const noexcept { return num_; }
    const Integer& denominator() const noexcept { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    int sign() const { return num_ < 0 ? -1 : (num_ > 0 ? 1 : 0); }

    /// Largest integer not above the value.
    Integer floor() const {
        Integer q = num_ / den_;  // truncates toward zero
        if (num_ < 0 && q * den_ != num_) q -= 1;
        return q;
    }

    Rational abs() const { return Rational(num_ < 0 ? Integer(-num_) : num_, den_); }
    Rational reciprocal() const {
        if (num_ == 0) throw DivisionByZero();
        return Rational(den_, num_);
    }

    Rational operator-() const { return Rational(Integer(-num_), den_); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw DivisionByZero();
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const Integer lhs = a.num_ * b.den_;
        const Integer rhs = b.num_ * a.den_;
        if (lhs < rhs) return std::strong_ordering::less;
        if (lhs > rhs) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    /// "n" for integers, otherwise "n/d".
    std::string str() const {
        if (den_ == 1) return num_.str();
        return num_.str() + "/" + den_.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

private:
    void normalize() {
        if (den_ == 0) throw DivisionByZero();
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        Integer g = boost::multiprecision::gcd(num_ < 0 ? Integer(-num_) : num_, den_);
        if (g != 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    Integer num_ = 0;
    Integer den_ = 1;
};

enum class ArithOp { Add, Sub, Mul, Div };
enum class ArithError { DivisionByZero };

using ArithResult = std::variant<Rational, ArithError>;

inline ArithResult rational_arith(const Rational& lhs, const Rational& rhs, ArithOp op) {
    switch (op) {
        case ArithOp::Add: return lhs + rhs;
        case ArithOp::Sub: return lhs - rhs;
        case ArithOp::Mul: return lhs * rhs;
        case ArithOp::Div:
            if (rhs.is_zero()) return ArithError::DivisionByZero;
            return lhs / rhs;
    }
    throw std::logic_error("unknown ArithOp");
}

/// Display order of a mixed number: "27 7/27" (modern) or "7/27 27" (as the
/// manuscripts write it).
enum class MixedOrder { Modern, FractionFirst };

/// Joins display terms (an integer part followed by fractional parts) in the
/// requested order. Zero terms are skipped; an all-zero list renders "0".
inline std::string join_terms(const std::vector<Rational>& terms, MixedOrder order) {
    std::vector<std::string> parts;
    for (const auto& t : terms)
        if (!t.is_zero()) parts.push_back(t.str());
    if (parts.empty()) return "0";
    std::string out;
    auto append = [&](const std::string& p) {
        if (!out.empty()) out += ' ';
        out += p;
    };
    if (order == MixedOrder::Modern) {
        for (const auto& p : parts) append(p);
    } else {
        for (auto it = parts.rbegin(); it != parts.rend(); ++it) append(*it);
    }
    return out;
}

/// Mixed-number rendering of a non-negative value: "3 1/6", "5", "1/4".
/// Negative values get a leading '-' applied to the magnitude.
inline std::string to_mixed(const Rational& value, MixedOrder order = MixedOrder::Modern) {
    if (value.sign() < 0) return "-" + to_mixed(value.abs(), order);
    const Integer whole = value.floor();
    return join_terms({Rational(whole), value - Rational(whole)}, order);
}

}  // namespace fibroot
