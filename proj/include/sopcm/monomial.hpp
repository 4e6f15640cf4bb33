#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cctype>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sopcm/error.hpp"

namespace sopcm {

/// Hard upper bound on the number of ring variables. Supports are stored as
/// 64-bit masks.
inline constexpr int kMaxVars = 64;

/// Largest exponent a single variable may carry.
inline constexpr int kMaxExponent = 255;

/// Exponent vector of a monomial in at most kMaxVars variables. Variables are
/// 0-based internally; the text format is 1-based.
class Monomial {
public:
    Monomial() = default;

    static Monomial variable(int index, int exponent = 1) {
        Monomial m;
        m.set(index, exponent);
        return m;
    }

    static Monomial from_exponents(std::span<const int> exps) {
        if (exps.size() > static_cast<std::size_t>(kMaxVars)) {
            throw InvalidInput("too many variables: " + std::to_string(exps.size()));
        }
        Monomial m;
        for (std::size_t i = 0; i < exps.size(); ++i) {
            m.set(static_cast<int>(i), exps[i]);
        }
        return m;
    }

    /// Squarefree monomial x_F for a vertex mask F.
    static Monomial from_mask(std::uint64_t mask) {
        Monomial m;
        m.support_ = mask;
        m.degree_ = static_cast<std::uint16_t>(std::popcount(mask));
        for (std::uint64_t s = mask; s; s &= s - 1) {
            m.exp_[std::countr_zero(s)] = 1;
        }
        return m;
    }

    int operator[](int i) const { return exp_[i]; }

    void set(int index, int exponent) {
        if (index < 0 || index >= kMaxVars) {
            throw InvalidInput("variable index out of range: " + std::to_string(index + 1));
        }
        if (exponent < 0 || exponent > kMaxExponent) {
            throw InvalidInput("exponent out of range: " + std::to_string(exponent));
        }
        degree_ = static_cast<std::uint16_t>(degree_ - exp_[index] + exponent);
        exp_[index] = static_cast<std::uint8_t>(exponent);
        if (exponent) {
            support_ |= std::uint64_t{1} << index;
        } else {
            support_ &= ~(std::uint64_t{1} << index);
        }
    }

    int degree() const { return degree_; }
    std::uint64_t support() const { return support_; }
    bool is_one() const { return support_ == 0; }

    /// Highest variable index present plus one; 0 for the unit monomial.
    int span_vars() const { return support_ ? 64 - std::countl_zero(support_) : 0; }

    bool divides(const Monomial& other) const {
        if ((support_ & ~other.support_) != 0 || degree_ > other.degree_) {
            return false;
        }
        for (std::uint64_t s = support_; s; s &= s - 1) {
            int i = std::countr_zero(s);
            if (exp_[i] > other.exp_[i]) {
                return false;
            }
        }
        return true;
    }

    bool coprime(const Monomial& other) const { return (support_ & other.support_) == 0; }

    bool is_squarefree() const { return degree_ == std::popcount(support_); }

    /// Index of the variable if this is a pure power x_i^a with a >= 1.
    std::optional<int> pure_power_variable() const {
        if (std::popcount(support_) != 1) {
            return std::nullopt;
        }
        return std::countr_zero(support_);
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial m;
        for (std::uint64_t s = a.support_ | b.support_; s; s &= s - 1) {
            int i = std::countr_zero(s);
            int e = a.exp_[i] + b.exp_[i];
            if (e > kMaxExponent) {
                throw InvalidInput("exponent overflow in monomial product");
            }
            m.exp_[i] = static_cast<std::uint8_t>(e);
        }
        m.support_ = a.support_ | b.support_;
        m.degree_ = static_cast<std::uint16_t>(a.degree_ + b.degree_);
        return m;
    }

    /// a / b; requires b | a.
    friend Monomial quotient(const Monomial& a, const Monomial& b) {
        Monomial m = a;
        for (std::uint64_t s = b.support_; s; s &= s - 1) {
            int i = std::countr_zero(s);
            m.exp_[i] = static_cast<std::uint8_t>(m.exp_[i] - b.exp_[i]);
            if (m.exp_[i] == 0) {
                m.support_ &= ~(std::uint64_t{1} << i);
            }
        }
        m.degree_ = static_cast<std::uint16_t>(a.degree_ - b.degree_);
        return m;
    }

    friend Monomial lcm(const Monomial& a, const Monomial& b) {
        Monomial m;
        m.support_ = a.support_ | b.support_;
        int deg = 0;
        for (std::uint64_t s = m.support_; s; s &= s - 1) {
            int i = std::countr_zero(s);
            m.exp_[i] = std::max(a.exp_[i], b.exp_[i]);
            deg += m.exp_[i];
        }
        m.degree_ = static_cast<std::uint16_t>(deg);
        return m;
    }

    friend Monomial gcd(const Monomial& a, const Monomial& b) {
        Monomial m;
        int deg = 0;
        for (std::uint64_t s = a.support_ & b.support_; s; s &= s - 1) {
            int i = std::countr_zero(s);
            m.exp_[i] = std::min(a.exp_[i], b.exp_[i]);
            deg += m.exp_[i];
        }
        m.support_ = a.support_ & b.support_;
        m.degree_ = static_cast<std::uint16_t>(deg);
        return m;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.support_ == b.support_ && a.exp_ == b.exp_;
    }

    std::size_t hash() const {
        std::size_t h = support_ * 0x9E3779B97F4A7C15ULL;
        for (std::uint64_t s = support_; s; s &= s - 1) {
            int i = std::countr_zero(s);
            h ^= (static_cast<std::size_t>(exp_[i]) + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2)) * (i + 1);
        }
        return h;
    }

    /// Degree reverse lexicographic comparison with x1 > x2 > ... > xn.
    /// Returns +1 if a > b, -1 if a < b, 0 if equal.
    friend int compare_degrevlex(const Monomial& a, const Monomial& b) {
        if (a.degree_ != b.degree_) {
            return a.degree_ > b.degree_ ? 1 : -1;
        }
        std::uint64_t s = a.support_ | b.support_;
        while (s) {
            int i = 63 - std::countl_zero(s);
            if (a.exp_[i] != b.exp_[i]) {
                return a.exp_[i] < b.exp_[i] ? 1 : -1;
            }
            s &= ~(std::uint64_t{1} << i);
        }
        return 0;
    }

private:
    std::array<std::uint8_t, kMaxVars> exp_{};
    std::uint16_t degree_ = 0;
    std::uint64_t support_ = 0;
};

/// Strict "greater than" in degrevlex; sorting with it puts leading terms first.
struct DegRevLexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return compare_degrevlex(a, b) > 0; }
};

/// Iteration order for generator lists: ascending degree, then degrevlex
/// descending within a degree (x1x2 before x2x3).
struct GeneratorOrder {
    bool operator()(const Monomial& a, const Monomial& b) const {
        if (a.degree() != b.degree()) {
            return a.degree() < b.degree();
        }
        return compare_degrevlex(a, b) > 0;
    }
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// Renders `x1^2 x3`; the unit monomial prints as `1`.
inline std::string to_string(const Monomial& m) {
    if (m.is_one()) {
        return "1";
    }
    std::string out;
    for (std::uint64_t s = m.support(); s; s &= s - 1) {
        int i = std::countr_zero(s);
        if (!out.empty()) {
            out += ' ';
        }
        out += 'x' + std::to_string(i + 1);
        if (m[i] > 1) {
            out += '^' + std::to_string(m[i]);
        }
    }
    return out;
}

namespace detail {

inline void skip_spaces(std::string_view s, std::size_t& pos) {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) {
        ++pos;
    }
}

inline long long parse_unsigned(std::string_view s, std::size_t& pos, std::string_view context) {
    std::size_t start = pos;
    long long value = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
        value = value * 10 + (s[pos] - '0');
        if (value > (1LL << 40)) {
            throw ParseError("number too large in '" + std::string(context) + "'");
        }
        ++pos;
    }
    if (pos == start) {
        throw ParseError("expected a number in '" + std::string(context) + "'");
    }
    return value;
}

/// Parses one `x<i>[^e]` factor at `pos` and multiplies it into `m`.
inline void parse_variable_power(std::string_view s, std::size_t& pos, Monomial& m, std::string_view context) {
    if (pos >= s.size() || (s[pos] != 'x' && s[pos] != 'X')) {
        throw ParseError("expected 'x<i>' in '" + std::string(context) + "'");
    }
    ++pos;
    long long index = parse_unsigned(s, pos, context);
    if (index < 1 || index > kMaxVars) {
        throw ParseError("variable index out of range in '" + std::string(context) + "'");
    }
    long long exponent = 1;
    if (pos < s.size() && s[pos] == '^') {
        ++pos;
        exponent = parse_unsigned(s, pos, context);
    }
    int i = static_cast<int>(index - 1);
    long long total = m[i] + exponent;
    if (total > kMaxExponent) {
        throw ParseError("exponent too large in '" + std::string(context) + "'");
    }
    m.set(i, static_cast<int>(total));
}

}  // namespace detail

/// Parses whitespace-separated `x<i>^<e>` tokens (exponent 1 may be omitted).
/// `1` denotes the unit monomial. Repeated variables multiply.
inline Monomial parse_monomial(std::string_view text) {
    Monomial m;
    std::size_t pos = 0;
    detail::skip_spaces(text, pos);
    if (pos < text.size() && text[pos] == '1') {
        ++pos;
        detail::skip_spaces(text, pos);
        if (pos != text.size()) {
            throw ParseError("unexpected text after '1' in '" + std::string(text) + "'");
        }
        return m;
    }
    bool any = false;
    while (true) {
        detail::skip_spaces(text, pos);
        if (pos >= text.size()) {
            break;
        }
        if (text[pos] == '*') {
            ++pos;
            continue;
        }
        detail::parse_variable_power(text, pos, m, text);
        any = true;
    }
    if (!any) {
        throw ParseError("empty monomial");
    }
    return m;
}

}  // namespace sopcm
