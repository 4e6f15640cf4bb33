#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "sopcm/error.hpp"
#include "sopcm/monomial.hpp"
#include "sopcm/prime_field.hpp"

namespace sopcm {

struct Term {
    Monomial mono;
    std::uint32_t coef = 0;

    friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial over a prime field. Terms are sorted by degrevlex,
/// leading term first, and carry nonzero coefficients.
class FieldPolynomial {
public:
    FieldPolynomial() = default;
    explicit FieldPolynomial(int nvars) : nvars_(nvars) {}

    /// Sorts, merges like terms and drops zero coefficients.
    static FieldPolynomial from_terms(int nvars, std::vector<Term> terms, const PrimeField& field) {
        for (const auto& t : terms) {
            if (t.mono.span_vars() > nvars) {
                throw InvalidInput("term " + to_string(t.mono) + " uses a variable beyond x" + std::to_string(nvars));
            }
        }
        std::sort(terms.begin(), terms.end(),
                  [](const Term& a, const Term& b) { return compare_degrevlex(a.mono, b.mono) > 0; });
        FieldPolynomial f(nvars);
        for (const auto& t : terms) {
            std::uint32_t c = field.from_int(t.coef);
            if (!f.terms_.empty() && f.terms_.back().mono == t.mono) {
                f.terms_.back().coef = field.add(f.terms_.back().coef, c);
                if (f.terms_.back().coef == 0) {
                    f.terms_.pop_back();
                }
            } else if (c != 0) {
                f.terms_.push_back({t.mono, c});
            }
        }
        return f;
    }

    static FieldPolynomial monomial(int nvars, const Monomial& m, std::uint32_t coef = 1) {
        FieldPolynomial f(nvars);
        if (coef != 0) {
            f.terms_.push_back({m, coef});
        }
        return f;
    }

    /// Trusted constructor: `terms` must already be sorted with nonzero coefficients.
    static FieldPolynomial from_sorted(int nvars, std::vector<Term> terms) {
        FieldPolynomial f(nvars);
        f.terms_ = std::move(terms);
        return f;
    }

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }
    const Monomial& leading_monomial() const { return terms_.front().mono; }
    std::uint32_t leading_coefficient() const { return terms_.front().coef; }

    bool is_homogeneous() const {
        return std::all_of(terms_.begin(), terms_.end(),
                           [&](const Term& t) { return t.mono.degree() == terms_.front().mono.degree(); });
    }

    /// Total degree (of the leading term, which has maximal degree).
    int degree() const { return terms_.empty() ? -1 : terms_.front().mono.degree(); }

    FieldPolynomial monic(const PrimeField& field) const {
        if (is_zero() || leading_coefficient() == 1) {
            return *this;
        }
        return scaled(field.inv(leading_coefficient()), field);
    }

    FieldPolynomial scaled(std::uint32_t c, const PrimeField& field) const {
        if (c == 0) {
            return FieldPolynomial(nvars_);
        }
        FieldPolynomial f = *this;
        for (auto& t : f.terms_) {
            t.coef = field.mul(t.coef, c);
        }
        return f;
    }

    friend bool operator==(const FieldPolynomial&, const FieldPolynomial&) = default;

private:
    int nvars_ = 0;
    std::vector<Term> terms_;
};

inline std::string to_string(const FieldPolynomial& f, const PrimeField& field) {
    if (f.is_zero()) {
        return "0";
    }
    std::string out;
    bool first = true;
    for (const auto& t : f.terms()) {
        long long c = field.symmetric(t.coef);
        if (first) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        long long a = c < 0 ? -c : c;
        if (t.mono.is_one()) {
            out += std::to_string(a);
        } else {
            if (a != 1) out += std::to_string(a) + "*";
            out += to_string(t.mono);
        }
        first = false;
    }
    return out;
}

/// Parses `[coeff*]x<i>[^e][ x<j>[^e] ...]` terms joined by `+`/`-`.
/// Coefficients are reduced mod p. The variable count defaults to the
/// largest index used.
inline FieldPolynomial parse_polynomial(std::string_view text, const PrimeField& field, int nvars = -1) {
    std::vector<Term> terms;
    std::size_t pos = 0;
    int used = 0;
    bool expect_term = true;
    int sign = 1;
    while (true) {
        detail::skip_spaces(text, pos);
        if (pos >= text.size()) {
            break;
        }
        char ch = text[pos];
        if (ch == '+' || ch == '-') {
            if (!expect_term) {
                expect_term = true;
                sign = 1;
            }
            if (ch == '-') sign = -sign;
            ++pos;
            continue;
        }
        if (!expect_term) {
            throw ParseError("missing '+' or '-' between terms in '" + std::string(text) + "'");
        }
        long long coef = 1;
        bool has_coef = false;
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            coef = detail::parse_unsigned(text, pos, text);
            has_coef = true;
            detail::skip_spaces(text, pos);
            if (pos < text.size() && text[pos] == '*') {
                ++pos;
            }
        }
        Monomial m;
        bool has_var = false;
        while (true) {
            detail::skip_spaces(text, pos);
            if (pos >= text.size()) break;
            if (text[pos] == '*') {
                ++pos;
                continue;
            }
            if (text[pos] != 'x' && text[pos] != 'X') break;
            detail::parse_variable_power(text, pos, m, text);
            has_var = true;
        }
        if (!has_coef && !has_var) {
            throw ParseError("empty term in '" + std::string(text) + "'");
        }
        used = std::max(used, m.span_vars());
        terms.push_back({m, field.from_int(sign * coef)});
        expect_term = false;
        sign = 1;
    }
    if (expect_term && !terms.empty()) {
        throw ParseError("dangling sign in '" + std::string(text) + "'");
    }
    if (terms.empty()) {
        throw ParseError("empty polynomial");
    }
    if (nvars < 0) {
        nvars = used;
    } else if (used > nvars) {
        throw ParseError("polynomial '" + std::string(text) + "' uses more than " + std::to_string(nvars) +
                         " variables");
    }
    return FieldPolynomial::from_terms(nvars, std::move(terms), field);
}

}  // namespace sopcm
