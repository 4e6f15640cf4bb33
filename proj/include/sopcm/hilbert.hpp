#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "sopcm/error.hpp"
#include "sopcm/monomial_ideal.hpp"

namespace sopcm {

/// Dense integer polynomial in t, coefficient k at index k. Trailing zeros
/// are trimmed so the zero polynomial is empty.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<std::int64_t> coeffs) : c_(std::move(coeffs)) { trim(); }

    static IntPoly constant(std::int64_t v) { return IntPoly({v}); }
    /// 1 - t^a
    static IntPoly one_minus_t_pow(int a) {
        std::vector<std::int64_t> c(a + 1, 0);
        c[0] += 1;
        c[a] -= 1;
        return IntPoly(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<std::int64_t>& coeffs() const { return c_; }
    std::int64_t operator[](std::size_t k) const { return k < c_.size() ? c_[k] : 0; }

    std::int64_t at_one() const {
        std::int64_t s = 0;
        for (auto v : c_) {
            s += v;
        }
        return s;
    }

    friend IntPoly operator+(const IntPoly& a, const IntPoly& b) {
        std::vector<std::int64_t> c(std::max(a.c_.size(), b.c_.size()), 0);
        for (std::size_t k = 0; k < a.c_.size(); ++k) c[k] += a.c_[k];
        for (std::size_t k = 0; k < b.c_.size(); ++k) c[k] += b.c_[k];
        return IntPoly(std::move(c));
    }

    friend IntPoly operator-(const IntPoly& a, const IntPoly& b) {
        std::vector<std::int64_t> c(std::max(a.c_.size(), b.c_.size()), 0);
        for (std::size_t k = 0; k < a.c_.size(); ++k) c[k] += a.c_[k];
        for (std::size_t k = 0; k < b.c_.size(); ++k) c[k] -= b.c_[k];
        return IntPoly(std::move(c));
    }

    friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
        if (a.is_zero() || b.is_zero()) {
            return {};
        }
        std::vector<std::int64_t> c(a.c_.size() + b.c_.size() - 1, 0);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) {
                c[i + j] += a.c_[i] * b.c_[j];
            }
        }
        return IntPoly(std::move(c));
    }

    /// Multiplies by t^k.
    IntPoly shifted(int k) const {
        if (is_zero()) return {};
        std::vector<std::int64_t> c(k, 0);
        c.insert(c.end(), c_.begin(), c_.end());
        return IntPoly(std::move(c));
    }

    /// Exact division by (1 - t); requires value 0 at t = 1.
    IntPoly divided_by_one_minus_t() const {
        // q(t)(1 - t) = p(t)  =>  q_k = sum_{j<=k} p_j
        std::vector<std::int64_t> q(c_.size() > 0 ? c_.size() - 1 : 0, 0);
        std::int64_t acc = 0;
        for (std::size_t k = 0; k + 1 < c_.size(); ++k) {
            acc += c_[k];
            q[k] = acc;
        }
        return IntPoly(std::move(q));
    }

    friend bool operator==(const IntPoly&, const IntPoly&) = default;

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) {
            c_.pop_back();
        }
    }

    std::vector<std::int64_t> c_;
};

inline std::int64_t binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < k) return 0;
    k = std::min(k, n - k);
    std::int64_t r = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
    }
    return r;
}

/// Hilbert series Q(t)/(1-t)^d in lowest terms: (1-t) does not divide Q.
/// The zero series (zero module) has an empty numerator and pole order -1.
struct HilbertSeries {
    IntPoly numerator;
    int pole_order = 0;

    /// Reduces N(t)/(1-t)^poles to lowest terms.
    static HilbertSeries reduce(IntPoly num, int poles) {
        if (num.is_zero()) {
            return {IntPoly{}, -1};
        }
        while (poles > 0 && num.at_one() == 0) {
            num = num.divided_by_one_minus_t();
            --poles;
        }
        if (num.at_one() == 0) {
            // A nonzero numerator vanishing at 1 with no pole left is not a
            // Hilbert series of a graded module over a standard graded ring.
            throw InternalError("Hilbert numerator vanishes at t = 1 with no pole left");
        }
        return {std::move(num), poles};
    }

    bool is_zero() const { return numerator.is_zero(); }
    int dimension() const { return pole_order; }
    std::int64_t multiplicity() const { return numerator.at_one(); }

    /// Coefficient of t^k in the power series expansion.
    std::int64_t coefficient(int k) const {
        if (is_zero()) return 0;
        if (pole_order == 0) return numerator[k];
        std::int64_t s = 0;
        for (int j = 0; j <= std::min(k, numerator.degree()); ++j) {
            s += numerator[j] * binomial(k - j + pole_order - 1, pole_order - 1);
        }
        return s;
    }

    std::vector<std::int64_t> expansion(int upto) const {
        std::vector<std::int64_t> out(upto + 1);
        for (int k = 0; k <= upto; ++k) out[k] = coefficient(k);
        return out;
    }

    friend bool operator==(const HilbertSeries&, const HilbertSeries&) = default;
};

namespace detail {

inline bool pairwise_coprime(const std::vector<Monomial>& gens) {
    std::uint64_t seen = 0;
    for (const auto& g : gens) {
        if (g.support() & seen) return false;
        seen |= g.support();
    }
    return true;
}

/// Numerator K(t) of Hilb_{S/I} = K(t)/(1-t)^n via the pivot recursion
///   K(I) = K(I + (p)) + t^{deg p} K(I : p),  p = x_v^e,
/// with v the most frequent variable and e its least positive exponent.
inline IntPoly hilbert_numerator(const std::vector<Monomial>& gens, int nvars) {
    if (gens.empty()) {
        return IntPoly::constant(1);
    }
    if (pairwise_coprime(gens)) {
        IntPoly out = IntPoly::constant(1);
        for (const auto& g : gens) {
            out = out * IntPoly::one_minus_t_pow(g.degree());
        }
        return out;
    }
    int counts[kMaxVars] = {};
    for (const auto& g : gens) {
        for (std::uint64_t s = g.support(); s; s &= s - 1) {
            ++counts[std::countr_zero(s)];
        }
    }
    int v = static_cast<int>(std::max_element(counts, counts + kMaxVars) - counts);
    int e = kMaxExponent;
    for (const auto& g : gens) {
        if (g[v] > 0) e = std::min(e, g[v]);
    }
    const Monomial pivot = Monomial::variable(v, e);

    std::vector<Monomial> sum_gens;
    std::vector<Monomial> colon_gens;
    for (const auto& g : gens) {
        if (!pivot.divides(g)) {
            sum_gens.push_back(g);
        }
        colon_gens.push_back(quotient(g, gcd(g, pivot)));
    }
    sum_gens.push_back(pivot);
    auto sum_ideal = MonomialIdeal::minimalize(std::move(sum_gens), nvars);
    // p is not a generator: v occurs in at least two minimal generators.
    auto colon_ideal = MonomialIdeal::minimalize(std::move(colon_gens), nvars);
    return hilbert_numerator(sum_ideal.gens(), nvars) +
           hilbert_numerator(colon_ideal.gens(), nvars).shifted(e);
}

}  // namespace detail

/// Hilbert series of S/I in lowest terms; dimension() is dim S/I and
/// multiplicity() is e(S/I).
inline HilbertSeries hilbert_series(const MonomialIdeal& ideal) {
    return HilbertSeries::reduce(detail::hilbert_numerator(ideal.gens(), ideal.nvars()), ideal.nvars());
}

}  // namespace sopcm
