#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "sopcm/error.hpp"
#include "sopcm/groebner.hpp"
#include "sopcm/hilbert.hpp"
#include "sopcm/identification.hpp"

namespace sopcm {

/// One step of a sop: R_i = R_{i-1}/(f_i) and U_i = ker(f_i on R_{i-1}).
struct DefectStep {
    int a = 0;
    HilbertSeries hilb_quotient;
    HilbertSeries hilb_kernel;
    /// -1 when U_i = 0.
    int dim_kernel = -1;
    std::int64_t e_kernel = 0;
    /// a_{i+1} ... a_d e(U_i) when dim U_i = d - i, else 0.
    std::int64_t contribution = 0;
    bool nonnegative = true;
};

struct DefectProfile {
    int nvars = 0;
    int d = 0;
    std::int64_t e_ring = 0;
    HilbertSeries hilb_ring;
    std::vector<DefectStep> steps;
    std::int64_t length = 0;
    std::int64_t degree_product = 1;
    std::int64_t total_defect = 0;
    int truncation = 0;
    bool identity_holds = false;
    bool dim_bound_holds = false;
    bool nonnegative = false;
    /// length == a_1 ... a_d e(R).
    bool cm_verdict = false;
    /// Every U_i vanishes.
    bool regular_sequence = false;
    std::uint32_t p = kDefaultCharacteristic;
};

namespace detail {

inline HilbertSeries quotient_series(int nvars, const std::vector<FieldPolynomial>& gens, const PrimeField& field) {
    if (gens.empty()) {
        return HilbertSeries::reduce(IntPoly::constant(1), nvars);
    }
    return quotient_hilbert_series(buchberger(gens, field));
}

inline IntPoly one_minus_t_power(int k) {
    IntPoly out = IntPoly::constant(1);
    for (int j = 0; j < k; ++j) out = out * IntPoly::one_minus_t_pow(1);
    return out;
}

/// Hilb_{R_i} - (1 - t^a) Hilb_{R_{i-1}}, reduced.
inline HilbertSeries kernel_series(const HilbertSeries& cur, const HilbertSeries& prev, int a) {
    const int dc = cur.is_zero() ? 0 : cur.pole_order;
    const int dp = prev.is_zero() ? 0 : prev.pole_order;
    const int top = std::max(dc, dp);
    IntPoly num = cur.numerator * one_minus_t_power(top - dc) -
                  IntPoly::one_minus_t_pow(a) * prev.numerator * one_minus_t_power(top - dp);
    return HilbertSeries::reduce(std::move(num), top);
}

}  // namespace detail

/// Multiplicity defect of the forms `sop` on R = S/(gens), read off the
/// Hilbert series of the partial quotients.
inline DefectProfile defect_profile(int nvars, const std::vector<FieldPolynomial>& gens,
                                    const std::vector<FieldPolynomial>& sop, const PrimeField& field,
                                    int truncation = -1) {
    for (const auto* list : {&gens, &sop}) {
        detail::check_same_ring(*list, nvars);
        for (const auto& f : *list) {
            if (!f.is_homogeneous()) {
                throw InvalidInput("defect profile needs homogeneous polynomials; got " + to_string(f, field));
            }
        }
    }
    for (const auto& f : sop) {
        if (f.is_zero() || f.degree() < 1) {
            throw HypothesisError("sop forms must be nonzero of positive degree");
        }
    }
    DefectProfile out;
    out.nvars = nvars;
    out.p = field.characteristic();
    std::vector<FieldPolynomial> ideal(gens.begin(), gens.end());
    std::erase_if(ideal, [](const FieldPolynomial& f) { return f.is_zero(); });
    out.hilb_ring = detail::quotient_series(nvars, ideal, field);
    if (out.hilb_ring.is_zero()) {
        throw HypothesisError("the generators define the unit ideal");
    }
    out.d = out.hilb_ring.dimension();
    out.e_ring = out.hilb_ring.multiplicity();
    if (static_cast<int>(sop.size()) != out.d) {
        throw HypothesisError("a sop of this ring has " + std::to_string(out.d) + " elements, got " +
                              std::to_string(sop.size()));
    }
    int max_deg = 0;
    for (const auto& f : gens) max_deg = std::max(max_deg, f.degree());
    for (const auto& f : sop) max_deg = std::max(max_deg, f.degree());
    out.truncation = truncation >= 0 ? truncation : 2 * max_deg + out.d;

    HilbertSeries prev = out.hilb_ring;
    for (const auto& f : sop) {
        ideal.push_back(f);
        DefectStep step;
        step.a = f.degree();
        step.hilb_quotient = detail::quotient_series(nvars, ideal, field);
        step.hilb_kernel = detail::kernel_series(step.hilb_quotient, prev, step.a);
        if (!step.hilb_kernel.is_zero()) {
            step.dim_kernel = step.hilb_kernel.dimension();
            step.e_kernel = step.hilb_kernel.multiplicity();
        }
        for (auto c : step.hilb_kernel.expansion(out.truncation)) {
            if (c < 0) step.nonnegative = false;
        }
        prev = step.hilb_quotient;
        out.steps.push_back(std::move(step));
    }
    if (prev.dimension() != 0) {
        throw HypothesisError("the forms do not cut the ring down to dimension 0 (dimension " +
                              std::to_string(prev.dimension()) + " remains)");
    }
    out.length = prev.multiplicity();
    for (const auto& s : out.steps) out.degree_product *= s.a;

    out.dim_bound_holds = true;
    out.nonnegative = true;
    out.regular_sequence = true;
    std::int64_t sum = 0;
    for (int i = 1; i <= out.d; ++i) {
        auto& s = out.steps[i - 1];
        if (s.dim_kernel > out.d - i) out.dim_bound_holds = false;
        if (!s.nonnegative) out.nonnegative = false;
        if (!s.hilb_kernel.is_zero()) out.regular_sequence = false;
        if (s.dim_kernel == out.d - i) {
            std::int64_t tail = 1;
            for (int k = i + 1; k <= out.d; ++k) tail *= out.steps[k - 1].a;
            s.contribution = tail * s.e_kernel;
            sum += s.contribution;
        }
    }
    out.total_defect = out.length - out.degree_product * out.e_ring;
    out.identity_holds = out.total_defect == sum;
    out.cm_verdict = out.total_defect == 0;
    return out;
}

struct SurprisingProbe {
    bool kernels_small = false;
    bool partial_cm = false;
    bool hypotheses_met = false;
    /// R is CM and U_1 = ... = U_d = 0; meaningful when hypotheses_met.
    bool conclusion_verified = false;
};

/// If dim U_i < d - i for i <= r and R/(f_1..f_r) is CM (its length test with
/// the remaining forms passes), then R is CM and every U_i vanishes.
inline SurprisingProbe surprising_probe(const DefectProfile& profile, int r) {
    if (r < 1 || r >= profile.d) {
        throw InvalidInput("probe depth must lie in [1, d - 1] = [1, " + std::to_string(profile.d - 1) + "], got " +
                           std::to_string(r));
    }
    SurprisingProbe out;
    out.kernels_small = true;
    for (int i = 1; i <= r; ++i) {
        if (profile.steps[i - 1].dim_kernel >= profile.d - i) out.kernels_small = false;
    }
    std::int64_t tail = 1;
    for (int k = r + 1; k <= profile.d; ++k) tail *= profile.steps[k - 1].a;
    out.partial_cm = profile.length == tail * profile.steps[r - 1].hilb_quotient.multiplicity();
    out.hypotheses_met = out.kernels_small && out.partial_cm;
    out.conclusion_verified = profile.cm_verdict && profile.regular_sequence;
    return out;
}

/// The linear forms x_i - x_j of an identification sop.
inline std::vector<FieldPolynomial> difference_forms(int nvars, const IdentificationSop& sop,
                                                     const PrimeField& field) {
    std::vector<FieldPolynomial> out;
    for (auto [i, j] : sop.pairs) {
        out.push_back(FieldPolynomial::from_terms(
            nvars, {{Monomial::variable(i), 1}, {Monomial::variable(j), field.neg(1)}}, field));
    }
    return out;
}

}  // namespace sopcm
