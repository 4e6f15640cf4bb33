#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sopcm/error.hpp"
#include "sopcm/groebner.hpp"
#include "sopcm/simplicial_complex.hpp"

namespace sopcm {

/// p_1, ..., p_d where p_i is the sum of the squarefree monomials of the
/// i-element faces.
inline std::vector<FieldPolynomial> universal_sop(const SimplicialComplex& c, const PrimeField& field) {
    std::vector<std::vector<Term>> terms(c.d() + 1);
    for (auto f : c.faces()) {
        int k = std::popcount(f);
        if (k > 0) terms[k].push_back({Monomial::from_mask(f), 1});
    }
    std::vector<FieldPolynomial> out;
    for (int i = 1; i <= c.d(); ++i) {
        out.push_back(FieldPolynomial::from_terms(c.n(), std::move(terms[i]), field));
    }
    return out;
}

/// Outcome of the length test against d! e for the universal sop.
struct CmReport {
    int d = 0;
    std::int64_t e = 0;
    std::int64_t degree_product = 1;
    std::uint64_t length = 0;
    bool verdict = false;
    std::uint32_t p = kDefaultCharacteristic;
};

inline std::int64_t factorial(int d) {
    std::int64_t r = 1;
    for (int k = 2; k <= d; ++k) r *= k;
    return r;
}

/// Generators of (I_Delta, p_1(Delta), ..., p_d(Delta)).
inline std::vector<FieldPolynomial> universal_sop_system(const SimplicialComplex& c, const PrimeField& field) {
    auto gens = as_polynomials(stanley_reisner_ideal(c));
    for (auto& p : universal_sop(c, field)) gens.push_back(std::move(p));
    return gens;
}

/// K[Delta] is Cohen-Macaulay iff length S/(I_Delta, p_1, ..., p_d) = d! e.
inline CmReport cm_test_universal(const SimplicialComplex& c, const PrimeField& field) {
    CmReport r;
    r.d = c.d();
    r.e = top_facet_count(c);
    r.degree_product = factorial(r.d);
    r.p = field.characteristic();
    auto gens = universal_sop_system(c, field);
    if (gens.empty()) {
        // Zero-variable ring: K itself.
        r.length = 1;
    } else {
        auto len = quotient_length(buchberger(gens, field));
        if (!len) {
            throw InternalError("universal sop did not cut the ring down to dimension 0");
        }
        r.length = *len;
    }
    const auto bound = static_cast<std::uint64_t>(r.degree_product * r.e);
    if (r.length < bound) {
        throw InternalError("length " + std::to_string(r.length) + " below d! e = " + std::to_string(bound));
    }
    r.verdict = r.length == bound;
    return r;
}

/// CM reports of the skeletons Delta^(i), i = d down to 1.
inline std::vector<CmReport> skeleton_profile(const SimplicialComplex& c, const PrimeField& field) {
    std::vector<CmReport> out;
    for (int i = c.d(); i >= 1; --i) {
        out.push_back(cm_test_universal(skeleton(c, i), field));
    }
    return out;
}

/// depth K[Delta] = max { i : K[Delta^(i)] is Cohen-Macaulay }. The complex
/// {empty set} has depth 0.
inline int depth_via_skeletons(const SimplicialComplex& c, const PrimeField& field) {
    for (int i = c.d(); i >= 1; --i) {
        if (cm_test_universal(skeleton(c, i), field).verdict) {
            return i;
        }
        if (i == 1) {
            throw InternalError("zero-dimensional skeleton failed the Cohen-Macaulay test");
        }
    }
    return 0;
}

}  // namespace sopcm
