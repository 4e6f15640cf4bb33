#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "sopcm/error.hpp"
#include "sopcm/linalg.hpp"
#include "sopcm/monomial_ideal.hpp"
#include "sopcm/simplicial_complex.hpp"

namespace sopcm {

inline constexpr int kDefaultSubsetBound = 16;

/// Reduced homology dimensions of the complex with the given face list
/// (closed under subsets, containing the empty face). Entry k holds
/// dim H~_{k-1}, so the vector covers degrees -1 .. dim.
inline std::vector<int> reduced_homology_from_faces(const std::vector<VertexSet>& faces, const PrimeField& field) {
    int top = 0;
    for (auto f : faces) top = std::max(top, std::popcount(f));
    // by_size[k] = faces with k vertices (chains of degree k - 1).
    std::vector<std::vector<VertexSet>> by_size(top + 1);
    for (auto f : faces) by_size[std::popcount(f)].push_back(f);
    if (by_size[0].empty()) {
        // The void complex has no homology at all.
        return {};
    }
    std::vector<std::unordered_map<VertexSet, int>> index(top + 1);
    for (int k = 0; k <= top; ++k) {
        for (std::size_t r = 0; r < by_size[k].size(); ++r) index[k].emplace(by_size[k][r], static_cast<int>(r));
    }
    // rank[k] = rank of the boundary from size-k chains to size-(k-1) chains.
    std::vector<int> rank(top + 2, 0);
    const std::uint32_t minus_one = field.neg(1);
    for (int k = 1; k <= top; ++k) {
        RowEchelon ech(static_cast<int>(by_size[k - 1].size()), field);
        for (auto f : by_size[k]) {
            SparseRow row;
            int sign = 0;
            for (VertexSet s = f; s; s &= s - 1) {
                VertexSet v = s & -s;
                row.emplace_back(index[k - 1].at(f & ~v), sign % 2 == 0 ? 1u : minus_one);
                ++sign;
            }
            std::sort(row.begin(), row.end());
            ech.insert(row);
            if (ech.full()) break;
        }
        rank[k] = ech.rank();
    }
    std::vector<int> out(top + 1);
    for (int k = 0; k <= top; ++k) {
        out[k] = static_cast<int>(by_size[k].size()) - rank[k] - rank[k + 1];
    }
    return out;
}

/// dim H~_i(Delta; GF(p)) for i = -1 .. dim Delta (entry 0 is degree -1).
inline std::vector<int> reduced_homology_dims(const SimplicialComplex& c, const PrimeField& field) {
    return reduced_homology_from_faces(c.faces(), field);
}

/// Graded Betti numbers beta_{i,j} of S/I_Delta over GF(p).
struct BettiTable {
    int n = 0;
    std::uint32_t p = kDefaultCharacteristic;
    std::map<std::pair<int, int>, std::int64_t> beta;

    std::int64_t at(int i, int j) const {
        auto it = beta.find({i, j});
        return it == beta.end() ? 0 : it->second;
    }
    int pd() const {
        int r = 0;
        for (const auto& [key, v] : beta) r = std::max(r, key.first);
        return r;
    }
    int reg() const {
        int r = 0;
        for (const auto& [key, v] : beta) r = std::max(r, key.second - key.first);
        return r;
    }
    int depth() const { return n - pd(); }
};

namespace detail {

/// Some vertex v of w is a cone apex of the restriction: every face without
/// v extends by v. Equivalently, faces with and without v are equinumerous.
inline bool restriction_is_cone(const std::vector<VertexSet>& faces, VertexSet w) {
    for (VertexSet s = w; s; s &= s - 1) {
        VertexSet v = s & -s;
        std::int64_t with = 0;
        std::int64_t without = 0;
        for (auto f : faces) {
            if (f & v) {
                ++with;
            } else {
                ++without;
            }
        }
        if (with == without) return true;
    }
    return false;
}

}  // namespace detail

/// beta_{i,j}(S/I_Delta) = sum over |W| = j of dim H~_{j-i-1}(Delta_W).
/// The scan covers all 2^n vertex subsets and refuses n above `bound`.
inline BettiTable hochster_betti_table(const SimplicialComplex& c, const PrimeField& field,
                                       int bound = kDefaultSubsetBound) {
    const int n = c.n();
    if (n > bound) {
        throw BoundExceeded("Hochster scan over 2^" + std::to_string(n) + " subsets exceeds the vertex bound " +
                            std::to_string(bound));
    }
    const auto faces = c.faces();
    BettiTable t;
    t.n = n;
    t.p = field.characteristic();
    std::vector<VertexSet> sub;
    const VertexSet total = VertexSet{1} << n;
    for (VertexSet w = 0; w < total; ++w) {
        sub.clear();
        for (auto f : faces) {
            if ((f & ~w) == 0) sub.push_back(f);
        }
        if (w != 0 && detail::restriction_is_cone(sub, w)) continue;
        auto h = reduced_homology_from_faces(sub, field);
        const int j = std::popcount(w);
        for (std::size_t k = 0; k < h.size(); ++k) {
            if (h[k] == 0) continue;
            // h[k] is degree k - 1 = j - i - 1.
            const int i = j - static_cast<int>(k);
            t.beta[{i, j}] += h[k];
        }
    }
    return t;
}

/// reg S/I for a squarefree monomial ideal, via Hochster's formula.
inline int reg_of_squarefree_quotient(const MonomialIdeal& ideal, const PrimeField& field,
                                      int bound = kDefaultSubsetBound) {
    if (!ideal.is_squarefree()) {
        throw InvalidInput("regularity via Hochster's formula needs a squarefree ideal; polarize it first");
    }
    return hochster_betti_table(complex_of_squarefree_ideal(ideal), field, bound).reg();
}

}  // namespace sopcm
