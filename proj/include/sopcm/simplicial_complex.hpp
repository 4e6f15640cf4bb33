#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <unordered_set>
#include <vector>

#include "sopcm/error.hpp"
#include "sopcm/monomial_ideal.hpp"

namespace sopcm {

using VertexSet = std::uint64_t;

inline std::vector<int> vertices_of(VertexSet s) {
    std::vector<int> out;
    for (; s; s &= s - 1) {
        out.push_back(std::countr_zero(s));
    }
    return out;
}

/// Lexicographic order on sorted vertex lists.
inline bool lex_less(VertexSet a, VertexSet b) {
    while (a && b) {
        int x = std::countr_zero(a);
        int y = std::countr_zero(b);
        if (x != y) return x < y;
        a &= a - 1;
        b &= b - 1;
    }
    return !a && b;
}

/// Simplicial complex on vertices 0..n-1 given by its facets. Facets are
/// inclusion-maximal and sorted by size (largest first), then
/// lexicographically. The complex {empty set} is allowed; the void complex is not.
class SimplicialComplex {
public:
    static SimplicialComplex from_facets(int n, std::vector<VertexSet> sets) {
        if (n < 0 || n > kMaxVars) {
            throw InvalidInput("vertex count must lie in [0, 64], got " + std::to_string(n));
        }
        if (sets.empty()) {
            throw InvalidInput("a complex needs at least one facet (the void complex is not supported)");
        }
        const VertexSet all = n == 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
        for (auto s : sets) {
            if (s & ~all) {
                throw InvalidInput("facet uses vertex " + std::to_string(64 - std::countl_zero(s)) +
                                   " beyond n = " + std::to_string(n));
            }
        }
        std::sort(sets.begin(), sets.end(), [](VertexSet a, VertexSet b) {
            int ca = std::popcount(a);
            int cb = std::popcount(b);
            if (ca != cb) return ca > cb;
            return lex_less(a, b);
        });
        sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
        SimplicialComplex c;
        c.n_ = n;
        for (auto s : sets) {
            bool covered = std::any_of(c.facets_.begin(), c.facets_.end(),
                                       [&](VertexSet f) { return (s & ~f) == 0; });
            if (!covered) c.facets_.push_back(s);
        }
        return c;
    }

    int n() const { return n_; }
    const std::vector<VertexSet>& facets() const { return facets_; }

    /// d = dim + 1 = size of the largest facet.
    int d() const { return std::popcount(facets_.front()); }
    int dimension() const { return d() - 1; }

    bool is_pure() const {
        return std::all_of(facets_.begin(), facets_.end(), [&](VertexSet f) { return std::popcount(f) == d(); });
    }

    bool contains(VertexSet s) const {
        return std::any_of(facets_.begin(), facets_.end(), [&](VertexSet f) { return (s & ~f) == 0; });
    }

    VertexSet vertex_set() const {
        VertexSet v = 0;
        for (auto f : facets_) v |= f;
        return v;
    }

    /// All faces (including the empty face), sorted by size then as integers.
    std::vector<VertexSet> faces() const {
        std::unordered_set<VertexSet> seen;
        for (auto f : facets_) {
            // Enumerate all subsets of f.
            VertexSet s = f;
            while (true) {
                seen.insert(s);
                if (s == 0) break;
                s = (s - 1) & f;
            }
        }
        std::vector<VertexSet> out(seen.begin(), seen.end());
        std::sort(out.begin(), out.end(), [](VertexSet a, VertexSet b) {
            int ca = std::popcount(a);
            int cb = std::popcount(b);
            return ca != cb ? ca < cb : a < b;
        });
        return out;
    }

    std::vector<VertexSet> faces_of_size(int k) const {
        std::vector<VertexSet> out;
        for (auto f : faces()) {
            if (std::popcount(f) == k) out.push_back(f);
        }
        return out;
    }

    friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

private:
    int n_ = 0;
    std::vector<VertexSet> facets_;
};

/// Number of facets of maximal size d; equals the multiplicity of K[Delta].
inline int top_facet_count(const SimplicialComplex& c) {
    const int d = c.d();
    return static_cast<int>(std::count_if(c.facets().begin(), c.facets().end(),
                                          [&](VertexSet f) { return std::popcount(f) == d; }));
}

/// Minimal non-faces as squarefree monomials. Vertices outside every facet
/// appear as linear generators.
inline MonomialIdeal stanley_reisner_ideal(const SimplicialComplex& c) {
    std::unordered_set<VertexSet> face_set;
    for (auto f : c.faces()) face_set.insert(f);
    std::vector<Monomial> gens;
    for (auto f : face_set) {
        // Every minimal non-face N arises once as F + {v} with v = max N.
        int start = f ? 64 - std::countl_zero(f) : 0;
        for (int v = start; v < c.n(); ++v) {
            VertexSet cand = f | (VertexSet{1} << v);
            if (face_set.count(cand)) continue;
            bool minimal = true;
            for (VertexSet s = f; s && minimal; s &= s - 1) {
                minimal = face_set.count(cand & ~(s & -s)) > 0;
            }
            if (minimal) gens.push_back(Monomial::from_mask(cand));
        }
    }
    return MonomialIdeal::minimalize(std::move(gens), c.n());
}

/// Subcomplex of all faces with at most i vertices: the faces of size i
/// together with the smaller facets.
inline SimplicialComplex skeleton(const SimplicialComplex& c, int i) {
    if (i < 1 || i > c.d()) {
        throw InvalidInput("skeleton size must lie in [1, " + std::to_string(c.d()) + "], got " + std::to_string(i));
    }
    std::vector<VertexSet> gens;
    for (auto f : c.faces()) {
        int k = std::popcount(f);
        if (k == i) gens.push_back(f);
    }
    for (auto f : c.facets()) {
        if (std::popcount(f) < i) gens.push_back(f);
    }
    return SimplicialComplex::from_facets(c.n(), std::move(gens));
}

/// Complex of non-attacking rook placements on an n x n board. Cell (r, c),
/// 1-based, is vertex (r-1)n + c.
inline SimplicialComplex chessboard_complex(int n) {
    if (n < 1 || n * n > kMaxVars) {
        throw InvalidInput("chessboard size must lie in [1, 8], got " + std::to_string(n));
    }
    std::vector<int> perm(n);
    for (int k = 0; k < n; ++k) perm[k] = k;
    std::vector<VertexSet> facets;
    do {
        VertexSet f = 0;
        for (int r = 0; r < n; ++r) f |= VertexSet{1} << (r * n + perm[r]);
        facets.push_back(f);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return SimplicialComplex::from_facets(n * n, std::move(facets));
}

/// Full simplex on n vertices.
inline SimplicialComplex simplex(int n) {
    return SimplicialComplex::from_facets(n, {n == 64 ? ~VertexSet{0} : (VertexSet{1} << n) - 1});
}

/// The complex whose Stanley-Reisner ideal is the given squarefree ideal:
/// faces are the vertex sets containing no generator support.
inline SimplicialComplex complex_of_squarefree_ideal(const MonomialIdeal& ideal) {
    if (!ideal.is_squarefree()) {
        throw InvalidInput("ideal is not squarefree; polarize it first");
    }
    const int n = ideal.nvars();
    std::vector<VertexSet> supp;
    for (const auto& g : ideal.gens()) supp.push_back(g.support());
    auto independent = [&](VertexSet s) {
        return std::none_of(supp.begin(), supp.end(), [&](VertexSet g) { return (g & ~s) == 0; });
    };
    std::vector<VertexSet> facets;
    // Backtracking over vertices; a leaf is kept when no vertex can be added.
    auto rec = [&](auto&& self, int v, VertexSet cur) -> void {
        if (v == n) {
            for (int w = 0; w < n; ++w) {
                if (!(cur >> w & 1) && independent(cur | (VertexSet{1} << w))) return;
            }
            facets.push_back(cur);
            return;
        }
        VertexSet with = cur | (VertexSet{1} << v);
        if (independent(with)) self(self, v + 1, with);
        self(self, v + 1, cur);
    };
    rec(rec, 0, 0);
    return SimplicialComplex::from_facets(n, std::move(facets));
}

}  // namespace sopcm
