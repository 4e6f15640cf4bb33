#pragma once

// Brute-force reference implementations used only by the tests. They share
// no code with the library beyond the plain value types.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>
#include <vector>

#include "sopcm/graph.hpp"
#include "sopcm/monomial_ideal.hpp"
#include "sopcm/prime_field.hpp"
#include "sopcm/simplicial_complex.hpp"

namespace oracle {

using sopcm::Graph;
using sopcm::Monomial;
using sopcm::MonomialIdeal;
using sopcm::VertexSet;

inline int height(const MonomialIdeal& I) {
    const int n = I.nvars();
    int best = n + 1;
    for (VertexSet s = 0; s < (VertexSet{1} << n); ++s) {
        bool hits = true;
        for (const auto& g : I.gens()) hits = hits && (g.support() & s);
        if (hits) best = std::min(best, std::popcount(s));
    }
    return best;
}

inline int mgrade(const MonomialIdeal& I) {
    const auto& gens = I.gens();
    int best = 0;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << gens.size()); ++s) {
        std::uint64_t seen = 0;
        bool ok = true;
        for (std::size_t k = 0; k < gens.size() && ok; ++k) {
            if (!(s >> k & 1)) continue;
            ok = (seen & gens[k].support()) == 0;
            seen |= gens[k].support();
        }
        if (ok) best = std::max(best, std::popcount(s));
    }
    return best;
}

inline bool in_ideal(const MonomialIdeal& I, const Monomial& m) {
    for (const auto& g : I.gens()) {
        bool divides = true;
        for (int v = 0; v < I.nvars(); ++v) divides = divides && g[v] <= m[v];
        if (divides) return true;
    }
    return false;
}

/// All monomials of degree k in n variables.
inline std::vector<Monomial> monomials_of_degree(int n, int k) {
    std::vector<Monomial> out;
    std::vector<int> e(n, 0);
    auto rec = [&](auto&& self, int v, int left) -> void {
        if (v == n - 1) {
            e[v] = left;
            out.push_back(Monomial::from_exponents(e));
            return;
        }
        for (int a = 0; a <= left; ++a) {
            e[v] = a;
            self(self, v + 1, left - a);
        }
    };
    if (n == 0) {
        if (k == 0) out.push_back(Monomial{});
        return out;
    }
    rec(rec, 0, k);
    return out;
}

/// dim_K (S/I)_k by counting monomials outside I.
inline std::int64_t hilbert_function(const MonomialIdeal& I, int k) {
    std::int64_t c = 0;
    for (const auto& m : monomials_of_degree(I.nvars(), k)) c += in_ideal(I, m) ? 0 : 1;
    return c;
}

/// Number of monomials outside I inside the box of exponents < `box`.
inline std::int64_t standard_count(const MonomialIdeal& I, int box) {
    const int n = I.nvars();
    std::vector<int> e(n, 0);
    std::int64_t c = 0;
    while (true) {
        if (!in_ideal(I, Monomial::from_exponents(e))) ++c;
        int v = 0;
        while (v < n && ++e[v] == box) e[v++] = 0;
        if (v == n) break;
    }
    return c;
}

inline int matching_number(const Graph& g) {
    const auto& edges = g.edges();
    int best = 0;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << edges.size()); ++s) {
        VertexSet used = 0;
        bool ok = true;
        for (std::size_t k = 0; k < edges.size() && ok; ++k) {
            if (!(s >> k & 1)) continue;
            VertexSet ends = (VertexSet{1} << edges[k].first) | (VertexSet{1} << edges[k].second);
            ok = (used & ends) == 0;
            used |= ends;
        }
        if (ok) best = std::max(best, std::popcount(s));
    }
    return best;
}

inline bool independent(const Graph& g, VertexSet s) {
    for (auto [a, b] : g.edges()) {
        if ((s >> a & 1) && (s >> b & 1)) return false;
    }
    return true;
}

inline int vertex_cover_number(const Graph& g) {
    int best = g.n();
    for (VertexSet s = 0; s < (VertexSet{1} << g.n()); ++s) {
        bool covers = true;
        for (auto [a, b] : g.edges()) covers = covers && ((s >> a & 1) || (s >> b & 1));
        if (covers) best = std::min(best, std::popcount(s));
    }
    return best;
}

inline std::vector<VertexSet> maximal_independent_sets(const Graph& g) {
    std::vector<VertexSet> out;
    for (VertexSet s = 0; s < (VertexSet{1} << g.n()); ++s) {
        if (!independent(g, s)) continue;
        bool maximal = true;
        for (int v = 0; v < g.n() && maximal; ++v) {
            if (!(s >> v & 1) && independent(g, s | (VertexSet{1} << v))) maximal = false;
        }
        if (maximal) out.push_back(s);
    }
    return out;
}

/// Number of nonempty induced matchings and the largest size, over edge subsets.
inline std::pair<std::int64_t, int> induced_matchings(const Graph& g) {
    const auto& edges = g.edges();
    std::int64_t count = 0;
    int best = 0;
    for (std::uint64_t s = 1; s < (std::uint64_t{1} << edges.size()); ++s) {
        VertexSet ends = 0;
        bool ok = true;
        for (std::size_t k = 0; k < edges.size(); ++k) {
            if (!(s >> k & 1)) continue;
            VertexSet e = (VertexSet{1} << edges[k].first) | (VertexSet{1} << edges[k].second);
            ok = ok && (ends & e) == 0;
            ends |= e;
        }
        // Induced: the only edges inside the endpoint set are the chosen ones.
        int inside = 0;
        for (auto [a, b] : edges) inside += (ends >> a & 1) && (ends >> b & 1);
        if (ok && inside == std::popcount(s)) {
            ++count;
            best = std::max(best, std::popcount(s));
        }
    }
    return {count, best};
}

/// Faces of a complex by testing every vertex subset.
inline std::vector<VertexSet> faces(const sopcm::SimplicialComplex& c) {
    std::vector<VertexSet> out;
    for (VertexSet s = 0; s < (VertexSet{1} << c.n()); ++s) {
        for (auto f : c.facets()) {
            if ((s & ~f) == 0) {
                out.push_back(s);
                break;
            }
        }
    }
    return out;
}

/// Minimal non-faces by testing every vertex subset.
inline std::set<VertexSet> minimal_nonfaces(const sopcm::SimplicialComplex& c) {
    auto fs = faces(c);
    std::set<VertexSet> face_set(fs.begin(), fs.end());
    std::set<VertexSet> out;
    for (VertexSet s = 1; s < (VertexSet{1} << c.n()); ++s) {
        if (face_set.count(s)) continue;
        bool minimal = true;
        for (VertexSet t = s; t && minimal; t &= t - 1) minimal = face_set.count(s & ~(t & -t)) > 0;
        if (minimal) out.insert(s);
    }
    return out;
}

/// Rank over GF(p) of a dense matrix by plain Gaussian elimination.
inline int dense_rank(std::vector<std::vector<std::int64_t>> m, std::int64_t p) {
    auto inv = [&](std::int64_t a) {
        std::int64_t r = 1;
        std::int64_t e = p - 2;
        a %= p;
        while (e) {
            if (e & 1) r = r * a % p;
            a = a * a % p;
            e >>= 1;
        }
        return r;
    };
    int rank = 0;
    const int rows = static_cast<int>(m.size());
    const int cols = rows ? static_cast<int>(m[0].size()) : 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int piv = -1;
        for (int r = rank; r < rows; ++r) {
            if (((m[r][c] % p) + p) % p != 0) {
                piv = r;
                break;
            }
        }
        if (piv < 0) continue;
        std::swap(m[piv], m[rank]);
        std::int64_t iv = inv(((m[rank][c] % p) + p) % p);
        for (int r = 0; r < rows; ++r) {
            if (r == rank) continue;
            std::int64_t f = ((m[r][c] % p) + p) % p * iv % p;
            if (f == 0) continue;
            for (int k = 0; k < cols; ++k) m[r][k] = ((m[r][k] - f * m[rank][k]) % p + p) % p;
        }
        ++rank;
    }
    return rank;
}

/// Reduced homology (degrees -1 .. top) from dense boundary matrices.
inline std::vector<int> reduced_homology(const std::vector<VertexSet>& faces, std::int64_t p) {
    int top = 0;
    for (auto f : faces) top = std::max(top, std::popcount(f));
    std::vector<std::vector<VertexSet>> by(top + 1);
    for (auto f : faces) by[std::popcount(f)].push_back(f);
    std::vector<int> rank(top + 2, 0);
    for (int k = 1; k <= top; ++k) {
        std::vector<std::vector<std::int64_t>> m(by[k].size(), std::vector<std::int64_t>(by[k - 1].size(), 0));
        for (std::size_t r = 0; r < by[k].size(); ++r) {
            int sign = 1;
            for (VertexSet t = by[k][r]; t; t &= t - 1) {
                VertexSet face = by[k][r] & ~(t & -t);
                auto it = std::find(by[k - 1].begin(), by[k - 1].end(), face);
                m[r][it - by[k - 1].begin()] = sign;
                sign = -sign;
            }
        }
        rank[k] = dense_rank(m, p);
    }
    std::vector<int> out(top + 1);
    for (int k = 0; k <= top; ++k) out[k] = static_cast<int>(by[k].size()) - rank[k] - rank[k + 1];
    return out;
}

/// Depth of K[Delta] by Hochster's formula with the dense homology oracle:
/// n - max{ i : beta_{i,j} != 0 }.
inline int hochster_depth(const sopcm::SimplicialComplex& c, std::int64_t p) {
    auto fs = faces(c);
    int pd = 0;
    for (VertexSet w = 0; w < (VertexSet{1} << c.n()); ++w) {
        std::vector<VertexSet> sub;
        for (auto f : fs) {
            if ((f & ~w) == 0) sub.push_back(f);
        }
        auto h = reduced_homology(sub, p);
        for (std::size_t k = 0; k < h.size(); ++k) {
            if (h[k] != 0) pd = std::max(pd, std::popcount(w) - static_cast<int>(k));
        }
    }
    return c.n() - pd;
}

}  // namespace oracle
