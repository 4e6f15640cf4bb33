#pragma once

// Test-family generators: graphs up to isomorphism, random graphs, random
// complexes and monomial ideals, and every two-chain poset of a given length.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "sopcm/graph.hpp"
#include "sopcm/monomial_ideal.hpp"
#include "sopcm/poset.hpp"
#include "sopcm/simplicial_complex.hpp"

namespace support {

using sopcm::Edge;
using sopcm::Graph;
using sopcm::VertexSet;

inline std::vector<Edge> pair_list(int n) {
    std::vector<Edge> out;
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) out.emplace_back(a, b);
    }
    return out;
}

inline Graph graph_from_mask(int n, const std::vector<Edge>& pairs, std::uint64_t mask) {
    std::vector<Edge> edges;
    for (std::size_t k = 0; k < pairs.size(); ++k) {
        if (mask >> k & 1) edges.push_back(pairs[k]);
    }
    return Graph::from_edges(n, std::move(edges));
}

inline bool connected(const Graph& g) {
    if (g.n() == 0) return true;
    VertexSet seen = 1;
    VertexSet frontier = 1;
    while (frontier) {
        VertexSet next = 0;
        for (VertexSet t = frontier; t; t &= t - 1) next |= g.neighbors(std::countr_zero(t));
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == g.all();
}

/// One representative per isomorphism class of graphs on n vertices
/// (n <= 7), optionally only connected ones.
inline std::vector<Graph> graphs_up_to_isomorphism(int n, bool connected_only) {
    const auto pairs = pair_list(n);
    std::vector<int> index(n * n, -1);
    for (std::size_t k = 0; k < pairs.size(); ++k) {
        index[pairs[k].first * n + pairs[k].second] = static_cast<int>(k);
        index[pairs[k].second * n + pairs[k].first] = static_cast<int>(k);
    }
    std::vector<std::vector<int>> perms;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        perms.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    // Pair k maps to pair image[p][k] under permutation p.
    std::vector<std::vector<int>> image(perms.size(), std::vector<int>(pairs.size()));
    for (std::size_t p = 0; p < perms.size(); ++p) {
        for (std::size_t k = 0; k < pairs.size(); ++k) {
            image[p][k] = index[perms[p][pairs[k].first] * n + perms[p][pairs[k].second]];
        }
    }
    std::vector<Graph> out;
    const std::uint64_t total = std::uint64_t{1} << pairs.size();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        bool canonical = true;
        for (std::size_t p = 1; p < perms.size() && canonical; ++p) {
            std::uint64_t m = 0;
            for (std::uint64_t t = mask; t; t &= t - 1) m |= std::uint64_t{1} << image[p][std::countr_zero(t)];
            canonical = m >= mask;
        }
        if (!canonical) continue;
        Graph g = graph_from_mask(n, pairs, mask);
        if (!connected_only || connected(g)) out.push_back(std::move(g));
    }
    return out;
}

/// Every graph on n + 1 vertices up to isomorphism (with repetitions): each
/// class representative on n vertices plus a new vertex joined to any subset.
inline std::vector<Graph> one_vertex_extensions(const std::vector<Graph>& base, int n) {
    std::vector<Graph> out;
    for (const auto& g : base) {
        for (VertexSet s = 0; s < (VertexSet{1} << n); ++s) {
            auto edges = g.edges();
            for (VertexSet t = s; t; t &= t - 1) edges.emplace_back(std::countr_zero(t), n);
            out.push_back(Graph::from_edges(n + 1, std::move(edges)));
        }
    }
    return out;
}

inline Graph random_connected_graph(std::mt19937_64& rng, int n, double density) {
    std::bernoulli_distribution coin(density);
    while (true) {
        std::vector<Edge> edges;
        for (auto e : pair_list(n)) {
            if (coin(rng)) edges.push_back(e);
        }
        Graph g = Graph::from_edges(n, std::move(edges));
        if (connected(g)) return g;
    }
}

inline sopcm::SimplicialComplex random_complex(std::mt19937_64& rng, int n, int facets, int max_size) {
    std::uniform_int_distribution<int> size(1, max_size);
    std::uniform_int_distribution<int> vertex(0, n - 1);
    std::vector<VertexSet> sets;
    for (int k = 0; k < facets; ++k) {
        VertexSet f = 0;
        const int s = size(rng);
        while (std::popcount(f) < s) f |= VertexSet{1} << vertex(rng);
        sets.push_back(f);
    }
    return sopcm::SimplicialComplex::from_facets(n, std::move(sets));
}

inline sopcm::MonomialIdeal random_monomial_ideal(std::mt19937_64& rng, int n, int gens, int max_exp) {
    std::uniform_int_distribution<int> e(0, max_exp);
    while (true) {
        std::vector<sopcm::Monomial> out;
        for (int k = 0; k < gens; ++k) {
            sopcm::Monomial m;
            for (int v = 0; v < n; ++v) m.set(v, e(rng));
            if (!m.is_one()) out.push_back(m);
        }
        if (!out.empty()) return sopcm::MonomialIdeal::minimalize(std::move(out), n);
    }
}

/// Every valid two-chain poset with chains of length n, each once. The cross
/// relations are enumerated through the least y above each x_i and the least
/// x above each y_i; both are nondecreasing along the chains.
inline std::vector<sopcm::TwoChainPoset> all_two_chain_posets(int n) {
    std::vector<std::vector<int>> monotone;
    std::vector<int> cur(n);
    auto rec = [&](auto&& self, int i, int lo) -> void {
        if (i == n) {
            monotone.push_back(cur);
            return;
        }
        for (int v = lo; v <= n; ++v) {
            cur[i] = v;
            self(self, i + 1, v);
        }
    };
    rec(rec, 0, 0);

    std::vector<sopcm::TwoChainPoset> out;
    std::set<std::pair<std::vector<Edge>, std::vector<Edge>>> seen;
    const int m = 2 * n;
    for (const auto& u : monotone) {
        for (const auto& w : monotone) {
            std::vector<VertexSet> below(m, 0);
            for (int i = 0; i + 1 < n; ++i) {
                below[i + 1] |= VertexSet{1} << i;
                below[n + i + 1] |= VertexSet{1} << (n + i);
            }
            for (int i = 0; i < n; ++i) {
                if (u[i] < n) below[n + u[i]] |= VertexSet{1} << i;
                if (w[i] < n) below[w[i]] |= VertexSet{1} << (n + i);
            }
            for (bool changed = true; changed;) {
                changed = false;
                for (int b = 0; b < m; ++b) {
                    VertexSet acc = below[b];
                    for (VertexSet s = below[b]; s; s &= s - 1) acc |= below[std::countr_zero(s)];
                    if (acc != below[b]) {
                        below[b] = acc;
                        changed = true;
                    }
                }
            }
            bool cyclic = false;
            for (int a = 0; a < m; ++a) cyclic = cyclic || (below[a] >> a & 1);
            if (cyclic) continue;
            auto less = [&](int a, int b) { return (below[b] >> a & 1) != 0; };
            std::vector<Edge> xy;
            std::vector<Edge> yx;
            for (int a = 0; a < m; ++a) {
                for (int b = 0; b < m; ++b) {
                    if ((a < n) == (b < n) || !less(a, b)) continue;
                    bool cover = true;
                    for (int c = 0; c < m && cover; ++c) cover = !(less(a, c) && less(c, b));
                    if (!cover) continue;
                    if (a < n) {
                        xy.emplace_back(a, b - n);
                    } else {
                        yx.emplace_back(a - n, b);
                    }
                }
            }
            if (!seen.insert({xy, yx}).second) continue;
            try {
                out.push_back(sopcm::build_poset(n, xy, yx));
            } catch (const sopcm::InvalidInput&) {
                // A chain is not maximal.
            }
        }
    }
    return out;
}

}  // namespace support
