#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "sopcm/error.hpp"
#include "sopcm/monomial_ideal.hpp"
#include "sopcm/simplicial_complex.hpp"

namespace sopcm {

using Edge = std::pair<int, int>;

/// Simple graph on vertices 0..n-1. Edges are stored with i < j, sorted.
class Graph {
public:
    Graph() = default;

    static Graph from_edges(int n, std::vector<Edge> edges) {
        if (n < 0 || n > kMaxVars) {
            throw InvalidInput("vertex count must lie in [0, 64], got " + std::to_string(n));
        }
        Graph g;
        g.n_ = n;
        g.adj_.assign(n, 0);
        for (auto& [a, b] : edges) {
            if (a < 0 || b < 0 || a >= n || b >= n) {
                throw InvalidInput("edge {" + std::to_string(a + 1) + ", " + std::to_string(b + 1) +
                                   "} uses a vertex outside 1.." + std::to_string(n));
            }
            if (a == b) {
                throw InvalidInput("loop at vertex " + std::to_string(a + 1));
            }
            if (a > b) std::swap(a, b);
        }
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
        for (auto [a, b] : edges) {
            g.adj_[a] |= VertexSet{1} << b;
            g.adj_[b] |= VertexSet{1} << a;
        }
        g.edges_ = std::move(edges);
        return g;
    }

    int n() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; }
    VertexSet neighbors(int v) const { return adj_[v]; }
    bool adjacent(int a, int b) const { return adj_[a] >> b & 1; }

    std::vector<int> isolated_vertices() const {
        std::vector<int> out;
        for (int v = 0; v < n_; ++v) {
            if (adj_[v] == 0) out.push_back(v);
        }
        return out;
    }

    VertexSet all() const { return n_ == 64 ? ~VertexSet{0} : (VertexSet{1} << n_) - 1; }

    friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<VertexSet> adj_;
};

struct GraphInvariants {
    int nu = 0;
    int tau = 0;
    int alpha = 0;
    int induced_matching_number = 0;
    std::int64_t mi = 0;
    std::int64_t induced_matchings = 0;
    bool unmixed = false;
};

namespace detail {

inline int matching_number(const Graph& g, VertexSet s, std::unordered_map<VertexSet, int>& memo) {
    // Drop vertices without neighbours in s.
    VertexSet live = 0;
    for (VertexSet t = s; t; t &= t - 1) {
        int v = std::countr_zero(t);
        if (g.neighbors(v) & s) live |= VertexSet{1} << v;
    }
    if (live == 0) return 0;
    if (auto it = memo.find(live); it != memo.end()) return it->second;
    const int v = std::countr_zero(live);
    const VertexSet rest = live & ~(VertexSet{1} << v);
    int best = matching_number(g, rest, memo);
    for (VertexSet t = g.neighbors(v) & rest; t; t &= t - 1) {
        int u = std::countr_zero(t);
        best = std::max(best, 1 + matching_number(g, rest & ~(VertexSet{1} << u), memo));
    }
    memo.emplace(live, best);
    return best;
}

inline int independence_number(const Graph& g, VertexSet s) {
    if (s == 0) return 0;
    // Branch on a vertex of maximum degree within s; isolated ones are free.
    int best_v = -1;
    int best_deg = -1;
    int free = 0;
    VertexSet rest = s;
    for (VertexSet t = s; t; t &= t - 1) {
        int v = std::countr_zero(t);
        int deg = std::popcount(g.neighbors(v) & s);
        if (deg == 0) {
            ++free;
            rest &= ~(VertexSet{1} << v);
        } else if (deg > best_deg) {
            best_deg = deg;
            best_v = v;
        }
    }
    if (best_v < 0) return free;
    const VertexSet bit = VertexSet{1} << best_v;
    int with = 1 + independence_number(g, rest & ~bit & ~g.neighbors(best_v));
    int without = independence_number(g, rest & ~bit);
    return free + std::max(with, without);
}

/// Bron-Kerbosch with pivoting on the complement: calls `emit` for every
/// maximal independent set.
template <class Emit>
void maximal_independent_sets(const Graph& g, VertexSet r, VertexSet p, VertexSet x, Emit& emit) {
    if (p == 0 && x == 0) {
        emit(r);
        return;
    }
    // The pivot minimizes the branching set P ∩ N[u].
    VertexSet px = p | x;
    int pivot = std::countr_zero(px);
    int best = 65;
    for (VertexSet t = px; t; t &= t - 1) {
        int u = std::countr_zero(t);
        int cover = std::popcount(p & (g.neighbors(u) | (VertexSet{1} << u)));
        if (cover < best) {
            best = cover;
            pivot = u;
        }
    }
    VertexSet branch = p & (g.neighbors(pivot) | (VertexSet{1} << pivot));
    for (VertexSet t = branch; t; t &= t - 1) {
        int v = std::countr_zero(t);
        VertexSet bit = VertexSet{1} << v;
        VertexSet keep = ~(g.neighbors(v) | bit);
        maximal_independent_sets(g, r | bit, p & keep, x & keep, emit);
        p &= ~bit;
        x |= bit;
    }
}

inline bool edges_form_gap(const Graph& g, const Edge& e, const Edge& f) {
    VertexSet ends_f = (VertexSet{1} << f.first) | (VertexSet{1} << f.second);
    if ((ends_f >> e.first & 1) || (ends_f >> e.second & 1)) return false;
    return ((g.neighbors(e.first) | g.neighbors(e.second)) & ends_f) == 0;
}

}  // namespace detail

/// Every maximal independent set, sorted as integers.
inline std::vector<VertexSet> maximal_independent_sets(const Graph& g) {
    std::vector<VertexSet> out;
    auto emit = [&](VertexSet s) { out.push_back(s); };
    detail::maximal_independent_sets(g, 0, g.all(), 0, emit);
    std::sort(out.begin(), out.end());
    return out;
}

inline int matching_number(const Graph& g) {
    std::unordered_map<VertexSet, int> memo;
    return detail::matching_number(g, g.all(), memo);
}

inline int independence_number(const Graph& g) { return detail::independence_number(g, g.all()); }

/// Number of nonempty induced matchings among `edges` and the largest size.
inline std::pair<std::int64_t, int> count_induced_matchings(const Graph& g, const std::vector<Edge>& edges) {
    std::int64_t count = 0;
    int largest = 0;
    std::vector<int> chosen;
    auto rec = [&](auto&& self, std::size_t start) -> void {
        for (std::size_t k = start; k < edges.size(); ++k) {
            bool ok = std::all_of(chosen.begin(), chosen.end(),
                                  [&](int c) { return detail::edges_form_gap(g, edges[c], edges[k]); });
            if (!ok) continue;
            chosen.push_back(static_cast<int>(k));
            ++count;
            largest = std::max(largest, static_cast<int>(chosen.size()));
            self(self, k + 1);
            chosen.pop_back();
        }
    };
    rec(rec, 0);
    return {count, largest};
}

inline GraphInvariants graph_invariants(const Graph& g) {
    if (g.n() < 1) {
        throw InvalidInput("graph invariants need at least one vertex");
    }
    GraphInvariants inv;
    inv.nu = matching_number(g);
    inv.alpha = independence_number(g);
    inv.tau = g.n() - inv.alpha;
    auto [count, largest] = count_induced_matchings(g, g.edges());
    inv.induced_matchings = count;
    inv.induced_matching_number = largest;
    auto sets = maximal_independent_sets(g);
    inv.mi = static_cast<std::int64_t>(sets.size());
    inv.unmixed = std::all_of(sets.begin(), sets.end(),
                              [&](VertexSet s) { return std::popcount(s) == std::popcount(sets.front()); });
    return inv;
}

inline MonomialIdeal edge_ideal(const Graph& g) {
    std::vector<Monomial> gens;
    for (auto [a, b] : g.edges()) {
        gens.push_back(Monomial::from_mask((VertexSet{1} << a) | (VertexSet{1} << b)));
    }
    return MonomialIdeal::minimalize(std::move(gens), g.n());
}

/// Faces are the independent sets; its Stanley-Reisner ideal is I(G).
inline SimplicialComplex independence_complex(const Graph& g) {
    return SimplicialComplex::from_facets(g.n(), maximal_independent_sets(g));
}

/// G plus a pendant edge {i, n + i} at every vertex i.
inline Graph whisker(const Graph& g) {
    auto edges = g.edges();
    for (int v = 0; v < g.n(); ++v) edges.emplace_back(v, g.n() + v);
    return Graph::from_edges(2 * g.n(), std::move(edges));
}

inline Graph cycle_graph(int n) {
    if (n < 3) {
        throw InvalidInput("a cycle needs at least 3 vertices, got " + std::to_string(n));
    }
    std::vector<Edge> edges;
    for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
    return Graph::from_edges(n, std::move(edges));
}

inline Graph path_graph(int n) {
    std::vector<Edge> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return Graph::from_edges(n, std::move(edges));
}

}  // namespace sopcm
