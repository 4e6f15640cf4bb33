#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sopcm/error.hpp"
#include "sopcm/graph.hpp"
#include "sopcm/homology.hpp"
#include "sopcm/identification.hpp"
#include "sopcm/universal_sop.hpp"

namespace sopcm {

/// Identification sop x_i - x_j over edges of G when nu(G) = tau(G); nullopt
/// otherwise. Each step joins the two classes of the first admissible
/// generator through the lexicographically least original edge between them.
inline std::optional<IdentificationSop> koenig_sop(const Graph& g) {
    if (auto iso = g.isolated_vertices(); !iso.empty()) {
        throw HypothesisError("graph has isolated vertex " + std::to_string(iso.front() + 1));
    }
    if (g.edges().empty()) {
        throw HypothesisError("graph has no edges");
    }
    const auto& edges = g.edges();
    return detail::build_identification_sop(
        edge_ideal(g), [&](const Monomial& u, const IdentifiedIdeal& cur) -> std::optional<std::pair<int, int>> {
            std::uint64_t s = u.support();
            const int a = std::countr_zero(s);
            const int b = std::countr_zero(s & (s - 1));
            for (auto [i, j] : edges) {
                int ri = cur.representative[i];
                int rj = cur.representative[j];
                if ((ri == a && rj == b) || (ri == b && rj == a)) {
                    return std::make_pair(i, j);
                }
            }
            return std::nullopt;
        });
}

inline void require_verified(const Graph& g, const IdentificationSop& sop) {
    if (!verify_identification_sop(edge_ideal(g), sop)) {
        throw HypothesisError("the given pairs are not an identification sop of S/I(G)");
    }
}

/// The reduced ideal in the class representatives: x_a^2 for every class and
/// x_a x_b whenever an edge of G joins classes a and b. Checked against
/// direct substitution.
inline MonomialIdeal reduced_edge_ring(const Graph& g, const IdentificationSop& sop) {
    require_verified(g, sop);
    auto direct = identify_variables(edge_ideal(g), sop);
    std::vector<Monomial> gens;
    for (int a : direct.classes) gens.push_back(Monomial::variable(a, 2));
    for (auto [i, j] : g.edges()) {
        int a = direct.representative[i];
        int b = direct.representative[j];
        if (a != b) gens.push_back(Monomial::variable(a) * Monomial::variable(b));
    }
    auto reduced = MonomialIdeal::minimalize(std::move(gens), g.n());
    if (!(reduced == direct.ideal)) {
        throw InternalError("class-adjacency ideal " + to_string(reduced) + " differs from substitution " +
                            to_string(direct.ideal));
    }
    return reduced;
}

struct MuComparison {
    std::size_t mu_ideal = 0;
    std::size_t mu_reduced = 0;
    /// mu(reduced) == mu(I): necessary for Cohen-Macaulayness, not sufficient.
    bool cm_possible = false;
};

inline MuComparison mu_compare(const Graph& g, const IdentificationSop& sop) {
    auto reduced = reduced_edge_ring(g, sop);
    MuComparison out;
    out.mu_ideal = edge_ideal(g).mu();
    out.mu_reduced = reduced.mu();
    out.cm_possible = out.mu_reduced == out.mu_ideal;
    return out;
}

struct ImBoundResult {
    bool hypotheses_met = false;
    std::string reason;
    std::vector<Edge> matching;
    std::int64_t k = 0;
    std::int64_t mi = 0;
    bool bound_holds = false;
    bool cm_verdict = false;
    bool cm_crosscheck = false;
    bool agree = false;
    std::uint32_t p = kDefaultCharacteristic;
};

/// Lexicographically first maximum matching.
inline std::vector<Edge> maximum_matching(const Graph& g) {
    const int target = matching_number(g);
    std::vector<Edge> chosen;
    VertexSet used = 0;
    auto rec = [&](auto&& self, std::size_t start) -> bool {
        if (static_cast<int>(chosen.size()) == target) return true;
        for (std::size_t k = start; k < g.edges().size(); ++k) {
            auto [a, b] = g.edges()[k];
            VertexSet ends = (VertexSet{1} << a) | (VertexSet{1} << b);
            if (used & ends) continue;
            chosen.push_back(g.edges()[k]);
            used |= ends;
            if (self(self, k + 1)) return true;
            used &= ~ends;
            chosen.pop_back();
        }
        return false;
    };
    rec(rec, 0);
    return chosen;
}

/// For unmixed Koenig graphs: mi(G) <= k + 1 with k the number of nonempty
/// induced matchings inside a fixed maximum matching, and equality exactly
/// when G is Cohen-Macaulay.
inline ImBoundResult im_bound_test(const Graph& g, const PrimeField& field) {
    ImBoundResult r;
    r.p = field.characteristic();
    if (g.n() < 1 || g.edges().empty()) {
        r.reason = "graph has no edges";
        return r;
    }
    if (auto iso = g.isolated_vertices(); !iso.empty()) {
        r.reason = "graph has isolated vertex " + std::to_string(iso.front() + 1);
        return r;
    }
    auto inv = graph_invariants(g);
    if (inv.nu != inv.tau) {
        r.reason = "graph is not Koenig (nu = " + std::to_string(inv.nu) + ", tau = " + std::to_string(inv.tau) + ")";
        return r;
    }
    if (!inv.unmixed) {
        r.reason = "graph is not unmixed";
        return r;
    }
    r.hypotheses_met = true;
    // Use the sop pairs when they form a maximum matching, else a fixed one.
    auto sop = koenig_sop(g);
    std::vector<Edge> pairs;
    VertexSet used = 0;
    bool is_matching = sop && static_cast<int>(sop->size()) == inv.nu;
    if (is_matching) {
        for (auto [i, j] : sop->pairs) {
            VertexSet ends = (VertexSet{1} << i) | (VertexSet{1} << j);
            if (used & ends) is_matching = false;
            used |= ends;
            pairs.emplace_back(std::min(i, j), std::max(i, j));
        }
    }
    r.matching = is_matching ? pairs : maximum_matching(g);
    r.k = count_induced_matchings(g, r.matching).first;
    r.mi = inv.mi;
    r.bound_holds = r.mi <= r.k + 1;
    r.cm_verdict = r.mi == r.k + 1;
    r.cm_crosscheck = cm_test_universal(independence_complex(g), field).verdict;
    r.agree = r.cm_verdict == r.cm_crosscheck;
    return r;
}

struct RegReduction {
    int reg_ring = 0;
    int reg_reduced = 0;
    /// alpha of the graph on classes whose whiskering polarizes the reduced ideal.
    int alpha_class_graph = 0;
    bool alpha_agrees = false;
    bool inequality_holds = false;
    std::uint32_t p = kDefaultCharacteristic;
};

/// Graph on the classes of the sop: a ~ b when x_a x_b is a generator of the
/// reduced ideal. Vertices follow the sorted representatives.
inline Graph class_graph(const MonomialIdeal& reduced_compressed) {
    std::vector<Edge> edges;
    for (const auto& gen : reduced_compressed.gens()) {
        if (gen.pure_power_variable()) continue;
        std::uint64_t s = gen.support();
        edges.emplace_back(std::countr_zero(s), std::countr_zero(s & (s - 1)));
    }
    return Graph::from_edges(reduced_compressed.nvars(), std::move(edges));
}

/// reg R/(f) <= reg R for an identification sop of the edge ring, via
/// Hochster's formula on I(G) and on the polarization of the reduced ideal.
inline RegReduction reg_reduction_check(const Graph& g, const IdentificationSop& sop, const PrimeField& field,
                                        int bound = kDefaultSubsetBound) {
    require_verified(g, sop);
    RegReduction r;
    r.p = field.characteristic();
    r.reg_ring = reg_of_squarefree_quotient(edge_ideal(g), field, bound);
    auto reduced = identify_variables(edge_ideal(g), sop).compressed();
    r.reg_reduced = reg_of_squarefree_quotient(polarize(reduced).ideal, field, bound);
    r.alpha_class_graph = independence_number(class_graph(reduced));
    r.alpha_agrees = r.alpha_class_graph == r.reg_reduced;
    r.inequality_holds = r.reg_reduced <= r.reg_ring;
    return r;
}

}  // namespace sopcm
