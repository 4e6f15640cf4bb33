#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sopcm/error.hpp"
#include "sopcm/monomial_ideal.hpp"

namespace sopcm {

/// Ordered list of variable pairs (i, j), each standing for the linear form
/// x_i - x_j. Indices are 0-based.
struct IdentificationSop {
    std::vector<std::pair<int, int>> pairs;

    std::size_t size() const { return pairs.size(); }
    friend bool operator==(const IdentificationSop&, const IdentificationSop&) = default;
};

/// Union-find over [n]; the representative of a class is its lowest index.
class VariableClasses {
public:
    explicit VariableClasses(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

    int find(int v) {
        while (parent_[v] != v) {
            parent_[v] = parent_[parent_[v]];
            v = parent_[v];
        }
        return v;
    }

    /// Returns false when i and j were already identified.
    bool unite(int i, int j) {
        int a = find(i);
        int b = find(j);
        if (a == b) {
            return false;
        }
        if (a > b) {
            std::swap(a, b);
        }
        parent_[b] = a;
        return true;
    }

    int size() const { return static_cast<int>(parent_.size()); }

private:
    std::vector<int> parent_;
};

/// Result of reducing a monomial ideal modulo an identification sop. The
/// ideal lives in the original variables but only uses class representatives.
struct IdentifiedIdeal {
    MonomialIdeal ideal;
    /// representative[v] is the lowest index in the class of v.
    std::vector<int> representative;
    /// Sorted list of representatives (the quotient variables).
    std::vector<int> classes;

    /// The same ideal renumbered onto the quotient variables 0..|classes|-1.
    MonomialIdeal compressed() const {
        std::vector<int> slot(representative.size(), -1);
        for (std::size_t k = 0; k < classes.size(); ++k) {
            slot[classes[k]] = static_cast<int>(k);
        }
        std::vector<Monomial> gens;
        for (const auto& g : ideal.gens()) {
            Monomial m;
            for (std::uint64_t s = g.support(); s; s &= s - 1) {
                int v = std::countr_zero(s);
                m.set(slot[v], g[v]);
            }
            gens.push_back(m);
        }
        return MonomialIdeal::minimalize(std::move(gens), static_cast<int>(classes.size()));
    }
};

namespace detail {

inline std::vector<int> vertices_in(std::uint64_t s) {
    std::vector<int> out;
    for (; s; s &= s - 1) out.push_back(std::countr_zero(s));
    return out;
}

inline void check_pairs(const IdentificationSop& sop, int n) {
    for (auto [i, j] : sop.pairs) {
        if (i < 0 || j < 0 || i >= n || j >= n) {
            throw InvalidInput("identification pair (" + std::to_string(i + 1) + ", " + std::to_string(j + 1) +
                               ") is out of range");
        }
        if (i == j) {
            throw InvalidInput("identification pair identifies x" + std::to_string(i + 1) + " with itself");
        }
    }
}

}  // namespace detail

/// Substitutes every variable by its class representative and re-minimalizes.
inline IdentifiedIdeal identify_variables(const MonomialIdeal& ideal, const IdentificationSop& sop) {
    const int n = ideal.nvars();
    detail::check_pairs(sop, n);
    VariableClasses uf(n);
    for (auto [i, j] : sop.pairs) {
        uf.unite(i, j);
    }
    IdentifiedIdeal out;
    out.representative.resize(n);
    for (int v = 0; v < n; ++v) {
        out.representative[v] = uf.find(v);
        if (out.representative[v] == v) {
            out.classes.push_back(v);
        }
    }
    std::vector<Monomial> gens;
    gens.reserve(ideal.mu());
    for (const auto& g : ideal.gens()) {
        Monomial m;
        for (std::uint64_t s = g.support(); s; s &= s - 1) {
            int v = std::countr_zero(s);
            int r = out.representative[v];
            m.set(r, m[r] + g[v]);
        }
        gens.push_back(m);
    }
    out.ideal = MonomialIdeal::minimalize(std::move(gens), n);
    return out;
}

/// True iff the pairs number dim S/I = n - height(I) and the identified ideal
/// is artinian in the quotient variables; such forms are a sop.
inline bool verify_identification_sop(const MonomialIdeal& ideal, const IdentificationSop& sop) {
    if (ideal.is_zero()) {
        throw ZeroIdealError("identification sops are defined for nonzero ideals");
    }
    const int dim = ideal.nvars() - height(ideal);
    if (static_cast<int>(sop.size()) != dim) {
        return false;
    }
    auto reduced = identify_variables(ideal, sop);
    for (int r : reduced.classes) {
        if (!reduced.ideal.pure_power_exponent(r)) {
            return false;
        }
    }
    return true;
}

namespace detail {

/// Chooses the two classes to identify for a non-pure-power generator of the
/// current reduced ideal. Returns the original-variable pair to record, or
/// nullopt to refuse.
using PairChooser = std::function<std::optional<std::pair<int, int>>(const Monomial& gen, const IdentifiedIdeal& cur)>;

/// Inductive construction: repeatedly pick the first non-pure-power minimal
/// generator lying in some maximum family of pairwise coprime generators and
/// identify two variables of its support. Free classes are joined to the
/// support first, and a pair of classes preserving Koenig type is used when no
/// generator qualifies. Each step is a parameter, so after dim S/I steps the
/// reduction is artinian.
inline std::optional<IdentificationSop> build_identification_sop(const MonomialIdeal& ideal,
                                                                 const PairChooser& choose) {
    if (ideal.is_zero()) {
        throw ZeroIdealError("Koenig type requires a nonzero ideal");
    }
    const int n = ideal.nvars();
    const int h = height(ideal);
    if (mgrade(ideal) != h) {
        return std::nullopt;
    }
    IdentificationSop sop;

    const int dim = n - h;
    while (static_cast<int>(sop.size()) < dim) {
        auto cur = identify_variables(ideal, sop);
        // Classes outside every support are free: identify them into the
        // support. Earlier identifications can create new free classes.
        const std::uint64_t used = cur.ideal.support();
        const int anchor = std::countr_zero(used);
        bool freed = false;
        for (int r : cur.classes) {
            if (!(used >> r & 1) && static_cast<int>(sop.size()) < dim) {
                sop.pairs.emplace_back(anchor, r);
                freed = true;
            }
        }
        if (freed) {
            continue;
        }
        const auto& gens = cur.ideal.gens();
        std::optional<std::pair<int, int>> step;
        for (const auto& u : gens) {
            if (u.pure_power_variable()) {
                continue;
            }
            std::vector<std::uint64_t> rest;
            for (const auto& g : gens) {
                if (g.coprime(u)) {
                    rest.push_back(g.support());
                }
            }
            if (1 + max_disjoint_family(std::move(rest)) != h) {
                continue;
            }
            step = choose(u, cur);
            if (step) {
                break;
            }
        }
        if (!step) {
            // Every maximum coprime family may consist of pure powers, e.g.
            // (x1^2, x1 x2^3, x2^4, x1 x2 x5^2). Then join two classes whose
            // identification keeps the reduced ideal of Koenig type and height h;
            // such a pair exists because a full sop exists. Pairs sharing an
            // original generator come first (edges, for an edge ideal).
            auto keeps_type = [&](int i, int j) {
                IdentificationSop trial = sop;
                trial.pairs.emplace_back(i, j);
                auto next = identify_variables(ideal, trial);
                return height(next.ideal) == h && mgrade(next.ideal) == h;
            };
            for (const auto& g : ideal.gens()) {
                auto vars = vertices_in(g.support());
                for (std::size_t a = 0; a < vars.size() && !step; ++a) {
                    for (std::size_t b = a + 1; b < vars.size() && !step; ++b) {
                        const int i = vars[a];
                        const int j = vars[b];
                        if (cur.representative[i] != cur.representative[j] && keeps_type(i, j)) step = std::make_pair(i, j);
                    }
                }
                if (step) break;
            }
            for (std::size_t a = 0; a < cur.classes.size() && !step; ++a) {
                for (std::size_t b = a + 1; b < cur.classes.size() && !step; ++b) {
                    if (keeps_type(cur.classes[a], cur.classes[b])) {
                        step = std::make_pair(cur.classes[a], cur.classes[b]);
                    }
                }
            }
        }
        if (!step) {
            throw InternalError("no admissible identification while the reduced ring still has positive dimension");
        }
        sop.pairs.push_back(*step);
    }
    if (!verify_identification_sop(ideal, sop)) {
        throw InternalError("constructed identification sequence failed verification");
    }
    return sop;
}

}  // namespace detail

/// Constructs an identification sop of S/I when I is of Koenig type; nullopt
/// otherwise. Two lowest support variables of the chosen generator are joined.
inline std::optional<IdentificationSop> koenig_type_sop(const MonomialIdeal& ideal) {
    return detail::build_identification_sop(
        ideal, [](const Monomial& u, const IdentifiedIdeal&) -> std::optional<std::pair<int, int>> {
            std::uint64_t s = u.support();
            int a = std::countr_zero(s);
            s &= s - 1;
            int b = std::countr_zero(s);
            return std::make_pair(a, b);
        });
}

}  // namespace sopcm
