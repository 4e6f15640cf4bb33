#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sopcm/error.hpp"
#include "sopcm/homology.hpp"
#include "sopcm/simplicial_complex.hpp"
#include "sopcm/universal_sop.hpp"

namespace sopcm {

/// Poset on two chains x_1 < ... < x_n and y_1 < ... < y_n joined by cross
/// covers. Element x_i is index i and y_j is index n + j (0-based).
class TwoChainPoset {
public:
    using Cover = std::pair<int, int>;

    int n() const { return n_; }
    /// x_i covered by y_j.
    const std::vector<Cover>& covers_xy() const { return xy_; }
    /// y_i covered by x_j.
    const std::vector<Cover>& covers_yx() const { return yx_; }

    int x(int i) const { return i; }
    int y(int j) const { return n_ + j; }

    bool less(int a, int b) const { return below_[b] >> a & 1; }
    bool comparable(int a, int b) const { return a == b || less(a, b) || less(b, a); }

    /// Mask of elements strictly below `a`.
    VertexSet below(int a) const { return below_[a]; }

    std::string element_name(int a) const {
        return a < n_ ? "x" + std::to_string(a + 1) : "y" + std::to_string(a - n_ + 1);
    }

    friend TwoChainPoset build_poset(int n, std::vector<Cover> xy, std::vector<Cover> yx);

private:
    int n_ = 0;
    std::vector<Cover> xy_;
    std::vector<Cover> yx_;
    std::vector<VertexSet> below_;
};

/// Validates that the closure is a partial order, every declared cross cover
/// is a cover, and both chains are maximal.
inline TwoChainPoset build_poset(int n, std::vector<TwoChainPoset::Cover> xy, std::vector<TwoChainPoset::Cover> yx) {
    if (n < 1 || 2 * n > kMaxVars) {
        throw InvalidInput("chain length must lie in [1, 32], got " + std::to_string(n));
    }
    auto fail = [](const std::string& why) { throw InvalidInput("not a valid two-chain poset: " + why); };
    for (const auto* list : {&xy, &yx}) {
        for (auto [i, j] : *list) {
            if (i < 0 || j < 0 || i >= n || j >= n) {
                fail("cover index out of range 1.." + std::to_string(n));
            }
        }
    }
    std::sort(xy.begin(), xy.end());
    xy.erase(std::unique(xy.begin(), xy.end()), xy.end());
    std::sort(yx.begin(), yx.end());
    yx.erase(std::unique(yx.begin(), yx.end()), yx.end());

    TwoChainPoset p;
    p.n_ = n;
    p.xy_ = xy;
    p.yx_ = yx;
    const int m = 2 * n;
    // below[b] = elements below b, first in the generating relation.
    std::vector<VertexSet> below(m, 0);
    auto relate = [&](int a, int b) { below[b] |= VertexSet{1} << a; };
    for (int i = 0; i + 1 < n; ++i) {
        relate(p.x(i), p.x(i + 1));
        relate(p.y(i), p.y(i + 1));
    }
    for (auto [i, j] : xy) relate(p.x(i), p.y(j));
    for (auto [i, j] : yx) relate(p.y(i), p.x(j));
    // Transitive closure.
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
    for (int a = 0; a < m; ++a) {
        if (below[a] >> a & 1) fail("the relations contain a cycle through " + p.element_name(a));
    }
    p.below_ = below;
    auto check_cover = [&](int a, int b) {
        for (int c = 0; c < m; ++c) {
            if (p.less(a, c) && p.less(c, b)) {
                fail(p.element_name(a) + " < " + p.element_name(b) + " is not a cover: " + p.element_name(c) +
                     " lies between");
            }
        }
    };
    for (auto [i, j] : xy) check_cover(p.x(i), p.y(j));
    for (auto [i, j] : yx) check_cover(p.y(i), p.x(j));
    auto check_maximal = [&](auto elem, auto other, const char* name) {
        for (int k = 0; k < n; ++k) {
            int c = other(k);
            bool fits = p.less(c, elem(0)) || p.less(elem(n - 1), c);
            for (int i = 0; i + 1 < n && !fits; ++i) {
                fits = p.less(elem(i), c) && p.less(c, elem(i + 1));
            }
            if (fits) fail(std::string("chain ") + name + " is not maximal: " + p.element_name(c) + " can be inserted");
        }
    };
    check_maximal([&](int i) { return p.x(i); }, [&](int i) { return p.y(i); }, "x");
    check_maximal([&](int i) { return p.y(i); }, [&](int i) { return p.x(i); }, "y");
    return p;
}

/// Complex of chains of P on 2n vertices; facets are the maximal chains.
inline SimplicialComplex order_complex(const TwoChainPoset& p) {
    const int m = 2 * p.n();
    // Hasse diagram.
    std::vector<VertexSet> covers_of(m, 0);
    for (int a = 0; a < m; ++a) {
        for (int b = 0; b < m; ++b) {
            if (!p.less(a, b)) continue;
            bool cover = true;
            for (int c = 0; c < m && cover; ++c) cover = !(p.less(a, c) && p.less(c, b));
            if (cover) covers_of[a] |= VertexSet{1} << b;
        }
    }
    std::vector<VertexSet> chains;
    auto walk = [&](auto&& self, int a, VertexSet chain) -> void {
        if (covers_of[a] == 0) {
            chains.push_back(chain);
            return;
        }
        for (VertexSet s = covers_of[a]; s; s &= s - 1) {
            int b = std::countr_zero(s);
            self(self, b, chain | (VertexSet{1} << b));
        }
    };
    for (int a = 0; a < m; ++a) {
        if (p.below(a) == 0) walk(walk, a, VertexSet{1} << a);
    }
    return SimplicialComplex::from_facets(m, std::move(chains));
}

/// (1) every cross cover goes from level i to level i + 1, and (2) when
/// x_i, y_{i+1} are incomparable, x_{i+1}, y_i are comparable.
inline bool diagonal_conditions(const TwoChainPoset& p) {
    for (const auto* list : {&p.covers_xy(), &p.covers_yx()}) {
        for (auto [i, j] : *list) {
            if (j != i + 1) return false;
        }
    }
    for (int i = 0; i + 1 < p.n(); ++i) {
        if (!p.comparable(p.x(i), p.y(i + 1)) && !p.comparable(p.x(i + 1), p.y(i))) return false;
    }
    return true;
}

/// True iff each facet after the first meets the union of its predecessors
/// in a pure subcomplex of codimension one in that facet.
inline bool is_shelling(const std::vector<VertexSet>& order) {
    for (std::size_t j = 1; j < order.size(); ++j) {
        const VertexSet f = order[j];
        const int want = std::popcount(f) - 1;
        for (std::size_t i = 0; i < j; ++i) {
            const VertexSet meet = order[i] & f;
            bool covered = false;
            for (std::size_t k = 0; k < j && !covered; ++k) {
                const VertexSet g = order[k] & f;
                covered = std::popcount(g) == want && (meet & ~g) == 0;
            }
            if (!covered) return false;
        }
    }
    return true;
}

/// Facets in shelling order, or nullopt when the diagonal conditions fail.
/// At the lowest level where two facets differ, the one through y comes later.
inline std::optional<std::vector<VertexSet>> shelling_order(const TwoChainPoset& p) {
    if (!diagonal_conditions(p)) {
        return std::nullopt;
    }
    const int n = p.n();
    auto facets = order_complex(p).facets();
    std::vector<std::pair<std::vector<int>, VertexSet>> keyed;
    for (auto f : facets) {
        if (std::popcount(f) != n) {
            throw InternalError("facet of size " + std::to_string(std::popcount(f)) + " in a complex expected pure");
        }
        std::vector<int> pattern(n);
        for (int t = 0; t < n; ++t) {
            bool has_x = f >> p.x(t) & 1;
            bool has_y = f >> p.y(t) & 1;
            if (has_x == has_y) {
                throw InternalError("facet does not meet level " + std::to_string(t + 1) + " in exactly one element");
            }
            pattern[t] = has_y ? 1 : 0;
        }
        keyed.emplace_back(std::move(pattern), f);
    }
    std::sort(keyed.begin(), keyed.end());
    std::vector<VertexSet> order;
    for (auto& [key, f] : keyed) order.push_back(f);
    if (!is_shelling(order)) {
        throw InternalError("shelling verification failed");
    }
    return order;
}

struct PosetCmVerdict {
    bool by_conditions = false;
    bool by_universal_sop = false;
    bool agree = false;
    std::uint32_t p = kDefaultCharacteristic;
};

inline PosetCmVerdict poset_cm_verdict(const TwoChainPoset& p, const PrimeField& field) {
    PosetCmVerdict v;
    v.p = field.characteristic();
    v.by_conditions = diagonal_conditions(p);
    v.by_universal_sop = cm_test_universal(order_complex(p), field).verdict;
    v.agree = v.by_conditions == v.by_universal_sop;
    return v;
}

struct LinearResolutionVerdict {
    bool by_condition = false;
    bool by_regularity = false;
    bool agree = false;
    /// A failing quadruple (x_i, y_j, x_r, y_s), 0-based, when by_condition is false.
    std::optional<std::array<int, 4>> witness;
    int reg = 0;
    std::uint32_t p = kDefaultCharacteristic;
};

/// Condition: whenever {x_i, y_j} and {x_r, y_s} are comparable pairs, so is
/// {x_i, y_s} or {x_r, y_j}. Compared with reg S/I_Delta = 1 (or I_Delta = 0).
inline LinearResolutionVerdict linear_resolution_test(const TwoChainPoset& p, const PrimeField& field,
                                                      int bound = kDefaultSubsetBound) {
    LinearResolutionVerdict v;
    v.p = field.characteristic();
    const int n = p.n();
    v.by_condition = true;
    for (int i = 0; i < n && v.by_condition; ++i) {
        for (int j = 0; j < n && v.by_condition; ++j) {
            if (!p.comparable(p.x(i), p.y(j))) continue;
            for (int r = 0; r < n && v.by_condition; ++r) {
                for (int s = 0; s < n && v.by_condition; ++s) {
                    if (!p.comparable(p.x(r), p.y(s))) continue;
                    if (!p.comparable(p.x(i), p.y(s)) && !p.comparable(p.x(r), p.y(j))) {
                        v.by_condition = false;
                        v.witness = std::array<int, 4>{i, j, r, s};
                    }
                }
            }
        }
    }
    auto ideal = stanley_reisner_ideal(order_complex(p));
    v.reg = reg_of_squarefree_quotient(ideal, field, bound);
    v.by_regularity = ideal.is_zero() || v.reg == 1;
    v.agree = v.by_condition == v.by_regularity;
    return v;
}

}  // namespace sopcm
