#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sopcm/error.hpp"
#include "sopcm/monomial.hpp"

namespace sopcm {

/// Monomial ideal held by its unique minimal generating set, sorted in
/// GeneratorOrder. The empty generator list is the zero ideal.
class MonomialIdeal {
public:
    MonomialIdeal() = default;

    explicit MonomialIdeal(int nvars) : nvars_(check_nvars(nvars)) {}

    /// Divisibility-reduces `gens`. Throws UnitIdealError if 1 is among them.
    static MonomialIdeal minimalize(std::vector<Monomial> gens, int nvars) {
        MonomialIdeal ideal(nvars);
        for (const auto& g : gens) {
            if (g.is_one()) {
                throw UnitIdealError("the unit monomial 1 generates the unit ideal");
            }
            if (g.span_vars() > nvars) {
                throw InvalidInput("generator " + to_string(g) + " uses a variable beyond x" +
                                   std::to_string(nvars));
            }
        }
        std::sort(gens.begin(), gens.end(), GeneratorOrder{});
        gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
        for (const auto& g : gens) {
            bool redundant = std::any_of(ideal.gens_.begin(), ideal.gens_.end(),
                                         [&](const Monomial& h) { return h.divides(g); });
            if (!redundant) {
                ideal.gens_.push_back(g);
            }
        }
        return ideal;
    }

    int nvars() const { return nvars_; }
    const std::vector<Monomial>& gens() const { return gens_; }
    std::size_t mu() const { return gens_.size(); }
    bool is_zero() const { return gens_.empty(); }

    bool contains(const Monomial& m) const {
        return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
    }

    bool is_squarefree() const {
        return std::all_of(gens_.begin(), gens_.end(), [](const Monomial& g) { return g.is_squarefree(); });
    }

    /// Union of generator supports.
    std::uint64_t support() const {
        std::uint64_t s = 0;
        for (const auto& g : gens_) {
            s |= g.support();
        }
        return s;
    }

    /// Exponent of the pure power of x_i among the generators, if any.
    std::optional<int> pure_power_exponent(int i) const {
        for (const auto& g : gens_) {
            if (g.pure_power_variable() == i) {
                return g[i];
            }
        }
        return std::nullopt;
    }

    /// Every variable has a pure power among the generators.
    bool is_artinian() const {
        for (int i = 0; i < nvars_; ++i) {
            if (!pure_power_exponent(i)) {
                return false;
            }
        }
        return true;
    }

    friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
        return a.nvars_ == b.nvars_ && a.gens_ == b.gens_;
    }

private:
    static int check_nvars(int n) {
        if (n < 0 || n > kMaxVars) {
            throw InvalidInput("variable count must lie in [0, " + std::to_string(kMaxVars) + "]");
        }
        return n;
    }

    int nvars_ = 0;
    std::vector<Monomial> gens_;
};

inline std::string to_string(const MonomialIdeal& ideal) {
    if (ideal.is_zero()) {
        return "(0)";
    }
    std::string out = "(";
    for (std::size_t k = 0; k < ideal.gens().size(); ++k) {
        if (k) {
            out += ", ";
        }
        out += to_string(ideal.gens()[k]);
    }
    return out + ")";
}

namespace detail {

/// Drops duplicate sets and sets containing another set.
inline std::vector<std::uint64_t> inclusion_minimal(std::vector<std::uint64_t> sets) {
    std::sort(sets.begin(), sets.end(), [](std::uint64_t a, std::uint64_t b) {
        int pa = std::popcount(a);
        int pb = std::popcount(b);
        return pa != pb ? pa < pb : a < b;
    });
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    std::vector<std::uint64_t> kept;
    for (auto s : sets) {
        bool dominated = std::any_of(kept.begin(), kept.end(), [&](std::uint64_t t) { return (t & ~s) == 0; });
        if (!dominated) {
            kept.push_back(s);
        }
    }
    return kept;
}

/// Size of a maximum family of pairwise disjoint sets.
inline int max_disjoint_family(std::vector<std::uint64_t> sets) {
    sets = inclusion_minimal(std::move(sets));
    int best = 0;
    std::function<void(const std::vector<std::uint64_t>&, int)> search =
        [&](const std::vector<std::uint64_t>& cand, int count) {
            if (cand.empty()) {
                best = std::max(best, count);
                return;
            }
            if (count + static_cast<int>(cand.size()) <= best) {
                return;
            }
            std::uint64_t pool = 0;
            int smallest = 64;
            for (auto s : cand) {
                pool |= s;
                smallest = std::min(smallest, std::popcount(s));
            }
            if (count + std::popcount(pool) / smallest <= best) {
                return;
            }
            std::uint64_t first = cand.front();
            std::vector<std::uint64_t> with;
            with.reserve(cand.size());
            for (std::size_t k = 1; k < cand.size(); ++k) {
                if ((cand[k] & first) == 0) {
                    with.push_back(cand[k]);
                }
            }
            search(with, count + 1);
            std::vector<std::uint64_t> without(cand.begin() + 1, cand.end());
            search(without, count);
        };
    search(sets, 0);
    return best;
}

/// Size of a minimum set of elements meeting every set (minimum transversal).
inline int min_transversal(std::vector<std::uint64_t> sets) {
    sets = inclusion_minimal(std::move(sets));
    if (sets.empty()) {
        return 0;
    }
    // Greedy upper bound.
    int best = 0;
    {
        std::uint64_t chosen = 0;
        while (true) {
            int counts[64] = {};
            bool any = false;
            for (auto s : sets) {
                if ((s & chosen) == 0) {
                    any = true;
                    for (std::uint64_t t = s; t; t &= t - 1) {
                        ++counts[std::countr_zero(t)];
                    }
                }
            }
            if (!any) {
                break;
            }
            int v = static_cast<int>(std::max_element(counts, counts + 64) - counts);
            chosen |= std::uint64_t{1} << v;
            ++best;
        }
    }
    std::function<void(std::uint64_t, std::uint64_t, int)> search = [&](std::uint64_t chosen,
                                                                         std::uint64_t excluded, int count) {
        std::uint64_t pick = 0;
        int pick_size = 65;
        std::uint64_t packed = 0;
        int lower = 0;
        for (auto s : sets) {
            if (s & chosen) {
                continue;
            }
            std::uint64_t avail = s & ~excluded;
            if (avail == 0) {
                return;
            }
            int size = std::popcount(avail);
            if (size < pick_size) {
                pick_size = size;
                pick = avail;
            }
            if ((avail & packed) == 0) {
                packed |= avail;
                ++lower;
            }
        }
        if (pick_size == 65) {
            best = std::min(best, count);
            return;
        }
        if (count + lower >= best) {
            return;
        }
        std::uint64_t skip = 0;
        for (std::uint64_t t = pick; t; t &= t - 1) {
            std::uint64_t bit = t & (~t + 1);
            search(chosen | bit, excluded | skip, count + 1);
            skip |= bit;
        }
    };
    search(0, 0, 0);
    return best;
}

inline std::vector<std::uint64_t> supports(const MonomialIdeal& ideal) {
    std::vector<std::uint64_t> out;
    out.reserve(ideal.mu());
    for (const auto& g : ideal.gens()) {
        out.push_back(g.support());
    }
    return out;
}

}  // namespace detail

/// Height of a monomial ideal: the minimum number of variables meeting the
/// support of every generator.
inline int height(const MonomialIdeal& ideal) {
    if (ideal.is_zero()) {
        throw ZeroIdealError("height of the zero ideal is undefined here");
    }
    return detail::min_transversal(detail::supports(ideal));
}

/// Monomial grade: the largest number of minimal generators with pairwise
/// disjoint supports (a regular sequence of monomials).
inline int mgrade(const MonomialIdeal& ideal) {
    if (ideal.is_zero()) {
        throw ZeroIdealError("monomial grade of the zero ideal is undefined");
    }
    return detail::max_disjoint_family(detail::supports(ideal));
}

inline bool koenig_type(const MonomialIdeal& ideal) { return mgrade(ideal) == height(ideal); }

/// Basis of S/I as a vector space when I is artinian; nullopt ("infinite
/// length") otherwise.
inline std::optional<std::vector<Monomial>> standard_monomials(const MonomialIdeal& ideal) {
    const int n = ideal.nvars();
    std::vector<int> bound(n);
    for (int i = 0; i < n; ++i) {
        auto e = ideal.pure_power_exponent(i);
        if (!e) {
            return std::nullopt;
        }
        bound[i] = *e;
    }
    std::vector<Monomial> out;
    Monomial cur;
    std::function<void(int)> walk = [&](int i) {
        if (i == n) {
            out.push_back(cur);
            return;
        }
        for (int e = 0; e < bound[i]; ++e) {
            cur.set(i, e);
            if (e > 0 && ideal.contains(cur)) {
                break;
            }
            walk(i + 1);
        }
        cur.set(i, 0);
    };
    walk(0);
    std::sort(out.begin(), out.end(), GeneratorOrder{});
    return out;
}

/// Vector-space dimension of S/I, nullopt when infinite.
inline std::optional<std::uint64_t> length(const MonomialIdeal& ideal) {
    auto basis = standard_monomials(ideal);
    if (!basis) {
        return std::nullopt;
    }
    return basis->size();
}

/// Number of standard monomials m with x_k m in I for every k. A value of 1
/// certifies that the artinian ring S/I is Gorenstein.
inline std::optional<int> socle_dimension(const MonomialIdeal& ideal) {
    auto basis = standard_monomials(ideal);
    if (!basis) {
        return std::nullopt;
    }
    int count = 0;
    for (const auto& m : *basis) {
        bool socle = true;
        for (int k = 0; k < ideal.nvars() && socle; ++k) {
            socle = ideal.contains(m * Monomial::variable(k));
        }
        count += socle ? 1 : 0;
    }
    return count;
}

/// Squarefree ideal from polarization together with the variable map:
/// new variable `k` stands for x_{original[k].first, original[k].second}.
struct PolarizedIdeal {
    MonomialIdeal ideal;
    std::vector<std::pair<int, int>> original;
    /// Index of x_{i,0} for every original variable i.
    std::vector<int> first_copy;
};

/// Standard polarization: x_i^a becomes x_{i,0} x_{i,1} ... x_{i,a-1}. Every
/// original variable keeps at least its copy x_{i,0}.
inline PolarizedIdeal polarize(const MonomialIdeal& ideal) {
    const int n = ideal.nvars();
    std::vector<int> top(n, 1);
    for (const auto& g : ideal.gens()) {
        for (int i = 0; i < n; ++i) {
            top[i] = std::max(top[i], g[i]);
        }
    }
    PolarizedIdeal out;
    out.first_copy.resize(n);
    for (int i = 0; i < n; ++i) {
        out.first_copy[i] = static_cast<int>(out.original.size());
        for (int j = 0; j < top[i]; ++j) {
            out.original.emplace_back(i, j);
        }
    }
    const int total = static_cast<int>(out.original.size());
    if (total > kMaxVars) {
        throw BoundExceeded("polarization needs " + std::to_string(total) + " variables; limit is " +
                            std::to_string(kMaxVars));
    }
    std::vector<Monomial> gens;
    for (const auto& g : ideal.gens()) {
        std::uint64_t mask = 0;
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < g[i]; ++j) {
                mask |= std::uint64_t{1} << (out.first_copy[i] + j);
            }
        }
        gens.push_back(Monomial::from_mask(mask));
    }
    out.ideal = MonomialIdeal::minimalize(std::move(gens), total);
    return out;
}

}  // namespace sopcm
