#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "sopcm/error.hpp"
#include "sopcm/hilbert.hpp"
#include "sopcm/linalg.hpp"
#include "sopcm/monomial_ideal.hpp"
#include "sopcm/polynomial.hpp"
#include "sopcm/prime_field.hpp"

namespace sopcm {

/// Reduced Groebner basis under degree reverse lexicographic order with
/// x1 > x2 > ... > xn. Elements are monic and sorted by ascending leading
/// monomial, so equal ideals give equal objects.
struct GroebnerBasis {
    static constexpr std::string_view order = "degrevlex";

    PrimeField field;
    int nvars = 0;
    std::vector<FieldPolynomial> basis;

    bool is_unit() const { return basis.size() == 1 && basis.front().leading_monomial().is_one(); }

    friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) {
        return a.field == b.field && a.nvars == b.nvars && a.basis == b.basis;
    }
};

namespace detail {

inline std::vector<Term> times_monomial(const std::vector<Term>& f, const Monomial& m) {
    std::vector<Term> out;
    out.reserve(f.size());
    for (const auto& t : f) {
        out.push_back({t.mono * m, t.coef});
    }
    return out;
}

/// a[ai..] - c * m * b[bi..], merged in degrevlex order.
inline std::vector<Term> sub_scaled(const std::vector<Term>& a, std::size_t ai, std::uint32_t c, const Monomial& m,
                                    const std::vector<Term>& b, std::size_t bi, const PrimeField& field) {
    std::vector<Term> out;
    out.reserve(a.size() - ai + b.size() - bi);
    while (ai < a.size() && bi < b.size()) {
        Monomial mb = b[bi].mono * m;
        int cmp = compare_degrevlex(a[ai].mono, mb);
        if (cmp > 0) {
            out.push_back(a[ai++]);
        } else if (cmp < 0) {
            out.push_back({mb, field.neg(field.mul(c, b[bi].coef))});
            ++bi;
        } else {
            std::uint32_t v = field.sub(a[ai].coef, field.mul(c, b[bi].coef));
            if (v != 0) {
                out.push_back({a[ai].mono, v});
            }
            ++ai;
            ++bi;
        }
    }
    for (; ai < a.size(); ++ai) {
        out.push_back(a[ai]);
    }
    for (; bi < b.size(); ++bi) {
        out.push_back({b[bi].mono * m, field.neg(field.mul(c, b[bi].coef))});
    }
    return out;
}

/// Leading monomials of a divisor list, scanned in order.
class DivisorTable {
public:
    void add(const FieldPolynomial* f) {
        lead_.push_back(f->leading_monomial());
        polys_.push_back(f);
    }

    const FieldPolynomial* find(const Monomial& m) const {
        for (std::size_t k = 0; k < lead_.size(); ++k) {
            if (lead_[k].divides(m)) {
                return polys_[k];
            }
        }
        return nullptr;
    }

    bool empty() const { return polys_.empty(); }

private:
    std::vector<Monomial> lead_;
    std::vector<const FieldPolynomial*> polys_;
};

/// Full multivariate division: returns the remainder, no term of which is
/// divisible by a leading monomial in `table`.
inline std::vector<Term> reduce_terms(std::vector<Term> cur, const DivisorTable& table, const PrimeField& field) {
    std::vector<Term> rem;
    std::size_t pos = 0;
    while (pos < cur.size()) {
        const Term& t = cur[pos];
        const FieldPolynomial* g = table.find(t.mono);
        if (!g) {
            rem.push_back(t);
            ++pos;
            continue;
        }
        if (g->size() == 1) {
            ++pos;
            continue;
        }
        std::uint32_t c = field.mul(t.coef, field.inv(g->leading_coefficient()));
        Monomial q = quotient(t.mono, g->leading_monomial());
        cur = sub_scaled(cur, pos + 1, c, q, g->terms(), 1, field);
        pos = 0;
    }
    return rem;
}

class Buchberger {
public:
    Buchberger(int nvars, const PrimeField& field) : nvars_(nvars), field_(field) {}

    /// Reduces `f` against the current basis and adds the remainder, if any.
    void insert(const FieldPolynomial& f) {
        if (unit_) return;
        auto r = reduce_terms(f.terms(), table_, field_);
        if (!r.empty()) {
            add(FieldPolynomial::from_sorted(nvars_, std::move(r)).monic(field_));
        }
    }

    void run() {
        while (!unit_ && !pairs_.empty()) {
            std::size_t best = 0;
            for (std::size_t k = 1; k < pairs_.size(); ++k) {
                if (before(pairs_[k], pairs_[best])) best = k;
            }
            Pair p = pairs_[best];
            pairs_[best] = pairs_.back();
            pairs_.pop_back();
            const auto& f = polys_[p.i];
            const auto& g = polys_[p.j];
            if (f.size() == 1 && g.size() == 1) {
                continue;
            }
            auto s = sub_scaled(times_monomial(f.terms(), quotient(p.lcm, f.leading_monomial())), 1, 1,
                                quotient(p.lcm, g.leading_monomial()), g.terms(), 1, field_);
            auto r = reduce_terms(std::move(s), table_, field_);
            if (!r.empty()) {
                add(FieldPolynomial::from_sorted(nvars_, std::move(r)).monic(field_));
            }
        }
    }

    GroebnerBasis reduced() const {
        GroebnerBasis gb{field_, nvars_, {}};
        if (unit_) {
            gb.basis.push_back(FieldPolynomial::monomial(nvars_, Monomial{}));
            return gb;
        }
        std::vector<int> idx;
        for (std::size_t k = 0; k < polys_.size(); ++k) {
            if (active_[k]) idx.push_back(static_cast<int>(k));
        }
        for (int k : idx) {
            DivisorTable others;
            for (int j : idx) {
                if (j != k) others.add(&polys_[j]);
            }
            const auto& f = polys_[k];
            std::vector<Term> tail(f.terms().begin() + 1, f.terms().end());
            auto r = reduce_terms(std::move(tail), others, field_);
            r.insert(r.begin(), f.terms().front());
            gb.basis.push_back(FieldPolynomial::from_sorted(nvars_, std::move(r)));
        }
        std::sort(gb.basis.begin(), gb.basis.end(), [](const FieldPolynomial& a, const FieldPolynomial& b) {
            return compare_degrevlex(a.leading_monomial(), b.leading_monomial()) < 0;
        });
        return gb;
    }

private:
    struct Pair {
        int i;
        int j;
        Monomial lcm;
    };

    static bool before(const Pair& a, const Pair& b) {
        if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
        if (a.i != b.i) return a.i < b.i;
        return a.j < b.j;
    }

    const Monomial& lm(int k) const { return polys_[k].leading_monomial(); }

    // Gebauer-Moeller update with Buchberger's coprime and chain criteria.
    void add(FieldPolynomial h) {
        if (h.leading_monomial().is_one()) {
            unit_ = true;
            pairs_.clear();
            return;
        }
        const int t = static_cast<int>(polys_.size());
        polys_.push_back(std::move(h));
        active_.push_back(false);
        const Monomial& lt = lm(t);

        std::vector<Pair> fresh;
        for (int i = 0; i < t; ++i) {
            if (active_[i]) fresh.push_back({i, t, lcm(lm(i), lt)});
        }
        std::vector<Pair> kept;
        for (std::size_t k = 0; k < fresh.size(); ++k) {
            const Pair& p = fresh[k];
            bool keep = lm(p.i).coprime(lt);
            if (!keep) {
                keep = true;
                for (std::size_t q = k + 1; q < fresh.size() && keep; ++q) {
                    keep = !fresh[q].lcm.divides(p.lcm);
                }
                for (std::size_t q = 0; q < kept.size() && keep; ++q) {
                    keep = !kept[q].lcm.divides(p.lcm);
                }
            }
            if (keep) kept.push_back(p);
        }
        std::vector<Pair> next;
        next.reserve(pairs_.size() + kept.size());
        for (const auto& p : pairs_) {
            bool drop = lt.divides(p.lcm) && !(lcm(lm(p.i), lt) == p.lcm) && !(lcm(lm(p.j), lt) == p.lcm);
            if (!drop) next.push_back(p);
        }
        for (const auto& p : kept) {
            if (!lm(p.i).coprime(lt)) next.push_back(p);
        }
        pairs_ = std::move(next);

        for (int i = 0; i < t; ++i) {
            if (active_[i] && lt.divides(lm(i))) active_[i] = false;
        }
        active_[t] = true;
        table_ = DivisorTable{};
        for (int i = 0; i <= t; ++i) {
            if (active_[i]) table_.add(&polys_[i]);
        }
    }

    int nvars_;
    PrimeField field_;
    std::vector<FieldPolynomial> polys_;
    std::vector<bool> active_;
    std::vector<Pair> pairs_;
    DivisorTable table_;
    bool unit_ = false;
};

inline void check_same_ring(std::span<const FieldPolynomial> polys, int nvars) {
    for (const auto& f : polys) {
        if (f.nvars() != nvars) {
            throw InvalidInput("polynomials live in rings with different numbers of variables (" +
                               std::to_string(f.nvars()) + " vs " + std::to_string(nvars) + ")");
        }
    }
}

}  // namespace detail

/// Remainder of f under multivariate division by G (leading terms of G in
/// list order).
inline FieldPolynomial normal_form(const FieldPolynomial& f, std::span<const FieldPolynomial> divisors,
                                   const PrimeField& field) {
    detail::check_same_ring(divisors, f.nvars());
    detail::DivisorTable table;
    for (const auto& g : divisors) {
        if (!g.is_zero()) table.add(&g);
    }
    return FieldPolynomial::from_sorted(f.nvars(), detail::reduce_terms(f.terms(), table, field));
}

inline FieldPolynomial normal_form(const FieldPolynomial& f, const GroebnerBasis& gb) {
    return normal_form(f, gb.basis, gb.field);
}

/// Reduced Groebner basis of the ideal generated by `gens`.
inline GroebnerBasis buchberger(std::span<const FieldPolynomial> gens, const PrimeField& field) {
    if (gens.empty()) {
        throw InvalidInput("buchberger needs at least one generator");
    }
    const int n = gens.front().nvars();
    detail::check_same_ring(gens, n);
    std::vector<FieldPolynomial> input;
    for (const auto& g : gens) {
        if (!g.is_zero()) input.push_back(g);
    }
    if (input.empty()) {
        throw InvalidInput("all generators are zero");
    }
    std::stable_sort(input.begin(), input.end(), [](const FieldPolynomial& a, const FieldPolynomial& b) {
        return compare_degrevlex(a.leading_monomial(), b.leading_monomial()) < 0;
    });
    detail::Buchberger engine(n, field);
    for (const auto& g : input) {
        engine.insert(g);
    }
    engine.run();
    return engine.reduced();
}

/// Ideal of leading monomials. Throws UnitIdealError for the unit ideal.
inline MonomialIdeal initial_ideal(const GroebnerBasis& gb) {
    std::vector<Monomial> lead;
    for (const auto& g : gb.basis) {
        lead.push_back(g.leading_monomial());
    }
    return MonomialIdeal::minimalize(std::move(lead), gb.nvars);
}

/// dim_K S/(G); nullopt when the quotient is not artinian. The unit ideal
/// has length 0.
inline std::optional<std::uint64_t> quotient_length(const GroebnerBasis& gb) {
    if (gb.is_unit()) {
        return 0;
    }
    return length(initial_ideal(gb));
}

/// Hilbert series of S/(G) through Macaulay's theorem (same as S/in(G)).
inline HilbertSeries quotient_hilbert_series(const GroebnerBasis& gb) {
    if (gb.is_unit()) {
        return {IntPoly{}, -1};
    }
    return hilbert_series(initial_ideal(gb));
}

/// Dimensions of the graded pieces (S/J)_t, t = 0..max_degree, computed by
/// Gaussian elimination on the spanning set {m g : deg m + deg g = t}.
inline std::vector<std::int64_t> graded_quotient_dimensions(std::span<const FieldPolynomial> gens, int nvars,
                                                            const PrimeField& field, int max_degree,
                                                            std::int64_t max_columns = 2'000'000) {
    detail::check_same_ring(gens, nvars);
    for (const auto& g : gens) {
        if (!g.is_homogeneous()) {
            throw InvalidInput("graded dimensions need homogeneous generators");
        }
    }
    std::vector<std::int64_t> dims;
    for (int t = 0; t <= max_degree; ++t) {
        std::int64_t count = nvars == 0 ? (t == 0 ? 1 : 0) : binomial(nvars + t - 1, t);
        if (count > max_columns) {
            throw BoundExceeded("degree " + std::to_string(t) + " has " + std::to_string(count) +
                                " monomials; limit is " + std::to_string(max_columns));
        }
        std::vector<Monomial> cols;
        std::function<void(int, int, Monomial&)> gen = [&](int var, int left, Monomial& m) {
            if (var == nvars - 1 || nvars == 0) {
                if (nvars > 0) m.set(var, left);
                if (nvars > 0 || left == 0) cols.push_back(m);
                if (nvars > 0) m.set(var, 0);
                return;
            }
            for (int e = left; e >= 0; --e) {
                m.set(var, e);
                gen(var + 1, left - e, m);
            }
            m.set(var, 0);
        };
        Monomial scratch;
        gen(0, t, scratch);
        std::unordered_map<Monomial, int, MonomialHash> index;
        for (std::size_t k = 0; k < cols.size(); ++k) index.emplace(cols[k], static_cast<int>(k));

        RowEchelon ech(static_cast<int>(cols.size()), field);
        for (const auto& g : gens) {
            if (g.is_zero() || g.degree() > t || ech.full()) continue;
            std::vector<Monomial> mults;
            std::function<void(int, int, Monomial&)> gen_mult = [&](int var, int left, Monomial& m) {
                if (nvars == 0) {
                    if (left == 0) mults.push_back(m);
                    return;
                }
                if (var == nvars - 1) {
                    m.set(var, left);
                    mults.push_back(m);
                    m.set(var, 0);
                    return;
                }
                for (int e = left; e >= 0; --e) {
                    m.set(var, e);
                    gen_mult(var + 1, left - e, m);
                }
                m.set(var, 0);
            };
            Monomial mm;
            gen_mult(0, t - g.degree(), mm);
            for (const auto& m : mults) {
                SparseRow row;
                for (const auto& term : g.terms()) {
                    row.emplace_back(index.at(term.mono * m), term.coef);
                }
                std::sort(row.begin(), row.end());
                ech.insert(row);
                if (ech.full()) break;
            }
        }
        dims.push_back(static_cast<std::int64_t>(cols.size()) - ech.rank());
    }
    return dims;
}

struct HilbertConsistency {
    bool consistent = false;
    int degree_bound = 0;
    HilbertSeries series;
    std::vector<std::int64_t> by_groebner;
    std::vector<std::int64_t> by_linear_algebra;
};

/// Compares the Hilbert function of S/in(J), from the monomial recursion on
/// the Groebner initial ideal, with graded linear algebra on the generators
/// of J, degree by degree up to `degree_bound`.
inline HilbertConsistency check_hilbert_consistency(std::span<const FieldPolynomial> gens, const PrimeField& field,
                                                    int degree_bound = 8) {
    if (gens.empty()) {
        throw InvalidInput("hilbert consistency needs at least one generator");
    }
    for (const auto& g : gens) {
        if (!g.is_homogeneous()) {
            throw InvalidInput("hilbert consistency needs homogeneous generators");
        }
    }
    HilbertConsistency out;
    out.degree_bound = degree_bound;
    const int n = gens.front().nvars();
    auto gb = buchberger(gens, field);
    out.series = quotient_hilbert_series(gb);
    out.by_groebner = out.series.expansion(degree_bound);
    out.by_linear_algebra = graded_quotient_dimensions(gens, n, field, degree_bound);
    out.consistent = out.by_groebner == out.by_linear_algebra;
    return out;
}

inline bool hilbert_consistency(std::span<const FieldPolynomial> gens, const PrimeField& field,
                                int degree_bound = 8) {
    return check_hilbert_consistency(gens, field, degree_bound).consistent;
}

/// Lifts monomial generators to polynomials with coefficient 1.
inline std::vector<FieldPolynomial> as_polynomials(const MonomialIdeal& ideal) {
    std::vector<FieldPolynomial> out;
    out.reserve(ideal.mu());
    for (const auto& g : ideal.gens()) {
        out.push_back(FieldPolynomial::monomial(ideal.nvars(), g));
    }
    return out;
}

}  // namespace sopcm
