// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "sopcm/sopcm.hpp"
#include "support.hpp"

using namespace sopcm;

namespace {

const PrimeField F;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

/// Collects failures of one criterion; the first few are kept for the report.
class Check {
public:
    void expect(bool ok, const std::string& what) {
        ++checks_;
        if (ok) return;
        ++failures_;
        if (notes_.size() < 5) notes_.push_back(what);
    }
    void note(const std::string& s) { info_.push_back(s); }
    bool passed() const { return failures_ == 0; }
    std::string summary() const {
        std::ostringstream out;
        out << checks_ << " checks";
        for (const auto& s : info_) out << "; " << s;
        if (failures_) {
            out << "; " << failures_ << " failed:";
            for (const auto& s : notes_) out << " [" << s << "]";
        }
        return out.str();
    }

private:
    long checks_ = 0;
    long failures_ = 0;
    std::vector<std::string> notes_;
    std::vector<std::string> info_;
};

std::string graph_name(const Graph& g) {
    std::ostringstream out;
    out << "n=" << g.n() << " E=";
    for (auto [a, b] : g.edges()) out << a + 1 << '-' << b + 1 << ',';
    return out.str();
}

std::vector<Graph> connected_classes(int lo, int hi) {
    std::vector<Graph> out;
    for (int n = lo; n <= hi; ++n) {
        auto gs = support::graphs_up_to_isomorphism(n, true);
        out.insert(out.end(), gs.begin(), gs.end());
    }
    return out;
}

std::vector<Graph> random_sample() {
    std::mt19937_64 rng(20260);
    std::vector<Graph> out;
    for (int k = 0; k < 200; ++k) out.push_back(support::random_connected_graph(rng, 7 + k % 2, 0.3 + 0.05 * (k % 5)));
    return out;
}

bool uses_edges(const Graph& g, const IdentificationSop& sop) {
    for (auto [i, j] : sop.pairs) {
        if (!g.adjacent(i, j)) return false;
    }
    return true;
}

void universal_initial_ideal(Check& c) {
    for (int n = 2; n <= 5; ++n) {
        auto start = Clock::now();
        auto gb = buchberger(universal_sop(simplex(n), F), F);
        const double t = seconds_since(start);
        std::vector<Monomial> expected;
        for (int i = 1; i <= n; ++i) expected.push_back(parse_monomial("x" + std::to_string(i) + "^" + std::to_string(i)));
        auto ini = initial_ideal(gb);
        const std::string tag = "n=" + std::to_string(n);
        c.expect(ini == MonomialIdeal::minimalize(expected, n), tag + " initial ideal " + to_string(ini));
        auto len = quotient_length(gb);
        c.expect(len && static_cast<std::int64_t>(*len) == factorial(n), tag + " length");
        c.expect(t < 10.0, tag + " time");
        std::ostringstream s;
        s.precision(3);
        s << tag << " " << t << "s";
        c.note(s.str());
    }
}

void hexagon_pipeline(Check& c) {
    auto start = Clock::now();
    auto g = cycle_graph(6);
    auto sop = koenig_sop(g);
    c.expect(sop.has_value(), "no sop");
    if (!sop) return;
    c.expect(sop->pairs == std::vector<std::pair<int, int>>{{0, 1}, {2, 3}, {4, 5}}, "sop pairs");
    auto expected = MonomialIdeal::minimalize({parse_monomial("x1^2"), parse_monomial("x3^2"), parse_monomial("x5^2"),
                                               parse_monomial("x1 x3"), parse_monomial("x3 x5"),
                                               parse_monomial("x1 x5")},
                                              6);
    c.expect(reduced_edge_ring(g, *sop) == expected, "reduced ideal");
    auto mu = mu_compare(g, *sop);
    c.expect(mu.mu_ideal == 6 && mu.mu_reduced == 6, "generator counts");
    auto cm = cm_test_universal(independence_complex(g), F);
    c.expect(!cm.verdict, "verdict");
    c.expect(cm.e == 2, "multiplicity");
    const double t = seconds_since(start);
    c.expect(t < 5.0, "time");
    c.note("length " + std::to_string(cm.length) + " vs d! e = " + std::to_string(cm.degree_product * cm.e));
}

void chessboard_depth(Check& c) {
    c.expect(depth_via_skeletons(chessboard_complex(2), F) == 1, "depth P2");
    auto start = Clock::now();
    auto p4 = chessboard_complex(4);
    const int depth = depth_via_skeletons(p4, F);
    const double t = seconds_since(start);
    c.expect(depth == 3, "depth P4 = " + std::to_string(depth));
    c.expect(t < 600.0, "time");
    // Faces of size 3: choose 3 rows, 3 columns and a bijection.
    const std::int64_t permutations = 4 * 4 * 6;
    auto sk = cm_test_universal(skeleton(p4, 3), F);
    c.expect(sk.e == permutations, "e of the 3-skeleton");
    c.expect(sk.length == 576 && sk.verdict, "length of the 3-skeleton " + std::to_string(sk.length));
    std::ostringstream s;
    s.precision(3);
    s << "P4 depth run " << t << "s";
    c.note(s.str());
}

void koenig_equivalence(Check& c) {
    auto graphs = connected_classes(2, 6);
    const auto exhaustive = graphs.size();
    auto sample = random_sample();
    graphs.insert(graphs.end(), sample.begin(), sample.end());
    int produced = 0;
    for (const auto& g : graphs) {
        const bool koenig = oracle::matching_number(g) == oracle::vertex_cover_number(g);
        auto sop = koenig_sop(g);
        c.expect(sop.has_value() == koenig, "existence " + graph_name(g));
        if (!sop) continue;
        ++produced;
        c.expect(verify_identification_sop(edge_ideal(g), *sop), "verify " + graph_name(g));
        c.expect(uses_edges(g, *sop), "edges " + graph_name(g));
    }
    c.note(std::to_string(exhaustive) + " classes + " + std::to_string(sample.size()) + " random, " +
           std::to_string(produced) + " sops");
}

void poset_checks(Check& c) {
    int total = 0;
    int cm = 0;
    for (int n = 1; n <= 4; ++n) {
        for (const auto& p : support::all_two_chain_posets(n)) {
            ++total;
            auto v = poset_cm_verdict(p, F);
            c.expect(v.agree, "CM agreement n=" + std::to_string(n));
            if (v.by_conditions) {
                ++cm;
                auto order = shelling_order(p);
                c.expect(order && is_shelling(*order), "shelling n=" + std::to_string(n));
            }
            c.expect(linear_resolution_test(p, F).agree, "linear resolution n=" + std::to_string(n));
        }
    }
    c.note(std::to_string(total) + " posets, " + std::to_string(cm) + " CM");
}

void im_bound(Check& c) {
    auto square = im_bound_test(cycle_graph(4), F);
    c.expect(square.hypotheses_met && square.mi == 2 && square.k + 1 == 3, "C4 counts");
    c.expect(!square.cm_verdict && square.agree, "C4 not CM");
    auto whiskered = im_bound_test(whisker(path_graph(2)), F);
    c.expect(whiskered.hypotheses_met && whiskered.mi == 3 && whiskered.k + 1 == 3, "whiskered edge counts");
    c.expect(whiskered.cm_verdict && whiskered.agree, "whiskered edge CM");

    std::vector<Graph> graphs;
    for (int n = 1; n <= 6; ++n) {
        auto gs = support::graphs_up_to_isomorphism(n, false);
        graphs.insert(graphs.end(), gs.begin(), gs.end());
    }
    auto seven = support::one_vertex_extensions(support::graphs_up_to_isomorphism(6, false), 6);
    graphs.insert(graphs.end(), seven.begin(), seven.end());
    int tested = 0;
    int on_seven = 0;
    for (const auto& g : graphs) {
        auto r = im_bound_test(g, F);
        if (!r.hypotheses_met) continue;
        ++tested;
        on_seven += g.n() == 7;
        c.expect(r.bound_holds, "bound " + graph_name(g));
        c.expect((r.mi == r.k + 1) == r.cm_verdict, "equality vs CM " + graph_name(g));
        auto c2 = independence_complex(g);
        c.expect(r.cm_verdict == (oracle::hochster_depth(c2, F.characteristic()) == c2.d()), "oracle " + graph_name(g));
    }
    c.note(std::to_string(tested) + " unmixed Koenig graphs, " + std::to_string(on_seven) + " on 7 vertices");
}

void reg_reduction(Check& c) {
    std::vector<Graph> graphs;
    for (int n = 2; n <= 6; ++n) {
        for (auto& g : support::graphs_up_to_isomorphism(n, false)) {
            if (g.isolated_vertices().empty()) graphs.push_back(std::move(g));
        }
    }
    auto sample = random_sample();
    graphs.insert(graphs.end(), sample.begin(), sample.end());
    int tested = 0;
    for (const auto& g : graphs) {
        auto sop = koenig_sop(g);
        if (!sop) continue;
        ++tested;
        auto r = reg_reduction_check(g, *sop, F);
        c.expect(r.inequality_holds, "inequality " + graph_name(g));
    }
    auto hex = reg_reduction_check(cycle_graph(6), *koenig_sop(cycle_graph(6)), F);
    c.expect(hex.reg_reduced == 1 && hex.reg_ring == 2, "C6 gives 1 < 2");
    IdentificationSop odd;
    for (int i = 0; i < 10; i += 2) odd.pairs.emplace_back(i, i + 1);
    auto ten = reg_reduction_check(cycle_graph(10), odd, F);
    c.expect(ten.reg_reduced == 2 && ten.reg_ring == 3, "C10 gives 2 < 3");
    c.note(std::to_string(tested) + " sops");
}

void defect_identity(Check& c) {
    int instances = 0;
    int cm = 0;
    auto record = [&](const DefectProfile& p, const SimplicialComplex& complex, const std::string& tag) {
        ++instances;
        c.expect(p.identity_holds, "identity " + tag);
        c.expect(p.dim_bound_holds, "dimension bound " + tag);
        c.expect(p.nonnegative, "nonnegative " + tag);
        const bool is_cm = oracle::hochster_depth(complex, F.characteristic()) == complex.d();
        cm += is_cm;
        c.expect((p.total_defect == 0) == is_cm, "defect vs CM " + tag);
    };
    for (const auto& g : connected_classes(2, 6)) {
        auto sop = koenig_sop(g);
        if (!sop) continue;
        auto p = defect_profile(g.n(), as_polynomials(edge_ideal(g)), difference_forms(g.n(), *sop, F), F);
        record(p, independence_complex(g), graph_name(g));
    }
    std::mt19937_64 rng(20261);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 3 + trial % 5;
        auto complex = support::random_complex(rng, n, 1 + trial % 4, std::min(n, 3));
        auto p = defect_profile(n, as_polynomials(stanley_reisner_ideal(complex)), universal_sop(complex, F), F);
        record(p, complex, "complex " + std::to_string(trial));
    }
    for (int n = 1; n <= 3; ++n) {
        for (const auto& poset : support::all_two_chain_posets(n)) {
            auto complex = order_complex(poset);
            auto p = defect_profile(2 * n, as_polynomials(stanley_reisner_ideal(complex)), universal_sop(complex, F), F);
            record(p, complex, "poset n=" + std::to_string(n));
        }
    }
    c.expect(instances >= 50, "instance count");
    c.note(std::to_string(instances) + " instances, " + std::to_string(cm) + " CM");
}

void oracle_agreement(Check& c) {
    std::mt19937_64 rng(20262);
    int complexes = 0;
    auto depth_check = [&](const SimplicialComplex& complex, const std::string& tag) {
        ++complexes;
        const int by_skeletons = depth_via_skeletons(complex, F);
        c.expect(by_skeletons == hochster_betti_table(complex, F).depth(), "depth " + tag);
        if (complex.n() <= 10) {
            c.expect(by_skeletons == oracle::hochster_depth(complex, F.characteristic()), "oracle depth " + tag);
        }
    };
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 3 + trial % 10;
        depth_check(support::random_complex(rng, n, 2 + trial % 5, std::min(n, 4)), "random " + std::to_string(trial));
    }
    depth_check(chessboard_complex(3), "P3");
    for (int n = 5; n <= 12; ++n) {
        depth_check(independence_complex(cycle_graph(n)), "cycle " + std::to_string(n));
    }

    int series = 0;
    for (int trial = 0; trial < 150; ++trial) {
        auto ideal = support::random_monomial_ideal(rng, 2 + trial % 4, 1 + trial % 5, 3);
        auto h = hilbert_series(ideal);
        bool same = true;
        for (int k = 0; k <= 8; ++k) same = same && h.coefficient(k) == oracle::hilbert_function(ideal, k);
        c.expect(same, "hilbert recursion " + to_string(ideal));
        ++series;
    }
    int systems = 0;
    auto consistent = [&](const std::vector<FieldPolynomial>& gens, const std::string& tag) {
        if (gens.empty()) return;
        ++systems;
        c.expect(hilbert_consistency(gens, F, 6), "hilbert consistency " + tag);
    };
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 3 + trial % 4;
        auto complex = support::random_complex(rng, n, 1 + trial % 4, std::min(n, 3));
        consistent(universal_sop_system(complex, F), "universal " + std::to_string(trial));
    }
    for (const auto& g : connected_classes(3, 5)) {
        auto sop = koenig_sop(g);
        if (!sop) continue;
        auto gens = as_polynomials(edge_ideal(g));
        for (auto& f : difference_forms(g.n(), *sop, F)) gens.push_back(f);
        consistent(gens, graph_name(g));
    }
    c.note(std::to_string(complexes) + " complexes, " + std::to_string(series) + " monomial ideals, " +
           std::to_string(systems) + " homogeneous systems");
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria = {
        {"universal sop initial ideal", universal_initial_ideal},
        {"hexagon pipeline", hexagon_pipeline},
        {"chessboard depth", chessboard_depth},
        {"Koenig sop equivalence", koenig_equivalence},
        {"two-chain posets", poset_checks},
        {"maximal independent set bound", im_bound},
        {"regularity along identification sops", reg_reduction},
        {"defect identity", defect_identity},
        {"oracle agreement", oracle_agreement},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Check c;
        try {
            criteria[i].second(c);
        } catch (const std::exception& e) {
            c.expect(false, std::string("exception: ") + e.what());
        }
        failed += !c.passed();
        std::printf("%s %zu %s: %s\n", c.passed() ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                    c.summary().c_str());
        std::fflush(stdout);
    }
    return failed == 0 ? 0 : 1;
}
