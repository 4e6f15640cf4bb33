// Command-line front end: parses input files, runs one computation and prints
// a single JSON object (or key: value text) on stdout.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "sopcm/sopcm.hpp"

using json = nlohmann::ordered_json;
using namespace sopcm;

namespace {

struct IoError : Error {
    explicit IoError(const std::string& what) : Error("io", what) {}
};

struct Options {
    std::uint32_t characteristic = kDefaultCharacteristic;
    int bound = kDefaultSubsetBound;
    int degree = 8;
    std::string format = "json";
    bool timings = false;
};

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") {
        return std::string(std::istreambuf_iterator<char>(std::cin), {});
    }
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

json one_based(const std::vector<int>& vs) {
    json out = json::array();
    for (int v : vs) out.push_back(v + 1);
    return out;
}

json facets_json(const SimplicialComplex& c) {
    json out = json::array();
    for (auto f : c.facets()) out.push_back(one_based(vertices_of(f)));
    return out;
}

json pairs_json(const std::vector<std::pair<int, int>>& pairs) {
    json out = json::array();
    for (auto [a, b] : pairs) out.push_back({a + 1, b + 1});
    return out;
}

json ideal_json(const MonomialIdeal& ideal) {
    json out = json::array();
    for (const auto& g : ideal.gens()) out.push_back(to_string(g));
    return out;
}

json series_json(const HilbertSeries& s) {
    return {{"dim", s.dimension()}, {"e", s.multiplicity()}, {"numerator", s.numerator.coeffs()}};
}

json cm_json(const CmReport& r) {
    return {{"d", r.d},         {"e", r.e},           {"degree_product", r.degree_product},
            {"length", r.length}, {"cm", r.verdict}, {"p", r.p}};
}

std::string poset_element(const TwoChainPoset& p, int a) { return p.element_name(a); }

IdentificationSop parse_pairs(const std::string& text) {
    IdentificationSop sop;
    for (const auto& [number, line] : io::content_lines(text)) {
        auto idx = io::parse_indices(line, number);
        if (idx.size() != 2) {
            throw ParseError(io::at_line(number) + "a pair needs exactly two variable indices");
        }
        sop.pairs.emplace_back(idx[0] - 1, idx[1] - 1);
    }
    return sop;
}

void print_text(const json& j, std::ostream& out) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        out << it.key() << ": ";
        if (it->is_string()) {
            out << it->get<std::string>();
        } else {
            out << it->dump();
        }
        out << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Systems of parameters, Cohen-Macaulay tests, depth and regularity for monomial quotients"};
    app.require_subcommand(1);
    app.fallthrough();
    Options opt;
    if (const char* env = std::getenv("SOPCM_CHAR")) {
        try {
            opt.characteristic = static_cast<std::uint32_t>(std::stoul(env));
        } catch (const std::exception&) {
            std::cerr << json{{"error", std::string("SOPCM_CHAR is not a number: ") + env}, {"kind", "usage"}}.dump()
                      << "\n";
            return 2;
        }
    }
    app.add_option("--char", opt.characteristic, "Field characteristic (prime, default 32003; env SOPCM_CHAR)");
    app.add_option("--bound", opt.bound, "Largest vertex count for the Hochster subset scan")
        ->check(CLI::PositiveNumber);
    app.add_option("--degree", opt.degree, "Truncation degree for the kernel series check")->check(CLI::PositiveNumber);
    app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "text"}));
    app.add_flag("--timings", opt.timings, "Add wall-clock timings to the report");

    std::function<json(const PrimeField&)> action;
    bool degree_given = false;
    bool raw_output = false;
    std::string raw;

    // complex ------------------------------------------------------------
    auto* complex = app.add_subcommand("complex", "Simplicial complexes given as facet files")->require_subcommand(1);
    std::string complex_file;
    int complex_vars = -1;
    bool depth_profile = false;
    int skeleton_size = 0;
    auto complex_input = [&](CLI::App* sub) {
        sub->add_option("file", complex_file, "Facet file (default: stdin)");
        sub->add_option("--vars", complex_vars, "Number of vertices (default: largest index)");
    };
    auto load_complex = [&] { return io::parse_facets(read_input(complex_file), complex_vars); };

    auto* complex_cm = complex->add_subcommand("cm", "Length test with the universal sop");
    complex_input(complex_cm);
    complex_cm->callback([&] {
        action = [&](const PrimeField& f) { return cm_json(cm_test_universal(load_complex(), f)); };
    });

    auto* complex_depth = complex->add_subcommand("depth", "Depth as the largest Cohen-Macaulay skeleton");
    complex_input(complex_depth);
    complex_depth->add_flag("--profile", depth_profile, "Report the test for every skeleton");
    complex_depth->callback([&] {
        action = [&](const PrimeField& f) {
            auto c = load_complex();
            json out;
            if (depth_profile) {
                json prof = json::array();
                int depth = 0;
                for (const auto& r : skeleton_profile(c, f)) {
                    if (r.verdict && depth == 0) depth = r.d;
                    prof.push_back(cm_json(r));
                }
                out["depth"] = depth;
                out["p"] = f.characteristic();
                out["profile"] = prof;
            } else {
                out["depth"] = depth_via_skeletons(c, f);
                out["p"] = f.characteristic();
            }
            return out;
        };
    });

    auto* complex_betti = complex->add_subcommand("betti", "Graded Betti numbers by Hochster's formula");
    complex_input(complex_betti);
    complex_betti->callback([&] {
        action = [&](const PrimeField& f) {
            auto t = hochster_betti_table(load_complex(), f, opt.bound);
            json beta = json::array();
            for (const auto& [key, v] : t.beta) beta.push_back({key.first, key.second, v});
            return json{{"p", t.p}, {"beta", beta}, {"pd", t.pd()}, {"reg", t.reg()}, {"depth", t.depth()}};
        };
    });

    auto* complex_skeleton = complex->add_subcommand("skeleton", "Faces with at most i vertices");
    complex_input(complex_skeleton);
    complex_skeleton->add_option("--i", skeleton_size, "Face size")->required();
    complex_skeleton->callback([&] {
        action = [&](const PrimeField&) {
            auto s = skeleton(load_complex(), skeleton_size);
            return json{{"i", skeleton_size}, {"e", top_facet_count(s)}, {"facets", facets_json(s)}};
        };
    });

    // graph --------------------------------------------------------------
    auto* graph = app.add_subcommand("graph", "Graphs given as edge files")->require_subcommand(1);
    std::string graph_file;
    int graph_vars = -1;
    std::string sop_file;
    auto graph_input = [&](CLI::App* sub) {
        sub->add_option("file", graph_file, "Edge file (default: stdin)");
        sub->add_option("--vars", graph_vars, "Number of vertices (default: largest index)");
    };
    auto load_graph = [&] { return io::parse_edges(read_input(graph_file), graph_vars); };

    auto* graph_inv = graph->add_subcommand("invariants", "Matching, cover, independence and induced matchings");
    graph_input(graph_inv);
    graph_inv->callback([&] {
        action = [&](const PrimeField&) {
            auto g = load_graph();
            auto inv = graph_invariants(g);
            return json{{"n", g.n()},
                        {"edges", g.edges().size()},
                        {"nu", inv.nu},
                        {"tau", inv.tau},
                        {"alpha", inv.alpha},
                        {"a", inv.induced_matching_number},
                        {"mi", inv.mi},
                        {"M", inv.induced_matchings},
                        {"unmixed", inv.unmixed},
                        {"koenig", inv.nu == inv.tau},
                        {"isolated", one_based(g.isolated_vertices())}};
        };
    });

    auto* graph_koenig = graph->add_subcommand("koenig", "Identification sop for a Koenig graph");
    graph_input(graph_koenig);
    graph_koenig->callback([&] {
        action = [&](const PrimeField&) {
            auto g = load_graph();
            auto sop = koenig_sop(g);
            json out{{"koenig", sop.has_value()}};
            if (sop) {
                out["sop"] = pairs_json(sop->pairs);
                auto mu = mu_compare(g, *sop);
                out["reduced_ideal"] = ideal_json(reduced_edge_ring(g, *sop));
                out["mu_ideal"] = mu.mu_ideal;
                out["mu_reduced"] = mu.mu_reduced;
                out["cm_possible"] = mu.cm_possible;
            }
            return out;
        };
    });

    auto* graph_im = graph->add_subcommand("im-bound", "mi(G) <= k + 1 for unmixed Koenig graphs");
    graph_input(graph_im);
    graph_im->callback([&] {
        action = [&](const PrimeField& f) {
            auto r = im_bound_test(load_graph(), f);
            json out{{"hypotheses_met", r.hypotheses_met}};
            if (!r.hypotheses_met) {
                out["reason"] = r.reason;
                return out;
            }
            out["matching"] = pairs_json(r.matching);
            out["k"] = r.k;
            out["mi"] = r.mi;
            out["bound_holds"] = r.bound_holds;
            out["cm"] = r.cm_verdict;
            out["cm_crosscheck"] = r.cm_crosscheck;
            out["agree"] = r.agree;
            out["p"] = r.p;
            return out;
        };
    });

    auto* graph_reg = graph->add_subcommand("reg-check", "Regularity before and after an identification sop");
    graph_input(graph_reg);
    graph_reg->add_option("--sop", sop_file, "Pair file, one 'i j' per line (default: constructed sop)");
    graph_reg->callback([&] {
        action = [&](const PrimeField& f) {
            auto g = load_graph();
            IdentificationSop sop;
            if (sop_file.empty()) {
                auto built = koenig_sop(g);
                if (!built) throw HypothesisError("graph is not Koenig and no sop was given");
                sop = *built;
            } else {
                sop = parse_pairs(read_input(sop_file));
            }
            auto r = reg_reduction_check(g, sop, f, opt.bound);
            return json{{"sop", pairs_json(sop.pairs)},
                        {"reg_ring", r.reg_ring},
                        {"reg_reduced", r.reg_reduced},
                        {"alpha_class_graph", r.alpha_class_graph},
                        {"alpha_agrees", r.alpha_agrees},
                        {"inequality_holds", r.inequality_holds},
                        {"p", r.p}};
        };
    });

    // poset --------------------------------------------------------------
    auto* poset = app.add_subcommand("poset", "Two-chain posets")->require_subcommand(1);
    std::string poset_file;
    auto load_poset = [&] { return io::parse_poset(read_input(poset_file)); };

    auto* poset_check = poset->add_subcommand("check", "Diagonal conditions against the Cohen-Macaulay test");
    poset_check->add_option("file", poset_file, "Poset file (default: stdin)");
    poset_check->callback([&] {
        action = [&](const PrimeField& f) {
            auto p = load_poset();
            auto cm = poset_cm_verdict(p, f);
            auto lin = linear_resolution_test(p, f, opt.bound);
            json out{{"n", p.n()},
                     {"conditions", cm.by_conditions},
                     {"cm", cm.by_universal_sop},
                     {"agree", cm.agree},
                     {"linear_condition", lin.by_condition},
                     {"linear_by_reg", lin.by_regularity},
                     {"linear_agree", lin.agree},
                     {"reg", lin.reg}};
            if (lin.witness) {
                auto [i, j, r, s] = *lin.witness;
                out["linear_witness"] = {poset_element(p, p.x(i)), poset_element(p, p.y(j)),
                                         poset_element(p, p.x(r)), poset_element(p, p.y(s))};
            }
            out["p"] = cm.p;
            return out;
        };
    });

    auto* poset_shell = poset->add_subcommand("shelling", "Shelling of the order complex");
    poset_shell->add_option("file", poset_file, "Poset file (default: stdin)");
    poset_shell->callback([&] {
        action = [&](const PrimeField&) {
            auto p = load_poset();
            auto order = shelling_order(p);
            json out{{"applicable", order.has_value()}};
            if (order) {
                json facets = json::array();
                for (auto f : *order) {
                    json names = json::array();
                    // List chain elements bottom-up.
                    auto elems = vertices_of(f);
                    std::sort(elems.begin(), elems.end(), [&](int a, int b) { return p.less(a, b); });
                    for (int a : elems) names.push_back(poset_element(p, a));
                    facets.push_back(names);
                }
                out["shelling"] = facets;
                out["verified"] = true;
            }
            return out;
        };
    });

    // ideal --------------------------------------------------------------
    auto* ideal = app.add_subcommand("ideal", "Monomial ideals, one generator per line")->require_subcommand(1);
    std::string ideal_file;
    int ideal_vars = -1;
    auto ideal_input = [&](CLI::App* sub) {
        sub->add_option("file", ideal_file, "Ideal file (default: stdin)");
        sub->add_option("--vars", ideal_vars, "Number of variables (default: largest index)");
    };
    auto load_ideal = [&] { return io::parse_ideal(read_input(ideal_file), ideal_vars); };

    auto* ideal_hilbert = ideal->add_subcommand("hilbert", "Hilbert series of S/I");
    ideal_input(ideal_hilbert);
    ideal_hilbert->callback([&] {
        action = [&](const PrimeField&) { return series_json(hilbert_series(load_ideal())); };
    });

    auto* ideal_koenig = ideal->add_subcommand("koenig-type", "Height, monomial grade and an identification sop");
    ideal_input(ideal_koenig);
    ideal_koenig->callback([&] {
        action = [&](const PrimeField&) {
            auto I = load_ideal();
            json out{{"height", height(I)}, {"mgrade", mgrade(I)}, {"mu", I.mu()}};
            auto sop = koenig_type_sop(I);
            out["koenig_type"] = sop.has_value();
            if (sop) {
                out["sop"] = pairs_json(sop->pairs);
                out["reduced_ideal"] = ideal_json(identify_variables(I, *sop).ideal);
            }
            return out;
        };
    });

    // diagnostics --------------------------------------------------------
    auto* diag = app.add_subcommand("diagnostics", "Multiplicity defect along a sop")->require_subcommand(1);
    std::string diag_ideal;
    std::string diag_sop;
    int diag_vars = -1;
    int probe = 0;
    auto* defect = diag->add_subcommand("defect", "Kernel series U_i and the multiplicity identity");
    defect->add_option("--ideal", diag_ideal, "Generators, one polynomial per line")->required();
    defect->add_option("--sop", diag_sop, "Sop forms, one polynomial per line")->required();
    defect->add_option("--vars", diag_vars, "Number of variables (default: largest index)");
    defect->add_option("--probe", probe, "Also test the early Cohen-Macaulay criterion at this step");
    defect->callback([&] {
        action = [&](const PrimeField& f) {
            auto gens_text = read_input(diag_ideal);
            auto sop_text = read_input(diag_sop);
            int n = diag_vars;
            if (n < 0) {
                n = 0;
                for (const auto& text : {gens_text, sop_text}) {
                    for (const auto& p : io::parse_polynomials(text, f)) n = std::max(n, p.nvars());
                }
            }
            auto gens = io::parse_polynomials(gens_text, f, n);
            auto forms = io::parse_polynomials(sop_text, f, n);
            auto prof = defect_profile(n, gens, forms, f, degree_given ? opt.degree : -1);
            json steps = json::array();
            for (const auto& s : prof.steps) {
                steps.push_back({{"a", s.a},
                                 {"quotient", series_json(s.hilb_quotient)},
                                 {"kernel_numerator", s.hilb_kernel.numerator.coeffs()},
                                 {"kernel_pole_order", s.hilb_kernel.pole_order},
                                 {"dim_kernel", s.dim_kernel},
                                 {"e_kernel", s.e_kernel},
                                 {"contribution", s.contribution}});
            }
            json out{{"d", prof.d},
                     {"e", prof.e_ring},
                     {"length", prof.length},
                     {"degree_product", prof.degree_product},
                     {"total_defect", prof.total_defect},
                     {"cm", prof.cm_verdict},
                     {"regular_sequence", prof.regular_sequence},
                     {"identity_holds", prof.identity_holds},
                     {"dim_bound_holds", prof.dim_bound_holds},
                     {"nonnegative", prof.nonnegative},
                     {"truncation", prof.truncation},
                     {"steps", steps}};
            if (probe > 0) {
                auto pr = surprising_probe(prof, probe);
                out["probe"] = {{"r", probe},
                                {"hypotheses_met", pr.hypotheses_met},
                                {"conclusion_verified", pr.conclusion_verified}};
            }
            out["p"] = prof.p;
            return out;
        };
    });

    // gen ----------------------------------------------------------------
    auto* gen = app.add_subcommand("gen", "Generate input files")->require_subcommand(1);
    int gen_n = 0;
    std::string gen_file;
    auto* gen_chess = gen->add_subcommand("chessboard", "Facets of the n x n chessboard complex");
    gen_chess->add_option("--n", gen_n, "Board size")->required();
    gen_chess->callback([&] {
        raw_output = true;
        action = [&](const PrimeField&) {
            auto c = chessboard_complex(gen_n);
            raw = io::format_facets(c);
            return json{{"n", c.n()}, {"facets", facets_json(c)}};
        };
    });
    auto* gen_cycle = gen->add_subcommand("cycle", "Edges of the n-cycle");
    gen_cycle->add_option("--n", gen_n, "Cycle length")->required();
    gen_cycle->callback([&] {
        raw_output = true;
        action = [&](const PrimeField&) {
            auto g = cycle_graph(gen_n);
            raw = io::format_edges(g);
            return json{{"n", g.n()}, {"edges", pairs_json(g.edges())}};
        };
    });
    auto* gen_whisker = gen->add_subcommand("whisker", "Whiskered graph of an edge file");
    gen_whisker->add_option("file", gen_file, "Edge file (default: stdin)");
    gen_whisker->add_option("--vars", graph_vars, "Number of vertices (default: largest index)");
    gen_whisker->callback([&] {
        raw_output = true;
        action = [&](const PrimeField&) {
            auto g = whisker(io::parse_edges(read_input(gen_file), graph_vars));
            raw = io::format_edges(g);
            return json{{"n", g.n()}, {"edges", pairs_json(g.edges())}};
        };
    });

    bool format_given = false;
    try {
        app.parse(argc, argv);
        format_given = app.count("--format") > 0;
        degree_given = app.count("--degree") > 0;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e);
        }
        std::cerr << json{{"error", e.what()}, {"kind", "usage"}}.dump() << "\n";
        return 2;
    }

    try {
        const auto start = std::chrono::steady_clock::now();
        PrimeField field(opt.characteristic);
        json report = action(field);
        if (raw_output && !format_given) {
            std::cout << raw;
            return 0;
        }
        if (opt.timings) {
            auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
            report["timings"] = {{"total_ms", ms}};
        }
        if (opt.format == "text") {
            print_text(report, std::cout);
        } else {
            std::cout << report.dump() << "\n";
        }
        return 0;
    } catch (const Error& e) {
        std::cerr << json{{"error", e.what()}, {"kind", e.kind()}}.dump() << "\n";
        return e.kind() == "internal" ? 3 : 2;
    } catch (const std::exception& e) {
        std::cerr << json{{"error", e.what()}, {"kind", "internal"}}.dump() << "\n";
        return 3;
    }
}
