#pragma once

#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "sopcm/error.hpp"
#include "sopcm/graph.hpp"
#include "sopcm/monomial_ideal.hpp"
#include "sopcm/polynomial.hpp"
#include "sopcm/poset.hpp"
#include "sopcm/simplicial_complex.hpp"

namespace sopcm::io {

/// Non-blank lines with `#` comments removed, paired with 1-based line numbers.
inline std::vector<std::pair<int, std::string>> content_lines(std::string_view text) {
    std::vector<std::pair<int, std::string>> out;
    std::istringstream in{std::string(text)};
    std::string line;
    int number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        out.emplace_back(number, line);
    }
    return out;
}

inline std::string at_line(int number) { return "line " + std::to_string(number) + ": "; }

/// Whitespace-separated positive integers on one line.
inline std::vector<int> parse_indices(const std::string& line, int number) {
    std::istringstream in(line);
    std::vector<int> out;
    std::string tok;
    while (in >> tok) {
        std::size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(tok, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != tok.size() || v < 1 || v > kMaxVars) {
            throw ParseError(at_line(number) + "expected a vertex index in 1..64, got '" + tok + "'");
        }
        out.push_back(static_cast<int>(v));
    }
    return out;
}

/// One monomial per line. The variable count defaults to the largest index.
inline MonomialIdeal parse_ideal(std::string_view text, int nvars = -1) {
    std::vector<Monomial> gens;
    int used = 0;
    for (const auto& [number, line] : content_lines(text)) {
        try {
            gens.push_back(parse_monomial(line));
        } catch (const ParseError& e) {
            throw ParseError(at_line(number) + e.what());
        }
        used = std::max(used, gens.back().span_vars());
    }
    if (nvars < 0) {
        nvars = used;
    } else if (used > nvars) {
        throw ParseError("ideal uses x" + std::to_string(used) + " but only " + std::to_string(nvars) +
                         " variables were declared");
    }
    return MonomialIdeal::minimalize(std::move(gens), nvars);
}

/// One polynomial per line, all in the same ring.
inline std::vector<FieldPolynomial> parse_polynomials(std::string_view text, const PrimeField& field,
                                                      int nvars = -1) {
    auto lines = content_lines(text);
    if (nvars < 0) {
        nvars = 0;
        for (const auto& [number, line] : lines) {
            try {
                nvars = std::max(nvars, parse_polynomial(line, field).nvars());
            } catch (const ParseError& e) {
                throw ParseError(at_line(number) + e.what());
            }
        }
    }
    std::vector<FieldPolynomial> out;
    for (const auto& [number, line] : lines) {
        try {
            out.push_back(parse_polynomial(line, field, nvars));
        } catch (const ParseError& e) {
            throw ParseError(at_line(number) + e.what());
        }
    }
    return out;
}

/// One facet per line as 1-based vertex indices.
inline SimplicialComplex parse_facets(std::string_view text, int n = -1) {
    std::vector<VertexSet> facets;
    int used = 0;
    for (const auto& [number, line] : content_lines(text)) {
        VertexSet f = 0;
        for (int v : parse_indices(line, number)) {
            f |= VertexSet{1} << (v - 1);
            used = std::max(used, v);
        }
        facets.push_back(f);
    }
    if (facets.empty()) {
        throw ParseError("facet file lists no facets");
    }
    if (n < 0) {
        n = used;
    } else if (used > n) {
        throw ParseError("facet uses vertex " + std::to_string(used) + " but n = " + std::to_string(n));
    }
    return SimplicialComplex::from_facets(n, std::move(facets));
}

/// One edge per line as two 1-based vertex indices.
inline Graph parse_edges(std::string_view text, int n = -1) {
    std::vector<Edge> edges;
    int used = 0;
    for (const auto& [number, line] : content_lines(text)) {
        auto idx = parse_indices(line, number);
        if (idx.size() != 2) {
            throw ParseError(at_line(number) + "an edge needs exactly two vertices");
        }
        edges.emplace_back(idx[0] - 1, idx[1] - 1);
        used = std::max({used, idx[0], idx[1]});
    }
    if (n < 0) {
        n = used;
    } else if (used > n) {
        throw ParseError("edge uses vertex " + std::to_string(used) + " but n = " + std::to_string(n));
    }
    return Graph::from_edges(n, std::move(edges));
}

/// First line `n`; then `x i j` for x_i covered by y_j and `y i j` for y_i
/// covered by x_j.
inline TwoChainPoset parse_poset(std::string_view text) {
    auto lines = content_lines(text);
    if (lines.empty()) {
        throw ParseError("poset file is empty");
    }
    int n = 0;
    {
        std::istringstream in(lines.front().second);
        std::string extra;
        if (!(in >> n) || (in >> extra) || n < 1) {
            throw ParseError(at_line(lines.front().first) + "expected the chain length n");
        }
    }
    std::vector<TwoChainPoset::Cover> xy;
    std::vector<TwoChainPoset::Cover> yx;
    for (std::size_t k = 1; k < lines.size(); ++k) {
        const auto& [number, line] = lines[k];
        std::istringstream in(line);
        std::string kind;
        int i = 0;
        int j = 0;
        std::string extra;
        if (!(in >> kind >> i >> j) || (in >> extra) || (kind != "x" && kind != "y")) {
            throw ParseError(at_line(number) + "expected 'x i j' or 'y i j'");
        }
        if (i < 1 || j < 1 || i > n || j > n) {
            throw ParseError(at_line(number) + "cover index out of range 1.." + std::to_string(n));
        }
        (kind == "x" ? xy : yx).emplace_back(i - 1, j - 1);
    }
    return build_poset(n, std::move(xy), std::move(yx));
}

inline std::string format_facets(const SimplicialComplex& c) {
    std::string out;
    for (auto f : c.facets()) {
        std::string line;
        for (int v : vertices_of(f)) {
            if (!line.empty()) line += ' ';
            line += std::to_string(v + 1);
        }
        out += line + "\n";
    }
    return out;
}

inline std::string format_edges(const Graph& g) {
    std::string out;
    for (auto [a, b] : g.edges()) out += std::to_string(a + 1) + " " + std::to_string(b + 1) + "\n";
    return out;
}

}  // namespace sopcm::io
