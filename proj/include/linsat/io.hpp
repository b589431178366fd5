#pragma once

#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "linsat/hypergraph.hpp"

namespace linsat {

// Text format, one hyperedge per line:
//
//   p hg <n> <k>     optional header: vertex count and uniformity
//   # ...            comment
//   v <id>           declares a vertex that appears in no edge
//   a b c            one hyperedge as k whitespace-separated labels
//
// The vertex set is the union of `v` lines and edge labels; if the header
// declares more vertices than named, the smallest absent non-negative labels
// fill the gap (so `p hg 9 3` plus edges over 0..5 yields vertices 0..8).
inline linear_hypergraph parse_hypergraph(std::istream& in) {
    std::set<vertex_t> vertex_set;
    std::vector<hyperedge> edges;
    bool have_header = false;
    long header_n = 0;
    int k = 0;

    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        if (tok[0] == '#') continue;
        if (tok == "p") {
            std::string fmt;
            if (have_header || !edges.empty() || !vertex_set.empty())
                throw parse_error(lineno, "header must come first");
            if (!(ls >> fmt >> header_n >> k) || fmt != "hg" || header_n < 0 || k < 2)
                throw parse_error(lineno, "malformed header, expected 'p hg <n> <k>'");
            have_header = true;
            continue;
        }
        if (tok == "v") {
            long v;
            if (!(ls >> v) || v < 0)
                throw parse_error(lineno, "malformed vertex line, expected 'v <id>'");
            vertex_set.insert(static_cast<vertex_t>(v));
            continue;
        }
        hyperedge e;
        std::istringstream es(line);
        long v;
        while (es >> v) {
            if (v < 0) throw parse_error(lineno, "negative vertex label");
            e.push_back(static_cast<vertex_t>(v));
        }
        if (!es.eof()) throw parse_error(lineno, "unexpected token in edge line");
        if (k == 0) k = static_cast<int>(e.size());
        if (static_cast<int>(e.size()) != k)
            throw parse_error(lineno, "edge has " + std::to_string(e.size()) +
                                          " vertices, expected " + std::to_string(k));
        for (vertex_t u : e) vertex_set.insert(u);
        edges.push_back(std::move(e));
    }
    if (k == 0) k = 3; // edgeless, headerless file: uniformity defaults to 3

    if (have_header) {
        if (static_cast<long>(vertex_set.size()) > header_n)
            throw parse_error(lineno, "file names " + std::to_string(vertex_set.size()) +
                                          " vertices but header declares " +
                                          std::to_string(header_n));
        for (vertex_t cand = 0; static_cast<long>(vertex_set.size()) < header_n; ++cand)
            vertex_set.insert(cand);
    }
    std::vector<vertex_t> vs(vertex_set.begin(), vertex_set.end());
    return linear_hypergraph::build(std::move(vs), k, std::move(edges));
}

inline linear_hypergraph parse_hypergraph(const std::string& text) {
    std::istringstream in(text);
    return parse_hypergraph(in);
}

inline void write_hypergraph(std::ostream& out, const linear_hypergraph& h) {
    out << "p hg " << h.n() << ' ' << h.k() << '\n';
    for (vertex_t v : h.vertices())
        if (h.degree(v) == 0) out << "v " << v << '\n';
    for (const auto& e : h.edges()) {
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (i) out << ' ';
            out << e[i];
        }
        out << '\n';
    }
}

inline std::string to_text(const linear_hypergraph& h) {
    std::ostringstream os;
    write_hypergraph(os, h);
    return os.str();
}

inline linear_hypergraph read_hypergraph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw error("cannot open " + path);
    return parse_hypergraph(in);
}

inline void write_hypergraph_file(const std::string& path, const linear_hypergraph& h) {
    std::ofstream out(path);
    if (!out) throw error("cannot open " + path + " for writing");
    write_hypergraph(out, h);
}

} // namespace linsat
