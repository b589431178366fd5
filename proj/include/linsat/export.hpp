#pragma once

#include <ostream>
#include <sstream>
#include <string>

#include "linsat/hypergraph.hpp"
#include "linsat/shadow.hpp"

namespace linsat {

namespace detail {
inline const char* dot_palette(int i) {
    static const char* colors[] = {"#1b9e77", "#d95f02", "#7570b3", "#e7298a",
                                   "#66a61e", "#e6ab02", "#a6761d", "#666666",
                                   "#1f78b4", "#b2df8a", "#fb9a99", "#cab2d6"};
    return colors[static_cast<std::size_t>(i) % (sizeof(colors) / sizeof(colors[0]))];
}
} // namespace detail

// Shadow graph as DOT; edges are colored by their provenance hyperedge.
inline void write_dot_shadow(std::ostream& out, const linear_hypergraph& h) {
    auto s = make_shadow(h);
    out << "graph shadow {\n";
    for (vertex_t v : s.vertices) out << "  " << v << ";\n";
    for (std::size_t i = 0; i < s.edges.size(); ++i)
        out << "  " << s.edges[i].first << " -- " << s.edges[i].second << " [color=\""
            << detail::dot_palette(s.provenance[i]) << "\", label=\"e" << s.provenance[i]
            << "\"];\n";
    out << "}\n";
}

// Bipartite vertex/hyperedge incidence graph as DOT.
inline void write_dot_incidence(std::ostream& out, const linear_hypergraph& h) {
    out << "graph incidence {\n";
    for (vertex_t v : h.vertices()) out << "  v" << v << ";\n";
    for (int ei = 0; ei < h.edge_count(); ++ei)
        out << "  e" << ei << " [shape=box];\n";
    for (int ei = 0; ei < h.edge_count(); ++ei)
        for (vertex_t v : h.edge(ei)) out << "  e" << ei << " -- v" << v << ";\n";
    out << "}\n";
}

inline std::string dot_shadow(const linear_hypergraph& h) {
    std::ostringstream os;
    write_dot_shadow(os, h);
    return os.str();
}

inline std::string dot_incidence(const linear_hypergraph& h) {
    std::ostringstream os;
    write_dot_incidence(os, h);
    return os.str();
}

} // namespace linsat
