#pragma once

#include <utility>
#include <vector>

#include "linsat/hypergraph.hpp"

namespace linsat {

// The 2-uniform auxiliary graph H_0: every hyperedge contributes the clique
// on its vertices (a triangle for k=3). Linearity makes the provenance map
// edge -> originating hyperedge total and single-valued.
struct shadow_graph {
    std::vector<vertex_t> vertices;
    // Sorted pairs (a < b), sorted lexicographically.
    std::vector<std::pair<vertex_t, vertex_t>> edges;
    // provenance[i] = index into the source hypergraph's edge list for edges[i].
    std::vector<int> provenance;

    int degree(vertex_t v) const {
        int d = 0;
        for (const auto& [a, b] : edges)
            if (a == v || b == v) ++d;
        return d;
    }
};

inline shadow_graph make_shadow(const linear_hypergraph& h) {
    shadow_graph s;
    s.vertices = h.vertices();
    for (int ei = 0; ei < h.edge_count(); ++ei) {
        const auto& e = h.edge(ei);
        for (std::size_t a = 0; a < e.size(); ++a)
            for (std::size_t b = a + 1; b < e.size(); ++b)
                s.edges.push_back({e[a], e[b]});
    }
    std::vector<std::size_t> order(s.edges.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t x, std::size_t y) { return s.edges[x] < s.edges[y]; });
    std::vector<std::pair<vertex_t, vertex_t>> sorted_edges;
    std::vector<int> prov;
    sorted_edges.reserve(s.edges.size());
    prov.reserve(s.edges.size());
    for (std::size_t i : order) {
        sorted_edges.push_back(s.edges[i]);
        prov.push_back(*h.covering_edge(s.edges[i].first, s.edges[i].second));
    }
    s.edges = std::move(sorted_edges);
    s.provenance = std::move(prov);
    return s;
}

} // namespace linsat
