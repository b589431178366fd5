#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "linsat/errors.hpp"

namespace linsat {

using vertex_t = std::int32_t;

// A hyperedge is kept as a sorted, duplicate-free vertex list of length k.
using hyperedge = std::vector<vertex_t>;

inline hyperedge make_edge(std::initializer_list<vertex_t> vs) {
    hyperedge e(vs);
    std::sort(e.begin(), e.end());
    return e;
}

inline std::string edge_to_string(const hyperedge& e) {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (i) os << ',';
        os << e[i];
    }
    os << '}';
    return os.str();
}

namespace detail {
inline std::uint64_t pair_key(vertex_t a, vertex_t b) {
    if (a > b) std::swap(a, b);
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
           static_cast<std::uint32_t>(b);
}
} // namespace detail

// Validated k-uniform linear hypergraph over arbitrary non-negative integer
// labels. Immutable after construction; all mutation is modeled as building a
// new value, so instances are safe to share across concurrent readers.
class linear_hypergraph {
public:
    static linear_hypergraph build(std::vector<vertex_t> vertices, int k,
                                   std::vector<hyperedge> edges) {
        linear_hypergraph h;
        if (k < 2) throw error("uniformity k must be at least 2");
        h.k_ = k;

        std::sort(vertices.begin(), vertices.end());
        vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
        if (!vertices.empty() && vertices.front() < 0)
            throw unknown_vertex_error("vertex labels must be non-negative");
        h.vertices_ = std::move(vertices);

        h.index_.reserve(h.vertices_.size());
        for (std::size_t i = 0; i < h.vertices_.size(); ++i)
            h.index_.emplace(h.vertices_[i], static_cast<int>(i));

        for (auto& e : edges) {
            std::sort(e.begin(), e.end());
            if (std::adjacent_find(e.begin(), e.end()) != e.end())
                throw not_uniform_error("edge " + edge_to_string(e) + " repeats a vertex");
            if (static_cast<int>(e.size()) != k)
                throw not_uniform_error("edge " + edge_to_string(e) + " has size " +
                                        std::to_string(e.size()) + ", expected " +
                                        std::to_string(k));
            for (vertex_t v : e)
                if (!h.index_.count(v))
                    throw unknown_vertex_error("edge " + edge_to_string(e) +
                                               " references unknown vertex " +
                                               std::to_string(v));
        }
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
        h.edges_ = std::move(edges);

        // Linearity: every unordered vertex pair lies in at most one edge, so
        // the pair index is total and single-valued.
        for (std::size_t ei = 0; ei < h.edges_.size(); ++ei) {
            const auto& e = h.edges_[ei];
            for (std::size_t a = 0; a < e.size(); ++a)
                for (std::size_t b = a + 1; b < e.size(); ++b) {
                    auto key = detail::pair_key(e[a], e[b]);
                    auto [it, fresh] = h.pair_index_.emplace(key, static_cast<int>(ei));
                    if (!fresh)
                        throw not_linear_error(
                            "edges " + edge_to_string(h.edges_[it->second]) + " and " +
                            edge_to_string(e) + " share pair {" + std::to_string(e[a]) +
                            "," + std::to_string(e[b]) + "}");
                }
        }

        h.degrees_.assign(h.vertices_.size(), 0);
        h.adjacency_.assign(h.vertices_.size(), {});
        for (std::size_t ei = 0; ei < h.edges_.size(); ++ei) {
            for (vertex_t v : h.edges_[ei]) {
                int vi = h.index_.at(v);
                ++h.degrees_[vi];
                for (vertex_t u : h.edges_[ei])
                    if (u != v)
                        h.adjacency_[vi].push_back({u, static_cast<int>(ei)});
            }
        }
        for (auto& nbrs : h.adjacency_)
            std::sort(nbrs.begin(), nbrs.end());
        return h;
    }

    // Convenience: vertex set {0..n-1}.
    static linear_hypergraph build(int n, int k, std::vector<hyperedge> edges) {
        std::vector<vertex_t> vs(n);
        std::iota(vs.begin(), vs.end(), 0);
        return build(std::move(vs), k, std::move(edges));
    }

    int n() const { return static_cast<int>(vertices_.size()); }
    int k() const { return k_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<vertex_t>& vertices() const { return vertices_; }
    const std::vector<hyperedge>& edges() const { return edges_; }
    const hyperedge& edge(int i) const { return edges_[static_cast<std::size_t>(i)]; }

    bool has_vertex(vertex_t v) const { return index_.count(v) != 0; }

    int vertex_index(vertex_t v) const {
        auto it = index_.find(v);
        if (it == index_.end())
            throw unknown_vertex_error("unknown vertex " + std::to_string(v));
        return it->second;
    }

    int degree(vertex_t v) const { return degrees_[static_cast<std::size_t>(vertex_index(v))]; }

    // Index of the unique edge covering {a,b}, if any.
    std::optional<int> covering_edge(vertex_t a, vertex_t b) const {
        auto it = pair_index_.find(detail::pair_key(a, b));
        if (it == pair_index_.end()) return std::nullopt;
        return it->second;
    }

    bool pair_covered(vertex_t a, vertex_t b) const {
        return pair_index_.count(detail::pair_key(a, b)) != 0;
    }

    bool adjacent(vertex_t a, vertex_t b) const { return pair_covered(a, b); }

    // Sorted (neighbor, covering edge index) list; under linearity the edge
    // index per neighbor is unique.
    const std::vector<std::pair<vertex_t, int>>& neighbors(vertex_t v) const {
        return adjacency_[static_cast<std::size_t>(vertex_index(v))];
    }

    bool has_edge(const hyperedge& e) const {
        hyperedge s = e;
        std::sort(s.begin(), s.end());
        return std::binary_search(edges_.begin(), edges_.end(), s);
    }

    vertex_t max_label() const { return vertices_.empty() ? -1 : vertices_.back(); }

    bool operator==(const linear_hypergraph& other) const {
        return k_ == other.k_ && vertices_ == other.vertices_ && edges_ == other.edges_;
    }

private:
    int k_ = 3;
    std::vector<vertex_t> vertices_;
    std::vector<hyperedge> edges_;
    std::unordered_map<std::uint64_t, int> pair_index_;
    std::unordered_map<vertex_t, int> index_;
    std::vector<int> degrees_;
    std::vector<std::vector<std::pair<vertex_t, int>>> adjacency_;
};

// H plus one edge; the addition must preserve k-uniformity and linearity.
inline linear_hypergraph add_edge(const linear_hypergraph& h, const hyperedge& e) {
    auto edges = h.edges();
    edges.push_back(e);
    return linear_hypergraph::build(h.vertices(), h.k(), std::move(edges));
}

// Maximal connected sub-hypergraphs, ordered by smallest vertex label.
// Isolated vertices form singleton components.
inline std::vector<linear_hypergraph> components(const linear_hypergraph& h) {
    const auto& vs = h.vertices();
    std::vector<int> comp(vs.size(), -1);
    int ncomp = 0;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (comp[i] >= 0) continue;
        int id = ncomp++;
        std::vector<vertex_t> stack{vs[i]};
        comp[i] = id;
        while (!stack.empty()) {
            vertex_t v = stack.back();
            stack.pop_back();
            for (auto [u, ei] : h.neighbors(v)) {
                (void)ei;
                int ui = h.vertex_index(u);
                if (comp[static_cast<std::size_t>(ui)] < 0) {
                    comp[static_cast<std::size_t>(ui)] = id;
                    stack.push_back(u);
                }
            }
        }
    }
    std::vector<std::vector<vertex_t>> verts(static_cast<std::size_t>(ncomp));
    for (std::size_t i = 0; i < vs.size(); ++i)
        verts[static_cast<std::size_t>(comp[i])].push_back(vs[i]);
    std::vector<std::vector<hyperedge>> edges(static_cast<std::size_t>(ncomp));
    for (const auto& e : h.edges())
        edges[static_cast<std::size_t>(comp[static_cast<std::size_t>(h.vertex_index(e[0]))])]
            .push_back(e);

    // Vertex scan order is ascending, so component ids are already ordered by
    // smallest label.
    std::vector<linear_hypergraph> out;
    out.reserve(static_cast<std::size_t>(ncomp));
    for (int c = 0; c < ncomp; ++c)
        out.push_back(linear_hypergraph::build(std::move(verts[static_cast<std::size_t>(c)]),
                                               h.k(),
                                               std::move(edges[static_cast<std::size_t>(c)])));
    return out;
}

// H[X]: vertex set X, edges of H entirely inside X.
inline linear_hypergraph induced(const linear_hypergraph& h, std::vector<vertex_t> x) {
    std::sort(x.begin(), x.end());
    x.erase(std::unique(x.begin(), x.end()), x.end());
    for (vertex_t v : x)
        if (!h.has_vertex(v))
            throw unknown_vertex_error("induced: vertex " + std::to_string(v) +
                                       " is not in the hypergraph");
    std::vector<hyperedge> edges;
    for (const auto& e : h.edges()) {
        bool inside = std::all_of(e.begin(), e.end(), [&](vertex_t v) {
            return std::binary_search(x.begin(), x.end(), v);
        });
        if (inside) edges.push_back(e);
    }
    return linear_hypergraph::build(std::move(x), h.k(), std::move(edges));
}

// Copy of H with every vertex except `keep` shifted by `offset`.
inline linear_hypergraph relabel_offset(const linear_hypergraph& h, vertex_t offset,
                                        std::optional<vertex_t> keep = std::nullopt) {
    auto shift = [&](vertex_t v) { return (keep && v == *keep) ? v : v + offset; };
    std::vector<vertex_t> vs;
    vs.reserve(h.vertices().size());
    for (vertex_t v : h.vertices()) vs.push_back(shift(v));
    std::vector<hyperedge> es;
    es.reserve(h.edges().size());
    for (const auto& e : h.edges()) {
        hyperedge f;
        f.reserve(e.size());
        for (vertex_t v : e) f.push_back(shift(v));
        es.push_back(std::move(f));
    }
    return linear_hypergraph::build(std::move(vs), h.k(), std::move(es));
}

// Relabels H so that identify(G, ., v) sees disjoint non-anchor labels:
// every vertex except the anchor is offset past G's maximum label.
inline linear_hypergraph relabel_for_identify(const linear_hypergraph& g,
                                              const linear_hypergraph& h, vertex_t v) {
    vertex_t offset = std::max(g.max_label(), h.max_label()) + 1;
    return relabel_offset(h, offset, v);
}

// G·H(v): glue G and H at the shared anchor v. Non-anchor label sets must be
// disjoint (use relabel_for_identify first).
inline linear_hypergraph identify(const linear_hypergraph& g, const linear_hypergraph& h,
                                  vertex_t v) {
    if (!g.has_vertex(v) || !h.has_vertex(v))
        throw missing_anchor_error("identify: anchor " + std::to_string(v) +
                                   " must belong to both hypergraphs");
    if (g.k() != h.k())
        throw not_uniform_error("identify: uniformities differ");
    for (vertex_t u : h.vertices())
        if (u != v && g.has_vertex(u))
            throw label_clash_error("identify: label " + std::to_string(u) +
                                    " appears on both sides");
    std::vector<vertex_t> vs = g.vertices();
    vs.insert(vs.end(), h.vertices().begin(), h.vertices().end());
    std::vector<hyperedge> es = g.edges();
    es.insert(es.end(), h.edges().begin(), h.edges().end());
    return linear_hypergraph::build(std::move(vs), g.k(), std::move(es));
}

// count·G·H(v): glue `count` disjoint copies of G and one H at v. Copies are
// relabeled internally, each past the maximum label so far.
inline linear_hypergraph k_identify(int count, const linear_hypergraph& g,
                                    const linear_hypergraph& h, vertex_t v) {
    if (count < 0) throw error("k_identify: count must be non-negative");
    if (!g.has_vertex(v) || !h.has_vertex(v))
        throw missing_anchor_error("k_identify: anchor " + std::to_string(v) +
                                   " must belong to both hypergraphs");
    linear_hypergraph acc = h;
    for (int c = 0; c < count; ++c) {
        linear_hypergraph copy = relabel_offset(g, acc.max_label() + 1, v);
        acc = identify(acc, copy, v);
    }
    return acc;
}

} // namespace linsat
