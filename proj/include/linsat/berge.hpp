#pragma once

#include <algorithm>
#include <deque>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "linsat/hypergraph.hpp"

namespace linsat {

// Alternating vertex/hyperedge sequence certifying a Berge cycle:
// support v_1..v_t, edges e_1..e_t with v_i, v_{i+1} in e_i and v_1, v_t in
// e_t; all vertices distinct, all edges distinct. Canonical form: support
// starts at its minimum label and proceeds toward the smaller second label.
struct berge_cycle_witness {
    std::vector<vertex_t> support;
    std::vector<hyperedge> edge_seq;

    int length() const { return static_cast<int>(support.size()); }

    std::string to_line() const {
        std::ostringstream os;
        for (std::size_t i = 0; i < support.size(); ++i) {
            if (i) os << ' ';
            os << support[i] << " (";
            const auto& e = edge_seq[i];
            for (std::size_t j = 0; j < e.size(); ++j) {
                if (j) os << ' ';
                os << e[j];
            }
            os << ')';
        }
        return os.str();
    }
};

// Berge path of length l: support v_1..v_{l+1}, edges e_1..e_l with
// v_i, v_{i+1} in e_i; all vertices distinct, all edges distinct.
struct berge_path_witness {
    std::vector<vertex_t> support;
    std::vector<hyperedge> edge_seq;

    int length() const { return static_cast<int>(edge_seq.size()); }

    std::string to_line() const {
        std::ostringstream os;
        for (std::size_t i = 0; i < edge_seq.size(); ++i) {
            if (i) os << ' ';
            os << support[i] << " (";
            const auto& e = edge_seq[i];
            for (std::size_t j = 0; j < e.size(); ++j) {
                if (j) os << ' ';
                os << e[j];
            }
            os << ')';
        }
        os << ' ' << support.back();
        return os.str();
    }
};

inline std::vector<vertex_t> support_of(const berge_cycle_witness& w) {
    std::vector<vertex_t> s = w.support;
    std::sort(s.begin(), s.end());
    return s;
}

// Re-checks a returned witness against the raw edge list only; shares no
// state with the searches, so it can vouch for them.
inline bool validate_cycle_witness(const linear_hypergraph& h, const berge_cycle_witness& w,
                                   int t) {
    if (static_cast<int>(w.support.size()) != t) return false;
    if (static_cast<int>(w.edge_seq.size()) != t) return false;
    auto sup = w.support;
    std::sort(sup.begin(), sup.end());
    if (std::adjacent_find(sup.begin(), sup.end()) != sup.end()) return false;
    auto es = w.edge_seq;
    std::sort(es.begin(), es.end());
    if (std::adjacent_find(es.begin(), es.end()) != es.end()) return false;
    const auto& all = h.edges();
    for (const auto& e : w.edge_seq)
        if (std::find(all.begin(), all.end(), e) == all.end()) return false;
    for (int i = 0; i < t; ++i) {
        vertex_t a = w.support[static_cast<std::size_t>(i)];
        vertex_t b = w.support[static_cast<std::size_t>((i + 1) % t)];
        const auto& e = w.edge_seq[static_cast<std::size_t>(i)];
        if (std::find(e.begin(), e.end(), a) == e.end()) return false;
        if (std::find(e.begin(), e.end(), b) == e.end()) return false;
    }
    if (w.support[0] != sup.front()) return false;
    if (w.support[1] > w.support[static_cast<std::size_t>(t - 1)]) return false;
    return true;
}

inline bool validate_path_witness(const linear_hypergraph& h, const berge_path_witness& w,
                                  int len) {
    if (static_cast<int>(w.edge_seq.size()) != len) return false;
    if (static_cast<int>(w.support.size()) != len + 1) return false;
    auto sup = w.support;
    std::sort(sup.begin(), sup.end());
    if (std::adjacent_find(sup.begin(), sup.end()) != sup.end()) return false;
    auto es = w.edge_seq;
    std::sort(es.begin(), es.end());
    if (std::adjacent_find(es.begin(), es.end()) != es.end()) return false;
    const auto& all = h.edges();
    for (const auto& e : w.edge_seq)
        if (std::find(all.begin(), all.end(), e) == all.end()) return false;
    for (int i = 0; i < len; ++i) {
        vertex_t a = w.support[static_cast<std::size_t>(i)];
        vertex_t b = w.support[static_cast<std::size_t>(i + 1)];
        const auto& e = w.edge_seq[static_cast<std::size_t>(i)];
        if (std::find(e.begin(), e.end(), a) == e.end()) return false;
        if (std::find(e.begin(), e.end(), b) == e.end()) return false;
    }
    return true;
}

namespace detail {

// In a linear hypergraph each vertex pair lies in at most one hyperedge, so a
// Berge cycle or path is exactly a walk in the shadow graph whose covering
// hyperedges are pairwise distinct. The searches below walk shadow adjacency
// with an all-distinct filter on provenance.

struct cycle_search {
    const linear_hypergraph& h;
    int t;
    std::vector<vertex_t> path;
    std::vector<bool> vertex_used;
    std::vector<bool> edge_used;
    std::vector<int> edge_trail;

    explicit cycle_search(const linear_hypergraph& hg, int length)
        : h(hg), t(length),
          vertex_used(hg.vertices().size(), false),
          edge_used(static_cast<std::size_t>(hg.edge_count()), false) {}

    // Extends the path (which starts at its minimum vertex) one step; on
    // success `path` holds t vertices and `edge_trail` their t covering edges.
    bool extend() {
        vertex_t v = path.back();
        if (static_cast<int>(path.size()) == t) {
            auto closing = h.covering_edge(v, path.front());
            if (closing && !edge_used[static_cast<std::size_t>(*closing)]) {
                edge_trail.push_back(*closing);
                return true;
            }
            return false;
        }
        for (auto [u, ei] : h.neighbors(v)) {
            if (u <= path.front()) continue;
            if (vertex_used[static_cast<std::size_t>(h.vertex_index(u))]) continue;
            if (edge_used[static_cast<std::size_t>(ei)]) continue;
            path.push_back(u);
            vertex_used[static_cast<std::size_t>(h.vertex_index(u))] = true;
            edge_used[static_cast<std::size_t>(ei)] = true;
            edge_trail.push_back(ei);
            if (extend()) return true;
            edge_trail.pop_back();
            edge_used[static_cast<std::size_t>(ei)] = false;
            vertex_used[static_cast<std::size_t>(h.vertex_index(u))] = false;
            path.pop_back();
        }
        return false;
    }
};

inline berge_cycle_witness make_cycle_witness(const linear_hypergraph& h,
                                              const std::vector<vertex_t>& support,
                                              const std::vector<int>& edge_trail) {
    berge_cycle_witness w;
    w.support = support;
    for (int ei : edge_trail) w.edge_seq.push_back(h.edge(ei));
    return w;
}

// Rotates/reflects a cycle so the support starts at its minimum label and
// proceeds toward the smaller second label.
inline berge_cycle_witness normalize_cycle(const berge_cycle_witness& w) {
    const int t = w.length();
    int m = 0;
    for (int i = 1; i < t; ++i)
        if (w.support[static_cast<std::size_t>(i)] < w.support[static_cast<std::size_t>(m)]) m = i;
    auto rotate = [&](bool forward) {
        berge_cycle_witness out;
        for (int s = 0; s < t; ++s) {
            int vi = forward ? (m + s) % t : (m - s % t + t) % t;
            out.support.push_back(w.support[static_cast<std::size_t>(vi)]);
            // edge i of the output covers (out.support[i], out.support[i+1])
            int eidx = forward ? (m + s) % t : (m - s % t - 1 + 2 * t) % t;
            out.edge_seq.push_back(w.edge_seq[static_cast<std::size_t>(eidx)]);
        }
        return out;
    };
    berge_cycle_witness fwd = rotate(true);
    berge_cycle_witness bwd = rotate(false);
    return fwd.support[1] < bwd.support[1] ? fwd : bwd;
}

} // namespace detail

// First Berge-C_t in deterministic order (so the result is canonical), or
// absent. Absence is authoritative: the walk search covers every cycle.
inline std::optional<berge_cycle_witness> find_berge_cycle(const linear_hypergraph& h, int t) {
    if (t < 3) throw bad_length_error("cycle length must be at least 3, got " + std::to_string(t));
    if (h.edge_count() < t || h.n() < t) return std::nullopt;
    for (vertex_t s : h.vertices()) {
        detail::cycle_search search(h, t);
        search.path.push_back(s);
        search.vertex_used[static_cast<std::size_t>(h.vertex_index(s))] = true;
        if (search.extend())
            return detail::make_cycle_witness(h, search.path, search.edge_trail);
    }
    return std::nullopt;
}

inline std::optional<berge_path_witness> find_berge_path(
    const linear_hypergraph& h, vertex_t u, vertex_t w, int len,
    const std::vector<int>& banned_edges = {}) {
    if (len < 1) throw bad_length_error("path length must be at least 1, got " + std::to_string(len));
    if (!h.has_vertex(u) || !h.has_vertex(w))
        throw unknown_vertex_error("path endpoints must be vertices of the hypergraph");
    if (u == w) throw error("path endpoints must differ");
    if (h.edge_count() < len) return std::nullopt;

    std::vector<bool> edge_used(static_cast<std::size_t>(h.edge_count()), false);
    for (int ei : banned_edges) edge_used[static_cast<std::size_t>(ei)] = true;

    // Shadow-graph BFS distance from w, ignoring bans; a lower bound that
    // prunes branches which cannot reach w in the remaining steps.
    std::vector<int> dist(h.vertices().size(), -1);
    {
        std::deque<vertex_t> queue{w};
        dist[static_cast<std::size_t>(h.vertex_index(w))] = 0;
        while (!queue.empty()) {
            vertex_t v = queue.front();
            queue.pop_front();
            int d = dist[static_cast<std::size_t>(h.vertex_index(v))];
            for (auto [x, ei] : h.neighbors(v)) {
                (void)ei;
                int xi = h.vertex_index(x);
                if (dist[static_cast<std::size_t>(xi)] < 0) {
                    dist[static_cast<std::size_t>(xi)] = d + 1;
                    queue.push_back(x);
                }
            }
        }
    }

    std::vector<bool> vertex_used(h.vertices().size(), false);
    std::vector<vertex_t> path{u};
    std::vector<int> trail;
    vertex_used[static_cast<std::size_t>(h.vertex_index(u))] = true;

    // DFS in ascending neighbor order yields the lexicographically least
    // support sequence first.
    auto dfs = [&](auto&& self, vertex_t v, int remaining) -> bool {
        if (remaining == 0) return v == w;
        if (v == w) return false;
        int dv = dist[static_cast<std::size_t>(h.vertex_index(v))];
        if (dv < 0 || dv > remaining) return false;
        for (auto [x, ei] : h.neighbors(v)) {
            if (vertex_used[static_cast<std::size_t>(h.vertex_index(x))]) continue;
            if (edge_used[static_cast<std::size_t>(ei)]) continue;
            path.push_back(x);
            vertex_used[static_cast<std::size_t>(h.vertex_index(x))] = true;
            edge_used[static_cast<std::size_t>(ei)] = true;
            trail.push_back(ei);
            if (self(self, x, remaining - 1)) return true;
            trail.pop_back();
            edge_used[static_cast<std::size_t>(ei)] = false;
            vertex_used[static_cast<std::size_t>(h.vertex_index(x))] = false;
            path.pop_back();
        }
        return false;
    };
    if (!dfs(dfs, u, len)) return std::nullopt;
    berge_path_witness wit;
    wit.support = path;
    for (int ei : trail) wit.edge_seq.push_back(h.edge(ei));
    return wit;
}

// Berge-C_t through a specific hyperedge: some consecutive support pair lies
// in that edge, and the remaining t-1 steps avoid it. Used to localize the
// per-candidate search in saturation checking.
inline std::optional<berge_cycle_witness> find_berge_cycle_through(const linear_hypergraph& h,
                                                                   int t, int edge_index) {
    if (t < 3) throw bad_length_error("cycle length must be at least 3, got " + std::to_string(t));
    if (h.edge_count() < t || h.n() < t) return std::nullopt;
    const auto& e = h.edge(edge_index);
    for (std::size_t a = 0; a < e.size(); ++a)
        for (std::size_t b = a + 1; b < e.size(); ++b) {
            auto p = find_berge_path(h, e[a], e[b], t - 1, {edge_index});
            if (!p) continue;
            berge_cycle_witness w;
            w.support = p->support;
            w.edge_seq = p->edge_seq;
            w.edge_seq.push_back(e);
            return detail::normalize_cycle(w);
        }
    return std::nullopt;
}

struct path_connectivity {
    bool connected = true;
    std::optional<std::pair<vertex_t, vertex_t>> counterexample;
};

// True iff every unordered pair of distinct non-adjacent vertices admits a
// Berge-P_len. A single vertex or a single hyperedge qualifies vacuously.
// Disconnected inputs fail with a cross-component pair.
inline path_connectivity is_berge_path_connected(const linear_hypergraph& h, int len) {
    if (len < 1) throw bad_length_error("path length must be at least 1, got " + std::to_string(len));
    const auto& vs = h.vertices();
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
            if (h.adjacent(vs[i], vs[j])) continue;
            if (!find_berge_path(h, vs[i], vs[j], len))
                return {false, std::make_pair(vs[i], vs[j])};
        }
    return {};
}

} // namespace linsat
