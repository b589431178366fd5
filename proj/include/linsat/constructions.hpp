#pragma once

#include <array>
#include <numeric>
#include <optional>
#include <vector>

#include "linsat/berge.hpp"
#include "linsat/candidates.hpp"
#include "linsat/hypergraph.hpp"
#include "linsat/saturation.hpp"

namespace linsat {

// Star with floor((n-1)/(k-1)) hyperedges through vertex 0 plus the leftover
// isolated vertices; the minimum Berge-C_3-saturated hypergraph for n >= 6.
inline linear_hypergraph c3_star(int n, int k) {
    if (k < 3) throw too_small_error("c3_star requires k >= 3");
    if (n < k) throw too_small_error("c3_star requires n >= k");
    int blades = (n - 1) / (k - 1);
    std::vector<hyperedge> edges;
    for (int b = 0; b < blades; ++b) {
        hyperedge e{0};
        for (int j = 0; j < k - 1; ++j) e.push_back(1 + b * (k - 1) + j);
        edges.push_back(std::move(e));
    }
    return linear_hypergraph::build(n, k, std::move(edges));
}

// T': seven vertices, four edges, Berge-P_3-connected, Berge-C_4-saturated.
inline linear_hypergraph t_prime() {
    return linear_hypergraph::build(7, 3,
                                    {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {2, 4, 6}});
}

// T*: 19 vertices, 15 edges; three T'-shaped blades through v0 plus three
// edges linking the blades' degree-one vertices. d(v0)=9, every other degree
// is 2; Berge-C_4-free, Berge-P_3-connected, Berge-C_4-saturated.
inline linear_hypergraph t_star() {
    return linear_hypergraph::build(
        19, 3,
        {{0, 1, 2},    {0, 3, 4},    {0, 5, 6},    {2, 4, 6},
         {0, 7, 8},    {0, 9, 10},   {0, 11, 12},  {8, 10, 12},
         {0, 13, 14},  {0, 15, 16},  {0, 17, 18},  {14, 16, 18},
         {1, 7, 13},   {3, 9, 15},   {5, 11, 17}});
}

// Hyperedge counts e(T'_i) for the residue gadgets, indexed by i in 1..18.
inline constexpr std::array<int, 19> gadget_edge_table = {
    -1, 0, 0, 1, 1, 2, 3, 4, 4, 5, 5, 7, 7, 8, 8, 11, 12, 12, 13};

// Residues whose gadget contributes a component away from v0; the assembled
// family member is then a disjoint union of two pieces.
inline bool gadget_is_disjoint_residue(int i) {
    return i == 2 || i == 4 || i == 8 || i == 10 || i == 14;
}

namespace detail {
inline std::vector<hyperedge> gadget_edges(int i) {
    const std::vector<hyperedge> tp = {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}, {2, 4, 6}};
    // 2T'(v0): two copies of T' identified at v0.
    std::vector<hyperedge> tp2 = tp;
    tp2.insert(tp2.end(), {{0, 7, 8}, {0, 9, 10}, {0, 11, 12}, {8, 10, 12}});
    switch (i) {
    case 1: return {};
    case 2: return {};
    case 3: return {{0, 1, 2}};
    case 4: return {{0, 1, 2}}; // vertex 3 stays isolated
    case 5: return {{0, 1, 2}, {0, 3, 4}};
    case 6: return {{0, 1, 2}, {2, 3, 4}, {0, 4, 5}}; // Berge-C_3 through v0
    case 7: return tp;
    case 8: return tp; // vertex 7 stays isolated
    case 9: {
        auto e = tp;
        e.push_back({0, 7, 8});
        return e;
    }
    case 10: {
        auto e = tp;
        e.push_back({7, 8, 9}); // component away from v0
        return e;
    }
    case 11: {
        auto e = tp;
        e.insert(e.end(), {{0, 7, 8}, {1, 7, 9}, {0, 9, 10}});
        return e;
    }
    case 12: {
        auto e = tp;
        // Berge-C_3 on {v0, v7..v11}
        e.insert(e.end(), {{0, 7, 8}, {8, 10, 11}, {0, 9, 10}});
        return e;
    }
    case 13: return tp2;
    case 14: {
        auto e = tp;
        // disjoint copy of T' on v7..v13
        e.insert(e.end(), {{7, 8, 9}, {7, 10, 11}, {7, 12, 13}, {9, 11, 13}});
        return e;
    }
    case 15: {
        auto e = tp2;
        e.insert(e.end(), {{0, 13, 14}, {1, 7, 14}, {3, 9, 13}});
        return e;
    }
    case 16: {
        auto e = tp2;
        // three new vertices tied pairwise to the blades' degree-one
        // vertices; {5,11,14} is the unique fourth edge keeping the gadget
        // C_4-free and saturated
        e.insert(e.end(), {{13, 14, 15}, {1, 9, 13}, {5, 11, 14}, {3, 7, 15}});
        return e;
    }
    case 17: {
        auto e = gadget_edges(15);
        e.push_back({14, 15, 16});
        return e;
    }
    case 18: {
        auto e = tp2;
        // Berge-C_3 on {v0, v13..v17} plus two edges tying it to the blades;
        // the links must land on the C_3 vertices adjacent to v0
        e.insert(e.end(), {{0, 13, 14}, {14, 15, 16}, {0, 16, 17}, {1, 7, 13}, {3, 9, 17}});
        return e;
    }
    default: throw bad_residue_error("gadget index must be in 1..18, got " + std::to_string(i));
    }
}
} // namespace detail

// T'_i: i vertices (v0 plus i-1 new ones), gadget_edge_table[i] edges.
// Assembling t copies of T* with T'_i at v0 gives the n = 18t + i member of
// the Berge-C_4-saturated family.
inline linear_hypergraph t_prime_gadget(int i) {
    if (i < 1 || i > 18)
        throw bad_residue_error("gadget index must be in 1..18, got " + std::to_string(i));
    return linear_hypergraph::build(i, 3, detail::gadget_edges(i));
}

// t copies of T* and one T'_i, all identified at v0. Copy c of T* occupies
// labels 18c+1..18(c+1); the gadget's non-anchor vertices follow.
inline linear_hypergraph c4_family(int n) {
    if (n < 1) throw too_small_error("c4_family requires n >= 1");
    int t = (n - 1) / 18;
    int i = n - 18 * t;
    std::vector<hyperedge> edges;
    const auto star = t_star().edges();
    for (int c = 0; c < t; ++c)
        for (const auto& e : star) {
            hyperedge f;
            for (vertex_t v : e) f.push_back(v == 0 ? 0 : v + 18 * c);
            edges.push_back(std::move(f));
        }
    for (const auto& e : detail::gadget_edges(i)) {
        hyperedge f;
        for (vertex_t v : e) f.push_back(v == 0 ? 0 : v + 18 * t);
        edges.push_back(std::move(f));
    }
    return linear_hypergraph::build(n, 3, std::move(edges));
}

// Exhaustive completion search for the gadgets whose figures pin only part of
// the edge set: starting from the prose-pinned core, tries every way of
// adding linear-preserving edges up to the table count and returns the
// lexicographically least edge set making the gadget Berge-C_4-free and
// Berge-C_4-saturated, with at most one hyperedge lying entirely outside
// v0's neighborhood.
inline std::optional<std::vector<hyperedge>> find_gadget_completion(
    int i, std::vector<hyperedge> core) {
    if (i < 1 || i > 18)
        throw bad_residue_error("gadget index must be in 1..18, got " + std::to_string(i));
    const int target = gadget_edge_table[static_cast<std::size_t>(i)];

    auto admissible = [&](const linear_hypergraph& g) {
        int off_edges = 0;
        for (const auto& e : g.edges()) {
            bool all_away = true;
            for (vertex_t v : e)
                if (v == 0 || g.adjacent(0, v)) {
                    all_away = false;
                    break;
                }
            if (all_away) ++off_edges;
        }
        return off_edges <= 1;
    };

    std::vector<hyperedge> chosen;
    auto dfs = [&](auto&& self, const linear_hypergraph& g,
                   const hyperedge& last) -> std::optional<std::vector<hyperedge>> {
        if (g.edge_count() == target) {
            if (!admissible(g)) return std::nullopt;
            if (find_berge_cycle(g, 4)) return std::nullopt;
            if (is_saturated(g, 4).verdict != saturation_verdict::saturated)
                return std::nullopt;
            return g.edges();
        }
        std::optional<std::vector<hyperedge>> found;
        for_each_candidate(g, [&](const hyperedge& e) {
            if (e <= last) return true; // grow edge sets in increasing order only
            linear_hypergraph next = add_edge(g, e);
            if (find_berge_cycle_through(next, 4, *([&] {
                    // index of e in next
                    const auto& es = next.edges();
                    auto it = std::lower_bound(es.begin(), es.end(), e);
                    return std::optional<int>(static_cast<int>(it - es.begin()));
                }())))
                return true; // adding e would create a Berge-C_4
            found = self(self, next, e);
            return !found.has_value();
        });
        return found;
    };

    linear_hypergraph base = linear_hypergraph::build(i, 3, std::move(core));
    if (find_berge_cycle(base, 4)) return std::nullopt;
    return dfs(dfs, base, hyperedge{});
}

} // namespace linsat
