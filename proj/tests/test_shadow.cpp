#include <catch2/catch_amalgamated.hpp>

#include "linsat/constructions.hpp"
#include "linsat/shadow.hpp"
#include "support/naive.hpp"

using namespace linsat;

TEST_CASE("a single edge shadows to a triangle with full provenance") {
    auto h = linear_hypergraph::build(std::vector<vertex_t>{1, 2, 3}, 3, {{1, 2, 3}});
    auto s = make_shadow(h);
    REQUIRE(s.edges == std::vector<std::pair<vertex_t, vertex_t>>{{1, 2}, {1, 3}, {2, 3}});
    REQUIRE(s.provenance == std::vector<int>{0, 0, 0});
}

TEST_CASE("the empty hypergraph has an empty shadow") {
    auto s = make_shadow(linear_hypergraph::build(5, 3, {}));
    REQUIRE(s.edges.empty());
    REQUIRE(s.vertices.size() == 5);
}

TEST_CASE("T* shadow has 45 edges and v0 shadow degree 18") {
    auto s = make_shadow(t_star());
    REQUIRE(s.edges.size() == 45);
    REQUIRE(s.degree(0) == 18);
}

TEST_CASE("shadow identities hold on randomized linear instances") {
    for (unsigned seed = 0; seed < 60; ++seed) {
        auto h = naive::random_linear(seed);
        auto s = make_shadow(h);
        int pairs_per_edge = h.k() * (h.k() - 1) / 2;
        REQUIRE(static_cast<int>(s.edges.size()) == pairs_per_edge * h.edge_count());
        for (vertex_t v : h.vertices())
            REQUIRE(s.degree(v) == (h.k() - 1) * h.degree(v));
        // provenance is total and single-valued
        REQUIRE(s.provenance.size() == s.edges.size());
        for (std::size_t i = 0; i < s.edges.size(); ++i) {
            const auto& e = h.edge(s.provenance[i]);
            REQUIRE(std::find(e.begin(), e.end(), s.edges[i].first) != e.end());
            REQUIRE(std::find(e.begin(), e.end(), s.edges[i].second) != e.end());
        }
    }
}
