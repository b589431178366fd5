#include <catch2/catch_amalgamated.hpp>

#include "linsat/candidates.hpp"
#include "support/naive.hpp"

using namespace linsat;

TEST_CASE("the 6-vertex Berge-C_3 admits exactly one addition") {
    auto c3 = linear_hypergraph::build(6, 3, {{0, 1, 2}, {2, 3, 4}, {0, 4, 5}});
    auto cands = candidate_edges(c3);
    REQUIRE(cands == std::vector<hyperedge>{{1, 3, 5}});
}

TEST_CASE("the empty hypergraph admits every k-subset, in ascending order") {
    auto h = linear_hypergraph::build(6, 3, {});
    auto cands = candidate_edges(h);
    REQUIRE(cands.size() == 20);
    REQUIRE(std::is_sorted(cands.begin(), cands.end()));
    REQUIRE(cands.front() == hyperedge{0, 1, 2});
    REQUIRE(cands.back() == hyperedge{3, 4, 5});
}

TEST_CASE("the 5-vertex two-edge gadget is addition-free") {
    auto g = linear_hypergraph::build(5, 3, {{0, 1, 2}, {0, 3, 4}});
    REQUIRE(candidate_edges(g).empty());
}

TEST_CASE("n < k yields no candidates") {
    auto h = linear_hypergraph::build(2, 3, {});
    REQUIRE(candidate_edges(h).empty());
}

TEST_CASE("candidates are exactly the linear-preserving non-edges") {
    for (unsigned seed = 0; seed < 40; ++seed) {
        auto h = naive::random_linear(seed, 9);
        std::set<hyperedge> yielded;
        for (const auto& e : candidate_edges(h)) yielded.insert(e);

        for (const auto& e : naive::all_ksets(h.n(), h.k())) {
            hyperedge mapped;
            for (vertex_t v : e) mapped.push_back(h.vertices()[static_cast<std::size_t>(v)]);
            if (h.has_edge(mapped)) {
                REQUIRE_FALSE(yielded.count(mapped));
                continue;
            }
            auto edges = h.edges();
            edges.push_back(mapped);
            bool builds = true;
            try {
                linear_hypergraph::build(h.vertices(), h.k(), edges);
            } catch (const not_linear_error&) {
                builds = false;
            }
            REQUIRE(builds == (yielded.count(mapped) > 0));
        }
    }
}
