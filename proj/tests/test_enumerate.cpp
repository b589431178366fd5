#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>

#include "linsat/enumerate.hpp"
#include "support/naive.hpp"

using namespace linsat;

TEST_CASE("tiny streams") {
    std::vector<int> levels;
    enumerate_free(3, 3, 3, 1, [&](const linear_hypergraph&, int m) {
        levels.push_back(m);
        return true;
    });
    REQUIRE(levels == std::vector<int>{0, 1}); // empty and the single edge

    // a Berge-C_3 needs six vertices, so the freeness filter passes everything
    int free_count = 0, all_count = 0;
    enumerate_free(5, 3, 3, 4, [&](const linear_hypergraph&, int) { ++free_count; return true; });
    enumerate_linear(5, 3, 4, [&](const linear_hypergraph&, int) { ++all_count; return true; });
    REQUIRE(free_count == all_count);
}

TEST_CASE("the 3-edge star appears among C_3-free classes on 7 vertices") {
    bool seen_star = false;
    enumerate_free(7, 3, 3, 3, [&](const linear_hypergraph& h, int m) {
        if (m == 3 && h.degree(h.vertices()[0]) == 3) seen_star = true;
        if (m == 3) {
            // C_3-free filter really applies
            REQUIRE_FALSE(naive::has_berge_cycle(h, 3));
        }
        return true;
    });
    REQUIRE(seen_star);
}

TEST_CASE("no class is emitted twice and none is missed") {
    for (int n = 3; n <= 6; ++n) {
        // naive: all labeled linear edge sets, deduped by permutation-minimal encoding
        std::set<std::vector<hyperedge>> naive_classes;
        for (const auto& es : naive::all_linear_edge_sets(n, 3, 4))
            naive_classes.insert(naive::min_encoding(n, es));

        std::vector<linear_hypergraph> emitted;
        enumerate_linear(n, 3, 4, [&](const linear_hypergraph& h, int) {
            emitted.push_back(h);
            return true;
        });
        REQUIRE(emitted.size() == naive_classes.size());
        std::set<std::vector<hyperedge>> seen;
        for (const auto& h : emitted) seen.insert(naive::min_encoding(n, h.edges()));
        REQUIRE(seen == naive_classes); // hits every class exactly once
    }
}

TEST_CASE("freeness filter drops exactly the cyclic classes") {
    int free_count = 0, all_count = 0, cyclic = 0;
    enumerate_free(6, 3, 3, 4, [&](const linear_hypergraph& h, int) {
        ++free_count;
        REQUIRE_FALSE(naive::has_berge_cycle(h, 3));
        return true;
    });
    enumerate_linear(6, 3, 4, [&](const linear_hypergraph& h, int) {
        ++all_count;
        if (naive::has_berge_cycle(h, 3)) ++cyclic;
        return true;
    });
    REQUIRE(free_count + cyclic == all_count);
    REQUIRE(cyclic > 0);
}

TEST_CASE("a tiny node budget raises budget_exceeded") {
    search_budget tiny;
    tiny.max_nodes = 5;
    REQUIRE_THROWS_AS(enumerate_free(8, 3, 4, 4,
                                     [](const linear_hypergraph&, int) { return true; }, tiny),
                      budget_exceeded_error);
}

TEST_CASE("worker count does not change the stream") {
    auto collect = [](int workers) {
        std::vector<std::string> out;
        enumerate_linear(7, 3, 4,
                         [&](const linear_hypergraph& h, int) {
                             out.push_back(compute_canonical_form(h).to_string());
                             return true;
                         },
                         {}, workers);
        return out;
    };
    auto seq = collect(1);
    REQUIRE(seq == collect(2));
    REQUIRE(seq == collect(4));
}

TEST_CASE("early stop is honored") {
    int visits = 0;
    enumerate_linear(8, 3, 3, [&](const linear_hypergraph&, int) { return ++visits < 4; });
    REQUIRE(visits == 4);
}
