#include <catch2/catch_amalgamated.hpp>

#include "linsat/constructions.hpp"
#include "linsat/hypergraph.hpp"
#include "support/naive.hpp"

using namespace linsat;

TEST_CASE("build validates uniformity, linearity, and vertex labels") {
    REQUIRE_NOTHROW(linear_hypergraph::build(3, 3, {{1, 2, 0}}));

    auto h = linear_hypergraph::build(3, 3, {{2, 0, 1}});
    REQUIRE(h.edge(0) == hyperedge{0, 1, 2}); // stored sorted

    REQUIRE_THROWS_AS(linear_hypergraph::build(5, 3, {{1, 2, 3}, {1, 2, 4}}), not_linear_error);
    REQUIRE_THROWS_AS(linear_hypergraph::build(5, 3, {{1, 2, 3, 4}}), not_uniform_error);
    REQUIRE_THROWS_AS(linear_hypergraph::build(5, 3, {{1, 2, 2}}), not_uniform_error);
    REQUIRE_THROWS_AS(linear_hypergraph::build(3, 3, {{1, 2, 7}}), unknown_vertex_error);
}

TEST_CASE("T* builds as a valid linear hypergraph") {
    auto ts = t_star();
    REQUIRE(ts.n() == 19);
    REQUIRE(ts.edge_count() == 15);
    REQUIRE(ts.degree(0) == 9);
    for (vertex_t v = 1; v <= 18; ++v) REQUIRE(ts.degree(v) == 2);
}

TEST_CASE("degree identity and component incidence count on random instances") {
    for (unsigned seed = 0; seed < 60; ++seed) {
        auto h = naive::random_linear(seed);
        long long degree_sum = 0;
        for (vertex_t v : h.vertices()) degree_sum += h.degree(v);
        REQUIRE(degree_sum == static_cast<long long>(h.k()) * h.edge_count());

        for (const auto& comp : components(h)) {
            if (comp.edge_count() == 0) continue;
            // k m' >= n' + m' - 1 for every connected component
            REQUIRE(comp.k() * comp.edge_count() >= comp.n() + comp.edge_count() - 1);
        }
    }
}

TEST_CASE("components partition deterministically by least label") {
    auto star = linear_hypergraph::build(9, 3, {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}});
    auto comps = components(star);
    REQUIRE(comps.size() == 3); // star plus isolated 7, 8
    REQUIRE(comps[0].n() == 7);
    REQUIRE(comps[1].vertices() == std::vector<vertex_t>{7});
    REQUIRE(comps[2].vertices() == std::vector<vertex_t>{8});

    REQUIRE(components(t_star()).size() == 1);

    auto two = linear_hypergraph::build(6, 3, {{0, 1, 2}, {3, 4, 5}});
    auto cc = components(two);
    REQUIRE(cc.size() == 2);
    REQUIRE(cc[0].edge_count() == 1);
    REQUIRE(cc[1].edge_count() == 1);
}

TEST_CASE("induced sub-hypergraph keeps exactly the inside edges") {
    auto h = t_prime_gadget(12);
    auto c3 = induced(h, {0, 7, 8, 9, 10, 11});
    REQUIRE(c3.n() == 6);
    REQUIRE(c3.edge_count() == 3);

    REQUIRE(induced(h, h.vertices()) == h);
    REQUIRE(induced(h, {}).n() == 0);
    REQUIRE_THROWS_AS(induced(h, {99}), unknown_vertex_error);
}

TEST_CASE("identify glues at the anchor") {
    auto g = linear_hypergraph::build(std::vector<vertex_t>{0, 1, 2}, 3, {{0, 1, 2}});
    auto h = linear_hypergraph::build(std::vector<vertex_t>{0, 3, 4}, 3, {{0, 3, 4}});
    auto glued = identify(g, h, 0);
    REQUIRE(glued.n() == 5);
    REQUIRE(glued.edge_count() == 2);
    REQUIRE(glued.degree(0) == 2);

    auto tp = relabel_for_identify(t_star(), t_prime(), 0);
    auto big = identify(t_star(), tp, 0);
    REQUIRE(big.n() == 25);
    REQUIRE(big.edge_count() == 19);

    REQUIRE_THROWS_AS(identify(g, h, 7), missing_anchor_error);
    auto clash = linear_hypergraph::build(std::vector<vertex_t>{0, 1, 5}, 3, {{0, 1, 5}});
    REQUIRE_THROWS_AS(identify(g, clash, 0), label_clash_error);
}

TEST_CASE("identify preserves linearity and counts on random instances") {
    for (unsigned seed = 0; seed < 30; ++seed) {
        auto g = naive::random_linear(seed, 12);
        if (g.n() == 0) continue;
        vertex_t anchor = g.vertices().front();
        auto h = naive::random_linear(seed + 1000, 12);
        if (!h.has_vertex(anchor)) continue;
        auto relabeled = relabel_for_identify(g, h, anchor);
        auto glued = identify(g, relabeled, anchor); // build() re-validates linearity
        REQUIRE(glued.n() == g.n() + h.n() - 1);
        REQUIRE(glued.edge_count() == g.edge_count() + h.edge_count());
    }
}

TEST_CASE("k_identify repeats the gluing") {
    auto point = linear_hypergraph::build(std::vector<vertex_t>{0}, 3, {});
    auto ts = t_star();

    REQUIRE(k_identify(0, ts, point, 0) == point);

    auto two = k_identify(2, ts, point, 0);
    REQUIRE(two.n() == 37);
    REQUIRE(two.edge_count() == 30);

    auto tp = relabel_for_identify(ts, t_prime(), 0);
    REQUIRE(k_identify(1, ts, tp, 0).n() == identify(tp, relabel_offset(ts, 100, 0), 0).n());
}
