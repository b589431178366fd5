#include <catch2/catch_amalgamated.hpp>

#include "linsat/bounds.hpp"
#include "linsat/canonical.hpp"
#include "linsat/constructions.hpp"

using namespace linsat;

TEST_CASE("c3_star layout") {
    auto s7 = c3_star(7, 3);
    REQUIRE(s7.edges() == std::vector<hyperedge>{{0, 1, 2}, {0, 3, 4}, {0, 5, 6}});

    auto s8 = c3_star(8, 3);
    REQUIRE(s8.edge_count() == 3);
    REQUIRE(s8.degree(7) == 0);

    REQUIRE(c3_star(3, 3).edge_count() == 1);
    REQUIRE(c3_star(4, 4).edge_count() == 1);
    REQUIRE_THROWS_AS(c3_star(2, 3), too_small_error);
}

TEST_CASE("T* and T' certificates") {
    auto ts = t_star();
    REQUIRE(ts.edge_count() == 15);
    REQUIRE(is_free(ts, 4).free);
    REQUIRE(is_berge_path_connected(ts, 3).connected);
    REQUIRE(is_saturated(ts, 4).verdict == saturation_verdict::saturated);

    auto tp = t_prime();
    REQUIRE(tp.edge_count() == 4);
    REQUIRE(find_berge_path(tp, 1, 4, 3));
    REQUIRE(is_berge_path_connected(tp, 3).connected);
    REQUIRE(is_saturated(tp, 4).verdict == saturation_verdict::saturated);
}

TEST_CASE("gadget shapes pinned by the construction") {
    // T'_6 is a Berge-C_3; T'_7 is T'
    auto c3 = linear_hypergraph::build(6, 3, {{0, 1, 2}, {2, 3, 4}, {0, 4, 5}});
    REQUIRE(compute_canonical_form(t_prime_gadget(6)) == compute_canonical_form(c3));
    REQUIRE(compute_canonical_form(t_prime_gadget(7)) == compute_canonical_form(t_prime()));

    // T'_13 is two copies of T' identified at v0
    auto two = identify(t_prime(), relabel_offset(t_prime(), 6, 0), 0);
    REQUIRE(compute_canonical_form(t_prime_gadget(13)) == compute_canonical_form(two));

    // T'_12 restricted to {v0, v7..v11} is a Berge-C_3
    auto inner = induced(t_prime_gadget(12), {0, 7, 8, 9, 10, 11});
    REQUIRE(compute_canonical_form(inner) == compute_canonical_form(c3));

    // T'_5 is addition-free
    REQUIRE(candidate_edges(t_prime_gadget(5)).empty());

    REQUIRE_THROWS_AS(t_prime_gadget(0), bad_residue_error);
    REQUIRE_THROWS_AS(t_prime_gadget(19), bad_residue_error);
}

TEST_CASE("every gadget matches the edge table and passes its checks") {
    for (int i = 1; i <= 18; ++i) {
        auto g = t_prime_gadget(i);
        INFO("gadget " << i);
        REQUIRE(g.n() == i);
        REQUIRE(g.edge_count() == gadget_edge_table[static_cast<std::size_t>(i)]);
        REQUIRE(is_free(g, 4).free);
        REQUIRE(is_saturated(g, 4).verdict == saturation_verdict::saturated);
        // at most one hyperedge lies entirely outside v0's closed neighborhood
        int off = 0;
        for (const auto& e : g.edges()) {
            bool away = true;
            for (vertex_t v : e)
                if (v == 0 || g.adjacent(0, v)) { away = false; break; }
            if (away) ++off;
        }
        REQUIRE(off <= 1);
    }
}

TEST_CASE("the completion search reproduces the shipped underdetermined gadgets") {
    std::vector<hyperedge> base13 = {{0, 1, 2}, {0, 3, 4},  {0, 5, 6},   {2, 4, 6},
                                     {0, 7, 8}, {0, 9, 10}, {0, 11, 12}, {8, 10, 12}};
    SECTION("T'_15: one edge beyond the prose-pinned ten") {
        auto core = base13;
        core.insert(core.end(), {{0, 13, 14}, {1, 7, 14}});
        auto found = find_gadget_completion(15, core);
        REQUIRE(found);
        REQUIRE(*found == t_prime_gadget(15).edges());
    }
    SECTION("T'_16: the unique fourth linking edge") {
        auto core = base13;
        core.insert(core.end(), {{13, 14, 15}, {1, 9, 13}, {3, 7, 15}});
        auto found = find_gadget_completion(16, core);
        REQUIRE(found);
        REQUIRE(*found == t_prime_gadget(16).edges());
    }
}

TEST_CASE("c4_family assembles t copies of T* plus the residue gadget") {
    REQUIRE(c4_family(19).edge_count() == 15);
    REQUIRE(c4_family(24).edge_count() == 18);
    auto g6 = c4_family(6);
    REQUIRE(g6.edge_count() == 3);
    REQUIRE(compute_canonical_form(g6) == compute_canonical_form(t_prime_gadget(6)));
    REQUIRE_THROWS_AS(c4_family(0), too_small_error);

    // labels: copy c of T* occupies 18c+1..18(c+1), the gadget follows
    auto g40 = c4_family(40); // t=2, i=4
    REQUIRE(g40.n() == 40);
    REQUIRE(g40.degree(0) == 9 * 2 + 1); // two stars plus the gadget edge at v0
    REQUIRE(g40.degree(39) == 0);        // the gadget's isolated vertex
}

TEST_CASE("family edge counts equal the closed form across the whole range") {
    for (int n = 1; n <= 2000; ++n) {
        INFO("n=" << n);
        REQUIRE(c4_family(n).edge_count() == sat_c4_upper(n).integer_bound);
    }
}

TEST_CASE("family members are saturated at desk scale") {
    for (int n : {1, 2, 3, 4, 5, 6, 14, 19, 20, 33, 36, 40}) {
        INFO("n=" << n);
        REQUIRE(is_saturated(c4_family(n), 4).verdict == saturation_verdict::saturated);
    }
}
