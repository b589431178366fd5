#include <catch2/catch_amalgamated.hpp>

#include <map>

#include "linsat/canonical.hpp"
#include "linsat/enumerate.hpp"
#include "support/naive.hpp"

using namespace linsat;

TEST_CASE("canonical form ignores labels but sees structure") {
    auto a = linear_hypergraph::build(std::vector<vertex_t>{1, 2, 3}, 3, {{1, 2, 3}});
    auto b = linear_hypergraph::build(std::vector<vertex_t>{7, 8, 9}, 3, {{7, 8, 9}});
    REQUIRE(compute_canonical_form(a) == compute_canonical_form(b));

    auto cycle = linear_hypergraph::build(6, 3, {{0, 1, 2}, {2, 3, 4}, {0, 4, 5}});
    auto star = linear_hypergraph::build(7, 3, {{0, 1, 2}, {0, 3, 4}, {0, 5, 6}});
    REQUIRE(compute_canonical_form(cycle) != compute_canonical_form(star));

    auto sharing = linear_hypergraph::build(6, 3, {{0, 1, 2}, {0, 3, 4}});
    auto disjoint = linear_hypergraph::build(6, 3, {{0, 1, 2}, {3, 4, 5}});
    REQUIRE(compute_canonical_form(sharing) != compute_canonical_form(disjoint));

    // isolated vertices count even though they carry no structure
    auto padded = linear_hypergraph::build(7, 3, {{0, 1, 2}, {0, 3, 4}});
    REQUIRE(compute_canonical_form(sharing) != compute_canonical_form(padded));
}

TEST_CASE("canonical form is invariant under random relabelings") {
    std::mt19937 rng(11);
    for (unsigned seed = 0; seed < 40; ++seed) {
        auto h = naive::random_linear(seed, 12);
        auto base = compute_canonical_form(h);
        for (int round = 0; round < 3; ++round) {
            std::vector<vertex_t> target(h.vertices());
            std::shuffle(target.begin(), target.end(), rng);
            std::map<vertex_t, vertex_t> relabel;
            for (std::size_t i = 0; i < target.size(); ++i)
                relabel[h.vertices()[i]] = target[i];
            std::vector<hyperedge> edges;
            for (const auto& e : h.edges()) {
                hyperedge f;
                for (vertex_t v : e) f.push_back(relabel.at(v));
                edges.push_back(f);
            }
            auto g = linear_hypergraph::build(h.vertices(), h.k(), edges);
            REQUIRE(compute_canonical_form(g) == base);
        }
    }
}

TEST_CASE("equal fingerprint iff brute-force isomorphic, exhaustively to n=6") {
    for (int n = 3; n <= 6; ++n) {
        auto labeled = naive::all_linear_edge_sets(n, 3, 4);
        // group the labeled hypergraphs by permutation-minimal encoding
        std::map<std::vector<hyperedge>, linear_hypergraph> reps;
        for (const auto& es : labeled) {
            auto key = naive::min_encoding(n, es);
            if (!reps.count(key)) reps.emplace(key, linear_hypergraph::build(n, 3, es));
        }
        std::vector<canonical_form> forms;
        std::vector<linear_hypergraph> hs;
        for (auto& [key, h] : reps) {
            forms.push_back(compute_canonical_form(h));
            hs.push_back(h);
        }
        for (std::size_t i = 0; i < hs.size(); ++i)
            for (std::size_t j = i + 1; j < hs.size(); ++j) {
                bool iso = naive::isomorphic(hs[i], hs[j]);
                REQUIRE((forms[i] == forms[j]) == iso);
                REQUIRE_FALSE(iso); // distinct min-encodings are distinct classes
            }
    }
}

TEST_CASE("fingerprint groups at n=7 are exactly the isomorphism classes") {
    const int n = 7;
    auto labeled = naive::all_linear_edge_sets(n, 3, 4);
    std::map<canonical_form, std::vector<std::vector<hyperedge>>> groups;
    for (const auto& es : labeled)
        groups[compute_canonical_form(linear_hypergraph::build(n, 3, es))].push_back(es);

    // within a fingerprint group every member is isomorphic to the rep
    std::vector<linear_hypergraph> reps;
    for (auto& [form, members] : groups) {
        linear_hypergraph rep = linear_hypergraph::build(n, 3, members.front());
        std::size_t step = std::max<std::size_t>(1, members.size() / 8);
        for (std::size_t i = 0; i < members.size(); i += step)
            REQUIRE(naive::isomorphic(rep, linear_hypergraph::build(n, 3, members[i])));
        reps.push_back(std::move(rep));
    }
    // across groups the reps are pairwise non-isomorphic
    for (std::size_t i = 0; i < reps.size(); ++i)
        for (std::size_t j = i + 1; j < reps.size(); ++j)
            REQUIRE_FALSE(naive::isomorphic(reps[i], reps[j]));
}
