#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "linsat/bounds.hpp"
#include "linsat/enumerate.hpp"
#include "linsat/saturation.hpp"

namespace linsat {

// Outcome of an exhaustive optimum search. `exhausted` is true iff the
// search space was fully covered within budget; a partial result keeps the
// best value seen (a valid one-sided bound) and is never silently truncated.
struct search_result {
    std::optional<int> optimum;
    std::optional<linear_hypergraph> witness;
    std::uint64_t explored = 0;
    bool exhausted = false;
};

// sat_k^lin(n, Berge-C_t): minimum edge count of a linear Berge-C_t-saturated
// hypergraph on n vertices. Iterates edge count upward, testing every
// enumerated C_t-free class for saturation; the first hit is the optimum and
// within a level the canonically least saturated class is reported.
inline search_result brute_force_sat(int n, int k, int t, const search_budget& budget = {},
                                     int workers = 1) {
    if (n < 0 || k < 3) throw error("brute_force_sat requires n >= 0 and k >= 3");
    if (t < 3) throw bad_length_error("cycle length must be at least 3");
    search_result result;
    detail::budget_tracker tracker(budget);
    std::vector<detail::class_entry> level;
    {
        linear_hypergraph empty = linear_hypergraph::build(n, k, {});
        level.push_back({compute_canonical_form(empty), std::move(empty)});
    }
    const int cap = max_possible_edges(n, k);
    try {
        for (int m = 0; m <= cap && !level.empty(); ++m) {
            for (const auto& entry : level) {
                ++result.explored;
                if (is_saturated(entry.rep, t).verdict == saturation_verdict::saturated) {
                    result.optimum = m;
                    result.witness = entry.rep;
                    result.exhausted = true;
                    result.explored += tracker.nodes();
                    return result;
                }
            }
            level = detail::augment_level(level, t, tracker, workers);
        }
    } catch (const budget_exceeded_error&) {
        result.explored += tracker.nodes();
        return result; // exhausted stays false
    }
    // unreachable for n >= k: a level with no saturated class has a slack
    // edge somewhere, so the next level is nonempty
    result.exhausted = true;
    result.explored += tracker.nodes();
    return result;
}

// ex_k^lin(n, Berge-C_t) in the Berge-C_t-free reading: the maximum edge
// count over C_t-free linear hypergraphs on n vertices. Every edge-maximal
// witness is saturated-or-extendable, so for the monotone forbidden family
// this equals the maximum over saturated hypergraphs.
inline search_result brute_force_ex(int n, int k, int t, const search_budget& budget = {},
                                    int workers = 1) {
    if (n < 0 || k < 3) throw error("brute_force_ex requires n >= 0 and k >= 3");
    if (t < 3) throw bad_length_error("cycle length must be at least 3");
    search_result result;
    detail::budget_tracker tracker(budget);
    std::vector<detail::class_entry> level;
    {
        linear_hypergraph empty = linear_hypergraph::build(n, k, {});
        level.push_back({compute_canonical_form(empty), std::move(empty)});
    }
    const int cap = max_possible_edges(n, k);
    try {
        for (int m = 0; m <= cap; ++m) {
            if (level.empty()) break;
            result.optimum = m;
            result.witness = level.front().rep;
            result.explored = static_cast<std::uint64_t>(level.size());
            if (m == cap) break;
            level = detail::augment_level(level, t, tracker, workers);
        }
        result.exhausted = true;
    } catch (const budget_exceeded_error&) {
        // keep the deepest fully enumerated level as a lower bound
    }
    result.explored += tracker.nodes();
    return result;
}

} // namespace linsat
