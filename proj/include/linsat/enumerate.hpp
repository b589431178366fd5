#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <optional>
#include <thread>
#include <vector>

#include "linsat/berge.hpp"
#include "linsat/candidates.hpp"
#include "linsat/canonical.hpp"
#include "linsat/hypergraph.hpp"

namespace linsat {

// Wall-clock plus node-count caps. Searches charge one node per candidate
// child examined; exceeding either cap aborts with budget_exceeded_error and
// callers report partial results as such, never silently truncated.
struct search_budget {
    std::uint64_t max_nodes = 0; // 0 = unlimited
    double max_seconds = 0.0;    // 0 = unlimited
};

namespace detail {

class budget_tracker {
public:
    explicit budget_tracker(const search_budget& b)
        : max_nodes_(b.max_nodes),
          deadline_(b.max_seconds > 0
                        ? std::optional(std::chrono::steady_clock::now() +
                                        std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                                            std::chrono::duration<double>(b.max_seconds)))
                        : std::nullopt) {}

    // returns false once the budget is exhausted
    bool charge(std::uint64_t count = 1) {
        std::uint64_t seen = nodes_.fetch_add(count, std::memory_order_relaxed) + count;
        if (max_nodes_ && seen > max_nodes_) exceeded_.store(true, std::memory_order_relaxed);
        if (deadline_ && (seen & 0xff) == 0 &&
            std::chrono::steady_clock::now() > *deadline_)
            exceeded_.store(true, std::memory_order_relaxed);
        return !exceeded_.load(std::memory_order_relaxed);
    }

    bool exceeded() const { return exceeded_.load(std::memory_order_relaxed); }
    std::uint64_t nodes() const { return nodes_.load(std::memory_order_relaxed); }

private:
    std::uint64_t max_nodes_;
    std::optional<std::chrono::steady_clock::time_point> deadline_;
    std::atomic<std::uint64_t> nodes_{0};
    std::atomic<bool> exceeded_{false};
};

struct class_entry {
    canonical_form form;
    linear_hypergraph rep;
};

// One augmentation step: all isomorphism classes obtainable from the parents
// by one linear-preserving edge addition (optionally Berge-C_t-free), each
// exactly once. A child is accepted iff its added edge lies in the same
// automorphism orbit as the canonical deletion edge, so each class is built
// from its canonical parent only; the final sort makes the output identical
// for any worker count.
inline std::vector<class_entry> augment_level(const std::vector<class_entry>& parents,
                                              std::optional<int> forbidden_cycle,
                                              budget_tracker& budget, int workers) {
    auto process = [&](std::size_t begin, std::size_t end, std::vector<class_entry>& out) {
        for (std::size_t p = begin; p < end; ++p) {
            const linear_hypergraph& parent = parents[p].rep;
            std::vector<canonical_form> seen; // children of this parent
            for_each_candidate(parent, [&](const hyperedge& e) {
                if (!budget.charge()) return false;
                linear_hypergraph child = add_edge(parent, e);
                const auto& es = child.edges();
                int idx = static_cast<int>(std::lower_bound(es.begin(), es.end(), e) - es.begin());
                if (forbidden_cycle && find_berge_cycle_through(child, *forbidden_cycle, idx))
                    return true;
                auto info = compute_canon(child);
                if (info.edge_orbit[static_cast<std::size_t>(idx)] !=
                    info.edge_orbit[static_cast<std::size_t>(info.deletion_edge)])
                    return true;
                if (std::find(seen.begin(), seen.end(), info.form) != seen.end()) return true;
                seen.push_back(info.form);
                out.push_back({std::move(info.form), std::move(child)});
                return true;
            });
            if (budget.exceeded()) return;
        }
    };

    std::vector<class_entry> merged;
    if (workers <= 1 || parents.size() < 2) {
        process(0, parents.size(), merged);
    } else {
        int nw = std::min<int>(workers, static_cast<int>(parents.size()));
        std::vector<std::vector<class_entry>> results(static_cast<std::size_t>(nw));
        std::vector<std::thread> threads;
        std::size_t chunk = (parents.size() + static_cast<std::size_t>(nw) - 1) / static_cast<std::size_t>(nw);
        for (int w = 0; w < nw; ++w) {
            std::size_t begin = static_cast<std::size_t>(w) * chunk;
            std::size_t end = std::min(parents.size(), begin + chunk);
            threads.emplace_back([&, begin, end, w] { process(begin, end, results[static_cast<std::size_t>(w)]); });
        }
        for (auto& th : threads) th.join();
        for (auto& r : results)
            for (auto& e : r) merged.push_back(std::move(e));
    }
    if (budget.exceeded()) throw budget_exceeded_error("search budget exceeded");

    std::sort(merged.begin(), merged.end(),
              [](const class_entry& a, const class_entry& b) { return a.form < b.form; });
    merged.erase(std::unique(merged.begin(), merged.end(),
                             [](const class_entry& a, const class_entry& b) {
                                 return a.form == b.form;
                             }),
                 merged.end());
    return merged;
}

} // namespace detail

// Streams every isomorphism class of linear k-uniform hypergraphs on n
// vertices with at most max_edges edges (Berge-C_t-free when t is given),
// exactly once, in increasing edge count and canonical order within a level.
// visit(rep, level) -> bool; returning false stops the stream early.
template <typename Visit>
void enumerate_classes(int n, int k, std::optional<int> forbidden_cycle, int max_edges,
                       Visit&& visit, const search_budget& budget = {}, int workers = 1) {
    if (n < 0 || k < 2) throw error("enumerate requires n >= 0 and k >= 2");
    if (forbidden_cycle && *forbidden_cycle < 3)
        throw bad_length_error("cycle length must be at least 3");
    detail::budget_tracker tracker(budget);
    std::vector<detail::class_entry> level;
    linear_hypergraph empty = linear_hypergraph::build(n, k, {});
    level.push_back({compute_canonical_form(empty), std::move(empty)});
    int m = 0;
    while (true) {
        for (const auto& entry : level)
            if (!visit(entry.rep, m)) return;
        if (m >= max_edges || level.empty()) return;
        level = detail::augment_level(level, forbidden_cycle, tracker, workers);
        ++m;
    }
}

// Berge-C_t-free classes only.
template <typename Visit>
void enumerate_free(int n, int k, int t, int max_edges, Visit&& visit,
                    const search_budget& budget = {}, int workers = 1) {
    enumerate_classes(n, k, t, max_edges, std::forward<Visit>(visit), budget, workers);
}

// No freeness filter: every linear class.
template <typename Visit>
void enumerate_linear(int n, int k, int max_edges, Visit&& visit,
                      const search_budget& budget = {}, int workers = 1) {
    enumerate_classes(n, k, std::nullopt, max_edges, std::forward<Visit>(visit), budget, workers);
}

// Degree bound: every vertex lies in at most (n-1)/(k-1) edges, so no linear
// k-uniform hypergraph on n vertices exceeds this edge count.
inline int max_possible_edges(int n, int k) {
    if (n < k) return 0;
    long long per_vertex = (n - 1) / (k - 1);
    return static_cast<int>(per_vertex * n / k);
}

} // namespace linsat
