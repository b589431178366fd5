#pragma once

#include <algorithm>
#include <optional>
#include <utility>
#include <vector>

#include "linsat/berge.hpp"
#include "linsat/candidates.hpp"
#include "linsat/hypergraph.hpp"

namespace linsat {

enum class saturation_verdict { saturated, contains_forbidden, not_saturated };

inline const char* to_string(saturation_verdict v) {
    switch (v) {
    case saturation_verdict::saturated: return "saturated";
    case saturation_verdict::contains_forbidden: return "contains_forbidden";
    case saturation_verdict::not_saturated: return "not_saturated";
    }
    return "?";
}

// Verdict plus certificates. Exactly the fields implied by the verdict are
// populated: a violating cycle, the least non-triggering candidate edge, or
// (on request) one cycle certificate per candidate edge.
struct saturation_report {
    saturation_verdict verdict;
    int n = 0;
    int k = 0;
    int t = 0;
    int edge_count = 0;
    std::optional<berge_cycle_witness> forbidden_witness;
    std::optional<hyperedge> slack_edge;
    std::optional<std::vector<std::pair<hyperedge, berge_cycle_witness>>> certificates;
};

struct freeness_result {
    bool free;
    std::optional<berge_cycle_witness> witness;
};

inline freeness_result is_free(const linear_hypergraph& h, int t) {
    auto w = find_berge_cycle(h, t);
    if (w) return {false, std::move(w)};
    return {true, std::nullopt};
}

// Linear Berge-C_t saturation: H is C_t-free and every linear-preserving
// k-set addition creates a Berge-C_t. The per-candidate search is anchored at
// the added edge: H is C_t-free, so any new cycle must pass through it.
// Candidates are scanned in ascending order, so the reported slack edge is
// the lexicographic minimum among failures. An H with no candidates at all is
// vacuously saturated.
inline saturation_report is_saturated(const linear_hypergraph& h, int t,
                                      bool collect_certificates = false) {
    if (t < 3) throw bad_length_error("cycle length must be at least 3, got " + std::to_string(t));
    saturation_report report;
    report.n = h.n();
    report.k = h.k();
    report.t = t;
    report.edge_count = h.edge_count();

    auto free = is_free(h, t);
    if (!free.free) {
        report.verdict = saturation_verdict::contains_forbidden;
        report.forbidden_witness = std::move(free.witness);
        return report;
    }

    std::vector<std::pair<hyperedge, berge_cycle_witness>> certificates;
    bool all_trigger = true;
    for_each_candidate(h, [&](const hyperedge& e) {
        linear_hypergraph extended = add_edge(h, e);
        const auto& es = extended.edges();
        int idx = static_cast<int>(std::lower_bound(es.begin(), es.end(), e) - es.begin());
        auto cycle = find_berge_cycle_through(extended, t, idx);
        if (!cycle) {
            report.slack_edge = e;
            all_trigger = false;
            return false;
        }
        if (collect_certificates) certificates.emplace_back(e, std::move(*cycle));
        return true;
    });

    if (!all_trigger) {
        report.verdict = saturation_verdict::not_saturated;
        return report;
    }
    report.verdict = saturation_verdict::saturated;
    if (collect_certificates) report.certificates = std::move(certificates);
    return report;
}

struct component_stats {
    int n_vertices = 0;
    int edge_count = 0;
    int min_degree = 0;
};

struct component_census_result {
    int count = 0;
    std::vector<component_stats> per_component;
};

// Component count and the per-component numbers the saturation bounds talk
// about: vertex count, edge count, minimum hypergraph degree.
inline component_census_result component_census(const linear_hypergraph& h) {
    component_census_result out;
    for (const auto& comp : components(h)) {
        component_stats s;
        s.n_vertices = comp.n();
        s.edge_count = comp.edge_count();
        int dmin = comp.n() > 0 ? comp.degree(comp.vertices().front()) : 0;
        for (vertex_t v : comp.vertices()) dmin = std::min(dmin, comp.degree(v));
        s.min_degree = comp.n() > 0 ? dmin : 0;
        out.per_component.push_back(s);
    }
    out.count = static_cast<int>(out.per_component.size());
    return out;
}

} // namespace linsat
