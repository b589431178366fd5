#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "linsat/bounds.hpp"
#include "linsat/constructions.hpp"
#include "linsat/search.hpp"

namespace linsat {

enum class theorem_tag { thm1_2, thm1_3, thm1_4, thm1_5 };

inline const char* to_string(theorem_tag t) {
    switch (t) {
    case theorem_tag::thm1_2: return "thm1.2";
    case theorem_tag::thm1_3: return "thm1.3";
    case theorem_tag::thm1_4: return "thm1.4";
    case theorem_tag::thm1_5: return "thm1.5";
    }
    return "?";
}

struct audit_instance {
    std::string name;
    bool pass = false;
    bool skipped = false; // budget ran out; reported, never silently dropped
    std::string detail;
};

struct audit_report {
    std::string theorem;
    std::vector<audit_instance> instances;

    bool all_pass() const {
        for (const auto& i : instances)
            if (!i.skipped && !i.pass) return false;
        return true;
    }
    bool any_skipped() const {
        for (const auto& i : instances)
            if (i.skipped) return true;
        return false;
    }
};

struct audit_window {
    int n_min = 6;
    int n_max = 8;
    int k = 3;
    int t = 4;
};

namespace detail {

// Theorem 1.5 checks for one disconnected saturated witness: exactly two
// components, each meeting its per-component bound, total meeting 2n/3 - 4.
inline audit_instance check_disconnected_witness(const linear_hypergraph& h,
                                                 const std::string& name) {
    audit_instance inst;
    inst.name = name;
    std::ostringstream detail;
    auto census = component_census(h);
    bool ok = census.count == 2;
    detail << "components=" << census.count;
    for (const auto& comp : census.per_component) {
        auto b = component_lower_c4(comp.n_vertices, comp.min_degree);
        bool comp_ok = comp.edge_count >= b.integer_bound;
        detail << " [n'=" << comp.n_vertices << " delta=" << comp.min_degree
               << " e=" << comp.edge_count << " >= " << b.integer_bound
               << (comp_ok ? "" : " VIOLATED") << "]";
        ok = ok && comp_ok;
    }
    if (h.n() >= 6) {
        auto total = disconnected_c4_lower(h.n());
        bool total_ok = h.edge_count() >= total.integer_bound;
        detail << " total " << h.edge_count() << " >= " << total.integer_bound
               << (total_ok ? "" : " VIOLATED");
        ok = ok && total_ok;
    }
    inst.pass = ok;
    inst.detail = detail.str();
    return inst;
}

} // namespace detail

inline audit_report theorem_audit(theorem_tag tag, const audit_window& window,
                                  const search_budget& budget = {}, int workers = 1) {
    audit_report report;
    report.theorem = to_string(tag);

    auto add = [&](audit_instance i) { report.instances.push_back(std::move(i)); };

    switch (tag) {
    case theorem_tag::thm1_2: {
        for (int n = std::max(window.k, window.n_min); n <= window.n_max; ++n) {
            audit_instance inst;
            inst.name = "sat(" + std::to_string(n) + "," + std::to_string(window.k) + "," +
                        std::to_string(window.t) + ")";
            auto res = brute_force_sat(n, window.k, window.t, budget, workers);
            if (!res.exhausted) {
                inst.skipped = true;
                inst.detail = "budget exceeded";
            } else {
                long long lower = sat_lower(n, window.k, window.t).integer_bound;
                inst.pass = *res.optimum >= lower;
                inst.detail = "optimum " + std::to_string(*res.optimum) + " >= " +
                              std::to_string(lower);
            }
            add(std::move(inst));
        }
        break;
    }
    case theorem_tag::thm1_3: {
        for (int n = std::max(6, window.n_min); n <= window.n_max; ++n) {
            audit_instance inst;
            inst.name = "sat(" + std::to_string(n) + "," + std::to_string(window.k) + ",3)";
            auto res = brute_force_sat(n, window.k, 3, budget, workers);
            if (!res.exhausted) {
                inst.skipped = true;
                inst.detail = "budget exceeded";
            } else {
                long long expect = sat_c3_exact(n, window.k).integer_bound;
                inst.pass = *res.optimum == expect;
                inst.detail = "optimum " + std::to_string(*res.optimum) + " == " +
                              std::to_string(expect);
            }
            add(std::move(inst));
        }
        break;
    }
    case theorem_tag::thm1_4: {
        for (int n = std::max(1, window.n_min); n <= window.n_max; ++n) {
            audit_instance inst;
            inst.name = "c4_family(" + std::to_string(n) + ")";
            auto g = c4_family(n);
            long long expect = sat_c4_upper(n).integer_bound;
            bool edges_ok = g.edge_count() == expect;
            bool sat_ok = is_saturated(g, 4).verdict == saturation_verdict::saturated;
            inst.pass = edges_ok && sat_ok;
            inst.detail = "edges " + std::to_string(g.edge_count()) + (edges_ok ? " == " : " != ") +
                          std::to_string(expect) + (sat_ok ? ", saturated" : ", NOT saturated");
            add(std::move(inst));
        }
        break;
    }
    case theorem_tag::thm1_5: {
        // every disconnected saturated class found by exhaustive enumeration
        bool found_witness = false;
        for (int n = std::max(6, window.n_min); n <= window.n_max; ++n) {
            try {
                enumerate_free(n, 3, 4, max_possible_edges(n, 3),
                               [&](const linear_hypergraph& rep, int) {
                                   if (component_census(rep).count < 2) return true;
                                   if (is_saturated(rep, 4).verdict !=
                                       saturation_verdict::saturated)
                                       return true;
                                   found_witness = true;
                                   add(detail::check_disconnected_witness(
                                       rep, "enumerated n=" + std::to_string(n) + " m=" +
                                               std::to_string(rep.edge_count())));
                                   return true;
                               },
                               budget, workers);
            } catch (const budget_exceeded_error&) {
                add({"enumeration n=" + std::to_string(n), false, true, "budget exceeded"});
            }
        }
        // constructed witnesses: the disjoint-residue family members in range
        for (int n = std::max(6, window.n_min); n <= window.n_max; ++n) {
            int i = n - 18 * ((n - 1) / 18);
            if (!gadget_is_disjoint_residue(i)) continue;
            found_witness = true;
            add(detail::check_disconnected_witness(c4_family(n),
                                                   "c4_family(" + std::to_string(n) + ")"));
        }
        if (!found_witness)
            // fall back to a disjoint union of two Berge-P_3-connected
            // C_4-free pieces: two copies of T' (the n=14 family member)
            add(detail::check_disconnected_witness(c4_family(14), "constructed 2xT'"));
        break;
    }
    }
    return report;
}

} // namespace linsat
