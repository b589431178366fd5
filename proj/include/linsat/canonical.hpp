#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "linsat/hypergraph.hpp"

namespace linsat {

// Label-invariant fingerprint: [n, k, m] followed by the lexicographically
// least relabeled edge list over the support vertices. Equal fingerprints
// mean isomorphic hypergraphs (isolated vertices are interchangeable, so only
// their count enters).
struct canonical_form {
    std::vector<std::uint32_t> data;

    friend bool operator==(const canonical_form& a, const canonical_form& b) {
        return a.data == b.data;
    }
    friend bool operator!=(const canonical_form& a, const canonical_form& b) {
        return !(a == b);
    }
    friend bool operator<(const canonical_form& a, const canonical_form& b) {
        return a.data < b.data;
    }

    std::string to_string() const {
        std::ostringstream os;
        for (std::size_t i = 0; i < data.size(); ++i) {
            if (i) os << '.';
            os << data[i];
        }
        return os.str();
    }
};

namespace detail {

// Individualization-refinement search over the support vertices. Colors are
// refined by incident-edge color profiles; every non-singleton target cell is
// branched in full, so the collected minimal labelings are exactly the coset
// of the automorphism group and canonical choices derived from them are
// orbit-invariant.
struct canon_search {
    int s = 0;                              // support size
    std::vector<std::vector<int>> edges;    // edges as sorted support indices
    std::vector<std::vector<int>> incident; // per support vertex, edge indices

    std::vector<std::uint32_t> best_edges;
    bool have_best = false;
    std::vector<std::vector<int>> minimal_labelings; // support index -> position

    void refine(std::vector<int>& color) const {
        while (true) {
            // signature: own color plus sorted profiles of incident edges
            std::vector<std::vector<int>> sig(static_cast<std::size_t>(s));
            for (int v = 0; v < s; ++v) {
                auto& sg = sig[static_cast<std::size_t>(v)];
                sg.push_back(color[static_cast<std::size_t>(v)]);
                std::vector<std::vector<int>> profiles;
                for (int ei : incident[static_cast<std::size_t>(v)]) {
                    std::vector<int> p;
                    for (int u : edges[static_cast<std::size_t>(ei)])
                        if (u != v) p.push_back(color[static_cast<std::size_t>(u)]);
                    std::sort(p.begin(), p.end());
                    profiles.push_back(std::move(p));
                }
                std::sort(profiles.begin(), profiles.end());
                for (auto& p : profiles)
                    for (int c : p) sg.push_back(c);
                sg.push_back(static_cast<int>(profiles.size()));
            }
            std::vector<std::vector<int>> sorted = sig;
            std::sort(sorted.begin(), sorted.end());
            sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
            std::vector<int> next(static_cast<std::size_t>(s));
            for (int v = 0; v < s; ++v)
                next[static_cast<std::size_t>(v)] = static_cast<int>(
                    std::lower_bound(sorted.begin(), sorted.end(), sig[static_cast<std::size_t>(v)]) -
                    sorted.begin());
            if (next == color) return;
            color = std::move(next);
        }
    }

    std::vector<std::uint32_t> encode(const std::vector<int>& position) const {
        std::vector<std::vector<std::uint32_t>> relabeled;
        relabeled.reserve(edges.size());
        for (const auto& e : edges) {
            std::vector<std::uint32_t> f;
            f.reserve(e.size());
            for (int v : e) f.push_back(static_cast<std::uint32_t>(position[static_cast<std::size_t>(v)]));
            std::sort(f.begin(), f.end());
            relabeled.push_back(std::move(f));
        }
        std::sort(relabeled.begin(), relabeled.end());
        std::vector<std::uint32_t> flat;
        for (const auto& f : relabeled) flat.insert(flat.end(), f.begin(), f.end());
        return flat;
    }

    void search(std::vector<int> color) {
        refine(color);
        int ncolors = s == 0 ? 0 : 1 + *std::max_element(color.begin(), color.end());
        if (ncolors == s) {
            // discrete: color is the labeling
            auto enc = encode(color);
            if (!have_best || enc < best_edges) {
                best_edges = enc;
                have_best = true;
                minimal_labelings.clear();
                minimal_labelings.push_back(color);
            } else if (enc == best_edges) {
                minimal_labelings.push_back(color);
            }
            return;
        }
        // first non-singleton cell
        std::vector<int> cell_size(static_cast<std::size_t>(ncolors), 0);
        for (int v = 0; v < s; ++v) ++cell_size[static_cast<std::size_t>(color[static_cast<std::size_t>(v)])];
        int target = 0;
        while (cell_size[static_cast<std::size_t>(target)] == 1) ++target;
        for (int v = 0; v < s; ++v) {
            if (color[static_cast<std::size_t>(v)] != target) continue;
            std::vector<int> branched(static_cast<std::size_t>(s));
            for (int u = 0; u < s; ++u) {
                int c = color[static_cast<std::size_t>(u)];
                branched[static_cast<std::size_t>(u)] = 2 * c + (u == v ? 0 : (c == target ? 1 : 0));
            }
            search(std::move(branched));
        }
    }
};

struct canon_info {
    canonical_form form;
    std::vector<vertex_t> support;            // ascending original labels
    std::vector<std::vector<int>> labelings;  // minimal: support idx -> position
    std::vector<int> edge_orbit;              // orbit id per edge index of H
    int deletion_edge = -1;                   // orbit-canonical edge to delete
};

inline canon_info compute_canon(const linear_hypergraph& h) {
    canon_info info;
    for (vertex_t v : h.vertices())
        if (h.degree(v) > 0) info.support.push_back(v);
    const int s = static_cast<int>(info.support.size());

    canon_search cs;
    cs.s = s;
    std::map<vertex_t, int> sidx;
    for (int i = 0; i < s; ++i) sidx[info.support[static_cast<std::size_t>(i)]] = i;
    cs.incident.assign(static_cast<std::size_t>(s), {});
    for (int ei = 0; ei < h.edge_count(); ++ei) {
        std::vector<int> e;
        for (vertex_t v : h.edge(ei)) e.push_back(sidx.at(v));
        std::sort(e.begin(), e.end());
        for (int v : e) cs.incident[static_cast<std::size_t>(v)].push_back(ei);
        cs.edges.push_back(std::move(e));
    }

    if (s > 0) cs.search(std::vector<int>(static_cast<std::size_t>(s), 0));

    info.form.data = {static_cast<std::uint32_t>(h.n()), static_cast<std::uint32_t>(h.k()),
                      static_cast<std::uint32_t>(h.edge_count())};
    info.form.data.insert(info.form.data.end(), cs.best_edges.begin(), cs.best_edges.end());
    info.labelings = std::move(cs.minimal_labelings);

    const int m = h.edge_count();
    if (m > 0) {
        // automorphisms: sigma_j^{-1} . sigma_1 for all minimal labelings
        std::vector<int> orbit(static_cast<std::size_t>(m));
        std::iota(orbit.begin(), orbit.end(), 0);
        std::function<int(int)> find = [&](int x) {
            while (orbit[static_cast<std::size_t>(x)] != x) {
                orbit[static_cast<std::size_t>(x)] = orbit[static_cast<std::size_t>(orbit[static_cast<std::size_t>(x)])];
                x = orbit[static_cast<std::size_t>(x)];
            }
            return x;
        };
        auto unite = [&](int a, int b) {
            a = find(a);
            b = find(b);
            if (a != b) orbit[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
        };
        std::map<std::vector<int>, int> edge_lookup;
        for (int ei = 0; ei < m; ++ei) edge_lookup[cs.edges[static_cast<std::size_t>(ei)]] = ei;

        const auto& sigma1 = info.labelings.front();
        for (const auto& sigmaj : info.labelings) {
            std::vector<int> inv_j(static_cast<std::size_t>(s));
            for (int v = 0; v < s; ++v) inv_j[static_cast<std::size_t>(sigmaj[static_cast<std::size_t>(v)])] = v;
            for (int ei = 0; ei < m; ++ei) {
                std::vector<int> image;
                for (int v : cs.edges[static_cast<std::size_t>(ei)])
                    image.push_back(inv_j[static_cast<std::size_t>(sigma1[static_cast<std::size_t>(v)])]);
                std::sort(image.begin(), image.end());
                unite(ei, edge_lookup.at(image));
            }
        }
        info.edge_orbit.resize(static_cast<std::size_t>(m));
        for (int ei = 0; ei < m; ++ei) info.edge_orbit[static_cast<std::size_t>(ei)] = find(ei);

        // the edge mapped by sigma_1 onto the least slot of the canonical
        // encoding; its orbit is a label-invariant choice
        const auto& sigma1ref = info.labelings.front();
        int best = -1;
        std::vector<std::uint32_t> best_img;
        for (int ei = 0; ei < m; ++ei) {
            std::vector<std::uint32_t> img;
            for (int v : cs.edges[static_cast<std::size_t>(ei)])
                img.push_back(static_cast<std::uint32_t>(sigma1ref[static_cast<std::size_t>(v)]));
            std::sort(img.begin(), img.end());
            if (best < 0 || img < best_img) {
                best = ei;
                best_img = std::move(img);
            }
        }
        info.deletion_edge = best;
    }
    return info;
}

} // namespace detail

// Relabel-invariant fingerprint; equal iff isomorphic.
inline canonical_form compute_canonical_form(const linear_hypergraph& h) {
    return detail::compute_canon(h).form;
}

} // namespace linsat
