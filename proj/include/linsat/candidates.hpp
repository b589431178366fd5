#pragma once

#include <optional>
#include <vector>

#include "linsat/hypergraph.hpp"

namespace linsat {

// Lazy lexicographic stream of the k-subsets that can be added to H while
// keeping it linear: every pair of the subset must be uncovered (which also
// excludes existing edges). The candidate set can be combinatorially large,
// so combinations are generated on demand with prefix pruning.
class candidate_stream {
public:
    explicit candidate_stream(const linear_hypergraph& h)
        : h_(&h), verts_(h.vertices()), k_(h.k()) {
        if (static_cast<int>(verts_.size()) < k_) {
            done_ = true;
        } else {
            idx_.assign(static_cast<std::size_t>(k_), 0);
            depth_ = 0;
            idx_[0] = -1;
        }
    }

    std::optional<hyperedge> next() {
        if (done_) return std::nullopt;
        const int n = static_cast<int>(verts_.size());
        while (true) {
            if (depth_ < 0) {
                done_ = true;
                return std::nullopt;
            }
            ++idx_[static_cast<std::size_t>(depth_)];
            if (idx_[static_cast<std::size_t>(depth_)] > n - (k_ - depth_)) {
                --depth_;
                continue;
            }
            vertex_t v = verts_[static_cast<std::size_t>(idx_[static_cast<std::size_t>(depth_)])];
            bool clash = false;
            for (int j = 0; j < depth_; ++j)
                if (h_->pair_covered(verts_[static_cast<std::size_t>(idx_[static_cast<std::size_t>(j)])], v)) {
                    clash = true;
                    break;
                }
            if (clash) continue;
            if (depth_ == k_ - 1) {
                hyperedge e;
                e.reserve(static_cast<std::size_t>(k_));
                for (int j = 0; j < k_; ++j)
                    e.push_back(verts_[static_cast<std::size_t>(idx_[static_cast<std::size_t>(j)])]);
                return e;
            }
            ++depth_;
            idx_[static_cast<std::size_t>(depth_)] = idx_[static_cast<std::size_t>(depth_ - 1)];
        }
    }

private:
    const linear_hypergraph* h_;
    std::vector<vertex_t> verts_;
    int k_;
    std::vector<int> idx_;
    int depth_ = -1;
    bool done_ = false;
};

// Visits candidates in ascending order until fn returns false.
template <typename Fn>
void for_each_candidate(const linear_hypergraph& h, Fn&& fn) {
    candidate_stream stream(h);
    while (auto e = stream.next())
        if (!fn(*e)) return;
}

// Materialized candidate list; intended for small instances and tests.
inline std::vector<hyperedge> candidate_edges(const linear_hypergraph& h) {
    std::vector<hyperedge> out;
    for_each_candidate(h, [&](const hyperedge& e) {
        out.push_back(e);
        return true;
    });
    return out;
}

} // namespace linsat
