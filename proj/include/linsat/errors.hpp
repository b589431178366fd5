#pragma once

#include <stdexcept>
#include <string>

namespace linsat {

struct error : std::runtime_error {
    explicit error(const std::string& what) : std::runtime_error(what) {}
};

// An edge whose size differs from the declared uniformity k.
struct not_uniform_error : error {
    using error::error;
};

// Two hyperedges sharing two or more vertices.
struct not_linear_error : error {
    using error::error;
};

// An edge or query referencing a label outside the vertex set.
struct unknown_vertex_error : error {
    using error::error;
};

// identify(): non-anchor labels of the two parts collide.
struct label_clash_error : error {
    using error::error;
};

// identify(): the anchor vertex is missing from one side.
struct missing_anchor_error : error {
    using error::error;
};

// Cycle/path length outside the operation's domain.
struct bad_length_error : error {
    using error::error;
};

// Construction parameters below the minimum size.
struct too_small_error : error {
    using error::error;
};

struct bad_residue_error : error {
    using error::error;
};

// Closed-form bound queried outside its theorem's domain.
struct out_of_domain_error : error {
    using error::error;
};

struct budget_exceeded_error : error {
    using error::error;
};

struct parse_error : error {
    int line;
    parse_error(int line_, const std::string& what)
        : error("line " + std::to_string(line_) + ": " + what), line(line_) {}
};

} // namespace linsat
