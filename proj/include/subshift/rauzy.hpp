#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "subshift/word.hpp"

namespace subshift {

// One edge of a Rauzy graph: the length-(n+1) factor `label`, drawn from its
// length-n prefix to its length-n suffix.
struct RauzyEdge {
    Word source;
    Word target;
    Word label;

    friend bool operator==(const RauzyEdge&, const RauzyEdge&) = default;
};

// The order-n Rauzy graph: vertices are the length-n factors, edges the
// length-(n+1) factors. Immutable once built; vertices sorted
// lexicographically, edges sorted by label.
struct RauzyGraph {
    std::size_t order = 0;
    std::vector<Word> vertices;
    std::vector<RauzyEdge> edges;
};

RauzyGraph build_rauzy(std::size_t order);

// Vertices with at least two out-edges (right-branching: exactly the
// right-special words) resp. at least two in-edges (left-branching), sorted.
struct BranchReport {
    std::vector<Word> right_branching;
    std::vector<Word> left_branching;
};

BranchReport branch_vertices(const RauzyGraph& g);

/// DOT rendering: every vertex declared (branch vertices as doublecircle),
/// every edge labeled with its length-(n+1) factor. Byte-deterministic.
std::string to_dot(const RauzyGraph& g);

/// One line: `order n: V=<C(n)> E=<C(n+1)> right_branch=<r> left_branch=<l>`.
std::string rauzy_stats(const RauzyGraph& g);

/// Loop structure for visual comparison with hand-drawn pictures: the arcs
/// (branch-free directed paths) between branch vertices with their interior
/// vertex counts, plus connectivity. Reported, not asserted.
std::string loop_summary(const RauzyGraph& g);

}  // namespace subshift
