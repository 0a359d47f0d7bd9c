#pragma once

#include <vector>

#include "pebbling/pebbling_fn.hpp"
#include "pebbling/tree.hpp"

namespace pebbling {

// Convex hull T(D) of a target: the smallest subtree containing supp(D),
// together with the hanging subtree B_z attached at each hull vertex z
// (the components of T - z disjoint from the hull, plus z itself).
struct HullDecomposition {
    std::vector<char> in_hull;              // indexed by vertex id
    std::vector<VertexId> hull_vertices;    // ascending id order
    std::vector<VertexId> hull_leaves;      // leaves of the hull subtree
    std::vector<VertexId> anchor;           // nearest hull vertex, per vertex
    std::vector<std::vector<VertexId>> hanging;  // per vertex: B_z minus z (empty off-hull)

    bool is_hull_vertex(VertexId v) const { return in_hull[v] != 0; }
    bool hanging_trivial(VertexId z) const { return hanging[z].empty(); }

    // Membership mask for B_z (z plus its hanging vertices).
    std::vector<char> hanging_mask(VertexId z) const;
};

// Computed by iteratively pruning leaves outside supp(D); deterministic and
// independent of edge input order. Throws EmptyTargetError when |d| = 0.
HullDecomposition convex_hull(const Tree& tree, const PebblingFn& d);

}  // namespace pebbling
