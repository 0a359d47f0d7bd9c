#pragma once

#include <vector>

#include "pebbling/pebbling_fn.hpp"
#include "pebbling/tree.hpp"

namespace pebbling {

// One candidate extremal configuration, anchored at a hull vertex. The
// dominant stack sits on superstack_leaf at depth stack_depth below the
// hull vertex; alpha_at_site is the pebble demand funneled through the
// site (d'_i in the calculation of f(T,D)).
struct CandidateRecord {
    VertexId site;
    VertexId superstack_leaf;
    int stack_depth;
    Count alpha_at_site;
    Count size;
};

// pi plus the extremal certificate: a D-unsolvable configuration of size
// pi - 1 whose dominant stack is one pebble shy of solving D alone.
struct PiResult {
    Count pi;
    PebblingFn witness;
    VertexId superstack_leaf;
    std::vector<CandidateRecord> candidates;
};

}  // namespace pebbling
