#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "pebbling/pebbling_fn.hpp"
#include "pebbling/tree.hpp"

namespace pebbling {

struct CapExceededError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class SupportUniverse { AllVertices, LeavesOnly };

struct OracleCaps {
    int max_n = 8;
    std::uint64_t max_nodes = 500'000'000;  // search-tree nodes
    std::size_t max_extremals = 100'000;
};

// Ground truth for pi: pi itself plus every maximum-size D-unsolvable
// configuration over the chosen support universe.
struct ExtremalReport {
    Count pi;
    std::vector<PebblingFn> extremals;
    SupportUniverse support;
    std::uint64_t nodes_explored = 0;
    bool extremals_truncated = false;
};

// Exact pi by exhaustive search over configurations: depth-first count
// assignment per vertex with two sound prunes (a solvable partial
// configuration stays solvable under any extension; an optimistic size
// bound against the best unsolvable size found). Per-vertex counts are
// capped at the minimal solving stack, found by solver probes.
ExtremalReport brute_pi(const Tree& tree, const PebblingFn& d,
                        SupportUniverse support = SupportUniverse::AllVertices,
                        const OracleCaps& caps = {});

// Theorem check: every D-extremal configuration over all vertices has
// support inside L(T).
bool check_support_theorem(const Tree& tree, const PebblingFn& d,
                           const OracleCaps& caps = {});

// Proposition check: every maximal D-unsolvable configuration contains
// every leaf outside supp(D) in its support.
bool check_observation(const Tree& tree, const PebblingFn& d,
                       const OracleCaps& caps = {});

// All maximal D-unsolvable configurations (any size), support on all vertices.
std::vector<PebblingFn> enumerate_maximal_unsolvable(const Tree& tree, const PebblingFn& d,
                                                     const OracleCaps& caps = {});

// One path partition of the tree achievable by growing from r: an edge
// partition into paths that admits an ordering in which every path has an
// endpoint on the union of its predecessors (the first at r itself).
struct EnumeratedPartition {
    std::vector<std::vector<VertexId>> paths;
    std::vector<int> sorted_lengths;  // descending
};

// Exhaustive enumeration for n <= 10; certifies majorization-maximality of
// the greedy partition.
std::vector<EnumeratedPartition> enumerate_partitions(const Tree& tree, VertexId r);

// a majorizes-or-equals b: both sorted descending with equal sums.
bool majorizes_or_equal(const std::vector<int>& a, const std::vector<int>& b);

// All non-isomorphic trees with exactly n vertices, deduplicated by AHU
// canonical form, in canonical-string order. Deterministic.
std::vector<Tree> tree_catalog(int n);

// Canonical form used by the catalog; equal strings iff isomorphic.
std::string canonical_form(const Tree& tree);

}  // namespace pebbling
