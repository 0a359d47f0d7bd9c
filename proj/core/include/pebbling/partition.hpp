#pragma once

#include <stdexcept>
#include <vector>

#include "pebbling/pebbling_fn.hpp"
#include "pebbling/pi_result.hpp"
#include "pebbling/tree.hpp"

namespace pebbling {

struct DegeneratePartitionError : std::runtime_error {
    DegeneratePartitionError()
        : std::runtime_error("single-vertex tree has no path partition") {}
};

// Maximum path partition of a rooted tree: edge-disjoint paths covering
// E(T), chosen greedily longest-first. paths[0] starts at the root; every
// later path has exactly one endpoint on an earlier path. far_leaf[i] is
// the endpoint of paths[i] away from the already-covered part.
struct PathPartition {
    VertexId root;
    std::vector<std::vector<VertexId>> paths;  // vertex sequences, attach point first
    std::vector<int> lengths;                  // edge counts, one per path
    std::vector<VertexId> far_leaves;

    int path_count() const { return static_cast<int>(paths.size()); }
};

// Greedy construction restricted to the masked vertex set (mask empty =
// whole tree). Ties between equal-length candidate paths go to the
// smallest far-endpoint id. Single masked vertex yields an empty partition.
PathPartition max_path_partition(const Tree& tree, VertexId root,
                                 const std::vector<char>& mask = {});

struct ChungConfiguration {
    PebblingFn config;
    PathPartition partition;
    Count t;
};

// t*2^{l_1} - 1 pebbles on the far leaf of the longest path, 2^{l_i} - 1 on
// every other far leaf. Throws DegeneratePartitionError on an empty
// partition; callers model that case as t - 1 pebbles on the root itself.
ChungConfiguration chung_configuration(const PathPartition& partition, const Count& t);

// |Chung configuration| without materializing it.
Count chung_size(const PathPartition& partition, const Count& t);

// pi_t(T, r): size of the Chung configuration plus one. The witness is the
// Chung configuration itself (t - 1 pebbles on r for the single-vertex tree).
PiResult pi_single_target(const Tree& tree, VertexId root, const Count& t);

struct PiTFoldResult {
    Count value;
    VertexId argmax_root;           // smallest id among maximizing roots
    std::vector<Count> per_root;
};

// pi_t(T) = max over roots of pi_t(T, r); O(n^2) overall.
PiTFoldResult pi_t_fold(const Tree& tree, const Count& t);

// Maximum size of a configuration on the hanging subtree B_z (given by
// mask) that cannot deliver a single pebble to z; 0 for trivial B_z.
Count dead_weight(const Tree& tree, const std::vector<char>& mask, VertexId z);

// Validity helpers used by tests: edge-disjointness, edge coverage and the
// attachment rule.
bool partition_is_valid(const Tree& tree, const PathPartition& partition,
                        const std::vector<char>& mask = {});

}  // namespace pebbling
