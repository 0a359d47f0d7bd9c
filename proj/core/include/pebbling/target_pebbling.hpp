#pragma once

#include <utility>
#include <vector>

#include "pebbling/hull.hpp"
#include "pebbling/pebbling_fn.hpp"
#include "pebbling/pi_result.hpp"
#include "pebbling/tree.hpp"

namespace pebbling {

// Minimal stack at v solving D: sum over u of D(u) * 2^dist(v,u).
Count alpha(const Tree& tree, VertexId v, const PebblingFn& d);

// Candidate sizes f_1..f_t for a path instance, one per target copy.
// f_j = (alpha(v_1, first j copies) - 1) + (alpha(v_n, copies j..t) - 1).
// The increment f_h - f_{h-1} equals 2^(i_h - 1) - 2^(n - i_{h-1}), so the
// sequence is convex: it strictly falls while i_{h-1} + i_h < n + 1, is
// flat exactly there, and strictly rises past it. Hence max_k f_k is
// attained at an endpoint.
struct FSequence {
    int n = 0;
    std::vector<int> indices;  // 1-based target positions with multiplicity, sorted
    std::vector<Count> f;

    Count increment_formula(int h) const;  // expected f[h] - f[h-1], h >= 1 (0-based)
    bool is_valley_unimodal() const;
    bool matches_increment_formula() const;
};

// pi(P_n, D) = max{f_1, f_t} + 1, with the realizing two-stack witness.
std::pair<PiResult, FSequence> path_pi(int n, const PebblingFn& d);

enum class CandidateScope {
    // Anchor a candidate at every hull vertex whose hanging subtree can
    // carry pebbles. Complete (verified against the oracle).
    HullVertices,
    // Anchor only at hull leaves. Known to be incomplete (a tall subtree
    // hanging off an interior hull vertex can dominate every hull-leaf
    // candidate); kept for falsification experiments.
    HullLeavesOnly,
};

struct TreePiOptions {
    CandidateScope scope = CandidateScope::HullVertices;
    // Mutation switch for fault-injection checks: drop the dead-weight
    // completion on non-dominant hanging subtrees.
    bool include_dead_weight = true;
};

// pi(T, D) in O(s(D) * n) tree operations. For each candidate site z
// (a hull vertex): a Chung configuration on the hanging subtree B_z with
// demand multiplicity d'_z = alpha(z, D), plus the dead weight of every
// other hanging subtree. pi = 1 + max candidate size.
PiResult tree_pi(const Tree& tree, const PebblingFn& d, const TreePiOptions& options = {});

// pi_{|D|}(T) - s(D) + 1 - pi(T, D); nonnegative on every tree.
Count strong_target_slack(const Tree& tree, const PebblingFn& d);

// max{n, 2^diam} <= pi_1(T) <= (n - diam) * (2^diam - 1) + 1.
std::pair<Count, Count> basic_bounds(const Tree& tree);

}  // namespace pebbling
