#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "pebbling/pebbling_fn.hpp"
#include "pebbling/tree.hpp"

namespace pebbling {

struct AttributionMissingError : std::runtime_error {
    AttributionMissingError()
        : std::runtime_error("solution carries no per-target step attribution") {}
};

// One pebbling step: remove two pebbles from `from`, place one on `to`.
struct Move {
    VertexId from;
    VertexId to;
    bool operator==(const Move&) const = default;
};

// A (C,D)-solution: ordered moves, the sub-configuration of C consumed,
// and optionally a per-move attribution to target copies (filled by the
// search; absent on externally loaded solutions).
struct Solution {
    std::vector<Move> moves;
    PebblingFn used_pebbles;
    // attribution[i] indexes target_copies; target_copies lists (vertex, copy#)
    // in vertex-id order.
    std::vector<int> attribution;
    std::vector<std::pair<VertexId, int>> target_copies;

    bool has_attribution() const { return attribution.size() == moves.size(); }
};

enum class Verdict { Solvable, Unsolvable, BudgetExceeded };

struct SearchBudget {
    std::uint64_t max_states = 10'000'000;
    std::uint64_t max_memo_entries = 10'000'000;
};

struct SolveResult {
    Verdict verdict;
    std::optional<Solution> solution;
    std::uint64_t states_explored = 0;
};

// Maximum pebbles placeable on r: leaf-to-root halving over the tree
// rooted at r. Exact for a single target because minimal solutions on
// trees are greedy.
Count greedy_collect(const Tree& tree, const PebblingFn& c, VertexId r);

// Exact linear-time solvability on trees via edge-flow feasibility: there
// is a solution iff per-edge one-directional move counts exist with every
// final count >= demand. Any feasible flow is sequenceable by executing
// vertices in topological order of the edge orientation. Used as the
// oracle's inner engine; cross-validated against is_solvable in tests.
bool flow_solvable(const Tree& tree, const PebblingFn& c, const PebblingFn& d);

// Exact verdict by memoized depth-first search over configurations.
// Sound pruning only: success when the configuration dominates d; a
// weight-function bound (sum of c(v) * 2^-dist(u,v) never increases, for
// any fixed u); a greedy_collect fast path for single-vertex targets.
// BudgetExceeded is a distinct verdict, never folded into Unsolvable.
SolveResult is_solvable(const Tree& tree, const PebblingFn& c, const PebblingFn& d,
                        const SearchBudget& budget = {});

struct MaximalityResult {
    Verdict status;   // BudgetExceeded propagates from any sub-query
    bool value = false;
};

// True iff c is D-unsolvable and c plus one pebble on any vertex is
// D-solvable.
MaximalityResult is_maximal_unsolvable(const Tree& tree, const PebblingFn& c,
                                       const PebblingFn& d,
                                       const SearchBudget& budget = {});

// Greedily drops removable moves until none remain; the result replays
// validly and its move digraph is acyclic.
Solution minimalize(const Tree& tree, const PebblingFn& c, const PebblingFn& d,
                    const Solution& s);

struct SolutionStats {
    std::vector<VertexId> sources;  // supp(used_pebbles)
    int merge_number = 0;           // sum over vertices of (distinct in-neighbors - 1)
    bool greedy_per_target = false; // every attributed step decreases distance to its target
};

// Requires attribution; throws AttributionMissingError otherwise.
SolutionStats solution_stats(const Tree& tree, const PebblingFn& c, const PebblingFn& d,
                             const Solution& s);

// Replays moves from c; returns the final configuration, or nullopt if a
// move is illegal (fewer than two pebbles, or non-adjacent endpoints).
std::optional<PebblingFn> replay_solution(const Tree& tree, const PebblingFn& c,
                                          const Solution& s);

// Replays and checks the final configuration dominates d.
bool solution_is_valid(const Tree& tree, const PebblingFn& c, const PebblingFn& d,
                       const Solution& s);

// Digraph of distinct arcs has no directed cycle (on a tree: no edge used
// in both directions).
bool solution_digraph_acyclic(const Solution& s);

// From the move multiset, derive used pebbles and a per-target-copy
// attribution by integral flow decomposition (targets in vertex-id order).
void attribute_solution(const Tree& tree, const PebblingFn& c, const PebblingFn& d,
                        Solution& s);

}  // namespace pebbling
