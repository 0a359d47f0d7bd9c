#include "pebbling/solver.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <set>
#include <sstream>
#include <unordered_set>

namespace pebbling {

namespace {

// Witness materialization is skipped above this size; the verdict is still
// exact but the Solution would not fit in memory.
constexpr std::uint64_t kMaxWitnessTokens = 2'000'000;

std::vector<Count> to_vector(const Tree& tree, const PebblingFn& f) {
    std::vector<Count> v(tree.n(), Count(0));
    for (const auto& [u, c] : f.entries()) v[u] = c;
    return v;
}

PebblingFn to_fn(const std::vector<Count>& v) {
    PebblingFn f;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] > 0) f.set(static_cast<VertexId>(i), v[i]);
    return f;
}

// Child contribution in the edge-flow feasibility check: a surplus of x at
// a child yields floor(x/2) at the parent, a deficit of x costs 2x.
Count shrink(const Count& x) { return x >= 0 ? Count(x / 2) : Count(x * 2); }

}  // namespace

Count greedy_collect(const Tree& tree, const PebblingFn& c, VertexId r) {
    RootedTree rt(tree, r);
    std::vector<Count> avail = to_vector(tree, c);
    const auto& order = rt.bfs_order();
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        VertexId v = *it;
        for (VertexId w : rt.children(v)) avail[v] += avail[w] / 2;
    }
    return avail[r];
}

bool flow_solvable(const Tree& tree, const PebblingFn& c, const PebblingFn& d) {
    if (c.dominates(d)) return true;
    RootedTree rt(tree, 0);
    std::vector<Count> psi = to_vector(tree, c);
    for (const auto& [v, dem] : d.entries()) psi[v] -= dem;
    const auto& order = rt.bfs_order();
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        VertexId v = *it;
        for (VertexId w : rt.children(v)) psi[v] += shrink(psi[w]);
    }
    return psi[0] >= 0;
}

namespace {

// Depth-first search over configurations. Each pebbling step removes one
// net pebble, so the state graph is acyclic and memoizing unsolvable
// states is sound.
class Search {
  public:
    Search(const Tree& tree, const PebblingFn& d, const SearchBudget& budget)
        : tree_(tree), budget_(budget), demand_(to_vector(tree, d)) {
        const int n = tree.n();
        dist_.resize(n);
        for (VertexId v = 0; v < n; ++v) dist_[v] = tree.distances_from(v);
        demand_potential_.assign(n, Count(0));
        for (VertexId u = 0; u < n; ++u)
            for (const auto& [w, dem] : d.entries())
                demand_potential_[u] += dem << (n - dist_[u][w]);
    }

    SolveResult run(const PebblingFn& c) {
        state_ = to_vector(tree_, c);
        SolveResult result;
        result.verdict = dfs();
        result.states_explored = states_;
        if (result.verdict == Verdict::Solvable) {
            Solution s;
            s.moves = move_stack_;
            result.solution = std::move(s);
        }
        return result;
    }

  private:
    bool dominates_demand() const {
        for (std::size_t v = 0; v < state_.size(); ++v)
            if (state_[v] < demand_[v]) return false;
        return true;
    }

    // Supply-side potential at u, scaled by 2^n: sum of state(v) *
    // 2^(n - dist(u,v)). A step from x to y changes it by
    // 2^(n-dist(u,y)) - 2^(n-dist(u,x)+1) <= 0, so once it drops below the
    // demand-side potential the state is unsolvable.
    bool weight_pruned() const {
        const int n = tree_.n();
        for (VertexId u = 0; u < n; ++u) {
            Count pot = 0;
            for (std::size_t v = 0; v < state_.size(); ++v)
                if (state_[v] > 0) pot += state_[v] << (n - dist_[u][v]);
            if (pot < demand_potential_[u]) return true;
        }
        return false;
    }

    std::string state_key() const {
        std::ostringstream key;
        for (const auto& c : state_) key << c << ',';
        return key.str();
    }

    std::vector<Move> candidate_moves() const {
        // Try moves that step toward the nearest unmet target first; the
        // ordering affects witness discovery speed, not the verdict.
        std::vector<VertexId> unmet;
        for (std::size_t v = 0; v < state_.size(); ++v)
            if (state_[v] < demand_[v]) unmet.push_back(static_cast<VertexId>(v));

        std::vector<std::pair<int, Move>> scored;
        for (std::size_t v = 0; v < state_.size(); ++v) {
            if (state_[v] < 2) continue;
            VertexId from = static_cast<VertexId>(v);
            for (VertexId to : tree_.neighbors(from)) {
                int best_from = tree_.n(), best_to = tree_.n();
                for (VertexId t : unmet) {
                    best_from = std::min(best_from, dist_[from][t]);
                    best_to = std::min(best_to, dist_[to][t]);
                }
                scored.push_back({best_to - best_from, Move{from, to}});
            }
        }
        std::stable_sort(scored.begin(), scored.end(),
                         [](const auto& a, const auto& b) { return a.first < b.first; });
        std::vector<Move> moves;
        moves.reserve(scored.size());
        for (auto& [score, m] : scored) moves.push_back(m);
        return moves;
    }

    Verdict dfs() {
        if (dominates_demand()) return Verdict::Solvable;
        if (++states_ > budget_.max_states) return Verdict::BudgetExceeded;
        if (weight_pruned()) return Verdict::Unsolvable;

        std::string key = state_key();
        if (memo_.count(key)) return Verdict::Unsolvable;

        for (const Move& m : candidate_moves()) {
            state_[m.from] -= 2;
            state_[m.to] += 1;
            move_stack_.push_back(m);
            Verdict sub = dfs();
            if (sub == Verdict::Solvable) return Verdict::Solvable;
            move_stack_.pop_back();
            state_[m.from] += 2;
            state_[m.to] -= 1;
            if (sub == Verdict::BudgetExceeded) return Verdict::BudgetExceeded;
        }
        if (memo_.size() < budget_.max_memo_entries) memo_.insert(std::move(key));
        return Verdict::Unsolvable;
    }

    const Tree& tree_;
    SearchBudget budget_;
    std::vector<Count> demand_;
    std::vector<std::vector<int>> dist_;
    std::vector<Count> demand_potential_;
    std::vector<Count> state_;
    std::vector<Move> move_stack_;
    std::unordered_set<std::string> memo_;
    std::uint64_t states_ = 0;
};

}  // namespace

SolveResult is_solvable(const Tree& tree, const PebblingFn& c, const PebblingFn& d,
                        const SearchBudget& budget) {
    SolveResult result;
    if (c.dominates(d)) {
        result.verdict = Verdict::Solvable;
        result.solution = Solution{};
        attribute_solution(tree, c, d, *result.solution);
        return result;
    }

    if (d.support_size() == 1) {
        // Single-vertex target: greedy leaf-to-root collection is exact on
        // trees (minimal solutions are greedy).
        VertexId r = d.entries().begin()->first;
        const Count& t = d.entries().begin()->second;
        if (greedy_collect(tree, c, r) < t) {
            result.verdict = Verdict::Unsolvable;
            return result;
        }
        result.verdict = Verdict::Solvable;

        RootedTree rt(tree, r);
        std::vector<Count> avail = to_vector(tree, c);
        const auto& order = rt.bfs_order();
        std::vector<Count> capacity = avail;  // obtainable at v from its subtree
        for (auto it = order.rbegin(); it != order.rend(); ++it)
            for (VertexId w : rt.children(*it)) capacity[*it] += capacity[w] / 2;

        // need[v]: pebbles that must stand on v, satisfied from the local
        // count first and then by pulling from children in id order.
        std::vector<Count> need(tree.n(), Count(0));
        Count total_moves = 0;
        need[r] = t;
        for (VertexId v : order) {
            if (need[v] == 0) continue;
            Count missing = need[v] > avail[v] ? need[v] - avail[v] : Count(0);
            total_moves += missing;
            for (VertexId w : rt.children(v)) {
                if (missing == 0) break;
                Count pulls = std::min(Count(capacity[w] / 2), missing);
                need[w] = pulls * 2;
                missing -= pulls;
            }
        }
        if (total_moves > kMaxWitnessTokens) return result;  // verdict only

        Solution s;
        // Children first (reverse BFS), so arrivals precede departures.
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            VertexId w = *it;
            if (w == r) continue;
            VertexId p = *rt.parent(w);
            for (Count i = 0, pulls = need[w] / 2; i < pulls; ++i) s.moves.push_back({w, p});
        }
        attribute_solution(tree, c, d, s);
        result.solution = std::move(s);
        return result;
    }

    Search search(tree, d, budget);
    result = search.run(c);
    if (result.verdict == Verdict::Solvable)
        attribute_solution(tree, c, d, *result.solution);
    return result;
}

MaximalityResult is_maximal_unsolvable(const Tree& tree, const PebblingFn& c,
                                       const PebblingFn& d, const SearchBudget& budget) {
    MaximalityResult out;
    SolveResult base = is_solvable(tree, c, d, budget);
    if (base.verdict == Verdict::BudgetExceeded) {
        out.status = Verdict::BudgetExceeded;
        return out;
    }
    out.status = base.verdict;
    if (base.verdict == Verdict::Solvable) {
        out.value = false;
        return out;
    }
    for (VertexId v = 0; v < tree.n(); ++v) {
        PebblingFn plus = c;
        plus.add(v);
        SolveResult aug = is_solvable(tree, plus, d, budget);
        if (aug.verdict == Verdict::BudgetExceeded) {
            out.status = Verdict::BudgetExceeded;
            return out;
        }
        if (aug.verdict == Verdict::Unsolvable) {
            out.value = false;
            return out;
        }
    }
    out.value = true;
    return out;
}

std::optional<PebblingFn> replay_solution(const Tree& tree, const PebblingFn& c,
                                          const Solution& s) {
    std::vector<Count> state = to_vector(tree, c);
    for (const Move& m : s.moves) {
        if (m.from < 0 || m.from >= tree.n() || m.to < 0 || m.to >= tree.n())
            return std::nullopt;
        const auto& nb = tree.neighbors(m.from);
        if (!std::binary_search(nb.begin(), nb.end(), m.to)) return std::nullopt;
        if (state[m.from] < 2) return std::nullopt;
        state[m.from] -= 2;
        state[m.to] += 1;
    }
    return to_fn(state);
}

bool solution_is_valid(const Tree& tree, const PebblingFn& c, const PebblingFn& d,
                       const Solution& s) {
    auto final_config = replay_solution(tree, c, s);
    return final_config && final_config->dominates(d);
}

bool solution_digraph_acyclic(const Solution& s) {
    // Arcs live on tree edges, so any directed cycle is an antiparallel pair.
    std::set<std::pair<VertexId, VertexId>> arcs;
    for (const Move& m : s.moves) arcs.emplace(m.from, m.to);
    for (auto [u, v] : arcs)
        if (arcs.count({v, u})) return false;
    return true;
}

Solution minimalize(const Tree& tree, const PebblingFn& c, const PebblingFn& d,
                    const Solution& s) {
    Solution current = s;
    bool removed = true;
    while (removed) {
        removed = false;
        for (std::size_t i = 0; i < current.moves.size(); ++i) {
            Solution trial;
            trial.moves = current.moves;
            trial.moves.erase(trial.moves.begin() + static_cast<long>(i));
            if (solution_is_valid(tree, c, d, trial)) {
                current = std::move(trial);
                removed = true;
                break;
            }
        }
    }
    attribute_solution(tree, c, d, current);
    return current;
}

void attribute_solution(const Tree& tree, const PebblingFn& c, const PebblingFn& d,
                        Solution& s) {
    // Replay with pebble identities: every original pebble is a token, a
    // move consumes two tokens FIFO and produces one carrying the merged
    // move history. Target copies then claim final tokens, which yields an
    // integral per-copy decomposition of the move multiset.
    if (c.size() > kMaxWitnessTokens) return;  // leave unattributed

    struct Token {
        std::vector<int> history;           // move indices
        std::vector<VertexId> origins;      // original pebbles consumed
    };
    std::vector<Token> tokens;
    std::vector<std::deque<int>> at(tree.n());
    for (const auto& [v, count] : c.entries())
        for (Count i = 0; i < count; ++i) {
            at[v].push_back(static_cast<int>(tokens.size()));
            tokens.push_back({{}, {v}});
        }

    for (std::size_t mi = 0; mi < s.moves.size(); ++mi) {
        const Move& m = s.moves[mi];
        if (at[m.from].size() < 2)
            throw std::invalid_argument("solution does not replay from the configuration");
        int a = at[m.from].front(); at[m.from].pop_front();
        int b = at[m.from].front(); at[m.from].pop_front();
        Token merged;
        merged.history = tokens[a].history;
        merged.history.insert(merged.history.end(), tokens[b].history.begin(),
                              tokens[b].history.end());
        merged.history.push_back(static_cast<int>(mi));
        merged.origins = tokens[a].origins;
        merged.origins.insert(merged.origins.end(), tokens[b].origins.begin(),
                              tokens[b].origins.end());
        at[m.to].push_back(static_cast<int>(tokens.size()));
        tokens.push_back(std::move(merged));
    }

    s.target_copies.clear();
    s.attribution.assign(s.moves.size(), -1);
    PebblingFn used;
    for (const auto& [v, dem] : d.entries()) {
        for (Count j = 0; j < dem; ++j) {
            int copy = static_cast<int>(s.target_copies.size());
            s.target_copies.emplace_back(v, j.convert_to<int>());
            if (at[v].empty())
                throw std::invalid_argument("solution does not satisfy the demand");
            int tok = at[v].front();
            at[v].pop_front();
            for (int mi : tokens[tok].history) s.attribution[mi] = copy;
            for (VertexId origin : tokens[tok].origins) used.add(origin);
        }
    }
    s.used_pebbles = std::move(used);
}

SolutionStats solution_stats(const Tree& tree, const PebblingFn& /*c*/, const PebblingFn& /*d*/,
                             const Solution& s) {
    if (!s.has_attribution()) throw AttributionMissingError();
    SolutionStats stats;
    for (const auto& [v, count] : s.used_pebbles.entries()) stats.sources.push_back(v);

    std::map<VertexId, std::set<VertexId>> in_neighbors;
    for (const Move& m : s.moves) in_neighbors[m.to].insert(m.from);
    for (auto& [v, ins] : in_neighbors)
        if (ins.size() >= 2) stats.merge_number += static_cast<int>(ins.size()) - 1;

    stats.greedy_per_target = true;
    std::vector<std::vector<int>> dist_cache(tree.n());
    for (std::size_t i = 0; i < s.moves.size(); ++i) {
        int copy = s.attribution[i];
        if (copy < 0) continue;
        VertexId target = s.target_copies[copy].first;
        if (dist_cache[target].empty()) dist_cache[target] = tree.distances_from(target);
        const auto& dist = dist_cache[target];
        if (dist[s.moves[i].to] >= dist[s.moves[i].from]) stats.greedy_per_target = false;
    }
    return stats;
}

}  // namespace pebbling
