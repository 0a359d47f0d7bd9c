#include "pebbling/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "pebbling/solver.hpp"

namespace pebbling {

namespace {

// Smallest k with {v^k} solvable, by doubling then binary search on
// solver probes. A configuration with c(v) >= k is itself solvable, so
// k - 1 caps the count any unsolvable configuration can hold at v.
Count minimal_solving_stack(const Tree& tree, const PebblingFn& d, VertexId v) {
    Count hi = 1;
    while (!flow_solvable(tree, PebblingFn::stack(v, hi), d)) hi *= 2;
    Count lo = hi / 2 + 1;  // hi/2 failed (or hi == 1)
    while (lo < hi) {
        Count mid = (lo + hi) / 2;
        if (flow_solvable(tree, PebblingFn::stack(v, mid), d))
            hi = mid;
        else
            lo = mid + 1;
    }
    return hi;
}

struct BruteState {
    const Tree& tree;
    const PebblingFn& d;
    const OracleCaps& caps;

    BruteState(const Tree& t, const PebblingFn& target, const OracleCaps& c)
        : tree(t), d(target), caps(c) {}

    std::vector<VertexId> universe;
    std::vector<Count> max_count;     // per universe slot
    std::vector<Count> suffix_sum;    // max_count tail sums
    PebblingFn partial;
    Count best = -1;
    std::vector<PebblingFn> extremals;
    bool truncated = false;
    std::uint64_t nodes = 0;

    void bump_nodes() {
        if (++nodes > caps.max_nodes)
            throw CapExceededError("oracle node budget exhausted");
    }

    // Largest x so that partial + x pebbles on slot i stays unsolvable;
    // monotone, so binary search. partial itself is known unsolvable.
    Count max_unsolvable_count(int i) {
        VertexId v = universe[i];
        Count lo = 0, hi = max_count[i];
        while (lo < hi) {
            Count mid = (lo + hi + 1) / 2;
            PebblingFn probe = partial;
            probe.add(v, mid);
            bump_nodes();
            if (flow_solvable(tree, probe, d))
                hi = mid - 1;
            else
                lo = mid;
        }
        return lo;
    }

    void record() {
        const Count& size = partial.size();
        if (size > best) {
            best = size;
            extremals.clear();
            truncated = false;
        }
        if (size == best) {
            if (extremals.size() < caps.max_extremals)
                extremals.push_back(partial);
            else
                truncated = true;
        }
    }

    void dfs(int i) {
        bump_nodes();
        if (i == static_cast<int>(universe.size())) {
            record();
            return;
        }
        Count x = max_unsolvable_count(i);
        VertexId v = universe[i];
        for (; x >= 0; --x) {
            // optimistic bound: nothing below can reach the best
            if (partial.size() + x + suffix_sum[i + 1] < best) break;
            partial.add(v, x);
            dfs(i + 1);
            partial.add(v, -x);
        }
    }
};

}  // namespace

ExtremalReport brute_pi(const Tree& tree, const PebblingFn& d, SupportUniverse support,
                        const OracleCaps& caps) {
    if (d.empty()) throw EmptyTargetError();
    if (tree.n() > caps.max_n)
        throw CapExceededError("tree exceeds the oracle vertex cap");

    BruteState st{tree, d, caps};
    for (VertexId v = 0; v < tree.n(); ++v)
        if (support == SupportUniverse::AllVertices || tree.is_leaf(v))
            st.universe.push_back(v);

    st.max_count.reserve(st.universe.size());
    for (VertexId v : st.universe)
        st.max_count.push_back(minimal_solving_stack(tree, d, v) - 1);

    // Big stacks first: better early bounds. Ties by id for determinism.
    std::vector<int> perm(st.universe.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::stable_sort(perm.begin(), perm.end(), [&](int a, int b) {
        return st.max_count[a] > st.max_count[b];
    });
    std::vector<VertexId> uni;
    std::vector<Count> caps_sorted;
    for (int i : perm) {
        uni.push_back(st.universe[i]);
        caps_sorted.push_back(st.max_count[i]);
    }
    st.universe = std::move(uni);
    st.max_count = std::move(caps_sorted);

    st.suffix_sum.assign(st.universe.size() + 1, Count(0));
    for (int i = static_cast<int>(st.universe.size()) - 1; i >= 0; --i)
        st.suffix_sum[i] = st.suffix_sum[i + 1] + st.max_count[i];

    st.dfs(0);

    ExtremalReport report;
    report.pi = st.best + 1;
    report.extremals = std::move(st.extremals);
    report.support = support;
    report.nodes_explored = st.nodes;
    report.extremals_truncated = st.truncated;
    // Deterministic order regardless of search order.
    std::sort(report.extremals.begin(), report.extremals.end(),
              [](const PebblingFn& a, const PebblingFn& b) { return a.entries() < b.entries(); });
    return report;
}

bool check_support_theorem(const Tree& tree, const PebblingFn& d, const OracleCaps& caps) {
    ExtremalReport report = brute_pi(tree, d, SupportUniverse::AllVertices, caps);
    for (const PebblingFn& c : report.extremals)
        for (const auto& [v, count] : c.entries())
            if (!tree.is_leaf(v)) return false;
    return true;
}

std::vector<PebblingFn> enumerate_maximal_unsolvable(const Tree& tree, const PebblingFn& d,
                                                     const OracleCaps& caps) {
    if (d.empty()) throw EmptyTargetError();
    if (tree.n() > caps.max_n)
        throw CapExceededError("tree exceeds the oracle vertex cap");

    std::vector<Count> max_count;
    for (VertexId v = 0; v < tree.n(); ++v)
        max_count.push_back(minimal_solving_stack(tree, d, v) - 1);

    std::vector<PebblingFn> result;
    std::uint64_t nodes = 0;
    PebblingFn partial;

    auto is_maximal = [&](const PebblingFn& c) {
        for (VertexId v = 0; v < tree.n(); ++v) {
            PebblingFn plus = c;
            plus.add(v);
            if (!flow_solvable(tree, plus, d)) return false;
        }
        return true;
    };

    // Exhaustive walk over unsolvable configurations (prefix stays
    // unsolvable by monotonicity), maximality tested at the leaves.
    std::function<void(VertexId)> dfs = [&](VertexId v) {
        if (++nodes > caps.max_nodes)
            throw CapExceededError("oracle node budget exhausted");
        if (v == tree.n()) {
            if (is_maximal(partial)) result.push_back(partial);
            return;
        }
        for (Count x = 0; x <= max_count[v]; ++x) {
            PebblingFn probe = partial;
            probe.add(v, x);
            if (x > 0 && flow_solvable(tree, probe, d)) break;
            partial = probe;
            dfs(v + 1);
            partial.add(v, -x);
        }
    };
    dfs(0);
    return result;
}

bool check_observation(const Tree& tree, const PebblingFn& d, const OracleCaps& caps) {
    std::vector<PebblingFn> maximal = enumerate_maximal_unsolvable(tree, d, caps);
    for (const PebblingFn& c : maximal)
        for (VertexId v : tree.leaves())
            if (d.get(v) == 0 && c.get(v) == 0) return false;
    return true;
}

namespace {

// Vertex degree profile of an edge block; a block is a path iff it is
// connected with exactly two degree-1 endpoints (or is a single edge).
bool block_is_path(const std::vector<int>& block,
                   const std::vector<std::pair<VertexId, VertexId>>& edges,
                   std::vector<VertexId>* endpoints_out) {
    std::map<VertexId, int> deg;
    for (int e : block) {
        deg[edges[e].first]++;
        deg[edges[e].second]++;
    }
    std::vector<VertexId> ends;
    for (auto [v, dg] : deg) {
        if (dg > 2) return false;
        if (dg == 1) ends.push_back(v);
    }
    if (ends.size() != 2) return false;
    if (deg.size() != block.size() + 1) return false;  // connected: |V| = |E| + 1
    if (endpoints_out) *endpoints_out = ends;
    return true;
}

std::vector<VertexId> block_path_vertices(const std::vector<int>& block,
                                          const std::vector<std::pair<VertexId, VertexId>>& edges,
                                          VertexId start) {
    std::map<VertexId, std::vector<VertexId>> adj;
    for (int e : block) {
        adj[edges[e].first].push_back(edges[e].second);
        adj[edges[e].second].push_back(edges[e].first);
    }
    std::vector<VertexId> path{start};
    VertexId prev = -1, cur = start;
    while (true) {
        VertexId next = -1;
        for (VertexId w : adj[cur])
            if (w != prev) next = w;
        if (next < 0) break;
        path.push_back(next);
        prev = cur;
        cur = next;
    }
    return path;
}

}  // namespace

std::vector<EnumeratedPartition> enumerate_partitions(const Tree& tree, VertexId r) {
    if (tree.n() > 10)
        throw CapExceededError("partition enumeration is capped at 10 vertices");
    auto edges = tree.edges();
    const int m = static_cast<int>(edges.size());

    std::vector<EnumeratedPartition> result;
    std::vector<std::vector<int>> blocks;

    std::function<void(int)> assign = [&](int e) {
        if (e == m) {
            // every block must be a path
            std::vector<std::vector<VertexId>> paths;
            std::vector<std::pair<VertexId, VertexId>> ends;
            for (const auto& block : blocks) {
                std::vector<VertexId> bend;
                if (!block_is_path(block, edges, &bend)) return;
                ends.emplace_back(bend[0], bend[1]);
            }
            // orderable from r: repeatedly add a block touching the covered set
            std::set<VertexId> covered{r};
            std::vector<char> used(blocks.size(), 0);
            std::size_t added = 0;
            bool progress = true;
            while (progress) {
                progress = false;
                for (std::size_t b = 0; b < blocks.size(); ++b) {
                    if (used[b]) continue;
                    if (covered.count(ends[b].first) || covered.count(ends[b].second)) {
                        used[b] = 1;
                        ++added;
                        progress = true;
                        for (int e2 : blocks[b]) {
                            covered.insert(edges[e2].first);
                            covered.insert(edges[e2].second);
                        }
                    }
                }
            }
            if (added != blocks.size()) return;

            EnumeratedPartition part;
            for (std::size_t b = 0; b < blocks.size(); ++b) {
                VertexId start = ends[b].first;
                part.paths.push_back(block_path_vertices(blocks[b], edges, start));
                part.sorted_lengths.push_back(static_cast<int>(blocks[b].size()));
            }
            std::sort(part.sorted_lengths.rbegin(), part.sorted_lengths.rend());
            result.push_back(std::move(part));
            return;
        }
        for (auto& block : blocks) {
            block.push_back(e);
            assign(e + 1);
            block.pop_back();
        }
        blocks.push_back({e});
        assign(e + 1);
        blocks.pop_back();
    };
    if (m > 0) assign(0);
    return result;
}

bool majorizes_or_equal(const std::vector<int>& a, const std::vector<int>& b) {
    // Both sorted descending with equal sums; lexicographic comparison.
    for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
        if (a[i] > b[i]) return true;
        if (a[i] < b[i]) return false;
    }
    return a.size() == b.size();
}

namespace {

std::string rooted_canonical(const Tree& tree, VertexId root) {
    // AHU encoding: sorted child encodings wrapped in parentheses.
    std::function<std::string(VertexId, VertexId)> rec = [&](VertexId v, VertexId parent) {
        std::vector<std::string> child_codes;
        for (VertexId w : tree.neighbors(v))
            if (w != parent) child_codes.push_back(rec(w, v));
        std::sort(child_codes.begin(), child_codes.end());
        std::string code = "(";
        for (const auto& c : child_codes) code += c;
        code += ")";
        return code;
    };
    return rec(root, -1);
}

}  // namespace

std::string canonical_form(const Tree& tree) {
    std::string best;
    for (VertexId v = 0; v < tree.n(); ++v) {
        std::string code = rooted_canonical(tree, v);
        if (best.empty() || code < best) best = code;
    }
    return best;
}

std::vector<Tree> tree_catalog(int n) {
    if (n < 1 || n > 10)
        throw CapExceededError("tree catalog is limited to 1..10 vertices");
    std::vector<Tree> out;
    if (n == 1) {
        out.push_back(Tree::build(1, {}));
        return out;
    }
    // All parent vectors p[i] in [0, i-1]; deduplicate by canonical form.
    std::map<std::string, Tree> seen;
    std::vector<VertexId> parent(n, 0);
    std::function<void(int)> rec = [&](int i) {
        if (i == n) {
            std::vector<std::pair<VertexId, VertexId>> edges;
            for (int k = 1; k < n; ++k) edges.emplace_back(parent[k], k);
            Tree t = Tree::build(n, edges);
            std::string code = canonical_form(t);
            seen.emplace(code, std::move(t));
            return;
        }
        for (int p = 0; p < i; ++p) {
            parent[i] = p;
            rec(i + 1);
        }
    };
    rec(1);
    for (auto& [code, t] : seen) out.push_back(std::move(t));
    return out;
}

}  // namespace pebbling
