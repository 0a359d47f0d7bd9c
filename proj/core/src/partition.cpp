#include "pebbling/partition.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace pebbling {

namespace {

// Per-vertex height, chosen deep leaf and preferred child over the masked
// subtree. Following preferred children from any vertex walks the longest
// downward path (ties toward the smallest-id leaf).
struct Chains {
    std::vector<VertexId> order;   // BFS order over the masked component of root
    std::vector<VertexId> parent;
    std::vector<int> height;
    std::vector<VertexId> deep_leaf;
    std::vector<VertexId> preferred;
};

Chains build_chains(const Tree& tree, VertexId root, const std::vector<char>& mask) {
    const int n = tree.n();
    auto allowed = [&](VertexId v) { return mask.empty() || mask[v]; };

    Chains ch;
    ch.parent.assign(n, -1);
    ch.height.assign(n, 0);
    ch.deep_leaf.assign(n, -1);
    ch.preferred.assign(n, -1);

    ch.order.push_back(root);
    std::vector<char> seen(n, 0);
    seen[root] = 1;
    for (std::size_t head = 0; head < ch.order.size(); ++head) {
        VertexId u = ch.order[head];
        for (VertexId w : tree.neighbors(u)) {
            if (seen[w] || !allowed(w)) continue;
            seen[w] = 1;
            ch.parent[w] = u;
            ch.order.push_back(w);
        }
    }

    for (auto it = ch.order.rbegin(); it != ch.order.rend(); ++it) {
        VertexId v = *it;
        ch.deep_leaf[v] = v;
        for (VertexId w : tree.neighbors(v)) {
            if (!seen[w] || ch.parent[w] != v) continue;
            int cand_h = ch.height[w] + 1;
            if (cand_h > ch.height[v] ||
                (cand_h == ch.height[v] && ch.preferred[v] >= 0 &&
                 ch.deep_leaf[w] < ch.deep_leaf[ch.preferred[v]])) {
                ch.height[v] = cand_h;
                ch.preferred[v] = w;
                ch.deep_leaf[v] = ch.deep_leaf[w];
            }
        }
    }
    return ch;
}

std::vector<VertexId> chain_path(const Chains& ch, VertexId attach, VertexId top) {
    std::vector<VertexId> path{attach};
    for (VertexId v = top; v >= 0; v = ch.preferred[v]) path.push_back(v);
    return path;
}

}  // namespace

PathPartition max_path_partition(const Tree& tree, VertexId root,
                                 const std::vector<char>& mask) {
    Chains ch = build_chains(tree, root, mask);

    PathPartition part;
    part.root = root;
    if (ch.order.size() == 1) return part;  // single vertex: empty partition

    // Candidates: (length, far leaf, attach vertex, top child). The greedy
    // rule pops the longest available path, ties to the smallest far leaf.
    using Cand = std::tuple<int, VertexId, VertexId, VertexId>;
    auto cmp = [](const Cand& a, const Cand& b) {
        if (std::get<0>(a) != std::get<0>(b)) return std::get<0>(a) < std::get<0>(b);
        return std::get<1>(a) > std::get<1>(b);
    };
    std::priority_queue<Cand, std::vector<Cand>, decltype(cmp)> heap(cmp);

    auto push_offshoots = [&](const std::vector<VertexId>& path, std::size_t from_index) {
        for (std::size_t i = from_index; i < path.size(); ++i) {
            VertexId u = path[i];
            for (VertexId w : tree.neighbors(u)) {
                if (ch.deep_leaf[w] < 0 || ch.parent[w] != u) continue;
                if (i + 1 < path.size() && w == path[i + 1]) continue;  // on this path
                heap.emplace(ch.height[w] + 1, ch.deep_leaf[w], u, w);
            }
        }
    };

    std::vector<VertexId> first = chain_path(ch, root, ch.preferred[root]);
    part.paths.push_back(first);
    part.lengths.push_back(static_cast<int>(first.size()) - 1);
    part.far_leaves.push_back(first.back());
    push_offshoots(first, 0);

    while (!heap.empty()) {
        auto [len, leaf, attach, top] = heap.top();
        heap.pop();
        std::vector<VertexId> path = chain_path(ch, attach, top);
        part.paths.push_back(path);
        part.lengths.push_back(len);
        part.far_leaves.push_back(leaf);
        push_offshoots(path, 1);  // the attach vertex was handled earlier
    }
    return part;
}

ChungConfiguration chung_configuration(const PathPartition& partition, const Count& t) {
    if (t < 1) throw std::invalid_argument("demand multiplicity must be positive");
    if (partition.paths.empty()) throw DegeneratePartitionError();

    ChungConfiguration out;
    out.partition = partition;
    out.t = t;
    out.config.set(partition.far_leaves[0], t * (Count(1) << partition.lengths[0]) - 1);
    for (int i = 1; i < partition.path_count(); ++i)
        out.config.add(partition.far_leaves[i], (Count(1) << partition.lengths[i]) - 1);
    return out;
}

Count chung_size(const PathPartition& partition, const Count& t) {
    if (partition.paths.empty()) return t - 1;  // degenerate: t-1 pebbles on the root
    Count size = t * (Count(1) << partition.lengths[0]) - 1;
    for (int i = 1; i < partition.path_count(); ++i)
        size += (Count(1) << partition.lengths[i]) - 1;
    return size;
}

PiResult pi_single_target(const Tree& tree, VertexId root, const Count& t) {
    if (t < 1) throw std::invalid_argument("demand multiplicity must be positive");
    PathPartition partition = max_path_partition(tree, root);

    PiResult res;
    if (partition.paths.empty()) {
        res.pi = t;
        res.witness = PebblingFn::stack(root, t - 1);
        res.superstack_leaf = root;
        res.candidates.push_back({root, root, 0, t, t - 1});
        return res;
    }
    ChungConfiguration chung = chung_configuration(partition, t);
    res.witness = chung.config;
    res.pi = res.witness.size() + 1;
    res.superstack_leaf = partition.far_leaves[0];
    res.candidates.push_back(
        {root, res.superstack_leaf, partition.lengths[0], t, res.witness.size()});
    return res;
}

PiTFoldResult pi_t_fold(const Tree& tree, const Count& t) {
    if (t < 1) throw std::invalid_argument("demand multiplicity must be positive");
    PiTFoldResult out;
    out.per_root.reserve(tree.n());
    for (VertexId r = 0; r < tree.n(); ++r) {
        Count pi = chung_size(max_path_partition(tree, r), t) + 1;
        if (r == 0 || pi > out.value) {
            out.value = pi;
            out.argmax_root = r;
        }
        out.per_root.push_back(std::move(pi));
    }
    return out;
}

Count dead_weight(const Tree& tree, const std::vector<char>& mask, VertexId z) {
    PathPartition partition = max_path_partition(tree, z, mask);
    if (partition.paths.empty()) return 0;
    return chung_size(partition, 1);
}

bool partition_is_valid(const Tree& tree, const PathPartition& partition,
                        const std::vector<char>& mask) {
    auto allowed = [&](VertexId v) { return mask.empty() || mask[v]; };
    std::set<std::pair<VertexId, VertexId>> covered;
    std::set<VertexId> reached{partition.root};

    int masked_edges = 0;
    for (auto [u, v] : tree.edges())
        if (allowed(u) && allowed(v)) ++masked_edges;

    for (int i = 0; i < partition.path_count(); ++i) {
        const auto& path = partition.paths[i];
        if (static_cast<int>(path.size()) != partition.lengths[i] + 1) return false;
        if (path.back() != partition.far_leaves[i]) return false;
        // exactly one endpoint on the earlier union; paths are attach-first
        if (!reached.count(path.front()) || reached.count(path.back())) return false;
        for (std::size_t j = 0; j + 1 < path.size(); ++j) {
            VertexId a = path[j], b = path[j + 1];
            if (j > 0 && reached.count(a)) return false;
            const auto& nb = tree.neighbors(a);
            if (!std::binary_search(nb.begin(), nb.end(), b)) return false;
            auto edge = std::minmax(a, b);
            if (!covered.emplace(edge.first, edge.second).second) return false;
        }
        for (VertexId v : path) reached.insert(v);
    }
    return static_cast<int>(covered.size()) == masked_edges;
}

}  // namespace pebbling
