#include "pebbling/target_pebbling.hpp"

#include <algorithm>
#include <limits>

#include "pebbling/partition.hpp"

namespace pebbling {

Count alpha(const Tree& tree, VertexId v, const PebblingFn& d) {
    if (d.empty()) throw EmptyTargetError();
    auto dist = tree.distances_from(v);
    Count total = 0;
    for (const auto& [u, dem] : d.entries()) total += dem << dist[u];
    return total;
}

Count FSequence::increment_formula(int h) const {
    return (Count(1) << (indices[h] - 1)) - (Count(1) << (n - indices[h - 1]));
}

bool FSequence::matches_increment_formula() const {
    for (std::size_t h = 1; h < f.size(); ++h)
        if (f[h] - f[h - 1] != increment_formula(static_cast<int>(h))) return false;
    return true;
}

bool FSequence::is_valley_unimodal() const {
    // Consecutive increments are nondecreasing (the sequence is convex),
    // so it falls, bottoms out, then rises.
    for (std::size_t h = 2; h < f.size(); ++h)
        if (f[h] - f[h - 1] < f[h - 1] - f[h - 2]) return false;
    return true;
}

std::pair<PiResult, FSequence> path_pi(int n, const PebblingFn& d) {
    if (d.empty()) throw EmptyTargetError();
    if (d.size() > 10'000'000)
        throw std::invalid_argument("target too large to materialize the f-sequence");

    FSequence seq;
    seq.n = n;
    for (const auto& [v, dem] : d.entries()) {
        if (v < 0 || v >= n) throw std::out_of_range("target vertex outside the path");
        for (Count j = 0; j < dem; ++j) seq.indices.push_back(v + 1);  // 1-based positions
    }
    const int t = static_cast<int>(seq.indices.size());
    const VertexId left = 0, right = n - 1;

    // alpha(v_1, first j copies) as prefix sums, alpha(v_n, copies j..t) as
    // suffix sums; f_j is one shy of each.
    std::vector<Count> prefix(t + 1, Count(0)), suffix(t + 2, Count(0));
    for (int j = 1; j <= t; ++j)
        prefix[j] = prefix[j - 1] + (Count(1) << (seq.indices[j - 1] - 1));
    for (int j = t; j >= 1; --j)
        suffix[j] = suffix[j + 1] + (Count(1) << (n - seq.indices[j - 1]));

    seq.f.reserve(t);
    for (int j = 1; j <= t; ++j) seq.f.push_back(prefix[j] - 1 + suffix[j] - 1);

    PiResult res;
    const Count& f_first = seq.f.front();
    const Count& f_last = seq.f.back();
    res.pi = (f_first > f_last ? f_first : f_last) + 1;

    // Witness: the two-stack configuration realizing max{f_1, f_t}.
    int j_star = f_last >= f_first ? t : 1;
    Count left_stack = prefix[j_star] - 1;
    Count right_stack = suffix[j_star] - 1;
    res.witness = PebblingFn();
    res.witness.add(left, left_stack);
    res.witness.add(right, right_stack);
    if (left_stack >= right_stack) {
        res.superstack_leaf = left;
    } else {
        res.superstack_leaf = right;
    }
    res.candidates.push_back({left, left, 0, prefix[t] /* alpha(v1, D) */, f_last});
    res.candidates.push_back({right, right, 0, suffix[1] /* alpha(vn, D) */, f_first});
    return {std::move(res), std::move(seq)};
}

namespace {

// alpha(z, D) for every hull vertex by a down/up rerooting pass over the
// hull subtree (D is supported on the hull).
std::vector<Count> hull_alphas(const Tree& tree, const PebblingFn& d,
                               const HullDecomposition& hull) {
    const int n = tree.n();
    std::vector<Count> down(n, Count(0)), up(n, Count(0)), result(n, Count(0));

    VertexId root = hull.hull_vertices.front();
    std::vector<VertexId> order{root};
    std::vector<VertexId> parent(n, -1);
    std::vector<char> seen(n, 0);
    seen[root] = 1;
    for (std::size_t head = 0; head < order.size(); ++head) {
        VertexId u = order[head];
        for (VertexId w : tree.neighbors(u)) {
            if (seen[w] || !hull.is_hull_vertex(w)) continue;
            seen[w] = 1;
            parent[w] = u;
            order.push_back(w);
        }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        VertexId v = *it;
        down[v] = d.get(v);
        for (VertexId w : tree.neighbors(v))
            if (seen[w] && parent[w] == v) down[v] += down[w] * 2;
    }
    for (VertexId v : order) {
        for (VertexId w : tree.neighbors(v))
            if (seen[w] && parent[w] == v)
                up[w] = (up[v] + down[v] - down[w] * 2) * 2;
        result[v] = down[v] + up[v];
    }
    return result;
}

}  // namespace

PiResult tree_pi(const Tree& tree, const PebblingFn& d, const TreePiOptions& options) {
    if (d.empty()) throw EmptyTargetError();
    HullDecomposition hull = convex_hull(tree, d);
    std::vector<Count> alphas = hull_alphas(tree, d, hull);

    // Candidate sites. Hull leaves always qualify; with the full scope so
    // does every interior hull vertex with a nontrivial hanging subtree
    // (whose deep stack can dominate all hull-leaf candidates).
    std::vector<VertexId> sites;
    std::vector<char> is_hull_leaf(tree.n(), 0);
    for (VertexId v : hull.hull_leaves) is_hull_leaf[v] = 1;
    for (VertexId z : hull.hull_vertices) {
        if (is_hull_leaf[z])
            sites.push_back(z);
        else if (options.scope == CandidateScope::HullVertices && !hull.hanging_trivial(z))
            sites.push_back(z);
    }

    // Per-site greedy partitions of the hanging subtrees and the total
    // dead weight; a candidate at z keeps every other B_z' at dead weight
    // and raises its own stack to one shy of alpha(w_z, D).
    std::vector<PathPartition> parts(tree.n());
    Count total_dead_weight = 0;
    std::vector<Count> dw(tree.n(), Count(0));
    for (VertexId z : hull.hull_vertices) {
        if (hull.hanging_trivial(z)) continue;
        parts[z] = max_path_partition(tree, z, hull.hanging_mask(z));
        dw[z] = chung_size(parts[z], 1);
        total_dead_weight += dw[z];
    }

    PiResult res;
    bool have_best = false;
    VertexId best_site = -1;
    Count best_size = 0;
    VertexId best_leaf = -1;

    for (VertexId z : sites) {
        Count own = chung_size(parts[z], alphas[z]);  // degenerate: alpha - 1 on z itself
        Count size = own;
        if (options.include_dead_weight) size += total_dead_weight - dw[z];
        VertexId leaf = parts[z].paths.empty() ? z : parts[z].far_leaves[0];
        int depth = parts[z].paths.empty() ? 0 : parts[z].lengths[0];
        res.candidates.push_back({z, leaf, depth, alphas[z], size});
        if (!have_best || size > best_size || (size == best_size && leaf < best_leaf)) {
            have_best = true;
            best_site = z;
            best_size = size;
            best_leaf = leaf;
        }
    }

    res.pi = best_size + 1;
    res.superstack_leaf = best_leaf;
    if (parts[best_site].paths.empty()) {
        res.witness = PebblingFn::stack(best_site, alphas[best_site] - 1);
    } else {
        res.witness = chung_configuration(parts[best_site], alphas[best_site]).config;
    }
    if (options.include_dead_weight) {
        for (VertexId z : hull.hull_vertices) {
            if (z == best_site || hull.hanging_trivial(z)) continue;
            res.witness += chung_configuration(parts[z], 1).config;
        }
    }
    return res;
}

Count strong_target_slack(const Tree& tree, const PebblingFn& d) {
    if (d.empty()) throw EmptyTargetError();
    PiTFoldResult folded = pi_t_fold(tree, d.size());
    PiResult target = tree_pi(tree, d);
    return folded.value - d.support_size() + 1 - target.pi;
}

std::pair<Count, Count> basic_bounds(const Tree& tree) {
    const int n = tree.n();
    const int diam = tree.diameter();
    Count lower = Count(1) << diam;
    if (lower < n) lower = n;
    Count upper = Count(n - diam) * ((Count(1) << diam) - 1) + 1;
    return {lower, upper};
}

}  // namespace pebbling
