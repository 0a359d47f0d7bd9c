#include "pebbling/hull.hpp"

#include <algorithm>

namespace pebbling {

std::vector<char> HullDecomposition::hanging_mask(VertexId z) const {
    std::vector<char> mask(in_hull.size(), 0);
    mask[z] = 1;
    for (VertexId v : hanging[z]) mask[v] = 1;
    return mask;
}

HullDecomposition convex_hull(const Tree& tree, const PebblingFn& d) {
    if (d.empty()) throw EmptyTargetError();
    const int n = tree.n();

    HullDecomposition h;
    h.in_hull.assign(n, 1);
    std::vector<int> deg(n);
    for (int v = 0; v < n; ++v) deg[v] = tree.degree(v);

    // Prune leaves outside supp(d) until only the Steiner subtree remains.
    std::vector<VertexId> stack;
    for (int v = 0; v < n; ++v)
        if (deg[v] <= 1 && d.get(v) == 0) stack.push_back(v);
    int remaining = n;
    while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        if (!h.in_hull[v] || remaining == 1) continue;
        h.in_hull[v] = 0;
        --remaining;
        for (VertexId u : tree.neighbors(v)) {
            if (!h.in_hull[u]) continue;
            if (--deg[u] <= 1 && d.get(u) == 0) stack.push_back(u);
        }
    }

    for (int v = 0; v < n; ++v)
        if (h.in_hull[v]) h.hull_vertices.push_back(v);

    for (VertexId v : h.hull_vertices) {
        int hull_deg = 0;
        for (VertexId u : tree.neighbors(v))
            if (h.in_hull[u]) ++hull_deg;
        if (hull_deg <= 1) h.hull_leaves.push_back(v);
    }

    // Assign every pruned vertex to the hanging subtree of its nearest hull
    // vertex by BFS outward from the hull.
    h.anchor.assign(n, -1);
    h.hanging.assign(n, {});
    std::vector<VertexId> queue;
    for (VertexId v : h.hull_vertices) {
        h.anchor[v] = v;
        queue.push_back(v);
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
        VertexId u = queue[head];
        for (VertexId w : tree.neighbors(u)) {
            if (h.anchor[w] >= 0) continue;
            h.anchor[w] = h.anchor[u];
            h.hanging[h.anchor[w]].push_back(w);
            queue.push_back(w);
        }
    }
    return h;
}

}  // namespace pebbling
