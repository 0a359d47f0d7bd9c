#include "pebbling/random_tree.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace pebbling {

std::uint64_t Rng::below(std::uint64_t bound) {
    // Rejection sampling keeps the draw uniform and portable.
    std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                          std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do {
        x = next();
    } while (x >= limit);
    return x % bound;
}

std::uint64_t Rng::range(std::uint64_t lo, std::uint64_t hi) {
    return lo + below(hi - lo + 1);
}

Tree random_parent_tree(Rng& rng, int n) {
    std::vector<std::pair<VertexId, VertexId>> edges;
    edges.reserve(n > 0 ? n - 1 : 0);
    for (int i = 1; i < n; ++i)
        edges.emplace_back(static_cast<VertexId>(rng.below(i)), i);
    return Tree::build(n, edges);
}

PebblingFn random_target(Rng& rng, const Tree& tree, int support_size, int max_count) {
    support_size = std::min(support_size, tree.n());
    std::vector<VertexId> ids(tree.n());
    std::iota(ids.begin(), ids.end(), 0);
    for (int i = 0; i < support_size; ++i) {
        std::size_t j = i + rng.below(ids.size() - i);
        std::swap(ids[i], ids[j]);
    }
    PebblingFn d;
    for (int i = 0; i < support_size; ++i)
        d.set(ids[i], Count(rng.range(1, max_count)));
    return d;
}

}  // namespace pebbling
