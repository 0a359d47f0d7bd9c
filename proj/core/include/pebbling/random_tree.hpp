#pragma once

#include <cstdint>
#include <random>

#include "pebbling/pebbling_fn.hpp"
#include "pebbling/tree.hpp"

namespace pebbling {

// Seeded generator with a portable bounded-draw mapping (rejection
// sampling on raw mt19937_64 output, so results do not depend on the
// standard library's distribution implementations).
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    // Uniform in [0, bound), bound >= 1.
    std::uint64_t below(std::uint64_t bound);

    // Uniform in [lo, hi] inclusive.
    std::uint64_t range(std::uint64_t lo, std::uint64_t hi);

  private:
    std::mt19937_64 engine_;
};

// Random tree by uniform parent attachment: vertex i in 1..n-1 attaches to
// a uniform parent in 0..i-1 (a random recursive tree; this is the
// documented distribution, not the uniform distribution over labeled trees).
Tree random_parent_tree(Rng& rng, int n);

// Random target with the given support size (clamped to n) and per-vertex
// counts in [1, max_count].
PebblingFn random_target(Rng& rng, const Tree& tree, int support_size, int max_count);

}  // namespace pebbling
