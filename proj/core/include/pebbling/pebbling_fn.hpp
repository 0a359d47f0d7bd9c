#pragma once

#include <map>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "pebbling/tree.hpp"

namespace pebbling {

// Pebble counts reach t * 2^diam, which overflows 64-bit words on long
// paths, so all counts and sizes are arbitrary precision.
using Count = boost::multiprecision::cpp_int;

struct EmptyTargetError : std::runtime_error {
    EmptyTargetError() : std::runtime_error("target is empty (|D| = 0)") {}
};

// Vertex -> nonnegative count map. Plays three roles: configuration
// (supply), target (demand) and extremal witness. Zero entries are never
// stored; the total size is cached.
class PebblingFn {
  public:
    PebblingFn() = default;

    const Count& size() const { return size_; }
    int support_size() const { return static_cast<int>(counts_.size()); }
    bool empty() const { return counts_.empty(); }

    Count get(VertexId v) const;
    void set(VertexId v, Count c);
    void add(VertexId v, const Count& delta = 1);

    // Pointwise sum / difference. Subtraction requires other <= *this.
    PebblingFn& operator+=(const PebblingFn& other);
    PebblingFn& operator-=(const PebblingFn& other);
    friend PebblingFn operator+(PebblingFn a, const PebblingFn& b) { return a += b; }
    friend PebblingFn operator-(PebblingFn a, const PebblingFn& b) { return a -= b; }

    bool operator==(const PebblingFn& other) const { return counts_ == other.counts_; }

    // True when other(v) <= this(v) for every vertex.
    bool dominates(const PebblingFn& other) const;

    bool is_positive_on(const Tree& tree) const;
    bool is_stacked() const { return counts_.size() == 1; }

    // Ordered by vertex id; deterministic iteration.
    const std::map<VertexId, Count>& entries() const { return counts_; }

    static PebblingFn stack(VertexId v, Count c);

    std::string to_string(const Tree& tree) const;

  private:
    std::map<VertexId, Count> counts_;
    Count size_ = 0;
};

}  // namespace pebbling
