#include "pebbling/pebbling_fn.hpp"

#include <sstream>

namespace pebbling {

Count PebblingFn::get(VertexId v) const {
    auto it = counts_.find(v);
    return it == counts_.end() ? Count(0) : it->second;
}

void PebblingFn::set(VertexId v, Count c) {
    if (c < 0) throw std::invalid_argument("pebble counts are nonnegative");
    auto it = counts_.find(v);
    if (it != counts_.end()) {
        size_ -= it->second;
        counts_.erase(it);
    }
    if (c > 0) {
        size_ += c;
        counts_.emplace(v, std::move(c));
    }
}

void PebblingFn::add(VertexId v, const Count& delta) {
    set(v, get(v) + delta);
}

PebblingFn& PebblingFn::operator+=(const PebblingFn& other) {
    for (const auto& [v, c] : other.counts_) add(v, c);
    return *this;
}

PebblingFn& PebblingFn::operator-=(const PebblingFn& other) {
    for (const auto& [v, c] : other.counts_) {
        Count mine = get(v);
        if (mine < c)
            throw std::invalid_argument("subtrahend is not a sub-function");
        set(v, mine - c);
    }
    return *this;
}

bool PebblingFn::dominates(const PebblingFn& other) const {
    for (const auto& [v, c] : other.counts_)
        if (get(v) < c) return false;
    return true;
}

bool PebblingFn::is_positive_on(const Tree& tree) const {
    return support_size() == tree.n();
}

PebblingFn PebblingFn::stack(VertexId v, Count c) {
    PebblingFn f;
    f.set(v, std::move(c));
    return f;
}

std::string PebblingFn::to_string(const Tree& tree) const {
    std::ostringstream out;
    out << "{";
    bool first = true;
    for (const auto& [v, c] : counts_) {
        if (!first) out << ", ";
        first = false;
        out << tree.display_name(v) << ":" << c;
    }
    out << "}";
    return out.str();
}

}  // namespace pebbling
