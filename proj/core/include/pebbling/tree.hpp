#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace pebbling {

// Dense vertex id, 0..n-1.
using VertexId = std::int32_t;

struct TreeBuildError : std::runtime_error {
    enum class Kind { SelfLoop, DuplicateEdge, CycleDetected, Disconnected };
    Kind kind;
    TreeBuildError(Kind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Immutable tree on dense vertex ids with sorted adjacency lists and an
// optional id <-> name table. Safe to share across threads once built.
class Tree {
  public:
    static Tree build(int n, const std::vector<std::pair<VertexId, VertexId>>& edges,
                      std::vector<std::string> names = {});

    int n() const { return n_; }
    const std::vector<VertexId>& neighbors(VertexId v) const { return adj_[v]; }
    int degree(VertexId v) const { return static_cast<int>(adj_[v].size()); }

    // For n == 1 the unique vertex counts as a leaf.
    bool is_leaf(VertexId v) const { return n_ == 1 || degree(v) == 1; }
    std::vector<VertexId> leaves() const;

    // BFS distances from v, linear time.
    std::vector<int> distances_from(VertexId v) const;
    int diameter() const;

    bool has_names() const { return !names_.empty(); }
    const std::string& name(VertexId v) const { return names_[v]; }
    std::string display_name(VertexId v) const;
    std::optional<VertexId> find_vertex(const std::string& token) const;

    std::vector<std::pair<VertexId, VertexId>> edges() const;

    // Edge list text format: optional "n <count>" first line, then "u v"
    // lines (ids or names), '#' starts a comment.
    static Tree parse_edge_list(std::istream& in);
    static Tree parse_edge_list_string(const std::string& text);
    static Tree load_edge_list(const std::string& path);
    std::string to_edge_list() const;

  private:
    int n_ = 0;
    std::vector<std::vector<VertexId>> adj_;
    std::vector<std::string> names_;
    std::unordered_map<std::string, VertexId> name_index_;
};

// Induced subtree over the masked vertices (which must be connected),
// relabeled densely. Returns the new tree and the new-id -> old-id map.
std::pair<Tree, std::vector<VertexId>> extract_subtree(const Tree& tree,
                                                       const std::vector<char>& mask);

// Tree plus a root: parent/depth arrays, children lists and a BFS order.
class RootedTree {
  public:
    RootedTree(const Tree& tree, VertexId root);

    const Tree& tree() const { return *tree_; }
    VertexId root() const { return root_; }
    std::optional<VertexId> parent(VertexId v) const;
    int depth(VertexId v) const { return depth_[v]; }
    const std::vector<VertexId>& children(VertexId v) const { return children_[v]; }
    const std::vector<VertexId>& bfs_order() const { return order_; }

  private:
    const Tree* tree_;
    VertexId root_;
    std::vector<VertexId> parent_;
    std::vector<int> depth_;
    std::vector<std::vector<VertexId>> children_;
    std::vector<VertexId> order_;
};

}  // namespace pebbling
