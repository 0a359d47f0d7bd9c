#include "pebbling/tree.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <functional>
#include <istream>
#include <sstream>

namespace pebbling {

namespace {

std::string edge_str(VertexId u, VertexId v, const std::vector<std::string>& names) {
    auto one = [&](VertexId x) {
        if (!names.empty()) return names[x];
        return std::to_string(x);
    };
    return "(" + one(u) + ", " + one(v) + ")";
}

}  // namespace

Tree Tree::build(int n, const std::vector<std::pair<VertexId, VertexId>>& edges,
                 std::vector<std::string> names) {
    if (n <= 0) throw TreeBuildError(TreeBuildError::Kind::Disconnected, "vertex count must be positive");
    if (!names.empty() && static_cast<int>(names.size()) != n)
        throw std::invalid_argument("name table size does not match vertex count");

    Tree t;
    t.n_ = n;
    t.adj_.assign(n, {});
    t.names_ = std::move(names);
    for (int i = 0; i < static_cast<int>(t.names_.size()); ++i)
        t.name_index_.emplace(t.names_[i], i);

    if (static_cast<int>(edges.size()) != n - 1) {
        // Too many edges on n vertices forces a cycle, too few a disconnection.
        if (static_cast<int>(edges.size()) > n - 1)
            throw TreeBuildError(TreeBuildError::Kind::CycleDetected,
                                 "edge count " + std::to_string(edges.size()) +
                                     " exceeds n-1 = " + std::to_string(n - 1));
        throw TreeBuildError(TreeBuildError::Kind::Disconnected,
                             "edge count " + std::to_string(edges.size()) +
                                 " is below n-1 = " + std::to_string(n - 1));
    }

    // Union-find pinpoints the first offending edge.
    std::vector<VertexId> uf(n);
    for (int i = 0; i < n; ++i) uf[i] = i;
    std::function<VertexId(VertexId)> find = [&](VertexId x) {
        while (uf[x] != x) x = uf[x] = uf[uf[x]];
        return x;
    };

    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::out_of_range("edge endpoint out of range: " + edge_str(u, v, {}));
        if (u == v)
            throw TreeBuildError(TreeBuildError::Kind::SelfLoop,
                                 "self loop at " + edge_str(u, v, t.names_));
        if (std::find(t.adj_[u].begin(), t.adj_[u].end(), v) != t.adj_[u].end())
            throw TreeBuildError(TreeBuildError::Kind::DuplicateEdge,
                                 "duplicate edge " + edge_str(u, v, t.names_));
        VertexId ru = find(u), rv = find(v);
        if (ru == rv)
            throw TreeBuildError(TreeBuildError::Kind::CycleDetected,
                                 "edge " + edge_str(u, v, t.names_) + " closes a cycle");
        uf[ru] = rv;
        t.adj_[u].push_back(v);
        t.adj_[v].push_back(u);
    }

    for (int v = 0; v < n; ++v)
        if (find(v) != find(0))
            throw TreeBuildError(TreeBuildError::Kind::Disconnected,
                                 "vertex " + (t.names_.empty() ? std::to_string(v) : t.names_[v]) +
                                     " is disconnected from vertex " +
                                     (t.names_.empty() ? "0" : t.names_[0]));

    for (auto& lst : t.adj_) std::sort(lst.begin(), lst.end());
    return t;
}

std::vector<VertexId> Tree::leaves() const {
    std::vector<VertexId> out;
    for (int v = 0; v < n_; ++v)
        if (is_leaf(v)) out.push_back(v);
    return out;
}

std::vector<int> Tree::distances_from(VertexId v) const {
    std::vector<int> dist(n_, -1);
    std::vector<VertexId> queue{v};
    dist[v] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        VertexId u = queue[head];
        for (VertexId w : adj_[u])
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
    }
    return dist;
}

int Tree::diameter() const {
    auto d0 = distances_from(0);
    VertexId far = static_cast<VertexId>(std::max_element(d0.begin(), d0.end()) - d0.begin());
    auto d1 = distances_from(far);
    return *std::max_element(d1.begin(), d1.end());
}

std::string Tree::display_name(VertexId v) const {
    return names_.empty() ? std::to_string(v) : names_[v];
}

std::optional<VertexId> Tree::find_vertex(const std::string& token) const {
    auto it = name_index_.find(token);
    if (it != name_index_.end()) return it->second;
    // Fall back to a numeric id.
    if (!token.empty() && std::all_of(token.begin(), token.end(),
                                      [](unsigned char ch) { return std::isdigit(ch); })) {
        long long id = std::stoll(token);
        if (id >= 0 && id < n_) return static_cast<VertexId>(id);
    }
    return std::nullopt;
}

std::vector<std::pair<VertexId, VertexId>> Tree::edges() const {
    std::vector<std::pair<VertexId, VertexId>> out;
    out.reserve(n_ > 0 ? n_ - 1 : 0);
    for (VertexId u = 0; u < n_; ++u)
        for (VertexId v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

Tree Tree::parse_edge_list(std::istream& in) {
    std::vector<std::pair<std::string, std::string>> raw_edges;
    std::optional<int> declared_n;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string a, b;
        if (!(ls >> a)) continue;
        if (a == "n" && !declared_n) {
            if (!(ls >> b))
                throw ParseError("line " + std::to_string(line_no) + ": expected a count after 'n'");
            declared_n = std::stoi(b);
            continue;
        }
        if (!(ls >> b))
            throw ParseError("line " + std::to_string(line_no) + ": expected two tokens, got one");
        std::string extra;
        if (ls >> extra)
            throw ParseError("line " + std::to_string(line_no) + ": trailing token '" + extra + "'");
        raw_edges.emplace_back(a, b);
    }

    bool all_numeric = true;
    for (auto& [a, b] : raw_edges)
        for (const std::string* s : {&a, &b})
            if (!std::all_of(s->begin(), s->end(),
                             [](unsigned char ch) { return std::isdigit(ch); }) ||
                s->empty())
                all_numeric = false;

    std::vector<std::pair<VertexId, VertexId>> edges;
    std::vector<std::string> names;
    int n = 0;
    if (all_numeric) {
        for (auto& [a, b] : raw_edges) {
            VertexId u = static_cast<VertexId>(std::stoll(a));
            VertexId v = static_cast<VertexId>(std::stoll(b));
            edges.emplace_back(u, v);
            n = std::max({n, u + 1, v + 1});
        }
        if (declared_n) {
            if (*declared_n < n)
                throw ParseError("declared vertex count is below the largest id + 1");
            n = *declared_n;
        }
    } else {
        std::unordered_map<std::string, VertexId> index;
        auto intern = [&](const std::string& s) {
            auto [it, inserted] = index.emplace(s, static_cast<VertexId>(names.size()));
            if (inserted) names.push_back(s);
            return it->second;
        };
        for (auto& [a, b] : raw_edges) edges.emplace_back(intern(a), intern(b));
        n = static_cast<int>(names.size());
        if (declared_n && *declared_n != n)
            throw ParseError("declared vertex count does not match the number of distinct names");
    }

    if (n == 0) {
        if (declared_n && *declared_n == 1) n = 1;  // single vertex, no edges
        else throw ParseError("empty tree description");
    }

    return build(n, edges, std::move(names));
}

Tree Tree::parse_edge_list_string(const std::string& text) {
    std::istringstream in(text);
    return parse_edge_list(in);
}

Tree Tree::load_edge_list(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open tree file: " + path);
    return parse_edge_list(in);
}

std::string Tree::to_edge_list() const {
    std::ostringstream out;
    out << "n " << n_ << "\n";
    for (auto [u, v] : edges())
        out << display_name(u) << " " << display_name(v) << "\n";
    return out.str();
}

std::pair<Tree, std::vector<VertexId>> extract_subtree(const Tree& tree,
                                                       const std::vector<char>& mask) {
    std::vector<VertexId> to_old;
    std::vector<VertexId> to_new(tree.n(), -1);
    for (VertexId v = 0; v < tree.n(); ++v)
        if (mask[v]) {
            to_new[v] = static_cast<VertexId>(to_old.size());
            to_old.push_back(v);
        }
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (auto [u, v] : tree.edges())
        if (mask[u] && mask[v]) edges.emplace_back(to_new[u], to_new[v]);
    return {Tree::build(static_cast<int>(to_old.size()), edges), std::move(to_old)};
}

RootedTree::RootedTree(const Tree& tree, VertexId root)
    : tree_(&tree), root_(root), parent_(tree.n(), -1), depth_(tree.n(), 0),
      children_(tree.n()) {
    order_.reserve(tree.n());
    order_.push_back(root);
    for (std::size_t head = 0; head < order_.size(); ++head) {
        VertexId u = order_[head];
        for (VertexId w : tree.neighbors(u)) {
            if (w == parent_[u]) continue;
            parent_[w] = u;
            depth_[w] = depth_[u] + 1;
            children_[u].push_back(w);
            order_.push_back(w);
        }
    }
}

std::optional<VertexId> RootedTree::parent(VertexId v) const {
    if (v == root_) return std::nullopt;
    return parent_[v];
}

}  // namespace pebbling
