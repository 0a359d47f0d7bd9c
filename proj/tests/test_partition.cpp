#include <doctest.h>

#include <algorithm>
#include <set>

#include "pebbling/oracle.hpp"
#include "pebbling/partition.hpp"
#include "pebbling/tree.hpp"

using namespace pebbling;

namespace {

Tree path(int n) {
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Tree::build(n, edges);
}

// K_{1,3} with center 0 and leaves 1..3.
Tree star4() { return Tree::build(4, {{0, 1}, {0, 2}, {0, 3}}); }

}  // namespace

TEST_CASE("path partition of a path rooted at an endpoint is the path itself") {
    Tree p5 = path(5);
    PathPartition part = max_path_partition(p5, 0);
    REQUIRE(part.path_count() == 1);
    CHECK(part.lengths[0] == 4);
    CHECK(part.far_leaves[0] == 4);
    CHECK(partition_is_valid(p5, part));
}

TEST_CASE("path partition of the star rooted at a leaf") {
    Tree star = star4();
    PathPartition part = max_path_partition(star, 1);
    REQUIRE(part.path_count() == 2);
    CHECK(part.lengths == std::vector<int>{2, 1});
    // tie between leaves 2 and 3 resolved toward the smaller id
    CHECK(part.far_leaves == std::vector<VertexId>{2, 3});
    CHECK(partition_is_valid(star, part));
}

TEST_CASE("single vertex has the empty partition") {
    Tree t = Tree::build(1, {});
    PathPartition part = max_path_partition(t, 0);
    CHECK(part.path_count() == 0);
    CHECK_THROWS_AS(chung_configuration(part, 1), DegeneratePartitionError);
    CHECK(chung_size(part, 5) == 4);
}

TEST_CASE("chung configuration values") {
    Tree star = star4();
    PathPartition part = max_path_partition(star, 1);

    // t=2: {far leaf of the long path: 7, other leaf: 1}
    ChungConfiguration chung = chung_configuration(part, 2);
    CHECK(chung.config.get(2) == 7);
    CHECK(chung.config.get(3) == 1);
    CHECK(chung.config.size() == 8);

    // t=1 with lengths {2,1}: values {3,1}, size 4
    ChungConfiguration one = chung_configuration(part, 1);
    CHECK(one.config.get(2) == 3);
    CHECK(one.config.get(3) == 1);
    CHECK(one.config.size() == 4);

    // P_n rooted at one end, t=1: single stack 2^(n-1) - 1
    Tree p6 = path(6);
    ChungConfiguration pc = chung_configuration(max_path_partition(p6, 0), 1);
    CHECK(pc.config.get(5) == 31);
    CHECK(pc.config.support_size() == 1);
}

TEST_CASE("pi single target") {
    CHECK(pi_single_target(path(8), 0, 1).pi == 128);  // pi(P_8) = 2^7
    CHECK(pi_single_target(star4(), 1, 2).pi == 9);

    Tree single = Tree::build(1, {});
    PiResult res = pi_single_target(single, 0, 7);
    CHECK(res.pi == 7);
    CHECK(res.witness.size() == 6);
    CHECK(res.witness.get(0) == 6);
    CHECK(res.superstack_leaf == 0);
}

TEST_CASE("pi t fold") {
    PiTFoldResult p8 = pi_t_fold(path(8), 1);
    CHECK(p8.value == 128);
    CHECK(p8.argmax_root == 0);
    CHECK(p8.per_root.size() == 8);
    CHECK(p8.per_root[3] == 23);  // partition lengths {4,3} from v_4: 15 + 7 + 1

    PiTFoldResult star1 = pi_t_fold(star4(), 1);
    CHECK(star1.value == 5);
    CHECK(star1.argmax_root == 1);  // smallest maximizing root is a leaf

    PiTFoldResult single = pi_t_fold(Tree::build(1, {}), 5);
    CHECK(single.value == 5);
    CHECK(single.argmax_root == 0);

    // pi_2(K_{1,3}) realized at a leaf with the {7,1} witness
    PiTFoldResult star2 = pi_t_fold(star4(), 2);
    CHECK(star2.value == 9);
    PiResult at_leaf = pi_single_target(star4(), star2.argmax_root, 2);
    CHECK(at_leaf.witness.size() == 8);
    CHECK(at_leaf.witness.get(2) == 7);
    CHECK(at_leaf.witness.get(3) == 1);
}

TEST_CASE("dead weight of hanging subtrees") {
    // trivial subtree
    Tree p3 = path(3);
    std::vector<char> just_z{0, 1, 0};
    CHECK(dead_weight(p3, just_z, 1) == 0);

    // single path of length 2 hanging from z=0
    std::vector<char> all(3, 1);
    CHECK(dead_weight(p3, all, 0) == 3);

    // two hanging paths of lengths 2 and 1: 3 + 1
    Tree t = Tree::build(4, {{0, 1}, {1, 2}, {0, 3}});
    std::vector<char> mask(4, 1);
    CHECK(dead_weight(t, mask, 0) == 4);
}

TEST_CASE("greedy partition lengths majorize every enumerated partition") {
    for (int n = 2; n <= 7; ++n) {
        for (const Tree& t : tree_catalog(n)) {
            for (VertexId root = 0; root < t.n(); ++root) {
                PathPartition mine = max_path_partition(t, root);
                std::vector<int> lengths = mine.lengths;
                std::sort(lengths.rbegin(), lengths.rend());
                for (const auto& other : enumerate_partitions(t, root)) {
                    CAPTURE(n);
                    CAPTURE(root);
                    CHECK(majorizes_or_equal(lengths, other.sorted_lengths));
                }
            }
        }
    }
}

TEST_CASE("enumerated partitions of known shapes") {
    // path rooted at an endpoint: every split of the path is orderable,
    // but only one multiset majorizes all of them
    auto parts = enumerate_partitions(path(3), 0);
    CHECK(parts.size() == 2);  // {2} and {1,1}

    // star rooted at a leaf: both orderings share the multisets {2,1} and {1,1,1}
    auto star_parts = enumerate_partitions(star4(), 1);
    std::set<std::vector<int>> multisets;
    for (const auto& p : star_parts) multisets.insert(p.sorted_lengths);
    CHECK(multisets.count({2, 1}) == 1);
    CHECK(multisets.count({1, 1, 1}) == 1);
    CHECK(multisets.size() == 2);

    // spider with three legs of length 2 rooted at the center: every path
    // must start at the center, so the legs are forced: {2,2,2}
    Tree spider = Tree::build(7, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}});
    PathPartition sp = max_path_partition(spider, 0);
    std::vector<int> lens = sp.lengths;
    std::sort(lens.rbegin(), lens.rend());
    CHECK(lens == std::vector<int>{2, 2, 2});
}
