#include <doctest.h>

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

Tree star4() { return Tree::build(4, {{0, 1}, {0, 2}, {0, 3}}); }

}  // namespace

TEST_CASE("brute pi on small paths") {
    CHECK(brute_pi(path(3), PebblingFn::stack(2, 1)).pi == 4);
    CHECK(brute_pi(path(4), PebblingFn::stack(3, 1)).pi == 8);
    CHECK(brute_pi(path(5), PebblingFn::stack(0, 2)).pi == 32);
}

TEST_CASE("brute pi lists the star extremals") {
    // target r^2 at leaf 1; extremals of size 8 over the other leaves
    ExtremalReport rep = brute_pi(star4(), PebblingFn::stack(1, 2));
    CHECK(rep.pi == 9);
    std::set<std::pair<Count, Count>> pairs;
    for (const PebblingFn& c : rep.extremals) {
        CHECK(c.size() == 8);
        pairs.emplace(c.get(2), c.get(3));
    }
    CHECK(pairs.count({7, 1}) == 1);
    CHECK(pairs.count({5, 3}) == 1);
    CHECK(pairs.count({1, 7}) == 1);
    CHECK(pairs.count({3, 5}) == 1);
    // {6,2} and {4,4} deliver two pebbles to the center and solve
    CHECK(pairs.count({6, 2}) == 0);
}

TEST_CASE("brute pi with the pendant fixture") {
    Tree t = Tree::parse_edge_list_string("v1 v2\nv2 v3\nv3 v4\nv4 v5\nv3 u\n");
    PebblingFn d;
    d.set(*t.find_vertex("v1"), 1);
    d.set(*t.find_vertex("v5"), 1);
    ExtremalReport rep = brute_pi(t, d);
    CHECK(rep.pi == 18);

    // the witness class: 16 on one demanded endpoint, 1 on the pendant
    bool found = false;
    for (const PebblingFn& c : rep.extremals)
        if (c.get(*t.find_vertex("v1")) == 16 && c.get(*t.find_vertex("u")) == 1) found = true;
    CHECK(found);
}

TEST_CASE("leaf support universe agrees with the full universe") {
    Tree t = star4();
    PebblingFn d = PebblingFn::stack(0, 2);
    Count full = brute_pi(t, d, SupportUniverse::AllVertices).pi;
    Count leaves = brute_pi(t, d, SupportUniverse::LeavesOnly).pi;
    CHECK(full == leaves);
}

TEST_CASE("support theorem and observation checks") {
    CHECK(check_support_theorem(star4(), PebblingFn::stack(1, 2)));
    CHECK(check_support_theorem(path(4), []{
        PebblingFn d;
        d.set(1, 1);
        d.set(2, 1);
        return d;
    }()));
    CHECK(check_observation(star4(), PebblingFn::stack(1, 2)));
    CHECK(check_observation(path(5), PebblingFn::stack(2, 1)));
}

TEST_CASE("oracle caps") {
    OracleCaps caps;
    caps.max_n = 4;
    CHECK_THROWS_AS(brute_pi(path(5), PebblingFn::stack(0, 1), SupportUniverse::AllVertices, caps),
                    CapExceededError);
    CHECK_THROWS_AS(brute_pi(path(3), PebblingFn{}), EmptyTargetError);
}

TEST_CASE("tree catalog sizes match the known counts") {
    CHECK(tree_catalog(1).size() == 1);
    CHECK(tree_catalog(2).size() == 1);
    CHECK(tree_catalog(3).size() == 1);
    CHECK(tree_catalog(4).size() == 2);
    CHECK(tree_catalog(5).size() == 3);
    CHECK(tree_catalog(6).size() == 6);
    CHECK(tree_catalog(7).size() == 11);
    for (const Tree& t : tree_catalog(7)) CHECK(t.n() == 7);
}

TEST_CASE("canonical form identifies isomorphic relabelings") {
    Tree a = Tree::build(4, {{0, 1}, {1, 2}, {2, 3}});
    Tree b = Tree::build(4, {{3, 1}, {1, 0}, {0, 2}});  // relabeled P_4
    Tree c = star4();
    CHECK(canonical_form(a) == canonical_form(b));
    CHECK(canonical_form(a) != canonical_form(c));
}

TEST_CASE("catalog trees are pairwise non-isomorphic") {
    std::set<std::string> forms;
    for (int n = 1; n <= 7; ++n)
        for (const Tree& t : tree_catalog(n)) CHECK(forms.insert(canonical_form(t)).second);
}
