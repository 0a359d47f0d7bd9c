#include <doctest.h>

#include "pebbling/partition.hpp"
#include "pebbling/solver.hpp"
#include "pebbling/tree.hpp"

using namespace pebbling;

namespace {

Tree path(int n) {
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Tree::build(n, edges);
}

// The worked path instance: P_7, C = {v3:3, v4:21, v6:5},
// D = {v1:2, v2:1, v5:1, v7:3} on ids 0..6.
PebblingFn figure_config() {
    PebblingFn c;
    c.set(2, 3);
    c.set(3, 21);
    c.set(5, 5);
    return c;
}

PebblingFn figure_target() {
    PebblingFn d;
    d.set(0, 2);
    d.set(1, 1);
    d.set(4, 1);
    d.set(6, 3);
    return d;
}

}  // namespace

TEST_CASE("greedy collect") {
    Tree p3 = path(3);
    CHECK(greedy_collect(p3, PebblingFn::stack(0, 4), 2) == 1);
    CHECK(greedy_collect(p3, PebblingFn{}, 2) == 0);
    CHECK(greedy_collect(path(7), figure_config(), 0) == 3);
}

TEST_CASE("trivial solvability cases") {
    Tree p2 = path(2);
    PebblingFn d = PebblingFn::stack(1, 1);

    SolveResult same = is_solvable(p2, d, d);
    CHECK(same.verdict == Verdict::Solvable);
    CHECK(same.solution->moves.empty());

    SolveResult one_move = is_solvable(p2, PebblingFn::stack(0, 2), d);
    CHECK(one_move.verdict == Verdict::Solvable);
    REQUIRE(one_move.solution.has_value());
    CHECK(one_move.solution->moves == std::vector<Move>{{0, 1}});
    CHECK(solution_is_valid(p2, PebblingFn::stack(0, 2), d, *one_move.solution));

    CHECK(is_solvable(p2, PebblingFn::stack(0, 1), d).verdict == Verdict::Unsolvable);
}

// The source text for this instance calls it a maximal D-unsolvable
// configuration, but it actually solves D: v4 sends 3 pebbles right
// (serving v5 and, with v6's stack, v7^3) and 7 left (serving v2 and
// v1^2 through v3). The solver and the flow check agree on Solvable;
// the acceptance suite records the discrepancy against the source.
TEST_CASE("figure path instance configuration is solvable") {
    Tree p7 = path(7);
    PebblingFn c = figure_config();
    PebblingFn d = figure_target();

    CHECK(flow_solvable(p7, c, d));
    SolveResult res = is_solvable(p7, c, d, {50'000'000, 50'000'000});
    REQUIRE(res.verdict == Verdict::Solvable);
    REQUIRE(res.solution.has_value());
    CHECK(solution_is_valid(p7, c, d, *res.solution));

    // the explicit 21-move solution, spelled out
    Solution manual;
    for (int i = 0; i < 3; ++i) manual.moves.push_back({3, 4});  // v4 -> v5
    manual.moves.push_back({4, 5});                              // v5 -> v6
    for (int i = 0; i < 3; ++i) manual.moves.push_back({5, 6});  // v6 -> v7
    for (int i = 0; i < 7; ++i) manual.moves.push_back({3, 2});  // v4 -> v3
    for (int i = 0; i < 5; ++i) manual.moves.push_back({2, 1});  // v3 -> v2
    for (int i = 0; i < 2; ++i) manual.moves.push_back({1, 0});  // v2 -> v1
    CHECK(solution_is_valid(p7, c, d, manual));

    // one pebble short anywhere relevant: removing v6's spare breaks it
    PebblingFn tighter = c;
    tighter.add(5, -1);  // v6: 4
    CHECK_FALSE(flow_solvable(p7, tighter, d));
    CHECK(is_solvable(p7, tighter, d, {50'000'000, 50'000'000}).verdict ==
          Verdict::Unsolvable);
}

TEST_CASE("maximality checker") {
    Tree p7 = path(7);
    PebblingFn d = figure_target();

    // {v3:3, v4:21, v6:4} is unsolvable and stays so after adding one
    // pebble on v4, so it is not maximal either
    PebblingFn tighter = figure_config();
    tighter.add(5, -1);
    MaximalityResult m = is_maximal_unsolvable(p7, tighter, d, {50'000'000, 50'000'000});
    CHECK(m.status != Verdict::BudgetExceeded);
    CHECK_FALSE(m.value);

    // a stack of alpha-1 on an endpoint of a path with a pure target is maximal
    Tree p4 = path(4);
    PebblingFn stack = PebblingFn::stack(0, 7);  // alpha(v1, v4) - 1
    MaximalityResult m2 = is_maximal_unsolvable(p4, stack, PebblingFn::stack(3, 1));
    CHECK(m2.value);

    // far pebble does not help: c = 0 is not maximal when a vertex at
    // distance >= 2 exists
    MaximalityResult m3 = is_maximal_unsolvable(p4, PebblingFn{}, PebblingFn::stack(0, 1));
    CHECK_FALSE(m3.value);
}

TEST_CASE("minimalize removes padding and yields an acyclic digraph") {
    Tree p3 = path(3);
    PebblingFn c = PebblingFn::stack(0, 6);
    PebblingFn d = PebblingFn::stack(2, 1);

    Solution padded;
    padded.moves = {{0, 1}, {0, 1}, {0, 1}, {1, 0}, {1, 2}};  // one pair is waste
    REQUIRE(solution_is_valid(p3, c, d, padded));
    Solution min = minimalize(p3, c, d, padded);
    CHECK(min.moves.size() == 3);
    CHECK(solution_is_valid(p3, c, d, min));
    CHECK(solution_digraph_acyclic(min));

    Solution single;
    single.moves = {{0, 1}};
    Solution still = minimalize(p3, PebblingFn::stack(0, 2), PebblingFn::stack(1, 1), single);
    CHECK(still.moves.size() == 1);
}

TEST_CASE("solution stats and attribution") {
    Tree p3 = path(3);

    // two stacks converging on the middle: two sources, merge number 1
    PebblingFn c;
    c.set(0, 2);
    c.set(2, 2);
    PebblingFn d = PebblingFn::stack(1, 2);
    SolveResult res = is_solvable(p3, c, d);
    REQUIRE(res.verdict == Verdict::Solvable);
    Solution min = minimalize(p3, c, d, *res.solution);
    SolutionStats stats = solution_stats(p3, c, d, min);
    CHECK(stats.sources == std::vector<VertexId>{0, 2});
    CHECK(stats.merge_number == 1);
    CHECK(stats.greedy_per_target);

    // Chung witness plus one pebble on the dominant stack: single source
    Tree p5 = path(5);
    PiResult chung = pi_single_target(p5, 0, 2);
    PebblingFn plus = chung.witness;
    plus.add(chung.superstack_leaf);
    PebblingFn target = PebblingFn::stack(0, 2);
    SolveResult aug = is_solvable(p5, plus, target);
    REQUIRE(aug.verdict == Verdict::Solvable);
    Solution aug_min = minimalize(p5, plus, target, *aug.solution);
    SolutionStats aug_stats = solution_stats(p5, plus, target, aug_min);
    CHECK(aug_stats.sources == std::vector<VertexId>{chung.superstack_leaf});
    CHECK(aug_stats.merge_number == 0);

    // externally loaded solutions carry no attribution
    Solution external;
    external.moves = {{0, 1}};
    CHECK_THROWS_AS(solution_stats(p3, c, d, external), AttributionMissingError);
}

TEST_CASE("budget exceeded is reported, not misreported") {
    Tree p5 = path(5);
    PebblingFn c;
    c.set(0, 9);
    c.set(4, 9);
    PebblingFn d;
    d.set(1, 2);
    d.set(3, 2);
    SearchBudget tiny{3, 3};
    SolveResult res = is_solvable(p5, c, d, tiny);
    CHECK(res.verdict == Verdict::BudgetExceeded);
    CHECK(res.states_explored >= 3);
}

TEST_CASE("flow solvability matches the figure derived cases") {
    // deficits double on the way up, surpluses halve on the way down
    Tree p3 = path(3);
    PebblingFn ends;
    ends.set(0, 1);
    ends.set(2, 1);
    CHECK_FALSE(flow_solvable(p3, PebblingFn::stack(1, 3), ends));
    CHECK(flow_solvable(p3, PebblingFn::stack(1, 4), ends));

    Tree star = Tree::build(4, {{0, 1}, {0, 2}, {0, 3}});
    CHECK_FALSE(flow_solvable(star, PebblingFn::stack(1, 3), PebblingFn::stack(2, 1)));
    CHECK(flow_solvable(star, PebblingFn::stack(1, 4), PebblingFn::stack(2, 1)));
}
