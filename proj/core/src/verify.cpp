#include "pebbling/verify.hpp"

#include <algorithm>
#include <sstream>

#include "pebbling/hull.hpp"
#include "pebbling/partition.hpp"
#include "pebbling/random_tree.hpp"
#include "pebbling/solver.hpp"
#include "pebbling/target_pebbling.hpp"

namespace pebbling {

namespace {

struct Ctx {
    const VerifyOptions& opt;
    Rng rng;
    std::vector<Tree> catalog;        // all trees up to opt.catalog_max_n
    std::vector<Tree> small_catalog;  // up to 5 vertices, for solver cross-checks
    TreePiOptions formula_options;

    explicit Ctx(const VerifyOptions& o) : opt(o), rng(o.seed) {
        for (int n = 1; n <= o.catalog_max_n; ++n)
            for (Tree& t : tree_catalog(n)) catalog.push_back(std::move(t));
        for (int n = 1; n <= 5; ++n)
            for (Tree& t : tree_catalog(n)) small_catalog.push_back(std::move(t));
        formula_options.include_dead_weight = !o.mutate_no_dead_weight;
    }

    Tree random_tree(int max_n) {
        return random_parent_tree(rng, 1 + static_cast<int>(rng.below(max_n)));
    }
};

// The two fixtures that pin the dead-weight completion: a pendant vertex,
// and a longer tail hanging off an interior hull vertex.
Tree pendant_fixture() {
    return Tree::parse_edge_list_string("v1 v2\nv2 v3\nv3 v4\nv4 v5\nv3 u\n");
}

Tree tail_fixture() {
    return Tree::parse_edge_list_string("0 1\n1 2\n1 3\n3 4\n");  // P3 + tail of length 2 at v2
}

// All targets on `tree` with |D| <= max_total and support <= max_support.
std::vector<PebblingFn> enumerate_targets(const Tree& tree, int max_total, int max_support) {
    std::vector<PebblingFn> out;
    std::vector<std::pair<VertexId, int>> stack;
    std::function<void(VertexId, int)> rec = [&](VertexId from, int used) {
        if (!stack.empty()) {
            PebblingFn d;
            for (auto [v, c] : stack) d.set(v, c);
            out.push_back(std::move(d));
        }
        if (static_cast<int>(stack.size()) == max_support) return;
        for (VertexId v = from; v < tree.n(); ++v)
            for (int c = 1; used + c <= max_total; ++c) {
                stack.emplace_back(v, c);
                rec(v + 1, used + c);
                stack.pop_back();
            }
    };
    rec(0, 0);
    return out;
}

using Check = std::function<void(Ctx&, PropertyResult&)>;

void fail(PropertyResult& r, const std::string& detail) {
    r.passed = false;
    if (r.detail.empty()) r.detail = detail;
}

// ---- graph-core ------------------------------------------------------------

void check_distances(Ctx& ctx, PropertyResult& r) {
    for (int it = 0; it < 30; ++it) {
        Tree t = ctx.random_tree(60);
        VertexId v = static_cast<VertexId>(ctx.rng.below(t.n()));
        auto dist = t.distances_from(v);
        int zeros = 0;
        for (int u = 0; u < t.n(); ++u) zeros += dist[u] == 0;
        if (zeros != 1) fail(r, "distance zero set is not a singleton");
        for (auto [a, b] : t.edges())
            if (std::abs(dist[a] - dist[b]) > 1) fail(r, "adjacent distance gap exceeds 1");
        ++r.instances;
    }
}

void check_hull_determinism(Ctx& ctx, PropertyResult& r) {
    for (int it = 0; it < 30; ++it) {
        Tree t = ctx.random_tree(40);
        PebblingFn d = random_target(ctx.rng, t, 1 + static_cast<int>(ctx.rng.below(3)), 2);
        auto h1 = convex_hull(t, d);

        auto edges = t.edges();
        for (std::size_t i = edges.size(); i > 1; --i) {
            std::size_t j = ctx.rng.below(i);
            std::swap(edges[i - 1], edges[j]);
            if (ctx.rng.below(2)) std::swap(edges[i - 1].first, edges[i - 1].second);
        }
        Tree shuffled = Tree::build(t.n(), edges);
        auto h2 = convex_hull(shuffled, d);
        if (h1.hull_vertices != h2.hull_vertices || h1.hull_leaves != h2.hull_leaves)
            fail(r, "hull depends on edge input order");
        if (h1.anchor != h2.anchor) fail(r, "hanging attachment depends on edge input order");
        ++r.instances;
    }
}

void check_hull_cover(Ctx& ctx, PropertyResult& r) {
    for (int it = 0; it < 30; ++it) {
        Tree t = ctx.random_tree(40);
        PebblingFn d = random_target(ctx.rng, t, 1 + static_cast<int>(ctx.rng.below(4)), 2);
        auto h = convex_hull(t, d);
        std::vector<int> seen(t.n(), 0);
        for (VertexId z : h.hull_vertices) {
            ++seen[z];
            for (VertexId u : h.hanging[z]) ++seen[u];
        }
        for (int v = 0; v < t.n(); ++v)
            if (seen[v] != 1) fail(r, "hull + hanging subtrees do not partition V");
        for (const auto& [v, c] : d.entries())
            if (!h.is_hull_vertex(v)) fail(r, "hull misses a target vertex");
        ++r.instances;
    }
}

void check_fn_algebra(Ctx& ctx, PropertyResult& r) {
    for (int it = 0; it < 50; ++it) {
        PebblingFn f;
        std::map<VertexId, Count> model;
        for (int step = 0; step < 40; ++step) {
            VertexId v = static_cast<VertexId>(ctx.rng.below(10));
            Count c = Count(ctx.rng.below(100));
            if (ctx.rng.below(2)) {
                f.set(v, c);
                if (c == 0) model.erase(v); else model[v] = c;
            } else {
                f.add(v, c);
                model[v] += c;
                if (model[v] == 0) model.erase(v);
            }
        }
        Count total = 0;
        for (auto& [v, c] : model) total += c;
        if (f.size() != total || f.support_size() != static_cast<int>(model.size()))
            fail(r, "size/support cache out of sync after mutations");

        PebblingFn g = f;
        g += f;
        g -= f;
        if (!(g == f)) fail(r, "f + f - f != f");
        ++r.instances;
    }
}

// ---- partition -------------------------------------------------------------

void check_partition_validity(Ctx& ctx, PropertyResult& r) {
    for (int it = 0; it < 40; ++it) {
        Tree t = ctx.random_tree(200);
        VertexId root = static_cast<VertexId>(ctx.rng.below(t.n()));
        PathPartition p = max_path_partition(t, root);
        if (!partition_is_valid(t, p)) fail(r, "greedy partition invalid");
        int expect = 0;
        for (VertexId v : t.leaves()) expect += v != root;
        if (t.n() > 1 && p.path_count() != expect)
            fail(r, "path count differs from leaves other than the root");
        for (std::size_t i = 1; i < p.lengths.size(); ++i)
            if (p.lengths[i] > p.lengths[i - 1]) fail(r, "greedy lengths not nonincreasing");
        ++r.instances;
    }
}

void check_partition_majorization(Ctx& ctx, PropertyResult& r) {
    for (int n = 2; n <= 8; ++n)
        for (const Tree& t : tree_catalog(n))
            for (VertexId root = 0; root < t.n(); ++root) {
                PathPartition mine = max_path_partition(t, root);
                std::vector<int> lengths = mine.lengths;
                std::sort(lengths.rbegin(), lengths.rend());
                for (const auto& other : enumerate_partitions(t, root))
                    if (!majorizes_or_equal(lengths, other.sorted_lengths)) {
                        fail(r, "greedy multiset majorized by another partition (n=" +
                                    std::to_string(n) + ")");
                    }
                ++r.instances;
            }
    (void)ctx;
}

void check_chung_extremal(Ctx& ctx, PropertyResult& r) {
    for (const Tree& t : ctx.catalog) {
        for (VertexId root = 0; root < t.n(); ++root) {
            for (int tm = 1; tm <= 3; ++tm) {
                PiResult res = pi_single_target(t, root, tm);
                PebblingFn target = PebblingFn::stack(root, tm);
                for (const auto& [v, c] : res.witness.entries())
                    if (!t.is_leaf(v)) fail(r, "Chung witness support off the leaves");
                if (flow_solvable(t, res.witness, target))
                    fail(r, "Chung witness is solvable");
                for (VertexId v = 0; v < t.n(); ++v) {
                    PebblingFn plus = res.witness;
                    plus.add(v);
                    if (!flow_solvable(t, plus, target))
                        fail(r, "Chung witness plus one pebble stays unsolvable");
                }
                ++r.instances;
            }
        }
    }
    // Spot-check the search-based solver against the same facts.
    for (const Tree& t : ctx.small_catalog) {
        VertexId root = static_cast<VertexId>(ctx.rng.below(t.n()));
        PiResult res = pi_single_target(t, root, 2);
        PebblingFn target = PebblingFn::stack(root, 2);
        if (is_solvable(t, res.witness, target).verdict != Verdict::Unsolvable)
            fail(r, "search solver disagrees on Chung witness");
        ++r.instances;
    }
}

void check_dead_weight_oracle(Ctx& ctx, PropertyResult& r) {
    OracleCaps caps = ctx.opt.caps;
    caps.max_n = 7;
    for (int it = 0; it < 25; ++it) {
        Tree t = ctx.random_tree(9);
        PebblingFn d = random_target(ctx.rng, t, 1 + static_cast<int>(ctx.rng.below(2)), 2);
        HullDecomposition hull = convex_hull(t, d);
        for (VertexId z : hull.hull_vertices) {
            if (hull.hanging_trivial(z)) continue;
            auto mask = hull.hanging_mask(z);
            auto [sub, to_old] = extract_subtree(t, mask);
            if (sub.n() > 7) continue;
            VertexId sub_z = -1;
            for (VertexId i = 0; i < sub.n(); ++i)
                if (to_old[i] == z) sub_z = i;
            Count expected = brute_pi(sub, PebblingFn::stack(sub_z, 1),
                                      SupportUniverse::AllVertices, caps)
                                 .pi -
                             1;
            if (dead_weight(t, mask, z) != expected)
                fail(r, "dead weight differs from oracle maximum");
            ++r.instances;
        }
    }
}

// ---- solver ----------------------------------------------------------------

void check_flow_vs_search(Ctx& ctx, PropertyResult& r) {
    for (const Tree& t : ctx.small_catalog) {
        for (int it = 0; it < 12; ++it) {
            PebblingFn c = random_target(ctx.rng, t, 1 + static_cast<int>(ctx.rng.below(t.n())), 6);
            if (ctx.rng.below(4) == 0) c = PebblingFn();  // empty supply
            PebblingFn d = random_target(ctx.rng, t, 1 + static_cast<int>(ctx.rng.below(2)), 3);
            SolveResult sr = is_solvable(t, c, d);
            if (sr.verdict == Verdict::BudgetExceeded) continue;
            bool flow = flow_solvable(t, c, d);
            if (flow != (sr.verdict == Verdict::Solvable))
                fail(r, "flow feasibility and search verdict disagree on " + c.to_string(t) +
                            " -> " + d.to_string(t));
            if (sr.verdict == Verdict::Solvable && !solution_is_valid(t, c, d, *sr.solution))
                fail(r, "solvable verdict with invalid witness");
            ++r.instances;
        }
    }
}

void check_weight_monotone(Ctx& ctx, PropertyResult& r) {
    for (int it = 0; it < 60; ++it) {
        Tree t = ctx.random_tree(12);
        PebblingFn c = random_target(ctx.rng, t, 1 + static_cast<int>(ctx.rng.below(t.n())), 8);
        std::vector<std::pair<VertexId, VertexId>> moves;
        for (const auto& [v, cnt] : c.entries())
            if (cnt >= 2)
                for (VertexId w : t.neighbors(v)) moves.emplace_back(v, w);
        if (moves.empty()) continue;
        auto [x, y] = moves[ctx.rng.below(moves.size())];
        PebblingFn after = c;
        after.add(x, -2);
        after.add(y, 1);
        for (VertexId u = 0; u < t.n(); ++u) {
            auto dist = t.distances_from(u);
            Count before_pot = 0, after_pot = 0;
            for (const auto& [v, cnt] : c.entries()) before_pot += cnt << (t.n() - dist[v]);
            for (const auto& [v, cnt] : after.entries()) after_pot += cnt << (t.n() - dist[v]);
            if (after_pot > before_pot) fail(r, "weight potential increased under a move");
        }
        ++r.instances;
    }
}

void check_greedy_collect(Ctx& ctx, PropertyResult& r) {
    for (const Tree& t : ctx.small_catalog) {
        if (t.n() > 6) continue;
        for (int it = 0; it < 8; ++it) {
            PebblingFn c = random_target(ctx.rng, t, 1 + static_cast<int>(ctx.rng.below(t.n())), 4);
            if (c.size() > 12) continue;
            VertexId root = static_cast<VertexId>(ctx.rng.below(t.n()));
            Count mine = greedy_collect(t, c, root);
            // exhaustive reference: largest k the search solver can deliver
            Count k = 0;
            while (is_solvable(t, c, PebblingFn::stack(root, k + 1)).verdict == Verdict::Solvable)
                ++k;
            if (mine != k)
                fail(r, "greedy_collect disagrees with exhaustive maximum on " + c.to_string(t));
            ++r.instances;
        }
    }
}

void check_minimalize(Ctx& ctx, PropertyResult& r) {
    for (const Tree& t : ctx.small_catalog) {
        for (int it = 0; it < 6; ++it) {
            PebblingFn c = random_target(ctx.rng, t, 1 + static_cast<int>(ctx.rng.below(t.n())), 6);
            PebblingFn d = random_target(ctx.rng, t, 1 + static_cast<int>(ctx.rng.below(2)), 2);
            SolveResult sr = is_solvable(t, c, d);
            if (sr.verdict != Verdict::Solvable || !sr.solution) continue;
            Solution min = minimalize(t, c, d, *sr.solution);
            if (!solution_is_valid(t, c, d, min)) fail(r, "minimalized solution invalid");
            if (!solution_digraph_acyclic(min)) fail(r, "minimal solution digraph has a cycle");
            for (std::size_t i = 0; i < min.moves.size(); ++i) {
                Solution trial;
                trial.moves = min.moves;
                trial.moves.erase(trial.moves.begin() + static_cast<long>(i));
                if (solution_is_valid(t, c, d, trial)) fail(r, "minimal solution still reducible");
            }
            ++r.instances;
        }
    }
}

void check_single_source(Ctx& ctx, PropertyResult& r) {
    for (const Tree& t : ctx.small_catalog) {
        for (int it = 0; it < 4; ++it) {
            PebblingFn d = random_target(ctx.rng, t, 1 + static_cast<int>(ctx.rng.below(2)), 2);
            PiResult res = tree_pi(t, d);
            PebblingFn plus = res.witness;
            plus.add(res.superstack_leaf);
            SolveResult sr = is_solvable(t, plus, d);
            if (sr.verdict != Verdict::Solvable) {
                fail(r, "superstack witness plus its own pebble unsolvable");
                continue;
            }
            Solution min = minimalize(t, plus, d, *sr.solution);
            SolutionStats stats = solution_stats(t, plus, d, min);
            if (stats.merge_number != 0) fail(r, "minimal superstack solution merges");
            for (VertexId s : stats.sources)
                if (s != res.superstack_leaf && res.witness.get(s) == 0 && d.get(s) == 0)
                    fail(r, "superstack solution pulls from an unexpected source");
            if (stats.sources.size() > 1) fail(r, "superstack solution has several sources");
            ++r.instances;
        }
    }
}

// ---- formula vs oracle -----------------------------------------------------

void check_oracle_agreement(Ctx& ctx, PropertyResult& r) {
    // Fixed fixtures first: these pin the dead-weight completion.
    struct Fixed {
        Tree tree;
        PebblingFn d;
    };
    std::vector<Fixed> fixed;
    {
        Tree p = pendant_fixture();
        PebblingFn d;
        d.set(*p.find_vertex("v1"), 1);
        d.set(*p.find_vertex("v5"), 1);
        fixed.push_back({std::move(p), std::move(d)});
        Tree tail = tail_fixture();
        PebblingFn d2;
        d2.set(0, 1);
        d2.set(2, 1);
        fixed.push_back({std::move(tail), std::move(d2)});
    }
    for (const auto& [t, d] : fixed) {
        Count mine = tree_pi(t, d, ctx.formula_options).pi;
        Count truth = brute_pi(t, d, ctx.opt.support, ctx.opt.caps).pi;
        if (mine != truth)
            fail(r, "formula disagrees with oracle on a hanging-subtree fixture: " +
                        mine.str() + " vs " + truth.str());
        ++r.instances;
    }

    for (const Tree& t : ctx.catalog) {
        for (const PebblingFn& d : enumerate_targets(t, 3, 2)) {
            Count mine = tree_pi(t, d, ctx.formula_options).pi;
            Count truth = brute_pi(t, d, ctx.opt.support, ctx.opt.caps).pi;
            if (mine != truth) {
                fail(r, "formula " + mine.str() + " != oracle " + truth.str() + " on n=" +
                            std::to_string(t.n()) + " target " + d.to_string(t));
                return;
            }
            ++r.instances;
        }
    }

    int budget = std::min(ctx.opt.random_instances, 100);
    for (int it = 0; it < budget; ++it) {
        Tree t = ctx.random_tree(ctx.opt.random_max_n);
        PebblingFn d = random_target(ctx.rng, t, 1 + static_cast<int>(ctx.rng.below(3)),
                                     2);
        if (d.size() > ctx.opt.max_target_size) continue;
        Count mine = tree_pi(t, d, ctx.formula_options).pi;
        Count truth = brute_pi(t, d, ctx.opt.support, ctx.opt.caps).pi;
        if (mine != truth) {
            fail(r, "formula " + mine.str() + " != oracle " + truth.str() + " on random n=" +
                        std::to_string(t.n()));
            return;
        }
        ++r.instances;
    }
}

void check_witness_validity(Ctx& ctx, PropertyResult& r) {
    for (const Tree& t : ctx.catalog) {
        if (t.n() > 6) continue;
        for (int it = 0; it < 3; ++it) {
            PebblingFn d = random_target(ctx.rng, t, 1 + static_cast<int>(ctx.rng.below(3)), 2);
            PiResult res = tree_pi(t, d);
            if (res.witness.size() != res.pi - 1) fail(r, "witness size is not pi - 1");
            for (const auto& [v, c] : res.witness.entries())
                if (!t.is_leaf(v)) fail(r, "witness support off the leaves");
            if (flow_solvable(t, res.witness, d)) fail(r, "witness solvable");
            for (VertexId v = 0; v < t.n(); ++v) {
                PebblingFn plus = res.witness;
                plus.add(v);
                if (!flow_solvable(t, plus, d)) fail(r, "witness not maximal");
            }
            Count stack_height = res.witness.get(res.superstack_leaf);
            for (const auto& [v, c] : res.witness.entries())
                if (c > stack_height) fail(r, "superstack is not the tallest stack");
            if (!flow_solvable(t, PebblingFn::stack(res.superstack_leaf, stack_height + 1), d))
                fail(r, "superstack plus one does not solve alone");
            ++r.instances;
        }
    }
}

void check_path_consistency(Ctx& ctx, PropertyResult& r) {
    for (int it = 0; it < 60; ++it) {
        int n = 1 + static_cast<int>(ctx.rng.below(12));
        std::vector<std::pair<VertexId, VertexId>> edges;
        for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
        Tree t = Tree::build(n, edges);
        PebblingFn d = random_target(ctx.rng, t, 1 + static_cast<int>(ctx.rng.below(3)), 3);
        auto [path_res, seq] = path_pi(n, d);
        PiResult tree_res = tree_pi(t, d);
        if (path_res.pi != tree_res.pi)
            fail(r, "path formula and tree formula disagree: " + path_res.pi.str() + " vs " +
                        tree_res.pi.str());
        if (flow_solvable(t, path_res.witness, d)) fail(r, "path witness solvable");
        ++r.instances;
    }
}

void check_unimodality(Ctx& ctx, PropertyResult& r) {
    for (int it = 0; it < ctx.opt.random_instances; ++it) {
        int n = 2 + static_cast<int>(ctx.rng.below(29));
        std::vector<std::pair<VertexId, VertexId>> edges;
        for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
        Tree t = Tree::build(n, edges);
        int t_total = 1 + static_cast<int>(ctx.rng.below(8));
        PebblingFn d;
        for (int k = 0; k < t_total; ++k) d.add(static_cast<VertexId>(ctx.rng.below(n)));
        auto [res, seq] = path_pi(n, d);
        if (!seq.matches_increment_formula()) fail(r, "f-sequence increments off the formula");
        if (!seq.is_valley_unimodal()) fail(r, "f-sequence is not valley-unimodal");
        for (std::size_t h = 1; h < seq.f.size(); ++h) {
            int mid = seq.indices[h] + seq.indices[h - 1] - (seq.n + 1);
            Count delta = seq.f[h] - seq.f[h - 1];
            if ((mid < 0) != (delta < 0) || (mid == 0) != (delta == 0))
                fail(r, "f-sequence sign rule violated");
        }
        Count max_f = *std::max_element(seq.f.begin(), seq.f.end());
        if (max_f != std::max(seq.f.front(), seq.f.back()))
            fail(r, "max of f-sequence not at an endpoint");
        if (res.pi != max_f + 1) fail(r, "pi differs from max endpoint + 1");
        ++r.instances;
    }
}

void check_monotonicity(Ctx& ctx, PropertyResult& r) {
    for (int it = 0; it < 50; ++it) {
        Tree t = ctx.random_tree(30);
        PebblingFn d = random_target(ctx.rng, t, 1 + static_cast<int>(ctx.rng.below(3)), 2);
        PebblingFn bigger = d;
        bigger.add(static_cast<VertexId>(ctx.rng.below(t.n())));
        if (tree_pi(t, d).pi > tree_pi(t, bigger).pi)
            fail(r, "pi decreased after adding a demand unit");
        ++r.instances;
    }
}

void check_single_target_reduction(Ctx& ctx, PropertyResult& r) {
    for (int it = 0; it < 40; ++it) {
        Tree t = ctx.random_tree(50);
        VertexId root = static_cast<VertexId>(ctx.rng.below(t.n()));
        Count tm = 1 + ctx.rng.below(4);
        PiResult direct = pi_single_target(t, root, tm);
        PiResult general = tree_pi(t, PebblingFn::stack(root, tm));
        if (direct.pi != general.pi)
            fail(r, "single-target reduction mismatch: " + direct.pi.str() + " vs " +
                        general.pi.str());
        if (!(direct.witness == general.witness)) fail(r, "single-target witnesses differ");
        ++r.instances;
    }
}

void check_target_conjectures(Ctx& ctx, PropertyResult& r) {
    for (const Tree& t : ctx.catalog) {
        for (int it = 0; it < 2; ++it) {
            PebblingFn d = random_target(ctx.rng, t, 1 + static_cast<int>(ctx.rng.below(3)), 2);
            if (strong_target_slack(t, d) < 0) fail(r, "strong target inequality violated");
            if (tree_pi(t, d).pi > pi_t_fold(t, d.size()).value)
                fail(r, "weak target inequality violated");
            ++r.instances;
        }
    }
    for (int it = 0; it < 30; ++it) {
        Tree t = ctx.random_tree(20);
        PebblingFn d = random_target(ctx.rng, t, 1 + static_cast<int>(ctx.rng.below(4)), 3);
        if (strong_target_slack(t, d) < 0) fail(r, "strong target inequality violated (random)");
        ++r.instances;
    }
}

void check_cover_pebbling(Ctx& ctx, PropertyResult& r) {
    for (int it = 0; it < 40; ++it) {
        Tree t = ctx.random_tree(10);
        PebblingFn d;
        for (VertexId v = 0; v < t.n(); ++v) d.set(v, Count(ctx.rng.range(1, 3)));
        Count expected = 0;
        for (VertexId v = 0; v < t.n(); ++v) expected = std::max(expected, alpha(t, v, d));
        PiResult res = tree_pi(t, d);
        if (res.pi != expected) fail(r, "positive-target pi differs from max alpha");
        if (!res.witness.is_stacked() && t.n() > 1)
            fail(r, "positive-target witness is not a single stack");
        ++r.instances;
    }
}

void check_basic_bounds(Ctx& ctx, PropertyResult& r) {
    for (const Tree& t : ctx.catalog) {
        auto [lower, upper] = basic_bounds(t);
        Count pi1 = pi_t_fold(t, 1).value;
        if (pi1 < lower || pi1 > upper) fail(r, "pi_1 escapes the basic bounds");
        ++r.instances;
    }
    for (int it = 0; it < 30; ++it) {
        Tree t = ctx.random_tree(40);
        auto [lower, upper] = basic_bounds(t);
        Count pi1 = pi_t_fold(t, 1).value;
        if (pi1 < lower || pi1 > upper) fail(r, "pi_1 escapes the basic bounds (random)");
        ++r.instances;
    }
}

// ---- oracle internals ------------------------------------------------------

void check_oracle_self_consistency(Ctx& ctx, PropertyResult& r) {
    for (const Tree& t : ctx.catalog) {
        if (t.n() > 6) continue;
        for (int it = 0; it < 2; ++it) {
            PebblingFn d = random_target(ctx.rng, t, 1 + static_cast<int>(ctx.rng.below(2)), 2);
            Count all = brute_pi(t, d, SupportUniverse::AllVertices, ctx.opt.caps).pi;
            Count leaves = brute_pi(t, d, SupportUniverse::LeavesOnly, ctx.opt.caps).pi;
            if (all != leaves) fail(r, "leaf-support oracle differs from all-vertex oracle");
            ++r.instances;
        }
    }
}

void check_oracle_single_target(Ctx& ctx, PropertyResult& r) {
    for (const Tree& t : ctx.catalog) {
        if (t.n() > 6) continue;
        VertexId root = static_cast<VertexId>(ctx.rng.below(t.n()));
        for (int tm = 1; tm <= 2; ++tm) {
            Count truth = brute_pi(t, PebblingFn::stack(root, tm), SupportUniverse::AllVertices,
                                   ctx.opt.caps)
                              .pi;
            if (truth != pi_single_target(t, root, tm).pi)
                fail(r, "oracle and Chung formula disagree");
            ++r.instances;
        }
    }
}

void check_structure_theorems(Ctx& ctx, PropertyResult& r) {
    for (const Tree& t : ctx.catalog) {
        if (t.n() > 6) continue;
        for (const PebblingFn& d : enumerate_targets(t, 2, 2)) {
            if (!check_support_theorem(t, d, ctx.opt.caps))
                fail(r, "extremal support escapes the leaves");
            if (!check_observation(t, d, ctx.opt.caps))
                fail(r, "maximal configuration misses an undemanded leaf");
            ++r.instances;
        }
        if (!r.passed) return;
    }
}

}  // namespace

std::vector<PropertyResult> run_verification(
    const VerifyOptions& options,
    const std::function<void(const PropertyResult&)>& on_result) {
    Ctx ctx(options);

    std::vector<std::pair<std::string, Check>> checks = {
        {"tree-distances", check_distances},
        {"hull-edge-order-independence", check_hull_determinism},
        {"hull-cover", check_hull_cover},
        {"pebbling-fn-algebra", check_fn_algebra},
        {"partition-validity", check_partition_validity},
        {"partition-majorization", check_partition_majorization},
        {"chung-extremal-both-directions", check_chung_extremal},
        {"dead-weight-vs-oracle", check_dead_weight_oracle},
        {"flow-vs-search-solver", check_flow_vs_search},
        {"weight-potential-monotone", check_weight_monotone},
        {"greedy-collect-exhaustive", check_greedy_collect},
        {"minimalize-acyclic", check_minimalize},
        {"superstack-single-source", check_single_source},
        {"formula-vs-oracle", check_oracle_agreement},
        {"witness-validity", check_witness_validity},
        {"path-tree-consistency", check_path_consistency},
        {"f-sequence-unimodality", check_unimodality},
        {"pi-monotonicity", check_monotonicity},
        {"single-target-reduction", check_single_target_reduction},
        {"target-inequalities", check_target_conjectures},
        {"cover-pebbling", check_cover_pebbling},
        {"basic-bounds", check_basic_bounds},
        {"oracle-self-consistency", check_oracle_self_consistency},
        {"oracle-single-target", check_oracle_single_target},
        {"structure-theorems", check_structure_theorems},
    };

    std::vector<PropertyResult> results;
    for (auto& [name, fn] : checks) {
        PropertyResult r{name, true, 0, ""};
        try {
            fn(ctx, r);
        } catch (const std::exception& e) {
            r.passed = false;
            r.detail = std::string("exception: ") + e.what();
        }
        if (on_result) on_result(r);
        results.push_back(std::move(r));
    }
    return results;
}

bool all_passed(const std::vector<PropertyResult>& results) {
    return std::all_of(results.begin(), results.end(),
                       [](const PropertyResult& r) { return r.passed; });
}

}  // namespace pebbling
