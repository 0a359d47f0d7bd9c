// Acceptance suite: one check per numbered criterion, each printing a
// single pass/fail line. Run with a criterion number (1..9) or with no
// arguments for the full list. Exit code 0 iff every selected criterion
// passes.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "pebbling/oracle.hpp"
#include "pebbling/partition.hpp"
#include "pebbling/random_tree.hpp"
#include "pebbling/solver.hpp"
#include "pebbling/target_pebbling.hpp"

using namespace pebbling;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

Tree make_path(int n) {
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Tree::build(n, edges);
}

Tree star4() { return Tree::build(4, {{0, 1}, {0, 2}, {0, 3}}); }

PebblingFn figure_target() {
    PebblingFn d;
    d.set(0, 2);
    d.set(1, 1);
    d.set(4, 1);
    d.set(6, 3);
    return d;
}

PebblingFn figure_config() {
    PebblingFn c;
    c.set(2, 3);
    c.set(3, 21);
    c.set(5, 5);
    return c;
}

struct Criterion {
    int number;
    const char* label;
    std::function<bool(std::string&)> run;
};

// All targets with |D| <= max_total and supp(D) <= max_support on `tree`.
std::vector<PebblingFn> all_targets(const Tree& tree, int max_total, int max_support) {
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

bool criterion_1(std::string& detail) {
    auto start = Clock::now();
    Tree p7 = make_path(7);
    PebblingFn d = figure_target();
    bool ok = true;
    std::ostringstream why;

    auto [path_res, seq] = path_pi(7, d);
    PiResult tree_res = tree_pi(p7, d);
    if (path_res.pi != 212 || tree_res.pi != 212) {
        ok = false;
        why << "pi != 212 (path " << path_res.pi << ", tree " << tree_res.pi << "); ";
    }
    if (seq.f.back() != 211 || seq.f.front() != 166) {
        ok = false;
        why << "f-sequence endpoints " << seq.f.back() << "/" << seq.f.front()
            << " != 211/166; ";
    }

    // The source text asserts {v3:3, v4:21, v6:5} is a maximal D-unsolvable
    // configuration. The exact solver disproves this: the configuration
    // solves D (v4 sends 3 pebbles right and 7 left). The sub-check is kept
    // as stated and therefore fails; see the repository notes.
    SearchBudget budget{100'000'000, 50'000'000};
    SolveResult solve = is_solvable(p7, figure_config(), d, budget);
    bool reported_unsolvable = solve.verdict == Verdict::Unsolvable;
    if (!reported_unsolvable) {
        ok = false;
        why << "figure configuration is "
            << (solve.verdict == Verdict::Solvable ? "Solvable" : "BudgetExceeded")
            << ", not Unsolvable (a replaying 21-move solution exists); ";
    }
    if (reported_unsolvable) {
        MaximalityResult max = is_maximal_unsolvable(p7, figure_config(), d, budget);
        if (!(max.status == Verdict::Unsolvable && max.value)) {
            ok = false;
            why << "figure configuration not maximal; ";
        }
    }

    double secs = seconds_since(start);
    if (secs >= 1.0) {
        ok = false;
        why << "runtime " << secs << "s >= 1s; ";
    }
    detail = why.str();
    if (detail.empty()) detail = "pi=212, f endpoints 211/166";
    return ok;
}

bool criterion_2(std::string& detail) {
    auto start = Clock::now();
    std::ostringstream why;
    bool ok = true;

    for (int n = 1; n <= 64; ++n) {
        PiTFoldResult res = pi_t_fold(make_path(n), 1);
        if (res.value != (Count(1) << (n - 1))) {
            ok = false;
            why << "pi(P_" << n << ") != 2^" << (n - 1) << "; ";
            break;
        }
    }

    Tree star = star4();
    PiTFoldResult fold = pi_t_fold(star, 2);
    if (fold.value != 9) {
        ok = false;
        why << "pi_2(K_{1,3}) = " << fold.value << " != 9; ";
    }
    if (!star.is_leaf(fold.argmax_root)) {
        ok = false;
        why << "argmax root is not a leaf; ";
    }
    PiResult witness = pi_single_target(star, fold.argmax_root, 2);
    bool shape = witness.witness.size() == 8 && witness.witness.get(2) == 7 &&
                 witness.witness.get(3) == 1;
    if (!shape) {
        ok = false;
        why << "extremal witness is not {u^7, v^1}; ";
    }

    double secs = seconds_since(start);
    if (secs >= 1.0) {
        ok = false;
        why << "runtime " << secs << "s >= 1s; ";
    }
    detail = why.str();
    if (detail.empty()) detail = "pi(P_n)=2^(n-1) for n<=64; pi_2(K13)=9 at a leaf";
    return ok;
}

bool criterion_3(std::string& detail) {
    auto start = Clock::now();
    std::ostringstream why;
    bool ok = true;

    for (int n = 2; n <= 10; ++n) {
        PebblingFn all_ones;
        for (int v = 0; v < n; ++v) all_ones.set(v, 1);
        Count pi = tree_pi(make_path(n), all_ones).pi;
        if (pi != (Count(1) << n) - 1) {
            ok = false;
            why << "pi(P_" << n << ", ones) = " << pi << " != 2^n - 1; ";
        }
    }

    Rng rng(303);
    for (int it = 0; it < 50; ++it) {
        int n = 1 + static_cast<int>(rng.below(10));
        Tree t = random_parent_tree(rng, n);
        PebblingFn d;
        for (int v = 0; v < n; ++v) d.set(v, Count(rng.range(1, 3)));
        Count expected = 0;
        for (int v = 0; v < n; ++v) expected = std::max(expected, alpha(t, v, d));
        Count pi = tree_pi(t, d).pi;
        if (pi != expected) {
            ok = false;
            why << "positive target instance " << it << ": " << pi << " != max alpha "
                << expected << "; ";
            break;
        }
    }

    double secs = seconds_since(start);
    if (secs >= 10.0) {
        ok = false;
        why << "runtime " << secs << "s >= 10s; ";
    }
    detail = why.str();
    if (detail.empty()) detail = "cover specialization holds on paths and 50 random trees";
    return ok;
}

bool criterion_4(std::string& detail) {
    auto start = Clock::now();
    std::ostringstream why;
    OracleCaps caps;
    caps.max_nodes = 2'000'000'000ULL;
    long instances = 0;

    for (int n = 1; n <= 7 && why.str().empty(); ++n) {
        for (const Tree& t : tree_catalog(n)) {
            for (const PebblingFn& d : all_targets(t, 3, 3)) {
                Count mine = tree_pi(t, d).pi;
                Count truth = brute_pi(t, d, SupportUniverse::AllVertices, caps).pi;
                ++instances;
                if (mine != truth) {
                    why << "catalog disagreement on n=" << n << " target " << d.to_string(t)
                        << ": formula " << mine << " vs oracle " << truth << "; ";
                    break;
                }
            }
            if (!why.str().empty()) break;
        }
    }

    Rng rng(404);
    for (int it = 0; it < 500 && why.str().empty(); ++it) {
        Tree t = random_parent_tree(rng, 8);
        PebblingFn d;
        int total = 1 + static_cast<int>(rng.below(4));
        for (int k = 0; k < total; ++k) d.add(static_cast<VertexId>(rng.below(8)));
        Count mine = tree_pi(t, d).pi;
        Count truth = brute_pi(t, d, SupportUniverse::AllVertices, caps).pi;
        ++instances;
        if (mine != truth)
            why << "random disagreement at instance " << it << ": formula " << mine
                << " vs oracle " << truth << "; ";
    }

    double secs = seconds_since(start);
    if (secs >= 1800.0) why << "runtime " << secs << "s >= 30min; ";
    detail = why.str();
    if (detail.empty()) {
        std::ostringstream note;
        note << instances << " instances agree (" << static_cast<int>(secs) << "s)";
        detail = note.str();
    }
    return why.str().empty();
}

bool criterion_5(std::string& detail) {
    Tree t = Tree::parse_edge_list_string("v1 v2\nv2 v3\nv3 v4\nv4 v5\nv3 u\n");
    VertexId v1 = *t.find_vertex("v1"), v5 = *t.find_vertex("v5"), u = *t.find_vertex("u");
    PebblingFn d;
    d.set(v1, 1);
    d.set(v5, 1);

    std::ostringstream why;
    PiResult res = tree_pi(t, d);
    Count truth = brute_pi(t, d).pi;
    if (res.pi != 18) why << "formula pi = " << res.pi << " != 18; ";
    if (truth != 18) why << "oracle pi = " << truth << " != 18; ";
    bool direct = res.witness.get(v1) == 16 && res.witness.get(u) == 1;
    bool mirror = res.witness.get(v5) == 16 && res.witness.get(u) == 1;
    if (!direct && !mirror) why << "witness is not {v1^16, u^1} or its mirror; ";
    detail = why.str();
    if (detail.empty()) detail = "pendant instance pins the dead-weight completion";
    return why.str().empty();
}

bool criterion_6(std::string& detail) {
    std::ostringstream why;
    OracleCaps caps;

    for (int n = 1; n <= 6 && why.str().empty(); ++n)
        for (const Tree& t : tree_catalog(n))
            for (const PebblingFn& d : all_targets(t, 2, 2)) {
                if (!check_support_theorem(t, d, caps)) {
                    why << "extremal support escapes the leaves (n=" << n << "); ";
                    break;
                }
                if (!check_observation(t, d, caps)) {
                    why << "a maximal configuration misses an undemanded leaf (n=" << n
                        << "); ";
                    break;
                }
            }

    for (int n = 1; n <= 7 && why.str().empty(); ++n)
        for (const Tree& t : tree_catalog(n))
            for (VertexId r = 0; r < t.n() && why.str().empty(); ++r)
                for (int tm = 1; tm <= 3; ++tm) {
                    PiResult chung = pi_single_target(t, r, tm);
                    PebblingFn target = PebblingFn::stack(r, tm);
                    if (flow_solvable(t, chung.witness, target)) {
                        why << "Chung configuration solvable (n=" << n << "); ";
                        break;
                    }
                    bool all_solve = true;
                    for (VertexId v = 0; v < t.n(); ++v) {
                        PebblingFn plus = chung.witness;
                        plus.add(v);
                        if (!flow_solvable(t, plus, target)) all_solve = false;
                    }
                    if (!all_solve) {
                        why << "Chung configuration plus one pebble stays unsolvable (n="
                            << n << "); ";
                        break;
                    }
                }

    detail = why.str();
    if (detail.empty())
        detail = "support/observation on n<=6, Chung both directions on n<=7, t<=3";
    return why.str().empty();
}

bool criterion_7(std::string& detail) {
    std::ostringstream why;

    for (int n = 1; n <= 7 && why.str().empty(); ++n)
        for (const Tree& t : tree_catalog(n)) {
            auto [lower, upper] = basic_bounds(t);
            Count pi1 = pi_t_fold(t, 1).value;
            if (pi1 < lower || pi1 > upper) {
                why << "basic bounds violated on a catalog tree (n=" << n << "); ";
                break;
            }
            for (const PebblingFn& d : all_targets(t, 3, 2))
                if (strong_target_slack(t, d) < 0) {
                    why << "strong target slack negative on a catalog tree (n=" << n << "); ";
                    break;
                }
        }

    Rng rng(707);
    for (int it = 0; it < 200 && why.str().empty(); ++it) {
        Tree t = random_parent_tree(rng, 1 + static_cast<int>(rng.below(20)));
        auto [lower, upper] = basic_bounds(t);
        Count pi1 = pi_t_fold(t, 1).value;
        if (pi1 < lower || pi1 > upper) why << "basic bounds violated on random " << it << "; ";
        PebblingFn d = random_target(rng, t, 1 + static_cast<int>(rng.below(4)), 3);
        if (strong_target_slack(t, d) < 0)
            why << "strong target slack negative on random " << it << "; ";
    }

    detail = why.str();
    if (detail.empty()) detail = "inequalities hold on the catalog and 200 random instances";
    return why.str().empty();
}

bool criterion_8(std::string& detail) {
    std::ostringstream why;

    auto time_tree_pi = [](int n, std::uint64_t seed) {
        Rng rng(seed);
        Tree t = random_parent_tree(rng, n);
        PebblingFn d = random_target(rng, t, 10, 3);
        double best = 1e9;
        for (int rep = 0; rep < 3; ++rep) {
            auto start = Clock::now();
            PiResult res = tree_pi(t, d);
            double secs = seconds_since(start);
            if (res.pi <= 0) return 1e9;
            best = std::min(best, secs);
        }
        return best;
    };

    double t1 = time_tree_pi(100'000, 808);
    double t2 = time_tree_pi(200'000, 808);
    if (t1 >= 2.0) why << "tree_pi at n=1e5 took " << t1 << "s >= 2s; ";
    if (t1 > 0 && t2 / t1 > 3.0)
        why << "doubling n scaled by " << (t2 / t1) << " > 3; ";

    auto start = Clock::now();
    Rng rng(809);
    Tree t2000 = random_parent_tree(rng, 2000);
    PiTFoldResult fold = pi_t_fold(t2000, 2);
    double fold_secs = seconds_since(start);
    if (fold.value <= 0) why << "pi_t_fold returned nonsense; ";
    if (fold_secs >= 30.0) why << "pi_t_fold at n=2000 took " << fold_secs << "s >= 30s; ";

    detail = why.str();
    if (detail.empty()) {
        std::ostringstream note;
        note.precision(3);
        note << "tree_pi: " << t1 << "s at 1e5, x" << (t2 / t1) << " when doubled; pi_t_fold: "
             << fold_secs << "s";
        detail = note.str();
    }
    return why.str().empty();
}

bool criterion_9(std::string& detail) {
    std::ostringstream why;
    Rng rng(909);
    for (int it = 0; it < 200 && why.str().empty(); ++it) {
        int n = 2 + static_cast<int>(rng.below(29));
        int total = 1 + static_cast<int>(rng.below(8));
        PebblingFn d;
        for (int k = 0; k < total; ++k) d.add(static_cast<VertexId>(rng.below(n)));
        auto [res, seq] = path_pi(n, d);

        if (!seq.matches_increment_formula())
            why << "increment formula violated at instance " << it << "; ";
        for (std::size_t h = 1; h < seq.f.size(); ++h) {
            int mid = seq.indices[h] + seq.indices[h - 1] - (seq.n + 1);
            Count delta = seq.f[h] - seq.f[h - 1];
            bool sign_ok = (mid < 0 && delta < 0) || (mid == 0 && delta == 0) ||
                           (mid > 0 && delta > 0);
            if (!sign_ok) why << "sign rule violated at instance " << it << "; ";
        }
        if (!seq.is_valley_unimodal()) why << "convexity violated at instance " << it << "; ";
        Count max_f = seq.f.front();
        for (const Count& f : seq.f) max_f = std::max(max_f, f);
        if (max_f != std::max(seq.f.front(), seq.f.back()))
            why << "max f not at an endpoint at instance " << it << "; ";
        if (res.pi != max_f + 1) why << "pi != max f + 1 at instance " << it << "; ";
    }
    detail = why.str();
    if (detail.empty()) detail = "200 path instances satisfy the sign rule and endpoint max";
    return why.str().empty();
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<Criterion> criteria = {
        {1, "figure path instance", criterion_1},
        {2, "Chung reproduction", criterion_2},
        {3, "cover pebbling specialization", criterion_3},
        {4, "oracle equivalence", criterion_4},
        {5, "dead-weight pin", criterion_5},
        {6, "structural theorems at desk scale", criterion_6},
        {7, "inequality suite", criterion_7},
        {8, "complexity smoke test", criterion_8},
        {9, "unimodality property", criterion_9},
    };

    int selected = 0;
    if (argc > 1) selected = std::atoi(argv[1]);

    bool all_ok = true;
    for (const Criterion& c : criteria) {
        if (selected != 0 && c.number != selected) continue;
        std::string detail;
        bool ok = c.run(detail);
        std::printf("criterion %d (%s): %s - %s\n", c.number, c.label,
                    ok ? "PASS" : "FAIL", detail.c_str());
        std::fflush(stdout);
        all_ok = all_ok && ok;
    }
    return all_ok ? 0 : 1;
}
