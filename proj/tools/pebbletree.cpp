// Command line front end: exact target pebbling numbers on trees, a
// solvability checker, instance generation and the verification harness.
//
// Exit codes: 0 success, 1 property violation, 2 parse error, 3 semantic
// error (empty target), 4 budget exceeded.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "pebbling/json_io.hpp"
#include "pebbling/partition.hpp"
#include "pebbling/random_tree.hpp"
#include "pebbling/solver.hpp"
#include "pebbling/target_pebbling.hpp"
#include "pebbling/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitParse = 2;
constexpr int kExitSemantic = 3;
constexpr int kExitBudget = 4;

using pebbling::Count;
using pebbling::Json;
using pebbling::PebblingFn;
using pebbling::Tree;

pebbling::SearchBudget default_budget() {
    pebbling::SearchBudget budget;
    if (const char* env = std::getenv("PEBBLETREE_BUDGET")) {
        try {
            budget.max_states = std::stoull(env);
            budget.max_memo_entries = budget.max_states;
        } catch (const std::exception&) {
            std::cerr << "warning: ignoring malformed PEBBLETREE_BUDGET\n";
        }
    }
    return budget;
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_pi(const std::string& tree_file, const std::string& target_spec, bool check) {
    Tree tree = Tree::load_edge_list(tree_file);
    PebblingFn d = pebbling::parse_target_spec(tree, target_spec);
    if (d.empty()) {
        std::cerr << "warning: empty target, pi defined as 0\n";
        Json j;
        j["pi"] = "0";
        emit(j);
        return kExitSemantic;
    }
    pebbling::PiResult res = pebbling::tree_pi(tree, d);

    Json j;
    j["pi"] = pebbling::count_to_string(res.pi);
    j["superstack_leaf"] = tree.display_name(res.superstack_leaf);
    j["witness"] = pebbling::pebbling_fn_to_json(tree, res.witness);
    j["candidates"] = pebbling::candidates_to_json(tree, res.candidates);

    if (check) {
        bool size_ok = res.witness.size() == res.pi - 1;
        bool unsolvable = !pebbling::flow_solvable(tree, res.witness, d);
        Count stack_height = res.witness.get(res.superstack_leaf);
        bool superstack_ok = pebbling::flow_solvable(
            tree, PebblingFn::stack(res.superstack_leaf, stack_height + 1), d);
        Json c;
        c["witness_size_is_pi_minus_1"] = size_ok;
        c["witness_unsolvable"] = unsolvable;
        c["superstack_plus_one_solves"] = superstack_ok;
        j["check"] = std::move(c);
        emit(j);
        return (size_ok && unsolvable && superstack_ok) ? kExitOk : kExitViolation;
    }
    emit(j);
    return kExitOk;
}

int cmd_pi_t(const std::string& tree_file, const std::string& t_str) {
    Tree tree = Tree::load_edge_list(tree_file);
    Count t = pebbling::count_from_string(t_str);
    if (t < 1) throw pebbling::ParseError("t must be a positive integer");
    pebbling::PiTFoldResult res = pebbling::pi_t_fold(tree, t);
    Json j;
    j["pi_t"] = pebbling::count_to_string(res.value);
    j["argmax_root"] = tree.display_name(res.argmax_root);
    Json per_root = Json::array();
    for (const Count& c : res.per_root) per_root.push_back(pebbling::count_to_string(c));
    j["per_root"] = std::move(per_root);
    emit(j);
    return kExitOk;
}

int cmd_solve(const std::string& tree_file, const std::string& config_spec,
              const std::string& target_spec) {
    Tree tree = Tree::load_edge_list(tree_file);
    PebblingFn c = pebbling::parse_target_spec(tree, config_spec);
    PebblingFn d = pebbling::parse_target_spec(tree, target_spec);
    if (d.empty()) throw pebbling::EmptyTargetError();

    pebbling::SolveResult res = pebbling::is_solvable(tree, c, d, default_budget());
    Json j;
    switch (res.verdict) {
        case pebbling::Verdict::Solvable:
            j["solvable"] = true;
            if (res.solution) j["moves"] = pebbling::solution_to_json(tree, *res.solution);
            break;
        case pebbling::Verdict::Unsolvable:
            j["solvable"] = false;
            break;
        case pebbling::Verdict::BudgetExceeded:
            j["verdict"] = "budget_exceeded";
            break;
    }
    j["states_explored"] = res.states_explored;
    emit(j);
    return res.verdict == pebbling::Verdict::BudgetExceeded ? kExitBudget : kExitOk;
}

int cmd_verify(const pebbling::VerifyOptions& options) {
    bool ok = true;
    auto results = pebbling::run_verification(options, [&](const pebbling::PropertyResult& r) {
        if (r.passed) {
            std::cout << "ok   " << r.name << " (" << r.instances << " instances)\n";
        } else {
            ok = false;
            std::cout << "FAIL " << r.name << ": " << r.detail << "\n";
        }
    });
    std::cout << (ok ? "verification passed" : "verification FAILED") << " ("
              << results.size() << " properties)\n";
    return ok ? kExitOk : kExitViolation;
}

int cmd_random(std::uint64_t seed, int n, int target_size, int max_count,
               const std::string& out_path) {
    pebbling::Rng rng(seed);
    pebbling::Instance inst;
    inst.tree = pebbling::random_parent_tree(rng, n);
    inst.target = pebbling::random_target(rng, inst.tree, target_size, max_count);
    inst.seed = seed;
    inst.generator = "parent-attachment-v1";
    Json j = pebbling::instance_to_json(inst);
    if (out_path.empty()) {
        emit(j);
    } else {
        std::ofstream out(out_path);
        if (!out) throw pebbling::ParseError("cannot open output file: " + out_path);
        out << j.dump(2) << "\n";
    }
    return kExitOk;
}

int cmd_dot(const std::string& tree_file) {
    Tree tree = Tree::load_edge_list(tree_file);
    std::cout << "graph tree {\n";
    for (auto [u, v] : tree.edges())
        std::cout << "  \"" << tree.display_name(u) << "\" -- \"" << tree.display_name(v)
                  << "\";\n";
    std::cout << "}\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact target pebbling numbers, witnesses and oracles on trees"};
    app.require_subcommand(1);

    std::string tree_file, target_spec, config_spec, out_path, t_str = "1";
    bool check = false;
    std::uint64_t seed = 1;
    int n = 8, target_size = 2, max_count = 3;
    pebbling::VerifyOptions vopt;
    std::string support = "all";
    std::string mutate;

    auto* pi = app.add_subcommand("pi", "pi(T, D) with an extremal witness");
    pi->add_option("tree", tree_file, "tree edge list file")->required();
    pi->add_option("-d,--target", target_spec, "target spec, e.g. v1:2,v5")->required();
    pi->add_flag("--check", check, "cross-validate the witness with the solver");

    auto* pit = app.add_subcommand("pi-t", "t-fold pebbling number pi_t(T)");
    pit->add_option("tree", tree_file, "tree edge list file")->required();
    pit->add_option("-t", t_str, "demand multiplicity (default 1)");

    auto* solve = app.add_subcommand("solve", "decide D-solvability of a configuration");
    solve->add_option("tree", tree_file, "tree edge list file")->required();
    solve->add_option("-c,--config", config_spec, "configuration spec")->required();
    solve->add_option("-d,--target", target_spec, "target spec")->required();

    auto* verify = app.add_subcommand("verify", "run the property verification harness");
    verify->add_option("--seed", vopt.seed, "random seed (default 1)");
    verify->add_option("--random-instances", vopt.random_instances, "random instance budget");
    verify->add_option("--catalog-max", vopt.catalog_max_n, "exhaustive catalog bound (<= 7)");
    verify->add_option("--max-nodes", vopt.caps.max_nodes, "oracle node cap");
    verify->add_option("--support", support, "oracle support universe: all | leaves");
    verify->add_option("--mutate", mutate, "fault injection: no-dead-weight");

    auto* rnd = app.add_subcommand("random", "generate a random instance");
    rnd->add_option("--seed", seed, "random seed")->required();
    rnd->add_option("-n", n, "vertex count");
    rnd->add_option("--target-size", target_size, "target support size");
    rnd->add_option("--max-count", max_count, "max demand per vertex");
    rnd->add_option("-o,--out", out_path, "output file (default stdout)");

    auto* dot = app.add_subcommand("dot", "dump the tree in DOT format");
    dot->add_option("tree", tree_file, "tree edge list file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitParse;
    }

    try {
        if (pi->parsed()) return cmd_pi(tree_file, target_spec, check);
        if (pit->parsed()) return cmd_pi_t(tree_file, t_str);
        if (solve->parsed()) return cmd_solve(tree_file, config_spec, target_spec);
        if (verify->parsed()) {
            if (support == "leaves")
                vopt.support = pebbling::SupportUniverse::LeavesOnly;
            else if (support != "all")
                throw pebbling::ParseError("--support must be 'all' or 'leaves'");
            if (mutate == "no-dead-weight")
                vopt.mutate_no_dead_weight = true;
            else if (!mutate.empty())
                throw pebbling::ParseError("unknown mutation '" + mutate + "'");
            if (vopt.catalog_max_n > 7)
                throw pebbling::ParseError("--catalog-max is limited to 7");
            return cmd_verify(vopt);
        }
        if (rnd->parsed()) return cmd_random(seed, n, target_size, max_count, out_path);
        if (dot->parsed()) return cmd_dot(tree_file);
    } catch (const pebbling::EmptyTargetError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSemantic;
    } catch (const pebbling::CapExceededError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBudget;
    } catch (const pebbling::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const pebbling::TreeBuildError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }
    return kExitOk;
}
