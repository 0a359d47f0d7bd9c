#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "pebbling/pebbling_fn.hpp"
#include "pebbling/pi_result.hpp"
#include "pebbling/solver.hpp"
#include "pebbling/tree.hpp"

namespace pebbling {

// Insertion-ordered JSON keeps output byte-stable for golden tests.
using Json = nlohmann::ordered_json;

// Counts that can exceed 2^64 are emitted as decimal strings.
std::string count_to_string(const Count& c);
Count count_from_string(const std::string& s);

// {"v1": "2", ...}; keys are vertex names when the tree has them, ids otherwise.
Json pebbling_fn_to_json(const Tree& tree, const PebblingFn& f);
PebblingFn pebbling_fn_from_json(const Tree& tree, const Json& j);

// Target spec grammar: comma-separated name:count with count defaulting to
// 1 ("v3,v7:2"); a JSON object is accepted as an alternative.
PebblingFn parse_target_spec(const Tree& tree, const std::string& spec);

// Moves serialize as an array of {from, to} in execution order.
Json solution_to_json(const Tree& tree, const Solution& s);
Solution solution_from_json(const Tree& tree, const Json& j);

Json candidates_to_json(const Tree& tree, const std::vector<CandidateRecord>& candidates);

// A generated problem instance: tree, target, optional configuration plus
// seed provenance. Round-trips exactly.
struct Instance {
    Tree tree;
    PebblingFn target;
    std::optional<PebblingFn> configuration;
    std::uint64_t seed = 0;
    std::string generator;
};

Json instance_to_json(const Instance& inst);
Instance instance_from_json(const Json& j);

}  // namespace pebbling
