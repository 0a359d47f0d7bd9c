#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "pebbling/oracle.hpp"

namespace pebbling {

// Property-suite driver shared by the verify subcommand and the tests.
struct VerifyOptions {
    std::uint64_t seed = 1;
    int random_instances = 200;
    int catalog_max_n = 6;       // exhaustive catalog bound
    int random_max_n = 8;
    int max_target_size = 4;
    OracleCaps caps;
    SupportUniverse support = SupportUniverse::AllVertices;
    bool mutate_no_dead_weight = false;  // fault injection: formula must then disagree
};

struct PropertyResult {
    std::string name;
    bool passed;
    int instances = 0;
    std::string detail;  // filled on failure or for counts worth reporting
};

// Runs every suite; a mutated run passes overall iff the fault is detected.
std::vector<PropertyResult> run_verification(const VerifyOptions& options,
                                             const std::function<void(const PropertyResult&)>& on_result = {});

bool all_passed(const std::vector<PropertyResult>& results);

}  // namespace pebbling
