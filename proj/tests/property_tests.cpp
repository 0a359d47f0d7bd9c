// Runs the shared verification harness (the same suites behind the
// `verify` subcommand) at its default scale.

#include <cstdio>

#include "pebbling/verify.hpp"

int main() {
    pebbling::VerifyOptions options;
    options.seed = 20240917;
    auto results = pebbling::run_verification(options, [](const pebbling::PropertyResult& r) {
        if (r.passed)
            std::printf("ok   %-32s (%d instances)\n", r.name.c_str(), r.instances);
        else
            std::printf("FAIL %-32s %s\n", r.name.c_str(), r.detail.c_str());
    });
    return pebbling::all_passed(results) ? 0 : 1;
}
