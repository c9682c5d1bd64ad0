#pragma once

// Named verification suites, shared by the CLI verify command and the
// standalone acceptance runner.  Each suite checks one exactly-quantified
// property at desk scale and reports counts in its detail string.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace qscat {

struct SuiteResult {
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

struct Suite {
    std::string name;
    std::string summary;
    std::function<SuiteResult()> run;
};

const std::vector<Suite>& acceptance_suites();

// Runs one suite by name; unknown names raise ParseError.
SuiteResult run_suite(const std::string& name);

// Seed used by the sampled suites (fixed default; the CLI may override).
// The checked properties hold for every seed.
void set_suite_seed(std::uint64_t seed);
std::uint64_t suite_seed();

} // namespace qscat
