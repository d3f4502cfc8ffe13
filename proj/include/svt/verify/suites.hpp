#pragma once

#include "svt/io/json.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace svt::verify {

struct SuiteOptions {
    long trials = -1;  // -1: the suite's default
    std::uint64_t seed = 1;
    long prec = 128;
};

// Trial t draws from gen::trial_seed(seed, t), so any failing trial can be replayed alone.
struct SuiteReport {
    std::string suite;
    std::uint64_t seed = 1;
    long trials = 0;
    long skipped = 0;
    io::json failures = io::json::array();  // [{trial, check, detail}]
    io::json constants = io::json::object();
    io::json stats = io::json::object();

    bool ok() const { return failures.empty(); }
    io::json to_json() const;
};

const std::vector<std::string>& suite_names();
bool has_suite(const std::string& name);
long default_trials(const std::string& name);

// Throws PreconditionFailed for unknown suites.
SuiteReport run_suite(const std::string& name, const SuiteOptions& opt);

}  // namespace svt::verify
