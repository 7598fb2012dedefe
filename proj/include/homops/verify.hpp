#pragma once

#include <functional>
#include <optional>

#include "homops/json_io.hpp"

namespace homops {

struct Bounds {
    int max_n = 6;
    int max_k = 5;
    int K = 4;
    FieldSpec field = FieldSpec::prime(2147483647);
    bool rational_confirm = true;  // rerun small homology over Q

    json to_json() const;
    static Bounds from_json(const json& j);
};

struct CheckOutcome {
    std::string suite;
    std::string id;
    bool pass = false;
    json witness;  // counterexample data on failure
    double millis = 0.0;
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckOutcome> checks;
    double millis = 0.0;

    bool all_pass() const;
    json to_json(const Bounds& b) const;
    std::string to_text() const;
};

// A named check: returns nullopt on pass, a witness on failure.
using CheckFn = std::function<std::optional<json>(const Bounds&)>;

struct Check {
    std::string suite;
    std::string id;
    CheckFn fn;
};

const std::vector<Check>& check_registry();
std::vector<std::string> suite_names();
bool suite_exists(const std::string& name);

// Rough work estimate; a reason string is returned when the bounds are too
// large to attempt.
std::optional<std::string> infeasible_reason(const std::string& suite, const Bounds& b);

SuiteReport run_suite(const std::string& suite, const Bounds& b, int threads = 1);
std::optional<CheckOutcome> run_single_check(const std::string& id, const Bounds& b);

// Witness files bundle the failing check with its bounds for --replay.
json witness_json(const CheckOutcome& c, const Bounds& b);
CheckOutcome replay_witness(const json& w);

}  // namespace homops
