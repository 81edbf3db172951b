#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "fockalg/scalar.hpp"

namespace fockalg {

struct CheckResult {
    std::string name;
    bool pass = false;
    nlohmann::json detail;
};

struct SuiteOptions {
    std::uint64_t seed = 1;
    int degree_cap = -1;  // -1: the suite's own default
    int rank = -1;
    std::optional<Q> q;
    std::optional<Params> params;
    bool modified_sign = false;
    std::string golden_dir;  // empty: the in-tree golden directory
    bool record = false;
};

struct SuiteReport {
    std::string suite;
    std::uint64_t seed = 0;
    Params params;
    std::vector<CheckResult> checks;  // sorted by name
    double duration_ms = 0;

    bool passed() const;
    nlohmann::json to_json() const;
};

// Public suite names, plus the sub-suites rmatrix_core, vacuum_gauss and determinant.
const std::vector<std::string>& suite_names();
bool is_suite(const std::string& name);
SuiteReport run_suite(const std::string& name, const SuiteOptions& opts);

std::string default_golden_dir();

nlohmann::json to_json(const Q& x);
nlohmann::json to_json(const Poly& p);
nlohmann::json to_json(const RatFunc& f);
nlohmann::json params_to_json(const Params& p);
Params params_from_json(const nlohmann::json& j);
Q q_from_json(const nlohmann::json& j);
RatFunc ratfunc_from_json(const nlohmann::json& j);

}  // namespace fockalg
