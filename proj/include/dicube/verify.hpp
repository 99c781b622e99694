#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace dicube {

enum class Status { Pass, Fail, Skipped };

std::string to_string(Status s);

struct VerificationReport {
    std::string id;
    nlohmann::ordered_json params;
    Status status = Status::Skipped;
    /// Counterexample payload on failure, summary data otherwise.
    nlohmann::ordered_json details;
    double seconds = 0.0;
};

struct SuiteOptions {
    int n_max = 3;
    /// Complex checked by non-self-linked: "yA" or "z" (the truncated final object).
    std::string target = "yA";
    std::size_t random_samples = 1000;
};

/// Registered check ids in registry order.
const std::vector<std::string>& suite_ids();

/// Throws ArgumentError for unknown ids.
VerificationReport run_check(const std::string& id, const SuiteOptions& options);

/// Runs the selected checks with up to `jobs` in flight; output keeps the selection order.
std::vector<VerificationReport> run_suite(const std::vector<std::string>& ids, const SuiteOptions& options, int jobs = 1);

nlohmann::ordered_json to_json(const VerificationReport& r, bool with_timing = true);
std::string reports_to_json(const std::vector<VerificationReport>& reports, bool with_timing = true);

} // namespace dicube
