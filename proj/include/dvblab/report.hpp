#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include <json.hpp>

namespace dvblab {

/// One verification record: a named check, the statement it certifies, how
/// many trials ran and how many failed, plus the first counterexample in
/// serialized form. failures == 0 iff the check passed.
struct CheckRecord {
    std::string name;
    std::string anchor; // the statement being certified, in words
    int trials = 0;
    int failures = 0;
    std::string first_counterexample;
    double elapsed_ms = 0.0;

    CheckRecord() = default;
    CheckRecord(std::string n, std::string a) : name(std::move(n)), anchor(std::move(a)) {}

    bool passed() const { return failures == 0; }
};

struct Report {
    std::vector<CheckRecord> checks;

    bool passed() const {
        return std::all_of(checks.begin(), checks.end(), [](const CheckRecord& c) { return c.passed(); });
    }

    /// Deterministic order: by check name. Content is then independent of
    /// the execution order of the trials.
    void sort() {
        std::stable_sort(checks.begin(), checks.end(),
                         [](const CheckRecord& a, const CheckRecord& b) { return a.name < b.name; });
    }

    nlohmann::json to_json(bool with_elapsed = true) const {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& c : checks) {
            nlohmann::json j{{"name", c.name},
                             {"anchor", c.anchor},
                             {"trials", c.trials},
                             {"failures", c.failures},
                             {"firstCounterexample", c.first_counterexample}};
            if (with_elapsed) j["elapsedMs"] = c.elapsed_ms;
            arr.push_back(std::move(j));
        }
        return nlohmann::json{{"passed", passed()}, {"checks", std::move(arr)}};
    }
};

} // namespace dvblab
