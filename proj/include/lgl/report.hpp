#pragma once

/// Wire-form report shared by the CLI and the python bindings: a stable
/// JSON schema plus a human-readable rendering.

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "lgl/dimension_formulas.hpp"
#include "lgl/oracle.hpp"

namespace lgl {

struct Report {
    std::string schema_version = "1";
    std::string input;
    std::string case_tag;
    std::vector<std::string> singular;
    std::optional<long> dimension;  // serialized as "unknown" when absent
    nlohmann::json breakdown = nlohmann::json::object();
    std::string method = "formula";
    std::optional<bool> agreement;  // null unless both methods ran
    std::vector<std::string> warnings;

    nlohmann::json to_json() const;
    static Report from_json(const nlohmann::json& j);
    std::string pretty() const;
};

Report report_from_formula(const std::string& input, const LglReport& formula);
Report report_from_oracle(const std::string& input, const OracleReport& oracle);
// Combined report: formula dimensions and breakdown, oracle agreement flag.
Report report_combined(const std::string& input, const LglReport& formula,
                       const OracleReport& oracle);

}  // namespace lgl
