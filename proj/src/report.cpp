#include "lgl/report.hpp"

#include <sstream>

namespace lgl {

using nlohmann::json;

json Report::to_json() const {
    json j;
    j["schema_version"] = schema_version;
    j["input"] = input;
    j["case"] = case_tag;
    j["S"] = singular;
    if (dimension) j["dimension"] = *dimension;
    else j["dimension"] = "unknown";
    j["breakdown"] = breakdown;
    j["method"] = method;
    if (agreement) j["agreement"] = *agreement;
    else j["agreement"] = nullptr;
    j["warnings"] = warnings;
    return j;
}

Report Report::from_json(const json& j) {
    Report r;
    r.schema_version = j.at("schema_version").get<std::string>();
    r.input = j.at("input").get<std::string>();
    r.case_tag = j.at("case").get<std::string>();
    r.singular = j.at("S").get<std::vector<std::string>>();
    if (j.at("dimension").is_number_integer()) r.dimension = j.at("dimension").get<long>();
    r.breakdown = j.at("breakdown");
    r.method = j.at("method").get<std::string>();
    if (!j.at("agreement").is_null()) r.agreement = j.at("agreement").get<bool>();
    r.warnings = j.at("warnings").get<std::vector<std::string>>();
    return r;
}

std::string Report::pretty() const {
    std::ostringstream os;
    os << "input:     " << input << "\n";
    os << "case:      " << case_tag << "\n";
    os << "S:         {";
    for (std::size_t i = 0; i < singular.size(); ++i) {
        if (i) os << ", ";
        os << singular[i];
    }
    os << "}\n";
    os << "dimension: ";
    if (dimension) os << *dimension;
    else os << "unknown";
    os << "\n";
    if (!breakdown.empty()) os << "breakdown: " << breakdown.dump() << "\n";
    os << "method:    " << method << "\n";
    if (agreement) os << "agreement: " << (*agreement ? "true" : "false") << "\n";
    for (const auto& w : warnings) os << "warning:   " << w << "\n";
    return os.str();
}

namespace {

json breakdown_of(const LglReport& formula) {
    json b = json::object();
    for (const auto& [k, v] : formula.breakdown) b[k] = v;
    return b;
}

std::vector<std::string> places_of(const LglReport& formula) {
    std::vector<std::string> out;
    for (const auto& p : formula.singular_set) out.push_back(p.str());
    return out;
}

}  // namespace

Report report_from_formula(const std::string& input, const LglReport& formula) {
    Report r;
    r.input = input;
    r.case_tag = formula.case_tag;
    r.singular = places_of(formula);
    r.dimension = formula.dimension;
    r.breakdown = breakdown_of(formula);
    r.method = "formula";
    r.warnings = formula.hypothesis_flags;
    return r;
}

Report report_from_oracle(const std::string& input, const OracleReport& oracle) {
    Report r;
    r.input = input;
    r.case_tag = "oracle";
    r.singular = oracle.obstruction_places;
    r.dimension = static_cast<long>(oracle.dimension);
    r.breakdown["coker_dimension"] = oracle.coker_dimension;
    for (const auto& [place, rank] : oracle.obstruction_ranks)
        r.breakdown["obstruction_rank@" + place] = rank;
    r.method = "oracle";
    if (!oracle.stabilization_ok) r.warnings.push_back("stabilization certificate missing");
    return r;
}

Report report_combined(const std::string& input, const LglReport& formula,
                       const OracleReport& oracle) {
    Report r = report_from_formula(input, formula);
    r.method = "both";
    r.breakdown["oracle_dimension"] = oracle.dimension;
    r.breakdown["coker_dimension"] = oracle.coker_dimension;
    r.agreement =
        formula.dimension && *formula.dimension == static_cast<long>(oracle.dimension);
    return r;
}

}  // namespace lgl
