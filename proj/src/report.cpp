#include "rstar/report.hpp"

#include <sstream>

#include <json.hpp>

namespace rstar {

std::string VerificationReport::to_json() const {
    nlohmann::json j;
    j["theorem"] = theorem;
    nlohmann::json p = nlohmann::json::object();
    for (const auto& [key, value] : params) p[key] = value;
    j["params"] = p;
    nlohmann::json rows_json = nlohmann::json::array();
    for (const auto& row : rows) {
        rows_json.push_back({{"j", row.index},
                             {"expected", row.expected},
                             {"computed", row.computed},
                             {"pass", row.pass}});
    }
    j["rows"] = rows_json;
    j["pass"] = pass;
    return j.dump(2);
}

std::string VerificationReport::to_table() const {
    std::ostringstream os;
    os << "theorem: " << theorem << "\n";
    os << "params:";
    for (const auto& [key, value] : params) os << " " << key << "=" << value;
    os << "\n";
    for (const auto& row : rows) {
        os << "  j=" << row.index << "  expected=" << row.expected
           << "  computed=" << row.computed << "  "
           << (row.pass ? "ok" : "MISMATCH") << "\n";
    }
    os << summary << "\n";
    return os.str();
}

}  // namespace rstar
