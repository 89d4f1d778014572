#ifndef RSTAR_REPORT_HPP
#define RSTAR_REPORT_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace rstar {

struct ReportRow {
    std::int64_t index = 0;
    std::string expected;
    std::string computed;
    bool pass = false;
};

/// Outcome of one identity check: which statement was tested, with which
/// parameters, and the expected-vs-computed value at every index. The overall
/// flag is the conjunction of the row flags.
struct VerificationReport {
    std::string theorem;
    std::vector<std::pair<std::string, std::string>> params;
    std::vector<ReportRow> rows;
    bool pass = false;
    std::string summary;

    std::string to_json() const;
    std::string to_table() const;
};

}  // namespace rstar

#endif
