#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace rbsys {

enum class ReportFormat { Human, Machine };

struct CheckResult {
    std::string name;
    bool pass = true;
    std::string statement;              // what was verified, human format only
    std::vector<std::string> witnesses; // exact failing coefficients
};

// Deterministic, machine-parsable verification report. Rationals are
// rendered as p/q in lowest terms with q > 0.
struct Report {
    std::string command;
    std::string input_digest;
    uint64_t seed = 0;
    std::vector<CheckResult> checks;
    std::vector<std::pair<std::string, std::string>> fields; // extra key/value rows
    std::vector<size_t> cohomology_dims;                     // H0..HN when computed
    bool has_dims = false;

    bool all_pass() const;
    void add_check(std::string name, bool pass, std::string statement,
                   std::vector<std::string> witnesses = {});
    void add_field(std::string key, std::string value);
};

std::string emit_report(const Report& rep, ReportFormat format);

// FNV-1a 64-bit, used for the input-provenance digest.
uint64_t fnv1a64(const std::string& data);
std::string digest_hex(const std::string& data);

} // namespace rbsys
