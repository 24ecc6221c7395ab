#include "rbsys/report.hpp"

#include <sstream>

namespace rbsys {

bool Report::all_pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

void Report::add_check(std::string name, bool pass, std::string statement,
                       std::vector<std::string> witnesses) {
    checks.push_back({std::move(name), pass, std::move(statement), std::move(witnesses)});
}

void Report::add_field(std::string key, std::string value) {
    fields.emplace_back(std::move(key), std::move(value));
}

std::string emit_report(const Report& rep, ReportFormat format) {
    std::ostringstream os;
    if (format == ReportFormat::Machine) {
        os << "command=" << rep.command << "\n";
        os << "input_digest=" << rep.input_digest << "\n";
        os << "seed=" << rep.seed << "\n";
        for (const auto& [k, v] : rep.fields) os << k << "=" << v << "\n";
        for (const auto& c : rep.checks) {
            os << "check." << c.name << "=" << (c.pass ? "pass" : "fail") << "\n";
            for (const auto& w : c.witnesses) os << w << "\n";
        }
        if (rep.has_dims) {
            for (size_t i = 0; i < rep.cohomology_dims.size(); ++i)
                os << (i ? " " : "") << "H" << i << "=" << rep.cohomology_dims[i];
            os << "\n";
        }
        os << "pass=" << (rep.all_pass() ? "true" : "false") << "\n";
        return os.str();
    }

    os << "== " << rep.command << " ==\n";
    os << "input digest " << rep.input_digest << ", seed " << rep.seed << "\n";
    for (const auto& [k, v] : rep.fields) os << k << ": " << v << "\n";
    for (const auto& c : rep.checks) {
        os << (c.pass ? "[PASS] " : "[FAIL] ") << c.name;
        if (!c.statement.empty()) os << " -- " << c.statement;
        os << "\n";
        for (const auto& w : c.witnesses) os << "    witness: " << w << "\n";
    }
    if (rep.has_dims) {
        os << "cohomology dimensions: ";
        for (size_t i = 0; i < rep.cohomology_dims.size(); ++i)
            os << (i ? " " : "") << "H" << i << "=" << rep.cohomology_dims[i];
        os << "\n";
    }
    os << (rep.all_pass() ? "all checks passed" : "some checks FAILED") << "\n";
    return os.str();
}

uint64_t fnv1a64(const std::string& data) {
    uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string digest_hex(const std::string& data) {
    uint64_t h = fnv1a64(data);
    static const char* hex = "0123456789abcdef";
    std::string s = "0x";
    for (int shift = 60; shift >= 0; shift -= 4) s += hex[(h >> shift) & 0xf];
    return s;
}

} // namespace rbsys
