#pragma once

#include <string>
#include <vector>

#include "rbsys/model.hpp"
#include "rbsys/report.hpp"

namespace rbsys {

struct CommandOptions {
    size_t max_degree = 2;
    size_t arity_bound = 4;
    size_t order = 0; // 0 = use the full series
    uint64_t seed = 0;
    std::string mode; // aybp|frobenius or left|right|both, per command
};

const std::vector<std::string>& command_names();

// Dispatches to the module operation(s) behind `cmd`. Mathematical
// failures come back as failing checks inside the report; malformed input
// raises InputError/ResourceError.
Report run_command(const std::string& cmd, const ModelDocument& doc,
                   const CommandOptions& opts = {});

// 0 when every check passed, 1 otherwise (input errors exit 2 in the CLI).
int exit_code_for(const Report& rep);

} // namespace rbsys
