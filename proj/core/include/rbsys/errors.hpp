#pragma once

#include <stdexcept>
#include <string>

namespace rbsys {

// Base class for everything thrown by this library.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input: dimension mismatches, parse errors, unknown kinds.
// The command line tool maps these to exit code 2.
struct InputError : Error {
    using Error::Error;
};

// A construction was refused because a mathematical hypothesis fails
// (e.g. feeding a non-Rota-Baxter pair to a structure builder). Carries
// a witness in the message. Maps to exit code 1.
struct PreconditionError : Error {
    using Error::Error;
};

// A computation was rejected because it exceeds the configured budget.
struct ResourceError : Error {
    using Error::Error;
};

} // namespace rbsys
