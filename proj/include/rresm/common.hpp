#pragma once

#include <stdexcept>
#include <string>

namespace rresm {

// Error taxonomy used across the library. The CLI maps these onto exit codes.
struct ShapeError : std::runtime_error {
    explicit ShapeError(const std::string& msg) : std::runtime_error(msg) {}
};

struct ContractError : std::runtime_error {
    explicit ContractError(const std::string& msg) : std::runtime_error(msg) {}
};

struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

struct FormatError : std::runtime_error {
    explicit FormatError(const std::string& msg) : std::runtime_error(msg) {}
};

struct IoError : std::runtime_error {
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

// Thrown by masked losses when no valid pixel exists; callers skip the sample.
struct EmptyMaskError : ContractError {
    explicit EmptyMaskError(const std::string& msg) : ContractError(msg) {}
};

}  // namespace rresm
