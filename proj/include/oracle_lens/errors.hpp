#pragma once

#include <stdexcept>
#include <string>

namespace oracle_lens {

/// Bad user input: malformed flags, inconsistent sizes, unknown names.
/// Maps to process exit code 1.
struct UsageError : std::runtime_error {
    explicit UsageError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A configured cap (matrix dimension, scan budget, engine size) was
/// exceeded. Maps to process exit code 2.
struct ResourceError : std::runtime_error {
    explicit ResourceError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace oracle_lens
