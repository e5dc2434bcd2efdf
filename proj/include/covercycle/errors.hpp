#pragma once

#include <stdexcept>
#include <string>

namespace covercycle {

// Malformed graph file or unparsable CLI input.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// A caller violated an operation precondition (N = 0, directed/undirected
// mismatch, |E| over the subset limit, ...).
struct PreconditionError : std::invalid_argument {
    explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

// An exact computation produced something that cannot happen if the code is
// correct (non-integral Moebius sum, route disagreement). Never a data error.
struct ConsistencyError : std::logic_error {
    explicit ConsistencyError(const std::string& what) : std::logic_error(what) {}
};

// Brute-force enumeration exceeded the configured feasibility cap.
struct CapExceededError : PreconditionError {
    explicit CapExceededError(const std::string& what) : PreconditionError(what) {}
};

}  // namespace covercycle
