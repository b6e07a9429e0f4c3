#pragma once

#include <stdexcept>
#include <string>

namespace semalign {

// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Dimension mismatch between operands.
struct ShapeError : Error {
    using Error::Error;
};

// Malformed input file; line is 1-based, 0 when unknown.
struct ParseError : Error {
    int line = 0;
    ParseError(const std::string& msg, int line_no = 0)
        : Error(line_no > 0 ? "line " + std::to_string(line_no) + ": " + msg : msg),
          line(line_no) {}
};

// Invalid configuration value or key.
struct ConfigError : Error {
    using Error::Error;
};

// A call violated an API precondition (stale cache, unnormalized table, ...).
struct ContractError : Error {
    using Error::Error;
};

// Training produced a non-finite loss; step is the failing optimizer step.
struct TrainingError : Error {
    int step = -1;
    TrainingError(const std::string& msg, int step_no)
        : Error(msg + " at step " + std::to_string(step_no)), step(step_no) {}
};

// A function evaluation produced a non-finite or undefined value.
struct EvalError : Error {
    using Error::Error;
};

}  // namespace semalign
