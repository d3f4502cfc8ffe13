#pragma once

#include <stdexcept>
#include <string>

namespace svt {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Input violates a structural invariant (non-isolating box, reducible minpoly, ...).
class MalformedInput : public Error {
public:
    explicit MalformedInput(const std::string& what) : Error("malformed input: " + what) {}
};

// Caller broke a documented precondition of an operation.
class PreconditionFailed : public Error {
public:
    explicit PreconditionFailed(const std::string& what) : Error("precondition failed: " + what) {}
};

// A certified decision could not be reached below the precision cap.
class PrecisionExhausted : public Error {
public:
    explicit PrecisionExhausted(const std::string& what) : Error("precision exhausted: " + what) {}
};

struct PrecisionPolicy {
    long start = 64;
    long cap = 4096;
};

}  // namespace svt
