#pragma once

#include <stdexcept>
#include <string>

namespace polarkit {

// Error taxonomy shared by the library and the CLI exit-code mapping:
// bad arguments or numeric-mode mixing -> UsageError, malformed input text ->
// ParseError, blown size budgets -> ResourceError, failed self-checks ->
// VerifyError.

class UsageError : public std::invalid_argument {
public:
    explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what, int line = 0)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
          line_(line) {}
    int line() const { return line_; }

private:
    int line_ = 0;
};

class ResourceError : public std::runtime_error {
public:
    explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

class VerifyError : public std::runtime_error {
public:
    explicit VerifyError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace polarkit
