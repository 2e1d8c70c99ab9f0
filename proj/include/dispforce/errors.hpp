#pragma once

#include <stdexcept>
#include <string>

namespace dispforce {

// Error categories map onto distinct CLI exit codes; keep them coarse.
enum class ErrorCategory {
    NotFound,   // missing file
    Parse,      // unreadable / malformed input
    Schema,     // well-formed input violating the schema or physicality
    Numeric,    // quadrature/ODE/fit failure
    Usage,      // bad arguments
};

class Error : public std::runtime_error {
public:
    Error(ErrorCategory cat, const std::string& msg)
        : std::runtime_error(msg), category_(cat) {}

    ErrorCategory category() const noexcept { return category_; }

private:
    ErrorCategory category_;
};

}  // namespace dispforce
