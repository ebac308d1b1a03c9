#pragma once

#include <stdexcept>
#include <string>

namespace ltvboot {

// Error classes map 1:1 onto CLI exit codes. 10 is skipped (reserved for
// the "Test wins" decision exit) and 0/1 are the usual success/generic codes.
enum class ErrorCode : int {
    NonPositiveResponse = 3,
    DegenerateDesign = 4,
    MissingCovariate = 5,
    HorizonTooShort = 6,
    LengthMismatch = 7,
    ZeroVariance = 8,
    Parse = 9,
    DuplicateDay = 11,
    DegenerateResample = 12,
    InvalidInput = 13,
    Io = 14,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
          code_(code) {}

    ErrorCode code() const noexcept { return code_; }
    int exit_code() const noexcept { return static_cast<int>(code_); }

private:
    ErrorCode code_;
};

}  // namespace ltvboot
