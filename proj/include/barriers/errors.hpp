#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace barriers {

/// Failure categories, mapped one-to-one onto CLI exit codes.
enum class ErrorCategory {
    Input,       // malformed files, bad flags, missing prerequisites (exit 2)
    Validation,  // consistency violations, screening left nothing (exit 3)
    Numeric,     // degenerate or non-convergent numerics (exit 4)
};

class Error : public std::runtime_error {
public:
    Error(ErrorCategory category, std::string stage, const std::string& message)
        : std::runtime_error(message), category_(category), stage_(std::move(stage)) {}

    ErrorCategory category() const noexcept { return category_; }

    /// Pipeline stage the failure belongs to ("survey", "ism", "dematel", ...).
    const std::string& stage() const noexcept { return stage_; }

    int exit_code() const noexcept {
        switch (category_) {
        case ErrorCategory::Input: return 2;
        case ErrorCategory::Validation: return 3;
        case ErrorCategory::Numeric: return 4;
        }
        return 1;
    }

private:
    ErrorCategory category_;
    std::string stage_;
};

}  // namespace barriers
