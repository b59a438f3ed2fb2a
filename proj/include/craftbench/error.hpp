#pragma once

#include <stdexcept>
#include <string>

namespace craftbench {

// Numeric values are shared with the flat C boundary and must stay stable.
enum class ErrorCode : int {
    ok = 0,
    invalid_action_index = 1,
    stepped_after_done = 2,
    retry_exhausted = 3,
    io_failure = 4,
    config_error = 5,
    invalid_record = 6,
    empty_log = 7,
    rate_out_of_range = 8,
    empty_input = 9,
    not_reset = 10,
    invalid_argument = 11,
    invariant_violation = 12,
};

auto error_code_name(ErrorCode code) noexcept -> const char *;

class CraftError : public std::runtime_error {
public:
    CraftError(ErrorCode code, const std::string &what) : std::runtime_error(what), code_(code) {}

    auto code() const noexcept -> ErrorCode { return code_; }

private:
    ErrorCode code_;
};

}    // namespace craftbench
