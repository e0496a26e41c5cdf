#pragma once

#include <stdexcept>
#include <string>

namespace umclust {

enum class ErrorCode {
    Config,           // bad parameters, dimension mismatch, bounds, insufficient data
    Io,               // file cannot be opened or read
    Format,           // bad magic, ragged rows, parse failure, truncation, empty input
    Numeric,          // non-finite values where finite ones are required
    InvalidState,     // pipeline contract violated (empty cluster, count below target, ...)
    TooSmallCluster,  // cluster below the unmasking minimum size
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void throw_error(ErrorCode code, const std::string& msg) {
    throw Error(code, msg);
}

} // namespace umclust
