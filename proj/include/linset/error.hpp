#pragma once

#include <stdexcept>
#include <string>

namespace linset {

// Error categories drive the CLI exit-code contract:
// bad inputs exit 2, failed checks exit 1.
enum class ErrorKind { Config, Check, Internal };

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string code, const std::string& message)
        : std::runtime_error(code + ": " + message), kind_(kind), code_(std::move(code)) {}

    ErrorKind kind() const { return kind_; }
    const std::string& code() const { return code_; }

private:
    ErrorKind kind_;
    std::string code_;
};

[[noreturn]] inline void fail(ErrorKind kind, std::string code, const std::string& message) {
    throw Error(kind, std::move(code), message);
}

[[noreturn]] inline void fail_config(std::string code, const std::string& message) {
    fail(ErrorKind::Config, std::move(code), message);
}

[[noreturn]] inline void fail_check(std::string code, const std::string& message) {
    fail(ErrorKind::Check, std::move(code), message);
}

[[noreturn]] inline void fail_internal(std::string code, const std::string& message) {
    fail(ErrorKind::Internal, std::move(code), message);
}

}  // namespace linset
