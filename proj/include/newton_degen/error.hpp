#pragma once

#include <stdexcept>
#include <string>

namespace nd {

enum class ErrorKind {
    parse,
    invalid_argument,
    budget_exceeded,
    zero_polynomial,
    invalid_face,
};

const char* to_string(ErrorKind kind);

/// Every failure raised by the library. The kind maps one-to-one onto the
/// status codes of the C interface.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
    throw Error(kind, message);
}

} // namespace nd
