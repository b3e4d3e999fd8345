#pragma once

#include <stdexcept>
#include <string>

namespace asym {

/// Error categories. The numeric values match the C API status codes.
enum class ErrorCode {
    InvalidArgument = 1,
    Parse = 2,
    Guard = 3,
    Internal = 4,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// Raised when an input violates a precondition (bad index, bad family parameter).
class InvalidArgument : public Error {
public:
    explicit InvalidArgument(const std::string& what) : Error(ErrorCode::InvalidArgument, what) {}
};

/// Raised by the text readers.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error(ErrorCode::Parse, what) {}
};

/// Raised when an exhaustive computation would exceed its size guard.
class GuardError : public Error {
public:
    explicit GuardError(const std::string& what) : Error(ErrorCode::Guard, what) {}
};

} // namespace asym
