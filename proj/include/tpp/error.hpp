#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace tpp {

/// Base class for every error raised by the library. Anything derived from
/// Error except IoError is a validation failure (CLI exit code 1).
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// One or more parameters violate their bounds. Carries every violation
/// found, in declaration order.
class RejectedParam : public Error {
public:
    struct Violation {
        std::string name;
        std::string reason;
    };

    explicit RejectedParam(std::vector<Violation> violations);
    RejectedParam(std::string name, std::string reason);

    /// Name of the first violated parameter.
    const std::string& name() const { return violations_.front().name; }
    const std::vector<Violation>& violations() const { return violations_; }

private:
    std::vector<Violation> violations_;
};

/// Domain length is not an integer multiple of the requested step.
class NonCommensurate : public Error {
public:
    NonCommensurate(std::string axis, double length, double step);

    const std::string& axis() const { return axis_; }

private:
    std::string axis_;
};

class ParseError : public Error {
public:
    ParseError(int line, std::string reason);

    int line() const { return line_; }
    const std::string& reason() const { return reason_; }

private:
    int line_;
    std::string reason_;
};

class UnknownKey : public Error {
public:
    explicit UnknownKey(std::string key);

    const std::string& key() const { return key_; }

private:
    std::string key_;
};

/// Argument outside the domain of a closed-form predicate (e.g. a negative
/// radicand).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Sink or source could not be read/written.
class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace tpp
