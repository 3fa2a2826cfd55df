#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace finsler {

/// Base of every error raised by the library. The CLI maps subclasses onto exit codes.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed user input (metric text, flags, parameter lists).
class UsageError : public Error {
public:
    using Error::Error;
};

class SyntaxError : public UsageError {
public:
    SyntaxError(std::size_t offset, const std::string& expected)
        : UsageError("syntax error at offset " + std::to_string(offset) + ": expected " + expected),
          offset_(offset), expected_(expected) {}

    std::size_t offset() const noexcept { return offset_; }
    const std::string& expected() const noexcept { return expected_; }

private:
    std::size_t offset_;
    std::string expected_;
};

class UnknownIdentifier : public UsageError {
public:
    explicit UnknownIdentifier(const std::string& name)
        : UsageError("unknown identifier '" + name + "'"), name_(name) {}
    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

class UnknownMetric : public UsageError {
public:
    explicit UnknownMetric(const std::string& name) : UsageError("unknown metric '" + name + "'") {}
};

class MissingParam : public UsageError {
public:
    explicit MissingParam(const std::string& name) : UsageError("missing parameter '" + name + "'") {}
};

class UnsupportedFormat : public UsageError {
public:
    explicit UnsupportedFormat(const std::string& fmt) : UsageError("unsupported format '" + fmt + "'") {}
};

/// Numerical or geometric failure at a particular point.
class MathError : public Error {
public:
    using Error::Error;
};

class DomainError : public MathError {
public:
    using MathError::MathError;
};

class InsufficientOrder : public MathError {
public:
    using MathError::MathError;
};

class SingularMetric : public MathError {
public:
    using MathError::MathError;
};

class ZeroVector : public MathError {
public:
    using MathError::MathError;
};

class DimensionMismatch : public MathError {
public:
    using MathError::MathError;
};

class DegeneratePoint : public MathError {
public:
    using MathError::MathError;
};

class ZeroMeanCartan : public MathError {
public:
    using MathError::MathError;
};

class DimensionTooSmall : public MathError {
public:
    using MathError::MathError;
};

class EmptyGrid : public MathError {
public:
    using MathError::MathError;
};

class RiemannianAtRadius : public MathError {
public:
    using MathError::MathError;
};

}  // namespace finsler
