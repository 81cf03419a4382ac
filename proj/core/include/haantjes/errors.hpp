#pragma once

#include <stdexcept>
#include <string>

namespace haantjes {

/// Base class for every error raised by the toolkit.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Operands were built over different variable sets.
class ContextMismatch : public Error {
public:
    ContextMismatch() : Error("expressions belong to different variable contexts") {}
};

class UnknownVariable : public Error {
public:
    explicit UnknownVariable(const std::string& name) : Error("unknown variable '" + name + "'") {}
};

/// Two quadratic-extension elements carry different discriminants.
class DiscriminantMismatch : public Error {
public:
    DiscriminantMismatch() : Error("quadratic extension elements use different discriminants") {}
};

/// Numeric evaluation hit a pole or a negative discriminant.
class EvaluationError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error(what + " at offset " + std::to_string(position)), position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

} // namespace haantjes
