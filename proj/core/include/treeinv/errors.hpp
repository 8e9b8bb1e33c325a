#pragma once

#include <stdexcept>
#include <string>

namespace treeinv {

/// A brute-force or construction bound was exceeded.
class SizeLimitError : public std::runtime_error {
public:
    SizeLimitError(const std::string& bound, const std::string& what)
        : std::runtime_error(what), bound_(bound) {}

    const std::string& bound() const noexcept { return bound_; }

private:
    std::string bound_;
};

class ArityMismatch : public std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// The linear coefficient of a series is not a unit, so no integral inverse exists.
class NotInvertible : public std::domain_error {
    using std::domain_error::domain_error;
};

class ParseError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A structural property that must hold by construction failed.
class InvariantViolation : public std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace treeinv
