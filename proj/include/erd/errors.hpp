#pragma once

#include <stdexcept>
#include <string>

namespace erd {

// Input outside an operation's mathematical domain.  `offending_input`
// carries a printable rendition of the value that triggered the error so
// front ends can echo it back.
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& message, std::string offending = {})
        : std::domain_error(message), offending_(std::move(offending)) {}

    const std::string& offending_input() const noexcept { return offending_; }

private:
    std::string offending_;
};

// Gamma requested at a non-positive integer; remembers which one.
class PoleError : public DomainError {
public:
    PoleError(const std::string& message, long pole)
        : DomainError(message, std::to_string(pole)), pole_(pole) {}

    long pole() const noexcept { return pole_; }

private:
    long pole_;
};

// A finite-input computation left binary64 range.
class OverflowError : public std::range_error {
public:
    using std::range_error::range_error;
};

} // namespace erd
