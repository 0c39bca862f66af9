#pragma once

#include <stdexcept>
#include <string>

namespace rainbowdom {

// Error taxonomy mirrored by the CLI exit codes:
// DomainError -> 1, CapacityError -> 2, ParseError -> 3.

class DomainError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class CapacityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string & message, int line) :
        std::runtime_error("line " + std::to_string(line) + ": " + message),
        line_(line)
    {
    }

    int line() const noexcept { return line_; }

private:
    int line_;
};

} // namespace rainbowdom
