#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace addcomb {

// A denominator (or divisor) of zero.
struct ZeroDenominatorError : std::domain_error {
    using std::domain_error::domain_error;
};

// An input exceeds a configured size, bound, or memory budget.
struct CapacityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A stated precondition was violated (domain/range errors included).
struct PreconditionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// An expression refers to a variable that is not bound in the environment.
struct NameError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A survey or CLI configuration is invalid.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Text failed to parse. Carries the byte offset of the failure and a
// description of what would have been accepted there.
class SyntaxError : public std::runtime_error {
public:
    SyntaxError(std::size_t position, std::string expected)
        : std::runtime_error("syntax error at offset " + std::to_string(position) +
                             ": expected " + expected),
          position_(position),
          expected_(std::move(expected)) {}

    std::size_t position() const { return position_; }
    const std::string& expected() const { return expected_; }

private:
    std::size_t position_;
    std::string expected_;
};

}  // namespace addcomb
