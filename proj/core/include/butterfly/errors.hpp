#pragma once

#include <stdexcept>
#include <string>

namespace butterfly {

// Input does not satisfy an operation's precondition.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Enumeration refused because the candidate space is too large.
class ResourceLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Polynomial division left a nonzero remainder.
class InexactDivisionError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Odd-part partition cannot be merged back into a butterfly partition.
class MergeError : public std::invalid_argument {
public:
    enum class Reason { CapsViolated, UnknownShape, NotStrict };

    MergeError(Reason reason, const std::string& what)
        : std::invalid_argument(what), reason_(reason) {}

    Reason reason() const noexcept { return reason_; }

private:
    Reason reason_;
};

}  // namespace butterfly
