#pragma once

#include <stdexcept>
#include <string>

namespace skc {

// Violated precondition or out-of-range argument.
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed model document. `context` points at the offending location
// (line for raw JSON errors, JSON path for semantic ones).
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::string context)
        : std::runtime_error(context.empty() ? what : what + " (" + context + ")"),
          context_(std::move(context)) {}

    const std::string& context() const { return context_; }

private:
    std::string context_;
};

// File could not be opened or written.
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

// Broken internal invariant (a bug, not a user error).
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

} // namespace skc
