#pragma once

#include <stdexcept>
#include <string>

namespace hgirth {

// Error categories map one-to-one onto CLI exit codes.
enum class ErrorKind {
    parse,         // malformed text input
    precondition,  // operation called outside its domain
    resource,      // budget exceeded; never a wrong answer
    verification,  // a checked property failed
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error(ErrorKind::parse, "line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class PreconditionError : public Error {
public:
    explicit PreconditionError(const std::string& what) : Error(ErrorKind::precondition, what) {}
};

class ResourceError : public Error {
public:
    explicit ResourceError(const std::string& what) : Error(ErrorKind::resource, what) {}
};

class VerificationError : public Error {
public:
    explicit VerificationError(const std::string& what) : Error(ErrorKind::verification, what) {}
};

/// Rethrows e as the same error class with `context: ` prepended.
[[noreturn]] inline void rethrow_with_context(const Error& e, const std::string& context) {
    switch (e.kind()) {
        case ErrorKind::parse: {
            const auto* p = dynamic_cast<const ParseError*>(&e);
            const std::size_t line = p ? p->line() : 0;
            std::string detail = e.what();
            const std::string prefix = "line " + std::to_string(line) + ": ";
            if (detail.rfind(prefix, 0) == 0) detail.erase(0, prefix.size());
            throw ParseError(line, context + ": " + detail);
        }
        case ErrorKind::precondition: throw PreconditionError(context + ": " + e.what());
        case ErrorKind::resource: throw ResourceError(context + ": " + e.what());
        case ErrorKind::verification: throw VerificationError(context + ": " + e.what());
    }
    throw Error(e.kind(), context + ": " + e.what());
}

}  // namespace hgirth
