#pragma once

#include <stdexcept>
#include <string>

namespace slopelab {

// Base for all domain errors raised by the library.
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& msg) : std::runtime_error(msg) {}
};

// No exact Laurent quotient exists.  In invariant computations this means a
// formula was assembled incorrectly, so callers generally let it propagate.
struct NotDivisibleError : DomainError {
    explicit NotDivisibleError(const std::string& msg) : DomainError(msg) {}
};

struct ZeroPolynomialError : DomainError {
    explicit ZeroPolynomialError(const std::string& msg) : DomainError(msg) {}
};

struct NotAdmissibleError : DomainError {
    explicit NotAdmissibleError(const std::string& msg) : DomainError(msg) {}
};

struct MalformedDiagramError : DomainError {
    explicit MalformedDiagramError(const std::string& msg) : DomainError(msg) {}
};

struct HypothesisViolatedError : DomainError {
    explicit HypothesisViolatedError(const std::string& msg) : DomainError(msg) {}
};

struct NoFitError : DomainError {
    explicit NoFitError(const std::string& msg) : DomainError(msg) {}
};

struct InvalidFamilySignError : DomainError {
    explicit InvalidFamilySignError(const std::string& msg) : DomainError(msg) {}
};

struct InvalidWeightsError : DomainError {
    explicit InvalidWeightsError(const std::string& msg) : DomainError(msg) {}
};

struct UndefinedReciprocalError : DomainError {
    explicit UndefinedReciprocalError(const std::string& msg) : DomainError(msg) {}
};

struct ParityViolationError : DomainError {
    explicit ParityViolationError(const std::string& msg) : DomainError(msg) {}
};

struct ParseError : DomainError {
    std::size_t offset;
    ParseError(std::size_t off, const std::string& msg)
        : DomainError("parse error at byte " + std::to_string(off) + ": " + msg), offset(off) {}
};

struct CacheError : DomainError {
    explicit CacheError(const std::string& msg) : DomainError(msg) {}
};

} // namespace slopelab
