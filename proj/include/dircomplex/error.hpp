/**
 * Error types thrown by the library.
 *
 * Every failure is an exception derived from dircomplex::Error. Errors that
 * carry a witness (a missing face, a cyclic triangle, ...) expose it as a
 * public member so callers can report it without parsing the message.
 */
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dircomplex {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class BadParameter : public Error {
public:
    using Error::Error;
};

class EmptySimplex : public Error {
public:
    EmptySimplex() : Error("simplex must be non-empty") {}
};

/// A face y of a member x is missing from a set family that should be closed.
class NotClosed : public Error {
public:
    NotClosed(std::vector<std::uint32_t> face, std::vector<std::uint32_t> member, const std::string& what)
        : Error(what), face(std::move(face)), member(std::move(member)) {}
    std::vector<std::uint32_t> face;
    std::vector<std::uint32_t> member;
};

class CapExceeded : public Error {
public:
    using Error::Error;
};

class MissingEnergy : public Error {
public:
    MissingEnergy(std::vector<std::uint32_t> simplex, const std::string& what)
        : Error(what), simplex(std::move(simplex)) {}
    std::vector<std::uint32_t> simplex;
};

class UnknownVertex : public Error {
public:
    explicit UnknownVertex(std::uint32_t v)
        : Error("unknown vertex " + std::to_string(v)), vertex(v) {}
    std::uint32_t vertex;
};

class NotLocallyInjective : public Error {
public:
    NotLocallyInjective(std::vector<std::uint32_t> simplex, const std::string& what)
        : Error(what), simplex(std::move(simplex)) {}
    std::vector<std::uint32_t> simplex;
};

/// Raised when a computation needs a total order on every clique but the
/// orientation contains a directed 3-cycle.
class CyclicTriangle : public Error {
public:
    CyclicTriangle(std::vector<std::uint32_t> triangle, const std::string& what)
        : Error(what), triangle(std::move(triangle)) {}
    std::vector<std::uint32_t> triangle;
};

class NotASimplex : public Error {
public:
    using Error::Error;
};

class TooLarge : public Error {
public:
    using Error::Error;
};

class IdentityViolated : public Error {
public:
    using Error::Error;
};

class BudgetExceeded : public Error {
public:
    using Error::Error;
};

class NotDGraph : public Error {
public:
    using Error::Error;
};

class UnclassifiedVertex : public Error {
public:
    explicit UnclassifiedVertex(std::uint32_t v)
        : Error("vertex " + std::to_string(v) + " is neither hyperbolic nor regular"), vertex(v) {}
    std::uint32_t vertex;
};

class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace dircomplex
