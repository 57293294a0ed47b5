#pragma once

#include <stdexcept>
#include <string>

namespace alg3 {

/// Base class for all errors raised by this library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct ZeroDenominator : Error {
    ZeroDenominator() : Error("rational with zero denominator") {}
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
};

/// Square root of a negative scalar requested in Real mode.
struct NegativeRadicand : Error {
    explicit NegativeRadicand(const std::string& what_arg)
        : Error("negative radicand in Real mode: " + what_arg) {}
};

/// More than two independent radicals would be required.
struct UnsupportedTower : Error {
    UnsupportedTower() : Error("extension tower deeper than two radicals") {}
};

struct DimensionMismatch : Error {
    explicit DimensionMismatch(const std::string& what_arg)
        : Error("dimension mismatch: " + what_arg) {}
};

struct SingularMatrix : Error {
    SingularMatrix() : Error("singular matrix") {}
};

struct NonAssociative : Error {
    explicit NonAssociative(const std::string& what_arg)
        : Error("table is not associative: " + what_arg) {}
};

struct ModeMismatch : Error {
    explicit ModeMismatch(const std::string& what_arg)
        : Error("field mode mismatch: " + what_arg) {}
};

/// A profile fell outside the catalog; signals an internal bug or bad input.
struct ProfileNotInCatalog : Error {
    explicit ProfileNotInCatalog(const std::string& what_arg)
        : Error("invariant profile not in catalog: " + what_arg) {}
};

/// A reduction step reached a state the case analysis proves impossible.
struct InternalContradiction : Error {
    explicit InternalContradiction(const std::string& what_arg)
        : Error("internal contradiction: " + what_arg) {}
};

/// The quadratic form of the one-parameter family degenerated.
struct DegenerateForm : Error {
    explicit DegenerateForm(const std::string& what_arg)
        : Error("degenerate form: " + what_arg) {}
};

struct BadPrime : Error {
    explicit BadPrime(const std::string& what_arg) : Error("bad prime: " + what_arg) {}
};

struct BadLabel : Error {
    explicit BadLabel(const std::string& what_arg) : Error("bad label: " + what_arg) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& what_arg) : Error("parse error: " + what_arg) {}
};

}  // namespace alg3
