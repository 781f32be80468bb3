#pragma once

#include <stdexcept>
#include <string>

namespace umbral {

/// Base class for every error raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
};

struct PoleAtPoint : Error {
    explicit PoleAtPoint(const std::string& where)
        : Error("denominator vanishes at q = " + where) {}
};

struct InvalidPsi : Error {
    explicit InvalidPsi(const std::string& what) : Error("invalid psi sequence: " + what) {}
};

struct NotInRange : Error {
    explicit NotInRange(const std::string& what) : Error("operand out of range: " + what) {}
};

struct TruncationExceeded : Error {
    explicit TruncationExceeded(const std::string& what)
        : Error("truncation order exceeded: " + what) {}
};

struct MismatchedContext : Error {
    explicit MismatchedContext(const std::string& what)
        : Error("mismatched psi/order context: " + what) {}
};

struct NotInvertible : Error {
    NotInvertible() : Error("operator has zero constant term, no inverse") {}
};

struct NotDelta : Error {
    NotDelta() : Error("operator is not a delta operator") {}
};

struct CompositionDiverges : Error {
    CompositionDiverges() : Error("series composition does not truncate (inner constant term != 0)") {}
};

struct Inconsistent : Error {
    explicit Inconsistent(const std::string& what) : Error("no consistent solution: " + what) {}
};

struct GroundTooLarge : Error {
    explicit GroundTooLarge(int m)
        : Error("ground set size " + std::to_string(m) + " exceeds enumeration cap 12") {}
};

struct ErrataExcluded : Error {
    explicit ErrataExcluded(const std::string& name)
        : Error("no verified closed form for '" + name + "' (kept only as errata fixture)") {}
};

struct InvalidParams : Error {
    explicit InvalidParams(const std::string& what) : Error("invalid parameters: " + what) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error("parse error: " + what) {}
};

}  // namespace umbral
