#ifndef DUVAL_ERRORS_HPP
#define DUVAL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace duval {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Binary operation on scalars whose lambda-relation flags disagree.
struct FlagMismatchError : Error {
    FlagMismatchError() : Error("scalar operands have mismatched lambda-relation flags") {}
};

struct DivisionByZeroError : Error {
    DivisionByZeroError() : Error("division by zero") {}
};

// Inversion or negative-power substitution applied to a non-monomial scalar.
struct NotAUnitError : Error {
    explicit NotAUnitError(const std::string& what) : Error("not a unit: " + what) {}
};

struct ParseError : Error {
    ParseError(std::size_t pos, const std::string& msg)
        : Error("parse error at position " + std::to_string(pos) + ": " + msg), position(pos) {}
    std::size_t position;
};

struct DimensionMismatchError : Error {
    explicit DimensionMismatchError(const std::string& what) : Error("dimension mismatch: " + what) {}
};

struct GradednessError : Error {
    explicit GradednessError(const std::string& what) : Error("gradedness violation: " + what) {}
};

struct WeightMismatchError : Error {
    WeightMismatchError() : Error("maps have different ambient weights") {}
};

// Thrown by verify_automorphism; carries the residual for diagnostics.
struct NotAnAutomorphismError : Error {
    NotAnAutomorphismError(const std::string& map_name, std::string residual_text)
        : Error("map '" + map_name + "' does not preserve the equation"),
          residual(std::move(residual_text)) {}
    std::string residual;
};

struct OrderCapError : Error {
    explicit OrderCapError(int cap)
        : Error("element order exceeds cap " + std::to_string(cap)) {}
};

struct ClosureCapError : Error {
    explicit ClosureCapError(int cap)
        : Error("closure exceeds cap " + std::to_string(cap) +
                " (a generator with a free family symbol generates an infinite group)") {}
};

struct SizeCapError : Error {
    explicit SizeCapError(const std::string& what) : Error("size cap exceeded: " + what) {}
};

// Catalog schema violation; names the case and field it was found in.
struct SchemaError : Error {
    SchemaError(const std::string& where, const std::string& msg)
        : Error("schema violation at " + where + ": " + msg) {}
};

struct UnknownMapError : Error {
    explicit UnknownMapError(const std::string& name) : Error("unknown map reference '" + name + "'") {}
};

struct UnknownFormatError : Error {
    explicit UnknownFormatError(const std::string& f) : Error("unknown output format '" + f + "'") {}
};

}  // namespace duval

#endif
