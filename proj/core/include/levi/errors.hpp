#pragma once

#include <stdexcept>
#include <string>

namespace levi {

/// Base class for every error raised by the library.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// --- scalar -----------------------------------------------------------

struct DivisionByZero : Error {
    DivisionByZero() : Error("division by zero") {}
};

struct DescriptorMismatch : Error {
    explicit DescriptorMismatch(const std::string& msg = "operands belong to different fields")
        : Error(msg) {}
};

struct InvalidField : Error {
    explicit InvalidField(const std::string& msg) : Error(msg) {}
};

struct InfiniteField : Error {
    explicit InfiniteField(const std::string& msg = "operation requires a finite field")
        : Error(msg) {}
};

// --- monoid -----------------------------------------------------------

struct IndexOutOfRange : Error {
    explicit IndexOutOfRange(const std::string& msg = "index out of range") : Error(msg) {}
};

struct NotAssociative : Error {
    int x, y, z;  // witness triple: (xy)z != x(yz)
    NotAssociative(int x_, int y_, int z_)
        : Error("associativity fails at (" + std::to_string(x_) + ", " + std::to_string(y_) +
                ", " + std::to_string(z_) + ")"),
          x(x_), y(y_), z(z_) {}
};

struct BadIdentity : Error {
    int x;  // witness: e*x != x or x*e != x
    explicit BadIdentity(int x_)
        : Error("identity law fails at element " + std::to_string(x_)), x(x_) {}
};

struct UnknownName : Error {
    explicit UnknownName(const std::string& name) : Error("unknown catalog name: " + name) {}
};

struct SizeLimit : Error {
    explicit SizeLimit(const std::string& msg) : Error(msg) {}
};

// --- funcspace --------------------------------------------------------

struct MixedDomains : Error {
    explicit MixedDomains(const std::string& msg = "functions live on different domains or fields")
        : Error(msg) {}
};

struct NotMultiplicative : Error {
    NotMultiplicative() : Error("function is not multiplicative") {}
};

struct BudgetExceeded : Error {
    explicit BudgetExceeded(const std::string& msg) : Error(msg) {}
};

// --- levi_core --------------------------------------------------------

struct DomainMismatch : Error {
    explicit DomainMismatch(const std::string& msg = "tuple does not match the problem domain")
        : Error(msg) {}
};

struct ChiCollidesWithMu : Error {
    ChiCollidesWithMu() : Error("chi coincides with one of the prescribed multiplicative functions") {}
};

struct ZeroParameter : Error {
    explicit ZeroParameter(const std::string& which) : Error("parameter must be nonzero: " + which) {}
};

struct WrongBlockShape : Error {
    explicit WrongBlockShape(const std::string& msg) : Error(msg) {}
};

struct DegenerateParams : Error {
    explicit DegenerateParams(const std::string& msg) : Error(msg) {}
};

struct ZeroH : Error {
    ZeroH() : Error("h must be a nonzero function") {}
};

struct NotASolution : Error {
    NotASolution() : Error("tuple does not solve the equation") {}
};

/// Raised when a verified solution matches none of the solution families.
/// Must never fire; if it does, the offending tuple is reported verbatim.
struct InternalCaseExhaustion : Error {
    explicit InternalCaseExhaustion(const std::string& tuple_json)
        : Error("no solution family matches this solution: " + tuple_json) {}
};

// --- oracle -----------------------------------------------------------

struct NullspaceCapExceeded : Error {
    explicit NullspaceCapExceeded(int nullity)
        : Error("nullspace dimension " + std::to_string(nullity) + " exceeds cap 20") {}
};

// --- internal ---------------------------------------------------------

struct InternalError : Error {
    explicit InternalError(const std::string& msg) : Error("internal error: " + msg) {}
};

}  // namespace levi
