#pragma once

#include <stdexcept>
#include <string>

namespace cacti {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct DivisionByZero : Error {
    explicit DivisionByZero(const std::string& msg = "division by zero") : Error(msg) {}
};

struct MixedFields : Error {
    explicit MixedFields(const std::string& msg = "operands live over different fields") : Error(msg) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& msg) : Error("parse error: " + msg) {}
};

struct MalformedPresentation : Error {
    explicit MalformedPresentation(const std::string& msg) : Error("malformed presentation: " + msg) {}
};

struct UnsupportedParams : Error {
    explicit UnsupportedParams(const std::string& msg) : Error("unsupported parameters: " + msg) {}
};

struct NotGroupLike : Error {
    explicit NotGroupLike(const std::string& msg) : Error("not group-like: " + msg) {}
};

struct ParentMismatch : Error {
    explicit ParentMismatch(const std::string& msg = "elements have different parents") : Error(msg) {}
};

struct NonHomogeneous : Error {
    explicit NonHomogeneous(const std::string& msg = "operation requires a homogeneous element") : Error(msg) {}
};

struct NotACocycle : Error {
    explicit NotACocycle(const std::string& msg = "element is not a cocycle") : Error(msg) {}
};

struct TruncationExceeded : Error {
    explicit TruncationExceeded(const std::string& msg) : Error("truncation cap exceeded: " + msg) {}
};

struct ExtractionFailure : Error {
    explicit ExtractionFailure(const std::string& msg) : Error("bialgebra extraction failed: " + msg) {}
};

struct NotABialgebraMorphism : Error {
    explicit NotABialgebraMorphism(const std::string& msg) : Error("not a bialgebra morphism: " + msg) {}
};

} // namespace cacti
