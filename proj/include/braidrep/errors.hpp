#pragma once

#include <stdexcept>
#include <string>

namespace braidrep {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotAUnit : Error {
    using Error::Error;
};
struct MissingVariable : Error {
    using Error::Error;
};
struct ZeroAssignment : Error {
    using Error::Error;
};
struct SyntaxError : Error {
    SyntaxError(const std::string& msg, std::size_t pos)
        : Error(msg + " at position " + std::to_string(pos)), position(pos) {}
    std::size_t position;
};
struct DimensionMismatch : Error {
    using Error::Error;
};
struct DimensionTooLarge : Error {
    using Error::Error;
};
struct IndexOutOfRange : Error {
    using Error::Error;
};
struct NotMonomialMatrix : Error {
    using Error::Error;
};
struct GeneratorOutOfRange : Error {
    using Error::Error;
};
struct StrandCountMismatch : Error {
    using Error::Error;
};
struct NotEvaluable : Error {
    using Error::Error;
};
struct NonUnitDeterminant : Error {
    using Error::Error;
};
struct InvalidParams : Error {
    using Error::Error;
};
struct InvalidConfig : Error {
    using Error::Error;
};

}  // namespace braidrep
