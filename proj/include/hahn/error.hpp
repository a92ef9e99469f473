#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hahn {

enum class ErrorKind {
    DenominatorNotInLocalization,
    TagMismatch,
    DivisibleElement,
    OutOfDomain,
    NotInValuationRing,
    ZeroDivision,
    SyntaxError,
    UnboundVariable,
    QuantifierPresent,
    SignatureMismatch,
    ScopeError,
    Precondition,
};

std::string_view to_string(ErrorKind kind);

/// All library failures are reported through this type; `kind()` lets
/// callers (and the CLI) dispatch without string matching.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

/// Parse failure with the byte offset where the parser gave up.
class SyntaxError : public Error {
public:
    SyntaxError(std::size_t position, const std::string& what)
        : Error(ErrorKind::SyntaxError,
                what + " at position " + std::to_string(position)),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

}  // namespace hahn
