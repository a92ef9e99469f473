#include "hahn/common.hpp"

#include <string>

#include "hahn/error.hpp"

namespace hahn {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::DenominatorNotInLocalization: return "DenominatorNotInLocalization";
        case ErrorKind::TagMismatch: return "TagMismatch";
        case ErrorKind::DivisibleElement: return "DivisibleElement";
        case ErrorKind::OutOfDomain: return "OutOfDomain";
        case ErrorKind::NotInValuationRing: return "NotInValuationRing";
        case ErrorKind::ZeroDivision: return "ZeroDivision";
        case ErrorKind::SyntaxError: return "SyntaxError";
        case ErrorKind::UnboundVariable: return "UnboundVariable";
        case ErrorKind::QuantifierPresent: return "QuantifierPresent";
        case ErrorKind::SignatureMismatch: return "SignatureMismatch";
        case ErrorKind::ScopeError: return "ScopeError";
        case ErrorKind::Precondition: return "Precondition";
    }
    return "Unknown";
}

Divisor divisor_from_int(long r) {
    switch (r) {
        case 2: return Divisor::two;
        case 3: return Divisor::three;
        case 6: return Divisor::six;
        default:
            throw Error(ErrorKind::Precondition,
                        "divisor must be 2, 3 or 6, got " + std::to_string(r));
    }
}

std::string_view to_string(std::strong_ordering ord) {
    if (ord < 0) return "lt";
    if (ord > 0) return "gt";
    return "eq";
}

}  // namespace hahn
