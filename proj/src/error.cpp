#include "icg/error.hpp"

namespace icg {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::InvalidArgument: return "InvalidArgument";
        case ErrorKind::Overflow: return "Overflow";
        case ErrorKind::ModulusTooSmall: return "ModulusTooSmall";
        case ErrorKind::NonDivisor: return "NonDivisor";
        case ErrorKind::ImproperDivisor: return "ImproperDivisor";
        case ErrorKind::EmptyDivisorSet: return "EmptyDivisorSet";
        case ErrorKind::AsymmetricSymbol: return "AsymmetricSymbol";
        case ErrorKind::Disconnected: return "Disconnected";
        case ErrorKind::ClassInconsistency: return "ClassInconsistency";
        case ErrorKind::CapExceeded: return "CapExceeded";
        case ErrorKind::SNotReduced: return "SNotReduced";
        case ErrorKind::OddModulus: return "OddModulus";
        case ErrorKind::NotPrime: return "NotPrime";
        case ErrorKind::PTooSmall: return "PTooSmall";
        case ErrorKind::OrderViolation: return "OrderViolation";
        case ErrorKind::MultiplicityMismatch: return "MultiplicityMismatch";
        case ErrorKind::SameVertex: return "SameVertex";
    }
    return "Unknown";
}

}  // namespace icg
