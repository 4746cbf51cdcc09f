#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace icg {

// Every failure the library reports carries one of these kinds. The CLI maps
// them onto its exit codes, so the names are part of the external contract.
enum class ErrorKind {
    InvalidArgument,
    Overflow,
    ModulusTooSmall,
    NonDivisor,
    ImproperDivisor,
    EmptyDivisorSet,
    AsymmetricSymbol,
    Disconnected,
    ClassInconsistency,
    CapExceeded,
    SNotReduced,
    OddModulus,
    NotPrime,
    PTooSmall,
    OrderViolation,
    MultiplicityMismatch,
    SameVertex,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& detail)
        : std::runtime_error(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }
    std::string_view name() const noexcept { return to_string(kind_); }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& detail) {
    throw Error(kind, detail);
}

}  // namespace icg
