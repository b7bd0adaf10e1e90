#ifndef INTERTWINE_ERROR_HPP
#define INTERTWINE_ERROR_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace intertwine {

enum class Errc {
    NotPrime,
    BadModulus,
    DivisionByZero,
    FieldMismatch,
    BothZero,
    ZeroPolynomial,
    ConstantPolynomial,
    NotMonic,
    NotSquare,
    Singular,
    SizeMismatch,
    LengthMismatch,
    DependentPrefix,
    NotIrreducible,
    InternalInconsistency,
    EmptyList,
    ZeroCode,
    BudgetExceeded,
    BadK,
    FieldTooSmall,
    Parse,
};

inline const char* errc_name(Errc c) noexcept {
    switch (c) {
        case Errc::NotPrime: return "NotPrime";
        case Errc::BadModulus: return "BadModulus";
        case Errc::DivisionByZero: return "DivisionByZero";
        case Errc::FieldMismatch: return "FieldMismatch";
        case Errc::BothZero: return "BothZero";
        case Errc::ZeroPolynomial: return "ZeroPolynomial";
        case Errc::ConstantPolynomial: return "ConstantPolynomial";
        case Errc::NotMonic: return "NotMonic";
        case Errc::NotSquare: return "NotSquare";
        case Errc::Singular: return "Singular";
        case Errc::SizeMismatch: return "SizeMismatch";
        case Errc::LengthMismatch: return "LengthMismatch";
        case Errc::DependentPrefix: return "DependentPrefix";
        case Errc::NotIrreducible: return "NotIrreducible";
        case Errc::InternalInconsistency: return "InternalInconsistency";
        case Errc::EmptyList: return "EmptyList";
        case Errc::ZeroCode: return "ZeroCode";
        case Errc::BudgetExceeded: return "BudgetExceeded";
        case Errc::BadK: return "BadK";
        case Errc::FieldTooSmall: return "FieldTooSmall";
        case Errc::Parse: return "Parse";
    }
    return "Unknown";
}

/// Every failure raised by the library. `code()` identifies the condition;
/// `required()`/`actual()` carry the two numbers of BudgetExceeded
/// (count, budget) and FieldTooSmall (required q, actual q).
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what, std::uint64_t required = 0, std::uint64_t actual = 0)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what),
          code_(code), required_(required), actual_(actual) {}

    Errc code() const noexcept { return code_; }
    std::uint64_t required() const noexcept { return required_; }
    std::uint64_t actual() const noexcept { return actual_; }

private:
    Errc code_;
    std::uint64_t required_;
    std::uint64_t actual_;
};

}  // namespace intertwine

#endif  // INTERTWINE_ERROR_HPP
