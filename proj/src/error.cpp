#include "kunzlab/error.hpp"

namespace kunzlab {

const char* to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::NotCofinite: return "NotCofinite";
        case ErrorCode::NotKunz: return "NotKunz";
        case ErrorCode::DomainError: return "DomainError";
        case ErrorCode::ResourceBound: return "ResourceBound";
        case ErrorCode::LetterOutOfAlphabet: return "LetterOutOfAlphabet";
        case ErrorCode::InvalidDecomposition: return "InvalidDecomposition";
        case ErrorCode::StepBudgetExceeded: return "StepBudgetExceeded";
        case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

}  // namespace kunzlab
