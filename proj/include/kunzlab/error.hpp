#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace kunzlab {

enum class ErrorCode {
    NotCofinite,
    NotKunz,
    DomainError,
    ResourceBound,
    LetterOutOfAlphabet,
    InvalidDecomposition,
    StepBudgetExceeded,
    ParseError,
};

const char* to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so the
/// C layer can map it to a status without parsing messages.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

/// Default ceiling on candidate words / gap sets / decompositions examined by
/// any exhaustive search. Exceeding it is a hard error, never a truncation.
inline constexpr std::uint64_t kDefaultMaxCandidates = 10'000'000;

}  // namespace kunzlab
