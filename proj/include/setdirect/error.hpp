#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace setdirect {

enum class ErrorCode {
    NotAGroup,
    OrderLimitExceeded,
    NotCentral,
    NotIsomorphism,
    EmptyGeneratingSet,
    EmptySet,
    NotNormalSubgroup,
    NotNormal,
    NotSubgroup,
    NotAbelian,
    NotCyclic,
    IndexMismatch,
    SystemMismatch,
    InvalidChoice,
    HypothesisViolated,
    NotADirectFactorizationOfZ,
    NotSemiRegular,
    OrderNotPrimePowerAtLeastSquare,
    NotCertified,
    ContainmentViolated,
    PreconditionViolated,
    SearchSpaceTooLarge,
    TimeBudgetExceeded,
    ParseError,
    InternalInconsistency,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

// Raised when two independent computations of the same quantity disagree.
// Never expected in a correct build; the tests treat it as a hard failure.
[[noreturn]] inline void inconsistency(const std::string& what) {
    throw Error(ErrorCode::InternalInconsistency, what);
}

}  // namespace setdirect
