#pragma once

#include <stdexcept>
#include <string>

namespace bsroots {

/// Malformed input text or invalid arguments (CLI exit status 2).
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Errors that come from the mathematics rather than the input syntax
/// (CLI exit status 1). `detail` may carry a serialized trace.
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what, std::string detail = {})
        : std::runtime_error(what), detail_(std::move(detail)) {}
    const std::string& detail() const noexcept { return detail_; }

private:
    std::string detail_;
};

/// 𝔞 is not contained in the radical of J, so ν is infinite.
class RadicalContainmentError : public DomainError {
public:
    using DomainError::DomainError;
};

/// An optimisation over a partial variable set is unbounded.
class UnboundedInvariantError : public DomainError {
public:
    using DomainError::DomainError;
};

/// A stabilisation or detection loop ran out of samples.
class BudgetExceededError : public DomainError {
public:
    using DomainError::DomainError;
};

/// A certificate could not be produced; the answer is not guessed.
class InconclusiveError : public DomainError {
public:
    using DomainError::DomainError;
};

/// τ_ℚ(w) = 0, so w lies in no cone of the fan.
class DegeneratePointError : public DomainError {
public:
    using DomainError::DomainError;
};

/// The prime divides a denominator that has to be inverted.
class ModulusError : public DomainError {
public:
    using DomainError::DomainError;
};

}  // namespace bsroots
