#pragma once

#include "collatz/natural.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>

namespace collatz {

/// Base for every error raised by the library.
class CollatzError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// The orbit did not reach 1 within the step budget. This is the
/// counterexample signal (divergence or a non-trivial cycle), so callers
/// are expected to catch and report it.
class StepBudgetExceeded : public CollatzError {
  public:
    StepBudgetExceeded(BigInt start, std::uint64_t budget)
        : CollatzError("orbit of " + to_decimal(start) + " did not reach 1 within " + std::to_string(budget) + " steps"),
          start_(std::move(start)), budget_(budget)
    {
    }

    const BigInt& start() const noexcept { return start_; }
    std::uint64_t budget() const noexcept { return budget_; }

  private:
    BigInt start_;
    std::uint64_t budget_;
};

class EvenStart : public CollatzError {
  public:
    using CollatzError::CollatzError;
};

/// Exponent vector violates a representation invariant (monotonicity,
/// positivity, divisibility).
class RepresentationError : public CollatzError {
  public:
    enum class Kind { NotMonotone, NotPositive, NotDivisible, NotOdd };

    RepresentationError(Kind kind, const std::string& what) : CollatzError(what), kind_(kind) {}

    Kind kind() const noexcept { return kind_; }

  private:
    Kind kind_;
};

/// Parameters outside the documented domain of an operation.
class DomainViolation : public CollatzError {
  public:
    using CollatzError::CollatzError;
};

/// Requested enumeration exceeds the configured size cap.
class ResourceCap : public CollatzError {
  public:
    using CollatzError::CollatzError;
};

} // namespace collatz
