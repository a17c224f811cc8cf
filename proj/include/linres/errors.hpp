#pragma once

#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

namespace linres {

/// Malformed or out-of-model input (wrong exponent lengths, k = 0, wrong degree, ...).
class InputError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// A documented precondition does not hold. Carries a machine-readable witness
/// (e.g. a chordless cycle, or the (i,j,k) triple violating condition (*)).
class PreconditionError : public std::runtime_error {
public:
  PreconditionError(const std::string& what, nlohmann::json witness)
      : std::runtime_error(what), witness_(std::move(witness)) {}
  const nlohmann::json& witness() const noexcept { return witness_; }

private:
  nlohmann::json witness_;
};

/// A configurable resource guard (strand size, node budget, step budget) was hit.
class ResourceLimitError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A consistency relation that the theory guarantees was violated. Always a bug.
class FalsificationError : public std::logic_error {
public:
  FalsificationError(const std::string& what, nlohmann::json detail = {})
      : std::logic_error(what), detail_(std::move(detail)) {}
  const nlohmann::json& detail() const noexcept { return detail_; }

private:
  nlohmann::json detail_;
};

}  // namespace linres
