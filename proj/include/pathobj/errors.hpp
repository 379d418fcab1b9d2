#pragma once

#include <stdexcept>
#include <string>

namespace pathobj {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or ill-ranked input. The CLI maps this to exit code 2.
class InputError : public Error {
 public:
  using Error::Error;
};

// A caller broke a documented precondition (non-composable paths, off-range index).
class ContractViolation : public Error {
 public:
  ContractViolation(std::string contract, const std::string& what)
      : Error(contract + ": " + what), contract_(std::move(contract)) {}
  const std::string& contract() const { return contract_; }

 private:
  std::string contract_;
};

// Internally recomputed data disagreed with itself. Always a bug or an injected fault.
class InternalInconsistency : public Error {
 public:
  using Error::Error;
};

}  // namespace pathobj
