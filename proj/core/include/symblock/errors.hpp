#pragma once

#include <stdexcept>
#include <string>

namespace symblock {

// Bad input or a violated operation precondition (invalid bead counts,
// illegal bead moves, out-of-range lemma parameters, non-prime p, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A bounded search hit its configured cap before reaching a conclusion.
// Deliberately distinct from "no result exists": the cap is an engineering
// bound, not a mathematical one.
class UndecidedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace symblock
