#pragma once

#include <stdexcept>
#include <string>

namespace hqlat {

// Thrown when a truncation leaves no Schmidt coefficient above the discard
// threshold, i.e. the two-site wavefunction has numerically vanished.
class DegenerateStateError : public std::runtime_error {
 public:
  explicit DegenerateStateError(const std::string& what)
      : std::runtime_error(what) {}
};

// Thrown when a requested dense object (Hamiltonian, state vector) would
// exceed the configured dimension cap.
class ResourceLimitError : public std::runtime_error {
 public:
  explicit ResourceLimitError(const std::string& what)
      : std::runtime_error(what) {}
};

// Thrown when a NaN/Inf is detected during time evolution.  Carries the
// step and bond at which the failure surfaced (-1 when not applicable).
class NumericalError : public std::runtime_error {
 public:
  NumericalError(const std::string& what, long long step = -1, int bond = -1)
      : std::runtime_error(what), step_(step), bond_(bond) {}
  long long step() const { return step_; }
  int bond() const { return bond_; }

 private:
  long long step_;
  int bond_;
};

}  // namespace hqlat
