#pragma once

// JSON state specification accepted by the CLI:
//   {"bell_diag": [c1, c2, c3]}
//   {"deformed": {"r": ..., "s": ..., "c": [c1, c2, c3]}}
//   {"matrix": [[[re, im] x4] x4]}
// Numbers are IEEE doubles in decimal.

#include <stdexcept>
#include <string>
#include <variant>

#include "qcorr/qstate.hpp"

namespace qcorr {

// Malformed input (bad JSON, wrong shapes, missing fields). The message
// names the offending field.
class StateJsonError : public std::runtime_error {
 public:
  explicit StateJsonError(const std::string& what) : std::runtime_error(what) {}
};

using StateSpec = std::variant<BellDiag, DeformedBellDiag, TwoQubitDensity>;

StateSpec parse_state_json(const std::string& text);

// Convert whichever family was given into its density matrix (validating).
TwoQubitDensity to_density(const StateSpec& spec);

}  // namespace qcorr
