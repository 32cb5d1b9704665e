#pragma once

#include <string>

#include "hsa/circuits.hpp"

// Text forms of labels and outcomes shared by the CLI, reports and tests.
// Bell labels: "Phi+", "Psi-". GHZ labels: "<sign>:<bits>", e.g. "+:010".
// Probe classes: "0", "theta", "pi". SPBSM: "phi+", "psi-".
// Ports: photon letter + mode index + sign, e.g. "a1+", "b2-".

namespace hsa {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string to_string(BellLabel label);
std::string to_string(const GhzLabel& label);
std::string to_string(const HyperBellLabel& label);
std::string to_string(const HyperGhzLabel& label);
std::string to_string(ProbeClass klass);
std::string to_string(SpbsmKind kind);
std::string to_string(const DetectorPort& port);
std::string record_to_string(const MeasurementRecord& record);

BellLabel parse_bell_label(const std::string& text);
// Validates syntax and bit length; rejects non-canonical strings with the
// canonical form named in the message.
GhzLabel parse_ghz_label(const std::string& text, int n_photons);

}  // namespace hsa
