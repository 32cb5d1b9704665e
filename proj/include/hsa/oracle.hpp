#pragma once

#include <map>
#include <string>
#include <vector>

#include "hsa/circuits.hpp"

// Brute-force verification machinery: exact SPBSM-basis expansion,
// exhaustive enumeration of every measurement record with its probability,
// and full-protocol completeness reports. No sampling anywhere.

namespace hsa {

struct OutcomeDistribution {
  int n_photons = 0;
  std::map<std::vector<SpbsmKind>, Amplitude> entries;
};

// Exact change of basis of every photon into {phi+, phi-, psi+, psi-}.
// Requires uniform probe tags (no measurement pending).
OutcomeDistribution expand_in_spbsm_basis(const PureState& state);

struct RecordProbability {
  MeasurementRecord record;
  double probability;
};

struct ProbeLeaf {
  std::vector<ProbeOutcome> outcomes;
  double probability;
  PureState state;  // after all probe stages, before any SPBSM
};

// Depth-first traversal of the plan's probe measurements only.
std::vector<ProbeLeaf> enumerate_probe_leaves(const WiringPlan& plan,
                                              const PureState& input);

// Depth-first traversal of every measurement branching point, carrying exact
// branch probabilities. probe_branching reports whether any probe had more
// than one outcome class (false for canonical basis inputs).
std::vector<RecordProbability> enumerate_records(const WiringPlan& plan,
                                                 const PureState& input,
                                                 bool* probe_branching =
                                                     nullptr);

struct LabelCheck {
  std::string label;
  int n_records = 0;
  bool probes_deterministic = false;
  bool round_trip = false;
  bool probabilities_sum_to_one = false;
  bool equiprobable = false;
  double record_probability = 0.0;  // shared value when equiprobable
};

struct VerificationReport {
  CircuitKind kind;
  int n_photons = 0;
  int labels_tested = 0;
  long records_total = 0;
  bool determinism_pass = false;
  bool round_trip_pass = false;
  bool probability_pass = false;
  bool partition_pass = false;
  double wall_seconds = 0.0;
  std::vector<LabelCheck> labels;
  std::vector<std::string> failures;

  bool pass() const {
    return determinism_pass && round_trip_pass && probability_pass &&
           partition_pass;
  }
};

// Enumerates every label of the circuit, checks probe determinism,
// round-trip decoding, probability completeness and cross-label record
// disjointness. `parallel` switches the label loop to the OpenMP kernel;
// both paths produce identical reports (modulo wall time).
VerificationReport verify_all(CircuitKind kind, int n_photons,
                              bool parallel = true);

}  // namespace hsa
