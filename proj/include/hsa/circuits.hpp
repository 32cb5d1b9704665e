#pragma once

#include <utility>
#include <vector>

#include "hsa/elements.hpp"

// The analyzer pipelines: HBSA for two photons and HGSA for N photons,
// expressed as a WiringPlan executed stage by stage.

namespace hsa {

enum class CircuitKind : std::uint8_t { Hbsa, Hgsa };

struct MeasurementRecord {
  CircuitKind kind;
  int n_photons;
  std::vector<ProbeOutcome> probe_outcomes;
  std::vector<SpbsmOutcome> spbsm_outcomes;
  auto operator<=>(const MeasurementRecord&) const = default;
};

struct KerrCoupling {
  int photon;
  SpatialMode mode;
  int coupling;  // +1 or -1
};

// One stage: an optional beam-splitter layer, then one probe's couplings
// followed by its X-quadrature measurement. probe < 0 means BS layer only.
struct WiringStage {
  std::vector<int> bs_photons;
  int probe = -1;
  std::vector<KerrCoupling> couplings;
};

struct WiringPlan {
  CircuitKind kind;
  int n_photons;
  std::vector<ProbeUnit> probe_units;
  std::vector<WiringStage> stages;
};

// Fig. of the two-photon analyzer: probe 1 parity-couples mode M1 of both
// photons, BS on both, probe 2 repeats the coupling. No restoring BS layer.
WiringPlan hbsa_plan();

// N-photon analyzer: probes 1..N-1 parity-check photon 0 against photon j on
// mode M1; a BS layer; a pi probe counting mode-M2 occupation of every
// photon; a restoring BS layer.
WiringPlan hgsa_plan(int n_photons);

std::vector<ProbeUnit> hbsa_probe_units();
std::vector<ProbeUnit> hgsa_probe_units(int n_photons);

// Runs the probe stages of a plan with sampled measurements.
std::pair<std::vector<ProbeOutcome>, PureState> run_probe_stages(
    const WiringPlan& plan, PureState state, Rng& rng);

std::pair<MeasurementRecord, PureState> run_hbsa(const PureState& state,
                                                 Rng& rng);
std::pair<MeasurementRecord, PureState> run_hgsa(const PureState& state,
                                                 int n_photons, Rng& rng);

// The BS-induced relabeling of Table-style spatial states:
// Phi+ <-> Phi+, Phi- <-> Psi+, Psi- <-> Psi-. An involution.
BellLabel spatial_state_after_probes(BellLabel original);

}  // namespace hsa
