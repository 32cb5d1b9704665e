#pragma once

#include <array>
#include <random>
#include <utility>
#include <vector>

#include "hsa/hilbert.hpp"

// Optical elements and measurements: beam splitter, cross-Kerr probe
// coupling, sign-blind X-quadrature probe readout, single-photon Bell-state
// measurement and its detector-port mapping.

namespace hsa {

enum class ProbeClass : std::uint8_t { Zero, ThetaMagnitude, Pi };

struct ProbeOutcome {
  int probe_index;
  ProbeClass klass;
  auto operator<=>(const ProbeOutcome&) const = default;
};

enum class SpbsmKind : std::uint8_t { PhiPlus, PhiMinus, PsiPlus, PsiMinus };

struct SpbsmOutcome {
  int photon_index;
  SpbsmKind kind;
  auto operator<=>(const SpbsmOutcome&) const = default;
};

struct DetectorPort {
  int photon_index;
  SpatialMode mode;
  Sign sign;
  auto operator<=>(const DetectorPort&) const = default;
};

struct UnexpectedPhaseClass : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DoubleMeasurement : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using Rng = std::mt19937_64;

// Hadamard on one photon's spatial mode:
// |M1> -> (|M1>+|M2>)/sqrt(2), |M2> -> (|M1>-|M2>)/sqrt(2).
PureState apply_beam_splitter(const PureState& state, int photon);

// Adds `coupling` (+1 or -1) to the probe's tag on every branch where the
// photon occupies `mode`. Diagonal; amplitudes untouched.
PureState apply_cross_kerr(const PureState& state, int probe, int photon,
                           SpatialMode mode, int coupling);

struct ProbeBranch {
  ProbeOutcome outcome;
  double probability;
  PureState post;  // projected, renormalized, probe tags reset to 0
};

// All measurement classes of a probe with their probabilities and projected
// post-states. Theta probes classify by |tag| in {0,1}; pi probes by tag
// parity. |tag| >= 2 on a theta probe signals a wiring bug.
std::vector<ProbeBranch> probe_measurement_branches(const PureState& state,
                                                    int probe);

std::pair<ProbeOutcome, PureState> measure_probe(const PureState& state,
                                                 int probe, Rng& rng);

struct SpbsmBranch {
  SpbsmOutcome outcome;
  double probability;
  PureState post;  // photon collapsed onto the outcome state, marked measured
};

std::vector<SpbsmBranch> spbsm_measurement_branches(const PureState& state,
                                                    int photon);

std::pair<SpbsmOutcome, PureState> measure_spbsm(const PureState& state,
                                                 int photon, Rng& rng);

// phi^± exits port x1^±, psi^± exits port x2^±.
DetectorPort detector_port(const SpbsmOutcome& outcome);
SpbsmOutcome port_to_outcome(const DetectorPort& port);

// <kind | pol, mode> in the single-photon Bell basis
// phi^± = (|H M2> ± |V M1>)/sqrt(2), psi^± = (|H M1> ± |V M2>)/sqrt(2).
double spbsm_coefficient(SpbsmKind kind, Polarization pol, SpatialMode mode);

inline constexpr std::array<SpbsmKind, 4> kAllSpbsmKinds = {
    SpbsmKind::PhiPlus, SpbsmKind::PhiMinus, SpbsmKind::PsiPlus,
    SpbsmKind::PsiMinus};

}  // namespace hsa
