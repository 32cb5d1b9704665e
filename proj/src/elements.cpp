#include "hsa/elements.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>

namespace hsa {

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

void check_photon(const PureState& state, int photon) {
  if (photon < 0 || photon >= state.n_photons)
    throw IndexOutOfRange("photon index out of range");
}

void check_probe(const PureState& state, int probe) {
  if (probe < 0 || probe >= static_cast<int>(state.probe_units.size()))
    throw IndexOutOfRange("probe index out of range");
}

}  // namespace

PureState apply_beam_splitter(const PureState& state, int photon) {
  check_photon(state, photon);
  PureState out(state.n_photons, state.probe_units);
  out.spbsm_done = state.spbsm_done;
  for (const auto& [branch, amp] : state.amps) {
    Branch b1 = branch;
    Branch b2 = branch;
    b1.ket[photon].mode = SpatialMode::M1;
    b2.ket[photon].mode = SpatialMode::M2;
    const double s2 =
        branch.ket[photon].mode == SpatialMode::M1 ? kInvSqrt2 : -kInvSqrt2;
    out.add(b1, amp * kInvSqrt2);
    out.add(b2, amp * s2);
  }
  out.prune();
  return out;
}

PureState apply_cross_kerr(const PureState& state, int probe, int photon,
                           SpatialMode mode, int coupling) {
  check_photon(state, photon);
  check_probe(state, probe);
  if (coupling != 1 && coupling != -1)
    throw IndexOutOfRange("coupling must be +1 or -1");
  PureState out(state.n_photons, state.probe_units);
  out.spbsm_done = state.spbsm_done;
  for (const auto& [branch, amp] : state.amps) {
    Branch b = branch;
    if (b.ket[photon].mode == mode) b.tag[probe] += coupling;
    out.add(b, amp);
  }
  return out;
}

std::vector<ProbeBranch> probe_measurement_branches(const PureState& state,
                                                    int probe) {
  check_probe(state, probe);
  const ProbeUnit unit = state.probe_units[probe];

  std::map<ProbeClass, PureState> classes;
  for (const auto& [branch, amp] : state.amps) {
    const int tag = branch.tag[probe];
    ProbeClass klass;
    if (unit == ProbeUnit::Theta) {
      const int mag = std::abs(tag);
      if (mag > 1)
        throw UnexpectedPhaseClass(
            "theta probe accumulated |tag| >= 2; circuit wiring bug");
      klass = mag == 0 ? ProbeClass::Zero : ProbeClass::ThetaMagnitude;
    } else {
      klass = (tag % 2 == 0) ? ProbeClass::Zero : ProbeClass::Pi;
    }
    auto [it, inserted] = classes.try_emplace(
        klass, PureState(state.n_photons, state.probe_units));
    if (inserted) it->second.spbsm_done = state.spbsm_done;
    Branch b = branch;
    b.tag[probe] = 0;  // probe consumed and reset
    it->second.add(b, amp);
  }

  std::vector<ProbeBranch> out;
  for (auto& [klass, post] : classes) {
    const double p = post.norm_sq();
    if (p < kAmpTol * kAmpTol) continue;
    post.normalize();
    out.push_back({{probe, klass}, p, std::move(post)});
  }
  return out;
}

namespace {

template <typename Branches>
const auto& sample_branch(const Branches& branches, Rng& rng) {
  std::uniform_real_distribution<double> dist(0.0, 1.0);
  double u = dist(rng);
  for (const auto& b : branches) {
    u -= b.probability;
    if (u <= 0.0) return b;
  }
  return branches.back();
}

}  // namespace

std::pair<ProbeOutcome, PureState> measure_probe(const PureState& state,
                                                 int probe, Rng& rng) {
  const auto branches = probe_measurement_branches(state, probe);
  const auto& chosen = sample_branch(branches, rng);
  return {chosen.outcome, chosen.post};
}

double spbsm_coefficient(SpbsmKind kind, Polarization pol, SpatialMode mode) {
  switch (kind) {
    case SpbsmKind::PhiPlus:
      if (pol == Polarization::H && mode == SpatialMode::M2) return kInvSqrt2;
      if (pol == Polarization::V && mode == SpatialMode::M1) return kInvSqrt2;
      return 0.0;
    case SpbsmKind::PhiMinus:
      if (pol == Polarization::H && mode == SpatialMode::M2) return kInvSqrt2;
      if (pol == Polarization::V && mode == SpatialMode::M1) return -kInvSqrt2;
      return 0.0;
    case SpbsmKind::PsiPlus:
      if (pol == Polarization::H && mode == SpatialMode::M1) return kInvSqrt2;
      if (pol == Polarization::V && mode == SpatialMode::M2) return kInvSqrt2;
      return 0.0;
    case SpbsmKind::PsiMinus:
      if (pol == Polarization::H && mode == SpatialMode::M1) return kInvSqrt2;
      if (pol == Polarization::V && mode == SpatialMode::M2) return -kInvSqrt2;
      return 0.0;
  }
  return 0.0;
}

std::vector<SpbsmBranch> spbsm_measurement_branches(const PureState& state,
                                                    int photon) {
  check_photon(state, photon);
  if (state.spbsm_done[photon])
    throw DoubleMeasurement("photon already SPBSM-measured in this run");

  std::vector<SpbsmBranch> out;
  for (SpbsmKind kind : kAllSpbsmKinds) {
    PureState post(state.n_photons, state.probe_units);
    post.spbsm_done = state.spbsm_done;
    post.spbsm_done[photon] = true;
    for (const auto& [branch, amp] : state.amps) {
      const double c =
          spbsm_coefficient(kind, branch.ket[photon].pol,
                            branch.ket[photon].mode);
      if (c == 0.0) continue;
      // Collapse the photon onto |kind>, re-expanded in the basis kets.
      for (Polarization pol : {Polarization::H, Polarization::V}) {
        for (SpatialMode mode : {SpatialMode::M1, SpatialMode::M2}) {
          const double w = spbsm_coefficient(kind, pol, mode);
          if (w == 0.0) continue;
          Branch b = branch;
          b.ket[photon] = {pol, mode};
          post.add(b, amp * c * w);
        }
      }
    }
    post.prune();
    const double p = post.norm_sq();
    if (p < kAmpTol * kAmpTol) continue;
    post.normalize();
    out.push_back({{photon, kind}, p, std::move(post)});
  }
  return out;
}

std::pair<SpbsmOutcome, PureState> measure_spbsm(const PureState& state,
                                                 int photon, Rng& rng) {
  const auto branches = spbsm_measurement_branches(state, photon);
  const auto& chosen = sample_branch(branches, rng);
  return {chosen.outcome, chosen.post};
}

DetectorPort detector_port(const SpbsmOutcome& outcome) {
  switch (outcome.kind) {
    case SpbsmKind::PhiPlus:
      return {outcome.photon_index, SpatialMode::M1, Sign::Plus};
    case SpbsmKind::PhiMinus:
      return {outcome.photon_index, SpatialMode::M1, Sign::Minus};
    case SpbsmKind::PsiPlus:
      return {outcome.photon_index, SpatialMode::M2, Sign::Plus};
    case SpbsmKind::PsiMinus:
      return {outcome.photon_index, SpatialMode::M2, Sign::Minus};
  }
  throw IndexOutOfRange("invalid SPBSM kind");
}

SpbsmOutcome port_to_outcome(const DetectorPort& port) {
  if (port.mode == SpatialMode::M1)
    return {port.photon_index, port.sign == Sign::Plus ? SpbsmKind::PhiPlus
                                                       : SpbsmKind::PhiMinus};
  return {port.photon_index, port.sign == Sign::Plus ? SpbsmKind::PsiPlus
                                                     : SpbsmKind::PsiMinus};
}

}  // namespace hsa
