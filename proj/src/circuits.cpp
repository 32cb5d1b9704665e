#include "hsa/circuits.hpp"

namespace hsa {

std::vector<ProbeUnit> hbsa_probe_units() {
  return {ProbeUnit::Theta, ProbeUnit::Theta};
}

std::vector<ProbeUnit> hgsa_probe_units(int n_photons) {
  std::vector<ProbeUnit> units(n_photons - 1, ProbeUnit::Theta);
  units.push_back(ProbeUnit::Pi);
  return units;
}

WiringPlan hbsa_plan() {
  WiringPlan plan{CircuitKind::Hbsa, 2, hbsa_probe_units(), {}};
  const std::vector<KerrCoupling> parity = {{0, SpatialMode::M1, +1},
                                            {1, SpatialMode::M1, -1}};
  plan.stages.push_back({{}, 0, parity});
  plan.stages.push_back({{0, 1}, 1, parity});
  return plan;
}

WiringPlan hgsa_plan(int n_photons) {
  if (n_photons < 2) throw IndexOutOfRange("HGSA needs at least 2 photons");
  WiringPlan plan{CircuitKind::Hgsa, n_photons, hgsa_probe_units(n_photons),
                  {}};
  for (int j = 0; j + 1 < n_photons; ++j) {
    plan.stages.push_back({{},
                           j,
                           {{0, SpatialMode::M1, +1},
                            {j + 1, SpatialMode::M1, -1}}});
  }
  std::vector<int> all(n_photons);
  for (int i = 0; i < n_photons; ++i) all[i] = i;
  WiringStage pi_stage{all, n_photons - 1, {}};
  for (int i = 0; i < n_photons; ++i)
    pi_stage.couplings.push_back({i, SpatialMode::M2, +1});
  plan.stages.push_back(std::move(pi_stage));
  plan.stages.push_back({all, -1, {}});  // restore the spatial state
  return plan;
}

std::pair<std::vector<ProbeOutcome>, PureState> run_probe_stages(
    const WiringPlan& plan, PureState state, Rng& rng) {
  std::vector<ProbeOutcome> outcomes;
  for (const auto& stage : plan.stages) {
    for (int photon : stage.bs_photons)
      state = apply_beam_splitter(state, photon);
    if (stage.probe < 0) continue;
    for (const auto& c : stage.couplings)
      state = apply_cross_kerr(state, stage.probe, c.photon, c.mode,
                               c.coupling);
    auto [outcome, post] = measure_probe(state, stage.probe, rng);
    outcomes.push_back(outcome);
    state = std::move(post);
  }
  return {std::move(outcomes), std::move(state)};
}

namespace {

std::pair<MeasurementRecord, PureState> run_plan(const WiringPlan& plan,
                                                 const PureState& input,
                                                 Rng& rng) {
  if (input.n_photons != plan.n_photons ||
      input.probe_units != plan.probe_units)
    throw ShapeMismatch("input state does not match the circuit's shape");
  auto [probes, state] = run_probe_stages(plan, input, rng);
  MeasurementRecord record{plan.kind, plan.n_photons, std::move(probes), {}};
  for (int i = 0; i < plan.n_photons; ++i) {
    auto [outcome, post] = measure_spbsm(state, i, rng);
    record.spbsm_outcomes.push_back(outcome);
    state = std::move(post);
  }
  return {std::move(record), std::move(state)};
}

}  // namespace

std::pair<MeasurementRecord, PureState> run_hbsa(const PureState& state,
                                                 Rng& rng) {
  return run_plan(hbsa_plan(), state, rng);
}

std::pair<MeasurementRecord, PureState> run_hgsa(const PureState& state,
                                                 int n_photons, Rng& rng) {
  return run_plan(hgsa_plan(n_photons), state, rng);
}

BellLabel spatial_state_after_probes(BellLabel original) {
  if (original == BellLabel{BellKind::Phi, Sign::Minus})
    return {BellKind::Psi, Sign::Plus};
  if (original == BellLabel{BellKind::Psi, Sign::Plus})
    return {BellKind::Phi, Sign::Minus};
  return original;
}

}  // namespace hsa
