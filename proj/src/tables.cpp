#include "hsa/tables.hpp"

#include <algorithm>
#include <map>

#include "hsa/oracle.hpp"

namespace hsa {

namespace {

BellLabel identify_spatial_bell(const PureState& factor) {
  for (BellLabel candidate : all_bell_labels())
    if (fidelity(factor, make_bell_dof(candidate, Dof::Spatial)) >
        1.0 - kAmpTol)
      return candidate;
  throw ShapeMismatch("spatial factor is not a Bell state");
}

}  // namespace

std::array<TableIRow, 4> generate_table_i() {
  std::array<TableIRow, 4> table;
  const WiringPlan plan = hbsa_plan();
  int row = 0;
  for (BellLabel spatial : all_bell_labels()) {
    const HyperBellLabel label{{BellKind::Phi, Sign::Plus}, spatial};
    const auto leaves = enumerate_probe_leaves(
        plan, make_hyper_bell(label, hbsa_probe_units()));
    if (leaves.size() != 1)
      throw ShapeMismatch("probe outcome not deterministic");
    const auto& leaf = leaves.front();
    table[row++] = {spatial,
                    identify_spatial_bell(factor_dof(leaf.state, Dof::Spatial)),
                    leaf.outcomes[0].klass, leaf.outcomes[1].klass};
  }
  return table;
}

std::array<TableIIGroup, 4> generate_table_ii() {
  using Detections = std::set<std::pair<SpbsmKind, SpbsmKind>>;
  std::map<Detections, std::vector<std::pair<BellLabel, BellLabel>>> groups;
  for (BellLabel pol : all_bell_labels()) {
    for (BellLabel spatial : all_bell_labels()) {
      const auto dist =
          expand_in_spbsm_basis(make_hyper_bell({pol, spatial}));
      Detections detections;
      for (const auto& [combo, amp] : dist.entries)
        detections.emplace(combo[0], combo[1]);
      groups[detections].push_back({pol, spatial});
    }
  }
  if (groups.size() != 4)
    throw ShapeMismatch("expected exactly 4 detection groups");

  // Present groups in the order of the spatial partner of Phi+.
  const std::array<BellLabel, 4> spatial_order = {
      BellLabel{BellKind::Phi, Sign::Plus}, {BellKind::Psi, Sign::Plus},
      {BellKind::Phi, Sign::Minus}, {BellKind::Psi, Sign::Minus}};
  std::array<TableIIGroup, 4> table;
  for (auto& [detections, states] : groups) {
    std::sort(states.begin(), states.end());
    const auto phi_plus = std::find_if(
        states.begin(), states.end(), [](const auto& s) {
          return s.first == BellLabel{BellKind::Phi, Sign::Plus};
        });
    const auto pos = std::find(spatial_order.begin(), spatial_order.end(),
                               phi_plus->second) -
                     spatial_order.begin();
    table[pos] = {states, detections};
  }
  return table;
}

std::array<TableIIIRow, 8> generate_table_iii() {
  const std::array<std::string, 4> bit_order = {"000", "001", "010", "100"};
  const WiringPlan plan = hgsa_plan(3);
  std::array<TableIIIRow, 8> table;
  int row = 0;
  for (const std::string& bits : bit_order) {
    for (Sign sign : {Sign::Plus, Sign::Minus}) {
      const GhzLabel spatial{sign, bits};
      const HyperGhzLabel label{{Sign::Plus, "000"}, spatial};
      const auto leaves = enumerate_probe_leaves(
          plan, make_hyper_ghz(label, hgsa_probe_units(3)));
      if (leaves.size() != 1)
        throw ShapeMismatch("probe outcome not deterministic");
      const auto& outcomes = leaves.front().outcomes;
      table[row++] = {spatial,
                      {outcomes[0].klass, outcomes[1].klass,
                       outcomes[2].klass}};
    }
  }
  return table;
}

}  // namespace hsa
