#pragma once

#include <array>
#include <set>
#include <vector>

#include "hsa/circuits.hpp"

// Generates the protocol's correspondence tables from the simulation engine
// itself; nothing here is hardcoded from decoding rules. Golden tests pin
// the generated output.

namespace hsa {

struct TableIRow {
  BellLabel original;       // spatial Bell state fed to the analyzer
  BellLabel new_state;      // spatial factor after both probe measurements
  ProbeClass probe1, probe2;
};

// Rows ordered Phi+, Phi-, Psi+, Psi-.
std::array<TableIRow, 4> generate_table_i();

struct TableIIGroup {
  // (polarization, new spatial) pairs sharing one detection set.
  std::vector<std::pair<BellLabel, BellLabel>> states;
  std::set<std::pair<SpbsmKind, SpbsmKind>> detections;
};

// Four groups of four states x four detection combinations, grouped by the
// SPBSM expansion of pol (x) new-spatial products.
std::array<TableIIGroup, 4> generate_table_ii();

struct TableIIIRow {
  GhzLabel original;  // spatial GHZ label, N = 3
  std::array<ProbeClass, 3> shifts;
};

// Rows ordered 000+, 000-, 001+, 001-, 010+, 010-, 100+, 100-.
std::array<TableIIIRow, 8> generate_table_iii();

}  // namespace hsa
