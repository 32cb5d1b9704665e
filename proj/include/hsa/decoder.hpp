#pragma once

#include "hsa/circuits.hpp"

// Maps a MeasurementRecord back to the unique original hyperentangled label:
// probe classes give the spatial label, SPBSM phase/bit attributes combined
// with the spatial label give the polarization label.

namespace hsa {

// Phase attribute of a single-photon Bell state: the superscript sign.
Sign phase_of(SpbsmKind kind);
// Bit attribute: 1 for psi^±, 0 for phi^±.
int bit_of(SpbsmKind kind);

// (original, new-after-BS) spatial Bell label from the two theta classes.
std::pair<BellLabel, BellLabel> decode_spatial_bell(ProbeClass probe1,
                                                    ProbeClass probe2);

// Spatial GHZ label from N-1 theta classes (pairwise parities against
// photon 0) and one pi class (relative phase sign).
GhzLabel decode_spatial_ghz(const std::vector<ProbeOutcome>& probes, int n);

// Polarization label: sign = spatial sign times the product of SPBSM phases;
// bit i = SPBSM bit i xor spatial bit i, fixed up to global complement by
// canonicalization.
GhzLabel decode_polarization(const GhzLabel& spatial,
                             const std::vector<SpbsmOutcome>& spbsm);

HyperBellLabel decode_hbsa(const MeasurementRecord& record);
HyperGhzLabel decode_hgsa(const MeasurementRecord& record);

}  // namespace hsa
