#include "hsa/decoder.hpp"

namespace hsa {

Sign phase_of(SpbsmKind kind) {
  return (kind == SpbsmKind::PhiPlus || kind == SpbsmKind::PsiPlus)
             ? Sign::Plus
             : Sign::Minus;
}

int bit_of(SpbsmKind kind) {
  return (kind == SpbsmKind::PsiPlus || kind == SpbsmKind::PsiMinus) ? 1 : 0;
}

std::pair<BellLabel, BellLabel> decode_spatial_bell(ProbeClass probe1,
                                                    ProbeClass probe2) {
  const bool p1 = probe1 == ProbeClass::ThetaMagnitude;
  const bool p2 = probe2 == ProbeClass::ThetaMagnitude;
  if (!p1 && !p2)
    return {{BellKind::Phi, Sign::Plus}, {BellKind::Phi, Sign::Plus}};
  if (!p1 && p2)
    return {{BellKind::Phi, Sign::Minus}, {BellKind::Psi, Sign::Plus}};
  if (p1 && !p2)
    return {{BellKind::Psi, Sign::Plus}, {BellKind::Phi, Sign::Minus}};
  return {{BellKind::Psi, Sign::Minus}, {BellKind::Psi, Sign::Minus}};
}

GhzLabel decode_spatial_ghz(const std::vector<ProbeOutcome>& probes, int n) {
  if (static_cast<int>(probes.size()) != n)
    throw ShapeMismatch("HGSA expects N probe outcomes");
  std::string bits(n, '0');
  for (int j = 1; j < n; ++j)
    if (probes[j - 1].klass == ProbeClass::ThetaMagnitude) bits[j] = '1';
  const Sign sign =
      probes[n - 1].klass == ProbeClass::Pi ? Sign::Minus : Sign::Plus;
  return canonicalize_ghz(sign, bits);
}

GhzLabel decode_polarization(const GhzLabel& spatial,
                             const std::vector<SpbsmOutcome>& spbsm) {
  const int n = static_cast<int>(spatial.bits.size());
  if (static_cast<int>(spbsm.size()) != n)
    throw ShapeMismatch("need one SPBSM outcome per photon");
  Sign sign = spatial.sign;
  std::string bits(n, '0');
  for (int i = 0; i < n; ++i) {
    sign = sign * phase_of(spbsm[i].kind);
    const int s = spatial.bits[i] == '1' ? 1 : 0;
    bits[i] = (bit_of(spbsm[i].kind) ^ s) ? '1' : '0';
  }
  // The bit string is determined only up to global complement.
  return canonicalize_ghz(sign, bits);
}

HyperBellLabel decode_hbsa(const MeasurementRecord& record) {
  if (record.kind != CircuitKind::Hbsa || record.probe_outcomes.size() != 2 ||
      record.spbsm_outcomes.size() != 2)
    throw ShapeMismatch("malformed HBSA record");
  const auto [original, current] = decode_spatial_bell(
      record.probe_outcomes[0].klass, record.probe_outcomes[1].klass);
  const GhzLabel pol =
      decode_polarization(bell_to_ghz(current), record.spbsm_outcomes);
  return {ghz_to_bell(pol), original};
}

HyperGhzLabel decode_hgsa(const MeasurementRecord& record) {
  if (record.kind != CircuitKind::Hgsa ||
      static_cast<int>(record.probe_outcomes.size()) != record.n_photons ||
      record.spbsm_outcomes.size() != record.probe_outcomes.size())
    throw ShapeMismatch("malformed HGSA record");
  // The restoring BS layer puts the spatial state back, so the decoded
  // spatial label is the original one.
  const GhzLabel spatial =
      decode_spatial_ghz(record.probe_outcomes, record.n_photons);
  return {decode_polarization(spatial, record.spbsm_outcomes), spatial};
}

}  // namespace hsa
