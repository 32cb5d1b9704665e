#include "hsa/format.hpp"

namespace hsa {

std::string to_string(BellLabel label) {
  std::string out = label.kind == BellKind::Phi ? "Phi" : "Psi";
  out += label.sign == Sign::Plus ? '+' : '-';
  return out;
}

std::string to_string(const GhzLabel& label) {
  std::string out(1, label.sign == Sign::Plus ? '+' : '-');
  out += ':';
  out += label.bits;
  return out;
}

std::string to_string(const HyperBellLabel& label) {
  return to_string(label.pol) + " / " + to_string(label.spatial);
}

std::string to_string(const HyperGhzLabel& label) {
  return to_string(label.pol) + " / " + to_string(label.spatial);
}

std::string to_string(ProbeClass klass) {
  switch (klass) {
    case ProbeClass::Zero:
      return "0";
    case ProbeClass::ThetaMagnitude:
      return "theta";
    case ProbeClass::Pi:
      return "pi";
  }
  return "?";
}

std::string to_string(SpbsmKind kind) {
  switch (kind) {
    case SpbsmKind::PhiPlus:
      return "phi+";
    case SpbsmKind::PhiMinus:
      return "phi-";
    case SpbsmKind::PsiPlus:
      return "psi+";
    case SpbsmKind::PsiMinus:
      return "psi-";
  }
  return "?";
}

std::string to_string(const DetectorPort& port) {
  std::string out(1, static_cast<char>('a' + port.photon_index));
  out += port.mode == SpatialMode::M1 ? '1' : '2';
  out += port.sign == Sign::Plus ? '+' : '-';
  return out;
}

std::string record_to_string(const MeasurementRecord& record) {
  std::string out = "probes[";
  for (std::size_t i = 0; i < record.probe_outcomes.size(); ++i) {
    if (i) out += ',';
    out += to_string(record.probe_outcomes[i].klass);
  }
  out += "] spbsm[";
  for (std::size_t i = 0; i < record.spbsm_outcomes.size(); ++i) {
    if (i) out += ',';
    out += to_string(record.spbsm_outcomes[i].kind);
  }
  out += ']';
  return out;
}

BellLabel parse_bell_label(const std::string& text) {
  for (BellLabel label : all_bell_labels())
    if (to_string(label) == text) return label;
  throw ParseError("invalid Bell label '" + text +
                   "'; expected Phi+, Phi-, Psi+ or Psi-");
}

GhzLabel parse_ghz_label(const std::string& text, int n_photons) {
  if (text.size() < 2 || (text[0] != '+' && text[0] != '-') || text[1] != ':')
    throw ParseError("invalid GHZ label '" + text +
                     "'; expected <sign>:<bits>, e.g. +:010");
  const Sign sign = text[0] == '+' ? Sign::Plus : Sign::Minus;
  const std::string bits = text.substr(2);
  if (static_cast<int>(bits.size()) != n_photons)
    throw ParseError("GHZ label '" + text + "' has " +
                     std::to_string(bits.size()) + " bits, expected " +
                     std::to_string(n_photons));
  for (char c : bits)
    if (c != '0' && c != '1')
      throw ParseError("GHZ label bits must be 0/1: '" + text + "'");
  if (!is_canonical_ghz(bits)) {
    const GhzLabel canon = canonicalize_ghz(sign, bits);
    throw ParseError("non-canonical GHZ label '" + text +
                     "'; canonical form is '" + to_string(canon) + "'");
  }
  return {sign, bits};
}

}  // namespace hsa
