#include "hsa/hilbert.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <numeric>

namespace hsa {

void PureState::add(const Branch& b, Amplitude a) {
  auto [it, inserted] = amps.emplace(b, a);
  if (!inserted) it->second += a;
}

void PureState::prune() {
  for (auto it = amps.begin(); it != amps.end();) {
    if (std::abs(it->second) < kAmpTol)
      it = amps.erase(it);
    else
      ++it;
  }
}

double PureState::norm_sq() const {
  double s = 0.0;
  for (const auto& [b, a] : amps) s += std::norm(a);
  return s;
}

void PureState::normalize() {
  const double n = std::sqrt(norm_sq());
  if (n == 0.0) throw ShapeMismatch("cannot normalize the zero state");
  for (auto& [b, a] : amps) a /= n;
  prune();
}

std::string complement_bits(const std::string& bits) {
  std::string out = bits;
  for (char& c : out) c = (c == '0') ? '1' : '0';
  return out;
}

namespace {

unsigned long binary_value(const std::string& bits) {
  unsigned long v = 0;
  for (char c : bits) v = (v << 1) | (c == '1' ? 1u : 0u);
  return v;
}

void check_bits(const std::string& bits) {
  if (bits.size() < 2) throw ShapeMismatch("GHZ bit string needs length >= 2");
  for (char c : bits)
    if (c != '0' && c != '1')
      throw ShapeMismatch("GHZ bit string must be over {0,1}: " + bits);
}

}  // namespace

bool is_canonical_ghz(const std::string& bits) {
  check_bits(bits);
  const auto n = bits.size();
  const auto ones = static_cast<std::size_t>(
      std::count(bits.begin(), bits.end(), '1'));
  if (2 * ones < n) return true;
  if (2 * ones > n) return false;
  return binary_value(bits) < binary_value(complement_bits(bits));
}

GhzLabel canonicalize_ghz(Sign sign, const std::string& bits) {
  check_bits(bits);
  // Complementing the string changes only a global phase; the sign survives.
  if (is_canonical_ghz(bits)) return {sign, bits};
  return {sign, complement_bits(bits)};
}

GhzLabel bell_to_ghz(BellLabel label) {
  return {label.sign, label.kind == BellKind::Phi ? "00" : "01"};
}

BellLabel ghz_to_bell(const GhzLabel& label) {
  if (label.bits == "00") return {BellKind::Phi, label.sign};
  if (label.bits == "01") return {BellKind::Psi, label.sign};
  throw ShapeMismatch("not a 2-photon canonical GHZ label: " + label.bits);
}

const std::vector<BellLabel>& all_bell_labels() {
  static const std::vector<BellLabel> labels = {
      {BellKind::Phi, Sign::Plus},
      {BellKind::Phi, Sign::Minus},
      {BellKind::Psi, Sign::Plus},
      {BellKind::Psi, Sign::Minus},
  };
  return labels;
}

std::vector<GhzLabel> all_ghz_labels(int n_photons) {
  std::vector<GhzLabel> out;
  for (unsigned long v = 0; v < (1ul << n_photons); ++v) {
    std::string bits(n_photons, '0');
    for (int i = 0; i < n_photons; ++i)
      if (v & (1ul << (n_photons - 1 - i))) bits[i] = '1';
    if (!is_canonical_ghz(bits)) continue;
    out.push_back({Sign::Plus, bits});
    out.push_back({Sign::Minus, bits});
  }
  return out;
}

namespace {

// The two kets of (|s> ± |s̄>)/sqrt(2), as bit strings with signed weights.
struct GhzTerm {
  std::string bits;
  double weight;
};

std::array<GhzTerm, 2> ghz_terms(const GhzLabel& label) {
  const double w = 1.0 / std::sqrt(2.0);
  return {GhzTerm{label.bits, w},
          GhzTerm{complement_bits(label.bits),
                  label.sign == Sign::Plus ? w : -w}};
}

PureState tensor_ghz(const GhzLabel& pol, const GhzLabel& spatial,
                     std::vector<ProbeUnit> probes) {
  const int n = static_cast<int>(pol.bits.size());
  PureState state(n, std::move(probes));
  const ProbeTag zero_tag(state.probe_units.size(), 0);
  for (const auto& p : ghz_terms(pol)) {
    for (const auto& s : ghz_terms(spatial)) {
      BasisKet ket(n);
      for (int i = 0; i < n; ++i) {
        ket[i].pol = p.bits[i] == '1' ? Polarization::V : Polarization::H;
        ket[i].mode = s.bits[i] == '1' ? SpatialMode::M2 : SpatialMode::M1;
      }
      state.add({std::move(ket), zero_tag}, p.weight * s.weight);
    }
  }
  state.prune();
  return state;
}

void require_canonical(const GhzLabel& label) {
  if (!is_canonical_ghz(label.bits)) {
    const GhzLabel canon = canonicalize_ghz(label.sign, label.bits);
    throw NonCanonicalLabel(
        "non-canonical GHZ label " + label.bits + "; canonical form is " +
            canon.bits,
        canon);
  }
}

}  // namespace

PureState make_hyper_bell(const HyperBellLabel& label,
                          std::vector<ProbeUnit> probes) {
  return tensor_ghz(bell_to_ghz(label.pol), bell_to_ghz(label.spatial),
                    std::move(probes));
}

PureState make_hyper_ghz(const HyperGhzLabel& label,
                         std::vector<ProbeUnit> probes) {
  if (label.pol.bits.size() != label.spatial.bits.size())
    throw ShapeMismatch("pol and spatial labels disagree on photon count");
  require_canonical(label.pol);
  require_canonical(label.spatial);
  return tensor_ghz(label.pol, label.spatial, std::move(probes));
}

PureState make_bell_dof(BellLabel label, Dof dof) {
  return make_ghz_dof(bell_to_ghz(label), dof);
}

PureState make_ghz_dof(const GhzLabel& label, Dof dof) {
  const int n = static_cast<int>(label.bits.size());
  PureState state(n, {});
  for (const auto& t : ghz_terms(label)) {
    BasisKet ket(n);
    for (int i = 0; i < n; ++i) {
      const bool one = t.bits[i] == '1';
      if (dof == Dof::Polarization) {
        ket[i].pol = one ? Polarization::V : Polarization::H;
        ket[i].mode = SpatialMode::M1;
      } else {
        ket[i].pol = Polarization::H;
        ket[i].mode = one ? SpatialMode::M2 : SpatialMode::M1;
      }
    }
    state.add({std::move(ket), {}}, t.weight);
  }
  return state;
}

double fidelity(const PureState& a, const PureState& b) {
  if (a.n_photons != b.n_photons || a.probe_units != b.probe_units)
    throw ShapeMismatch("fidelity requires matching photon/probe shapes");
  Amplitude overlap = 0.0;
  for (const auto& [branch, amp] : a.amps) {
    auto it = b.amps.find(branch);
    if (it != b.amps.end()) overlap += std::conj(amp) * it->second;
  }
  return std::abs(overlap);
}

PureState factor_dof(const PureState& state, Dof dof) {
  if (state.amps.empty()) throw ShapeMismatch("empty state");
  const ProbeTag& tag0 = state.amps.begin()->first.tag;
  for (const auto& [branch, amp] : state.amps)
    if (branch.tag != tag0)
      throw ShapeMismatch("probe tags are not uniform across branches");

  const int n = state.n_photons;
  const long dim = 1l << n;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& [branch, amp] : state.amps) {
    long row = 0, col = 0;  // row: polarization bits, col: spatial bits
    for (int i = 0; i < n; ++i) {
      row = (row << 1) | (branch.ket[i].pol == Polarization::V ? 1 : 0);
      col = (col << 1) | (branch.ket[i].mode == SpatialMode::M2 ? 1 : 0);
    }
    m(row, col) = amp;
  }

  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(
      m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  if (sv.size() > 1 && sv(1) > kAmpTol)
    throw NotAProduct("DOF cut has Schmidt rank > 1");

  // m = s1 * u * v^H, so pol_i = u(i), spatial_j = conj(v(j)).
  PureState factor(n, {});
  for (long idx = 0; idx < dim; ++idx) {
    const Amplitude a = dof == Dof::Polarization
                            ? Amplitude(svd.matrixU()(idx, 0))
                            : std::conj(svd.matrixV()(idx, 0));
    if (std::abs(a) < kAmpTol) continue;
    BasisKet ket(n);
    for (int i = 0; i < n; ++i) {
      const bool one = (idx >> (n - 1 - i)) & 1;
      if (dof == Dof::Polarization) {
        ket[i].pol = one ? Polarization::V : Polarization::H;
        ket[i].mode = SpatialMode::M1;
      } else {
        ket[i].pol = Polarization::H;
        ket[i].mode = one ? SpatialMode::M2 : SpatialMode::M1;
      }
    }
    factor.add({std::move(ket), {}}, a);
  }
  factor.normalize();
  return factor;
}

}  // namespace hsa
