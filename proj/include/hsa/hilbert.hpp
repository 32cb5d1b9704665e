#pragma once

#include <compare>
#include <complex>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

// N-photon dual-DOF pure states (polarization x spatial mode), canonical
// hyperentangled Bell/GHZ labels, state construction and comparison.

namespace hsa {

inline constexpr double kAmpTol = 1e-9;

enum class Polarization : std::uint8_t { H = 0, V = 1 };
enum class SpatialMode : std::uint8_t { M1 = 0, M2 = 1 };

// Phase unit a coherent probe accumulates per coupled photon.
enum class ProbeUnit : std::uint8_t { Theta, Pi };

enum class Sign : std::uint8_t { Plus, Minus };
inline Sign operator*(Sign a, Sign b) {
  return a == b ? Sign::Plus : Sign::Minus;
}

struct Photon {
  Polarization pol;
  SpatialMode mode;
  auto operator<=>(const Photon&) const = default;
};

// One basis ket of the joint N-photon space, one (pol, mode) pair per photon.
using BasisKet = std::vector<Photon>;

// Accumulated probe phases, one integer per declared probe, in units of that
// probe's ProbeUnit. Kept exact; never floating radians.
using ProbeTag = std::vector<int>;

struct Branch {
  BasisKet ket;
  ProbeTag tag;
  auto operator<=>(const Branch&) const = default;
};

using Amplitude = std::complex<double>;

// Sparse superposition keyed by (ket, tag). Values are treated as immutable
// by all operations; every operation returns a fresh state.
struct PureState {
  int n_photons = 0;
  std::vector<ProbeUnit> probe_units;
  std::map<Branch, Amplitude> amps;
  std::vector<bool> spbsm_done;  // photons already consumed by an SPBSM

  PureState() = default;
  PureState(int n, std::vector<ProbeUnit> units)
      : n_photons(n), probe_units(std::move(units)), spbsm_done(n, false) {}

  void add(const Branch& b, Amplitude a);
  void prune();
  double norm_sq() const;
  void normalize();
};

struct ShapeMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IndexOutOfRange : std::out_of_range {
  using std::out_of_range::out_of_range;
};
struct NotAProduct : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class BellKind : std::uint8_t { Phi, Psi };

struct BellLabel {
  BellKind kind;
  Sign sign;
  auto operator<=>(const BellLabel&) const = default;
};

// GHZ label (sign, bit string). Canonical form: at most N/2 ones; on an even
// split the string with the lower binary value wins.
struct GhzLabel {
  Sign sign;
  std::string bits;  // '0'/'1', bits[0] is photon 0
  auto operator<=>(const GhzLabel&) const = default;
};

struct HyperBellLabel {
  BellLabel pol;
  BellLabel spatial;
  auto operator<=>(const HyperBellLabel&) const = default;
};

struct HyperGhzLabel {
  GhzLabel pol;
  GhzLabel spatial;
  auto operator<=>(const HyperGhzLabel&) const = default;
};

struct NonCanonicalLabel : std::runtime_error {
  GhzLabel canonical;
  NonCanonicalLabel(const std::string& msg, GhzLabel canon)
      : std::runtime_error(msg), canonical(std::move(canon)) {}
};

std::string complement_bits(const std::string& bits);
bool is_canonical_ghz(const std::string& bits);
GhzLabel canonicalize_ghz(Sign sign, const std::string& bits);

// Bell labels are the N=2 GHZ labels: Phi^± = (±,"00"), Psi^± = (±,"01").
GhzLabel bell_to_ghz(BellLabel label);
BellLabel ghz_to_bell(const GhzLabel& label);

const std::vector<BellLabel>& all_bell_labels();
std::vector<GhzLabel> all_ghz_labels(int n_photons);

PureState make_hyper_bell(const HyperBellLabel& label,
                          std::vector<ProbeUnit> probes = {});
PureState make_hyper_ghz(const HyperGhzLabel& label,
                         std::vector<ProbeUnit> probes = {});

enum class Dof : std::uint8_t { Polarization, Spatial };

// Single-DOF comparison states: the other DOF sits in its 0 value (H / M1),
// no probes declared. These are what factor_dof returns its factors as.
PureState make_bell_dof(BellLabel label, Dof dof);
PureState make_ghz_dof(const GhzLabel& label, Dof dof);

// |<a|b>|, global-phase-insensitive, branch-wise including probe tags.
double fidelity(const PureState& a, const PureState& b);

// Extracts the factor on one DOF of a product state. Throws NotAProduct when
// the cut has Schmidt rank > 1 (at kAmpTol), ShapeMismatch when probe tags
// are not uniform across branches.
PureState factor_dof(const PureState& state, Dof dof);

}  // namespace hsa
