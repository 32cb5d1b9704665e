#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "hsa/circuits.hpp"
#include "hsa/elements.hpp"
#include "test_util.hpp"

using namespace hsa;

namespace {

// pol (x) spatial Bell product with the HBSA probe configuration.
PureState bell_state(BellLabel pol, BellLabel spatial) {
  return make_hyper_bell({pol, spatial}, hbsa_probe_units());
}

PureState parity_coupled(const PureState& s, int probe) {
  auto out = apply_cross_kerr(s, probe, 0, SpatialMode::M1, +1);
  return apply_cross_kerr(out, probe, 1, SpatialMode::M1, -1);
}

const BellLabel kPhiP{BellKind::Phi, Sign::Plus};
const BellLabel kPhiM{BellKind::Phi, Sign::Minus};
const BellLabel kPsiP{BellKind::Psi, Sign::Plus};
const BellLabel kPsiM{BellKind::Psi, Sign::Minus};

}  // namespace

TEST_CASE("beam splitter is an involution") {
  Rng rng(1);
  for (int trial = 0; trial < 50; ++trial) {
    const auto s = testutil::random_state(3, {}, rng);
    auto t = apply_beam_splitter(apply_beam_splitter(s, 1), 1);
    CHECK(fidelity(s, t) == doctest::Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("beam splitter maps Phi- to Psi+ and keeps Phi+ invariant") {
  auto phi_minus = bell_state(kPhiP, kPhiM);
  phi_minus = apply_beam_splitter(apply_beam_splitter(phi_minus, 0), 1);
  CHECK(fidelity(phi_minus, bell_state(kPhiP, kPsiP)) ==
        doctest::Approx(1.0).epsilon(1e-9));

  auto phi_plus = bell_state(kPhiP, kPhiP);
  phi_plus = apply_beam_splitter(apply_beam_splitter(phi_plus, 0), 1);
  CHECK(fidelity(phi_plus, bell_state(kPhiP, kPhiP)) ==
        doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("cross-Kerr parity coupling tags Psi branches, cancels on Phi") {
  for (Sign sign : {Sign::Plus, Sign::Minus}) {
    const auto psi = parity_coupled(bell_state(kPhiP, {BellKind::Psi, sign}), 0);
    for (const auto& [branch, amp] : psi.amps) {
      const int expected =
          branch.ket[0].mode == SpatialMode::M1 ? +1 : -1;  // a1b2 vs a2b1
      CHECK(branch.tag[0] == expected);
    }
    const auto phi = parity_coupled(bell_state(kPhiP, {BellKind::Phi, sign}), 0);
    for (const auto& [branch, amp] : phi.amps) CHECK(branch.tag[0] == 0);
  }
}

TEST_CASE("cross-Kerr applications on disjoint probes commute exactly") {
  Rng rng(2);
  for (int trial = 0; trial < 50; ++trial) {
    const auto s =
        testutil::random_state(2, {ProbeUnit::Theta, ProbeUnit::Theta}, rng);
    const auto ab = apply_cross_kerr(
        apply_cross_kerr(s, 0, 0, SpatialMode::M1, +1), 1, 1, SpatialMode::M2,
        -1);
    const auto ba = apply_cross_kerr(
        apply_cross_kerr(s, 1, 1, SpatialMode::M2, -1), 0, 0, SpatialMode::M1,
        +1);
    CHECK(testutil::states_equal(ab, ba, 0.0));
  }
}

TEST_CASE("elements preserve the norm and invert") {
  Rng rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const auto s = testutil::random_state(2, {ProbeUnit::Theta}, rng);
    CHECK(apply_beam_splitter(s, 0).norm_sq() ==
          doctest::Approx(1.0).epsilon(1e-9));
    const auto k = apply_cross_kerr(s, 0, 1, SpatialMode::M2, +1);
    CHECK(k.norm_sq() == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(testutil::states_equal(
        apply_cross_kerr(k, 0, 1, SpatialMode::M2, -1), s, 0.0));
  }
}

TEST_CASE("probe measurement on Psi-: theta class, coherence kept") {
  const auto coupled = parity_coupled(bell_state(kPhiP, kPsiM), 0);
  const auto branches = probe_measurement_branches(coupled, 0);
  REQUIRE(branches.size() == 1);
  CHECK(branches[0].outcome.klass == ProbeClass::ThetaMagnitude);
  CHECK(branches[0].probability == doctest::Approx(1.0));
  CHECK(fidelity(branches[0].post, bell_state(kPhiP, kPsiM)) ==
        doctest::Approx(1.0).epsilon(1e-9));  // both ±theta branches survive
}

TEST_CASE("probe measurement on Phi+: zero class with probability 1") {
  const auto coupled = parity_coupled(bell_state(kPhiP, kPhiP), 0);
  const auto branches = probe_measurement_branches(coupled, 0);
  REQUIRE(branches.size() == 1);
  CHECK(branches[0].outcome.klass == ProbeClass::Zero);
  CHECK(branches[0].probability == doctest::Approx(1.0));
}

TEST_CASE("pi probe on post-BS GHZ- state reads pi, all branches survive") {
  auto s = make_hyper_ghz({{Sign::Plus, "000"}, {Sign::Minus, "000"}},
                          hgsa_probe_units(3));
  for (int i = 0; i < 3; ++i) s = apply_beam_splitter(s, i);
  for (int i = 0; i < 3; ++i)
    s = apply_cross_kerr(s, 2, i, SpatialMode::M2, +1);
  const auto branches = probe_measurement_branches(s, 2);
  REQUIRE(branches.size() == 1);
  CHECK(branches[0].outcome.klass == ProbeClass::Pi);
  CHECK(branches[0].probability == doctest::Approx(1.0));
  // spatial part is 4 odd-parity kets x 2 pol kets
  CHECK(branches[0].post.amps.size() == 8);
}

TEST_CASE("repeated probe measurement yields Zero: tags were reset") {
  Rng rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    auto s = testutil::random_state(2, {ProbeUnit::Theta}, rng);
    s = apply_cross_kerr(s, 0, 0, SpatialMode::M1, +1);
    s = apply_cross_kerr(s, 0, 1, SpatialMode::M1, -1);
    auto [outcome, post] = measure_probe(s, 0, rng);
    const auto again = probe_measurement_branches(post, 0);
    REQUIRE(again.size() == 1);
    CHECK(again[0].outcome.klass == ProbeClass::Zero);
    CHECK(again[0].probability == doctest::Approx(1.0));
  }
}

TEST_CASE("theta probe with |tag| >= 2 is a wiring bug") {
  auto s = bell_state(kPhiP, kPhiP);
  s = apply_cross_kerr(s, 0, 0, SpatialMode::M1, +1);
  s = apply_cross_kerr(s, 0, 1, SpatialMode::M1, +1);  // same sign: tags 0/2
  CHECK_THROWS_AS((void)probe_measurement_branches(s, 0),
                  UnexpectedPhaseClass);
}

TEST_CASE("sign-blindness: negating theta tags changes nothing observable") {
  Rng rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    auto s = testutil::random_state(2, {ProbeUnit::Theta}, rng);
    s = apply_cross_kerr(s, 0, 0, SpatialMode::M1, +1);
    s = apply_cross_kerr(s, 0, 1, SpatialMode::M1, -1);
    PureState mirrored(s.n_photons, s.probe_units);
    for (const auto& [branch, amp] : s.amps) {
      Branch b = branch;
      b.tag[0] = -b.tag[0];
      mirrored.add(b, amp);
    }
    const auto lhs = probe_measurement_branches(s, 0);
    const auto rhs = probe_measurement_branches(mirrored, 0);
    REQUIRE(lhs.size() == rhs.size());
    for (std::size_t i = 0; i < lhs.size(); ++i) {
      CHECK(lhs[i].outcome == rhs[i].outcome);
      CHECK(lhs[i].probability ==
            doctest::Approx(rhs[i].probability).epsilon(1e-9));
      CHECK(fidelity(lhs[i].post, rhs[i].post) ==
            doctest::Approx(1.0).epsilon(1e-9));
    }
  }
}

TEST_CASE("SPBSM on an eigenstate is deterministic") {
  PureState s(2, {});
  const double h = 1.0 / std::sqrt(2.0);
  // photon 0 in psi+, photon 1 parked in |H M1>
  s.add({{{Polarization::H, SpatialMode::M1},
          {Polarization::H, SpatialMode::M1}},
         {}},
        h);
  s.add({{{Polarization::V, SpatialMode::M2},
          {Polarization::H, SpatialMode::M1}},
         {}},
        h);
  const auto branches = spbsm_measurement_branches(s, 0);
  REQUIRE(branches.size() == 1);
  CHECK(branches[0].outcome.kind == SpbsmKind::PsiPlus);
  CHECK(branches[0].probability == doctest::Approx(1.0));
}

TEST_CASE("SPBSM on |H M1> splits evenly between psi+ and psi-") {
  PureState s(2, {});
  s.add({{{Polarization::H, SpatialMode::M1},
          {Polarization::H, SpatialMode::M1}},
         {}},
        1.0);
  const auto branches = spbsm_measurement_branches(s, 0);
  REQUIRE(branches.size() == 2);
  for (const auto& b : branches) {
    CHECK((b.outcome.kind == SpbsmKind::PsiPlus ||
           b.outcome.kind == SpbsmKind::PsiMinus));
    CHECK(b.probability == doctest::Approx(0.5));
  }
}

TEST_CASE("joint SPBSM distribution of Phi+ (x) Psi-") {
  const auto s = make_hyper_bell({kPhiP, kPsiM});
  std::map<std::pair<SpbsmKind, SpbsmKind>, double> joint;
  for (const auto& a : spbsm_measurement_branches(s, 0))
    for (const auto& b : spbsm_measurement_branches(a.post, 1))
      joint[{a.outcome.kind, b.outcome.kind}] +=
          a.probability * b.probability;
  REQUIRE(joint.size() == 4);
  const std::map<std::pair<SpbsmKind, SpbsmKind>, double> expected = {
      {{SpbsmKind::PsiPlus, SpbsmKind::PhiMinus}, 0.25},
      {{SpbsmKind::PsiMinus, SpbsmKind::PhiPlus}, 0.25},
      {{SpbsmKind::PhiPlus, SpbsmKind::PsiMinus}, 0.25},
      {{SpbsmKind::PhiMinus, SpbsmKind::PsiPlus}, 0.25}};
  for (const auto& [combo, p] : expected) {
    REQUIRE(joint.count(combo) == 1);
    CHECK(joint.at(combo) == doctest::Approx(p).epsilon(1e-9));
  }
}

TEST_CASE("SPBSM marginals are uniform on every hyper Bell state") {
  for (BellLabel pol : all_bell_labels()) {
    for (BellLabel spatial : all_bell_labels()) {
      const auto s = make_hyper_bell({pol, spatial});
      for (int photon : {0, 1}) {
        const auto branches = spbsm_measurement_branches(s, photon);
        REQUIRE(branches.size() == 4);
        for (const auto& b : branches)
          CHECK(b.probability == doctest::Approx(0.25).epsilon(1e-9));
      }
    }
  }
}

TEST_CASE("double SPBSM measurement is rejected") {
  Rng rng(6);
  const auto s = make_hyper_bell({kPhiP, kPhiP});
  auto [outcome, post] = measure_spbsm(s, 0, rng);
  CHECK_THROWS_AS((void)measure_spbsm(post, 0, rng), DoubleMeasurement);
}

TEST_CASE("index checks") {
  const auto s = make_hyper_bell({kPhiP, kPhiP}, hbsa_probe_units());
  Rng rng(7);
  CHECK_THROWS_AS((void)apply_beam_splitter(s, 2), IndexOutOfRange);
  CHECK_THROWS_AS((void)apply_cross_kerr(s, 5, 0, SpatialMode::M1, +1),
                  IndexOutOfRange);
  CHECK_THROWS_AS((void)measure_probe(s, -1, rng), IndexOutOfRange);
}

TEST_CASE("detector port mapping") {
  CHECK(detector_port({0, SpbsmKind::PhiPlus}) ==
        DetectorPort{0, SpatialMode::M1, Sign::Plus});
  CHECK(detector_port({1, SpbsmKind::PsiMinus}) ==
        DetectorPort{1, SpatialMode::M2, Sign::Minus});
  for (SpbsmKind kind : kAllSpbsmKinds) {
    const SpbsmOutcome outcome{3, kind};
    CHECK(port_to_outcome(detector_port(outcome)) == outcome);
  }
}
