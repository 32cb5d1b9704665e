#include "hsa/oracle.hpp"

#include <chrono>
#include <cmath>

#include "hsa/decoder.hpp"
#include "hsa/format.hpp"

namespace hsa {

OutcomeDistribution expand_in_spbsm_basis(const PureState& state) {
  if (!state.amps.empty()) {
    const ProbeTag& tag0 = state.amps.begin()->first.tag;
    for (const auto& [branch, amp] : state.amps)
      if (branch.tag != tag0)
        throw ShapeMismatch("probe measurements pending; tags not uniform");
  }
  OutcomeDistribution dist;
  dist.n_photons = state.n_photons;
  const int n = state.n_photons;
  std::vector<SpbsmKind> combo(n);
  for (const auto& [branch, amp] : state.amps) {
    // Expand photon by photon; 4^N combos but coefficients vanish for half
    // of the kinds per photon, so each branch touches 2^N combos.
    auto recurse = [&](auto&& self, int i, double coeff) -> void {
      if (std::abs(coeff) < kAmpTol) return;
      if (i == n) {
        auto [it, inserted] = dist.entries.emplace(combo, amp * coeff);
        if (!inserted) it->second += amp * coeff;
        return;
      }
      for (SpbsmKind kind : kAllSpbsmKinds) {
        combo[i] = kind;
        self(self, i + 1,
             coeff * spbsm_coefficient(kind, branch.ket[i].pol,
                                       branch.ket[i].mode));
      }
    };
    recurse(recurse, 0, 1.0);
  }
  for (auto it = dist.entries.begin(); it != dist.entries.end();)
    it = std::abs(it->second) < kAmpTol ? dist.entries.erase(it)
                                        : std::next(it);
  return dist;
}

std::vector<ProbeLeaf> enumerate_probe_leaves(const WiringPlan& plan,
                                              const PureState& input) {
  if (input.n_photons != plan.n_photons ||
      input.probe_units != plan.probe_units)
    throw ShapeMismatch("input state does not match the circuit's shape");
  std::vector<ProbeLeaf> leaves = {{{}, 1.0, input}};
  for (const auto& stage : plan.stages) {
    std::vector<ProbeLeaf> next;
    for (auto& leaf : leaves) {
      PureState state = std::move(leaf.state);
      for (int photon : stage.bs_photons)
        state = apply_beam_splitter(state, photon);
      if (stage.probe < 0) {
        next.push_back({std::move(leaf.outcomes), leaf.probability,
                        std::move(state)});
        continue;
      }
      for (const auto& c : stage.couplings)
        state = apply_cross_kerr(state, stage.probe, c.photon, c.mode,
                                 c.coupling);
      for (auto& branch : probe_measurement_branches(state, stage.probe)) {
        auto outcomes = leaf.outcomes;
        outcomes.push_back(branch.outcome);
        next.push_back({std::move(outcomes),
                        leaf.probability * branch.probability,
                        std::move(branch.post)});
      }
    }
    leaves = std::move(next);
  }
  return leaves;
}

std::vector<RecordProbability> enumerate_records(const WiringPlan& plan,
                                                 const PureState& input,
                                                 bool* probe_branching) {
  auto probe_leaves = enumerate_probe_leaves(plan, input);
  if (probe_branching)
    *probe_branching = probe_leaves.size() > 1;

  std::vector<RecordProbability> records;
  for (const auto& leaf : probe_leaves) {
    struct Node {
      std::vector<SpbsmOutcome> outcomes;
      double probability;
      PureState state;
    };
    std::vector<Node> nodes = {{{}, leaf.probability, leaf.state}};
    for (int photon = 0; photon < plan.n_photons; ++photon) {
      std::vector<Node> next;
      for (auto& node : nodes) {
        for (auto& branch : spbsm_measurement_branches(node.state, photon)) {
          auto outcomes = node.outcomes;
          outcomes.push_back(branch.outcome);
          next.push_back({std::move(outcomes),
                          node.probability * branch.probability,
                          std::move(branch.post)});
        }
      }
      nodes = std::move(next);
    }
    for (auto& node : nodes)
      records.push_back({{plan.kind, plan.n_photons, leaf.outcomes,
                          std::move(node.outcomes)},
                         node.probability});
  }
  return records;
}

namespace {

struct LabelTask {
  std::string name;
  PureState state;
};

std::vector<LabelTask> label_tasks(CircuitKind kind, int n_photons) {
  std::vector<LabelTask> tasks;
  if (kind == CircuitKind::Hbsa) {
    for (BellLabel pol : all_bell_labels())
      for (BellLabel spatial : all_bell_labels()) {
        HyperBellLabel label{pol, spatial};
        tasks.push_back(
            {to_string(label), make_hyper_bell(label, hbsa_probe_units())});
      }
  } else {
    const auto ghz = all_ghz_labels(n_photons);
    for (const GhzLabel& pol : ghz)
      for (const GhzLabel& spatial : ghz) {
        HyperGhzLabel label{pol, spatial};
        tasks.push_back({to_string(label),
                         make_hyper_ghz(label, hgsa_probe_units(n_photons))});
      }
  }
  return tasks;
}

std::string decoded_name(const MeasurementRecord& record) {
  return record.kind == CircuitKind::Hbsa ? to_string(decode_hbsa(record))
                                          : to_string(decode_hgsa(record));
}

// Checks one label end to end and hands back its reachable records.
LabelCheck check_label(const WiringPlan& plan, const LabelTask& task,
                       std::vector<MeasurementRecord>* records_out) {
  LabelCheck check;
  check.label = task.name;
  bool branching = false;
  auto records = enumerate_records(plan, task.state, &branching);
  check.n_records = static_cast<int>(records.size());
  check.probes_deterministic = !branching;

  double total = 0.0;
  check.round_trip = true;
  check.equiprobable = true;
  check.record_probability = records.empty() ? 0.0 : records[0].probability;
  for (const auto& [record, probability] : records) {
    total += probability;
    if (std::abs(probability - check.record_probability) > kAmpTol)
      check.equiprobable = false;
    if (decoded_name(record) != task.name) check.round_trip = false;
    records_out->push_back(record);
  }
  check.probabilities_sum_to_one = std::abs(total - 1.0) < kAmpTol;
  return check;
}

}  // namespace

VerificationReport verify_all(CircuitKind kind, int n_photons,
                              bool parallel) {
  const auto t0 = std::chrono::steady_clock::now();
  const WiringPlan plan =
      kind == CircuitKind::Hbsa ? hbsa_plan() : hgsa_plan(n_photons);
  const auto tasks = label_tasks(kind, plan.n_photons);
  const int n_tasks = static_cast<int>(tasks.size());

  std::vector<LabelCheck> checks(n_tasks);
  std::vector<std::vector<MeasurementRecord>> records(n_tasks);

  if (parallel) {
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < n_tasks; ++i)
      checks[i] = check_label(plan, tasks[i], &records[i]);
  } else {
    for (int i = 0; i < n_tasks; ++i)
      checks[i] = check_label(plan, tasks[i], &records[i]);
  }

  VerificationReport report;
  report.kind = kind;
  report.n_photons = plan.n_photons;
  report.labels_tested = n_tasks;
  report.determinism_pass = true;
  report.round_trip_pass = true;
  report.probability_pass = true;
  report.partition_pass = true;

  std::map<MeasurementRecord, int> owner;
  for (int i = 0; i < n_tasks; ++i) {
    const LabelCheck& check = checks[i];
    report.records_total += check.n_records;
    if (!check.probes_deterministic) {
      report.determinism_pass = false;
      report.failures.push_back(check.label + ": probe outcome not unique");
    }
    if (!check.round_trip) {
      report.round_trip_pass = false;
      report.failures.push_back(check.label + ": round-trip decode failed");
    }
    if (!check.probabilities_sum_to_one || !check.equiprobable) {
      report.probability_pass = false;
      report.failures.push_back(check.label + ": record probabilities off");
    }
    for (const auto& record : records[i]) {
      auto [it, inserted] = owner.emplace(record, i);
      if (!inserted && it->second != i) {
        report.partition_pass = false;
        report.failures.push_back("record " + record_to_string(record) +
                                  " reachable from both " +
                                  tasks[it->second].name + " and " +
                                  check.label);
      }
    }
  }
  report.labels = std::move(checks);
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return report;
}

}  // namespace hsa
