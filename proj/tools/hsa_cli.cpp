// Command-line front end: single analyzer runs, exhaustive verification,
// table generation and SPBSM-basis expansion, in text or JSON.

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hsa/decoder.hpp"
#include "hsa/format.hpp"
#include "hsa/oracle.hpp"
#include "hsa/tables.hpp"

namespace {

using nlohmann::json;

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct LabelArgs {
  std::string mode = "bell";
  int photons = 2;
  std::string pol;
  std::string spatial;
};

// Parsed input: either hyper-Bell or hyper-GHZ depending on mode.
struct ParsedInput {
  bool is_bell;
  hsa::HyperBellLabel bell;
  hsa::HyperGhzLabel ghz;

  std::string name() const {
    return is_bell ? hsa::to_string(bell) : hsa::to_string(ghz);
  }
  hsa::PureState state(std::vector<hsa::ProbeUnit> probes) const {
    return is_bell ? hsa::make_hyper_bell(bell, std::move(probes))
                   : hsa::make_hyper_ghz(ghz, std::move(probes));
  }
};

ParsedInput parse_input(const LabelArgs& args) {
  ParsedInput in{};
  if (args.mode == "bell") {
    if (args.photons != 2)
      throw hsa::ParseError("bell mode is defined for --photons 2");
    in.is_bell = true;
    in.bell = {hsa::parse_bell_label(args.pol),
               hsa::parse_bell_label(args.spatial)};
  } else {
    in.is_bell = false;
    in.ghz = {hsa::parse_ghz_label(args.pol, args.photons),
              hsa::parse_ghz_label(args.spatial, args.photons)};
  }
  return in;
}

int cmd_run(const LabelArgs& args, std::uint64_t seed,
            const std::string& format) {
  const ParsedInput in = parse_input(args);
  hsa::Rng rng(seed);

  hsa::MeasurementRecord record;
  std::string decoded;
  if (in.is_bell) {
    auto [rec, post] = hsa::run_hbsa(in.state(hsa::hbsa_probe_units()), rng);
    record = std::move(rec);
    decoded = hsa::to_string(hsa::decode_hbsa(record));
  } else {
    auto [rec, post] = hsa::run_hgsa(
        in.state(hsa::hgsa_probe_units(args.photons)), args.photons, rng);
    record = std::move(rec);
    decoded = hsa::to_string(hsa::decode_hgsa(record));
  }

  std::vector<std::string> probes, spbsm, ports;
  for (const auto& p : record.probe_outcomes)
    probes.push_back(hsa::to_string(p.klass));
  for (const auto& s : record.spbsm_outcomes) {
    spbsm.push_back(hsa::to_string(s.kind));
    ports.push_back(hsa::to_string(hsa::detector_port(s)));
  }
  const bool pass = decoded == in.name();

  if (format == "json") {
    json out = {{"input", in.name()},   {"probes", probes},
                {"spbsm", spbsm},       {"ports", ports},
                {"decoded", decoded},   {"seed", seed},
                {"pass", pass}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "input:   " << in.name() << "\n";
    std::cout << "probes: ";
    for (const auto& p : probes) std::cout << ' ' << p;
    std::cout << "\nspbsm:  ";
    for (const auto& s : spbsm) std::cout << ' ' << s;
    std::cout << "\nports:  ";
    for (const auto& p : ports) std::cout << ' ' << p;
    std::cout << "\ndecoded: " << decoded << "\n";
    std::cout << "seed:    " << seed << "\n";
    std::cout << (pass ? "pass" : "FAIL: decoded label differs from input")
              << "\n";
  }
  return pass ? 0 : kExitFailure;
}

int cmd_verify(const std::string& mode, int photons,
               const std::string& format, bool serial) {
  const hsa::CircuitKind kind =
      mode == "bell" ? hsa::CircuitKind::Hbsa : hsa::CircuitKind::Hgsa;
  const auto report = hsa::verify_all(kind, photons, !serial);

  if (format == "json") {
    json out = {{"circuit", mode},
                {"photons", report.n_photons},
                {"labels", report.labels_tested},
                {"records", report.records_total},
                {"determinism", report.determinism_pass},
                {"round_trip", report.round_trip_pass},
                {"probabilities", report.probability_pass},
                {"partition", report.partition_pass},
                {"wall_seconds", report.wall_seconds},
                {"pass", report.pass()},
                {"failures", report.failures}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << report.labels_tested << "/" << report.labels_tested
              << " labels, " << report.records_total << " records, "
              << (report.pass() ? "pass" : "FAIL") << "\n";
    std::cout << "  probe determinism: "
              << (report.determinism_pass ? "pass" : "FAIL") << "\n";
    std::cout << "  round-trip decode: "
              << (report.round_trip_pass ? "pass" : "FAIL") << "\n";
    std::cout << "  probabilities:     "
              << (report.probability_pass ? "pass" : "FAIL") << "\n";
    std::cout << "  record partition:  "
              << (report.partition_pass ? "pass" : "FAIL") << "\n";
    for (const auto& f : report.failures) std::cerr << "  ! " << f << "\n";
  }
  return report.pass() ? 0 : kExitFailure;
}

int cmd_tables(const std::string& which, const std::string& format) {
  json out;
  if (which == "I") {
    for (const auto& row : hsa::generate_table_i())
      out.push_back({{"original", hsa::to_string(row.original)},
                     {"new", hsa::to_string(row.new_state)},
                     {"alpha1", hsa::to_string(row.probe1)},
                     {"alpha2", hsa::to_string(row.probe2)}});
    if (format != "json") {
      std::cout << "original  new       alpha1  alpha2\n";
      for (const auto& row : out)
        std::cout << row["original"].get<std::string>() << "      "
                  << row["new"].get<std::string>() << "      "
                  << row["alpha1"].get<std::string>() << "       "
                  << row["alpha2"].get<std::string>() << "\n";
      return 0;
    }
  } else if (which == "II") {
    for (const auto& group : hsa::generate_table_ii()) {
      json states = json::array(), detections = json::array();
      for (const auto& [pol, spatial] : group.states)
        states.push_back(hsa::to_string(pol) + "(x)" +
                         hsa::to_string(spatial));
      for (const auto& [a, b] : group.detections)
        detections.push_back(hsa::to_string(a) + "," + hsa::to_string(b));
      out.push_back({{"states", states}, {"detections", detections}});
    }
    if (format != "json") {
      int g = 1;
      for (const auto& group : out) {
        std::cout << "group " << g++ << "\n  states:    ";
        for (const auto& s : group["states"])
          std::cout << ' ' << s.get<std::string>();
        std::cout << "\n  detections:";
        for (const auto& d : group["detections"])
          std::cout << ' ' << d.get<std::string>();
        std::cout << "\n";
      }
      return 0;
    }
  } else {
    for (const auto& row : hsa::generate_table_iii())
      out.push_back({{"original", hsa::to_string(row.original)},
                     {"alpha1", hsa::to_string(row.shifts[0])},
                     {"alpha2", hsa::to_string(row.shifts[1])},
                     {"alpha3", hsa::to_string(row.shifts[2])}});
    if (format != "json") {
      std::cout << "original  alpha1  alpha2  alpha3\n";
      for (const auto& row : out)
        std::cout << row["original"].get<std::string>() << "    "
                  << row["alpha1"].get<std::string>() << "       "
                  << row["alpha2"].get<std::string>() << "       "
                  << row["alpha3"].get<std::string>() << "\n";
      return 0;
    }
  }
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_expand(const LabelArgs& args, const std::string& format) {
  const ParsedInput in = parse_input(args);
  const auto dist = hsa::expand_in_spbsm_basis(in.state({}));

  json out = json::array();
  for (const auto& [combo, amp] : dist.entries) {
    std::string name;
    for (std::size_t i = 0; i < combo.size(); ++i) {
      if (i) name += ' ';
      name += hsa::to_string(combo[i]);
    }
    out.push_back({{"outcome", name},
                   {"re", amp.real()},
                   {"im", amp.imag()},
                   {"probability", std::norm(amp)}});
  }
  if (format == "json") {
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& e : out)
      std::cout << e["outcome"].get<std::string>() << "  amp=("
                << e["re"].get<double>() << "," << e["im"].get<double>()
                << ")  p=" << e["probability"].get<double>() << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hyperentangled Bell/GHZ state analyzer simulator"};
  app.require_subcommand(1);

  LabelArgs run_args;
  std::uint64_t seed = 0;
  std::string run_format = "text";
  auto* run = app.add_subcommand("run", "one sampled analyzer run");
  run->add_option("--mode", run_args.mode)->check(CLI::IsMember({"bell", "ghz"}));
  run->add_option("--photons", run_args.photons)->check(CLI::Range(2, 8));
  run->add_option("--pol", run_args.pol)->required();
  run->add_option("--spatial", run_args.spatial)->required();
  run->add_option("--seed", seed);
  run->add_option("--format", run_format)->check(CLI::IsMember({"text", "json"}));

  std::string verify_mode = "bell", verify_format = "text";
  int verify_photons = 2;
  bool verify_serial = false;
  auto* verify =
      app.add_subcommand("verify", "exhaustive completeness verification");
  verify->add_option("--mode", verify_mode)->check(CLI::IsMember({"bell", "ghz"}));
  verify->add_option("--photons", verify_photons)->check(CLI::Range(2, 8));
  verify->add_option("--format", verify_format)
      ->check(CLI::IsMember({"text", "json"}));
  verify->add_flag("--serial", verify_serial,
                   "use the serial reference kernel");

  std::string which = "I", tables_format = "text";
  auto* tables = app.add_subcommand("tables", "generate Tables I-III");
  tables->add_option("--which", which)->check(CLI::IsMember({"I", "II", "III"}));
  tables->add_option("--format", tables_format)
      ->check(CLI::IsMember({"text", "json"}));

  LabelArgs expand_args;
  std::string expand_format = "text";
  auto* expand =
      app.add_subcommand("expand", "SPBSM-basis expansion of a label state");
  expand->add_option("--mode", expand_args.mode)
      ->check(CLI::IsMember({"bell", "ghz"}));
  expand->add_option("--photons", expand_args.photons)->check(CLI::Range(2, 8));
  expand->add_option("--pol", expand_args.pol)->required();
  expand->add_option("--spatial", expand_args.spatial)->required();
  expand->add_option("--format", expand_format)
      ->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitUsage;
  }

  try {
    if (run->parsed()) return cmd_run(run_args, seed, run_format);
    if (verify->parsed())
      return cmd_verify(verify_mode, verify_photons, verify_format,
                        verify_serial);
    if (tables->parsed()) return cmd_tables(which, tables_format);
    return cmd_expand(expand_args, expand_format);
  } catch (const hsa::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const hsa::NonCanonicalLabel& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
}
