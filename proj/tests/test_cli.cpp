// Integration tests against the built CLI binary (path via HSA_CLI_PATH).

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

namespace {

struct CmdResult {
  int exit_code;
  std::string output;  // stdout + stderr
};

CmdResult run_cli(const std::string& args) {
  const std::string cmd = std::string(HSA_CLI_PATH) + " " + args + " 2>&1";
  std::array<char, 4096> buf{};
  std::string output;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  while (std::fgets(buf.data(), buf.size(), pipe)) output += buf.data();
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), output};
}

}  // namespace

TEST_CASE("run decodes a GHZ label and exits 0") {
  const auto r = run_cli(
      "run --mode ghz --photons 3 --pol -:100 --spatial +:010 --seed 7");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("-:100 / +:010") != std::string::npos);
  CHECK(r.output.find("pass") != std::string::npos);
}

TEST_CASE("run on spatial Phi+ reports two zero probe classes") {
  const auto r = run_cli("run --mode bell --pol Psi- --spatial Phi+");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("probes:  0 0") != std::string::npos);
}

TEST_CASE("non-canonical GHZ token exits 2 naming the canonical form") {
  const auto r = run_cli(
      "run --mode ghz --photons 3 --pol +:000 --spatial +:110");
  CHECK(r.exit_code == 2);
  CHECK(r.output.find("+:001") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run_cli("run --mode bell --pol Nope --spatial Phi+").exit_code == 2);
  CHECK(run_cli("verify --mode ghz --photons 99").exit_code == 2);
}

TEST_CASE("verify bell passes and reports 16 labels") {
  const auto r = run_cli("verify --mode bell");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("16/16 labels, 64 records, pass") != std::string::npos);
}

TEST_CASE("verify json carries the schema keys") {
  const auto r = run_cli("verify --mode ghz --photons 3 --format json");
  CHECK(r.exit_code == 0);
  for (const char* key : {"\"circuit\"", "\"labels\"", "\"records\"",
                          "\"partition\"", "\"pass\""})
    CHECK(r.output.find(key) != std::string::npos);
}

TEST_CASE("run json carries the schema keys") {
  const auto r = run_cli(
      "run --mode bell --pol Phi+ --spatial Psi- --format json --seed 3");
  CHECK(r.exit_code == 0);
  for (const char* key : {"\"input\"", "\"probes\"", "\"spbsm\"",
                          "\"ports\"", "\"decoded\"", "\"seed\"", "\"pass\""})
    CHECK(r.output.find(key) != std::string::npos);
}

TEST_CASE("identical seed and flags give byte-identical output") {
  const std::string args =
      "run --mode ghz --photons 4 --pol -:0011 --spatial +:0001 --seed 99 "
      "--format json";
  const auto a = run_cli(args);
  const auto b = run_cli(args);
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
}

TEST_CASE("tables render") {
  const auto t1 = run_cli("tables --which I");
  CHECK(t1.exit_code == 0);
  CHECK(t1.output.find("Psi+") != std::string::npos);
  const auto t3 = run_cli("tables --which III --format json");
  CHECK(t3.exit_code == 0);
  CHECK(t3.output.find("+:010") != std::string::npos);
}

TEST_CASE("expand prints the four Eq-style entries for Phi+ (x) Psi-") {
  const auto r = run_cli("expand --mode bell --pol Phi+ --spatial Psi-");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("psi+ phi-") != std::string::npos);
  CHECK(r.output.find("phi- psi+") != std::string::npos);
}
