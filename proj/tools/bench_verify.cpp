// Compares the serial reference kernel of verify_all against the
// OpenMP-parallel one and checks that both produce the same verdicts.

#include <cstdlib>
#include <iostream>

#include "hsa/oracle.hpp"

int main(int argc, char** argv) {
  const int max_n = argc > 1 ? std::atoi(argv[1]) : 6;
  bool all_ok = true;
  for (int n = 3; n <= max_n; ++n) {
    const auto serial = hsa::verify_all(hsa::CircuitKind::Hgsa, n, false);
    const auto parallel = hsa::verify_all(hsa::CircuitKind::Hgsa, n, true);
    const bool agree = serial.pass() == parallel.pass() &&
                       serial.records_total == parallel.records_total;
    all_ok = all_ok && agree && serial.pass();
    std::cout << "HGSA N=" << n << "  labels=" << serial.labels_tested
              << "  records=" << serial.records_total
              << "  serial=" << serial.wall_seconds << "s"
              << "  parallel=" << parallel.wall_seconds << "s"
              << "  speedup=" << serial.wall_seconds / parallel.wall_seconds
              << (agree ? "" : "  MISMATCH") << "\n";
  }
  return all_ok ? 0 : 1;
}
