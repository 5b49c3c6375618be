// Compares the serial reference loops against the OpenMP kernels on the
// verification scans and reports wall times plus a result cross-check.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <string>

#include "scan.hpp"

namespace {

template <typename Fn>
double timed(const Fn& fn) {
  auto t0 = std::chrono::steady_clock::now();
  fn();
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  uint64_t max_nq = argc > 1 ? std::stoull(argv[1]) : 800;
  std::cout << "scan bound nq <= " << max_nq << "\n";

  bool all_equal = true;

  {
    std::vector<gpd::ChiralityCheck> serial, parallel;
    double ts = timed([&] { serial = gpd::chirality_scan(max_nq, false); });
    double tp = timed([&] { parallel = gpd::chirality_scan(max_nq, true); });
    bool eq = serial.size() == parallel.size();
    for (size_t i = 0; eq && i < serial.size(); ++i)
      eq = serial[i].params == parallel[i].params &&
           serial[i].formula_real == parallel[i].formula_real &&
           serial[i].brute_real == parallel[i].brute_real;
    all_equal = all_equal && eq;
    std::cout << "chirality_scan    serial " << ts << "s  parallel " << tp
              << "s  speedup " << ts / tp << "  equal=" << (eq ? "yes" : "NO") << "\n";
  }
  {
    std::vector<gpd::InvarianceCheck> serial, parallel;
    double ts = timed([&] { serial = gpd::invariance_scan(max_nq, false); });
    double tp = timed([&] { parallel = gpd::invariance_scan(max_nq, true); });
    bool eq = serial.size() == parallel.size();
    for (size_t i = 0; eq && i < serial.size(); ++i)
      eq = serial[i].table == parallel[i].table && serial[i].brute == parallel[i].brute;
    all_equal = all_equal && eq;
    std::cout << "invariance_scan   serial " << ts << "s  parallel " << tp
              << "s  speedup " << ts / tp << "  equal=" << (eq ? "yes" : "NO") << "\n";
  }
  {
    std::vector<gpd::RecognitionCheck> serial, parallel;
    double ts = timed([&] { serial = gpd::recognition_scan(max_nq, false); });
    double tp = timed([&] { parallel = gpd::recognition_scan(max_nq, true); });
    bool eq = serial.size() == parallel.size();
    for (size_t i = 0; eq && i < serial.size(); ++i)
      eq = serial[i].params == parallel[i].params && serial[i].roundtrip == parallel[i].roundtrip;
    all_equal = all_equal && eq;
    std::cout << "recognition_scan  serial " << ts << "s  parallel " << tp
              << "s  speedup " << ts / tp << "  equal=" << (eq ? "yes" : "NO") << "\n";
  }
  {
    std::vector<gpd::QuotientCheck> serial, parallel;
    double ts = timed([&] { serial = gpd::quotient_scan(max_nq, false); });
    double tp = timed([&] { parallel = gpd::quotient_scan(max_nq, true); });
    bool eq = serial.size() == parallel.size();
    for (size_t i = 0; eq && i < serial.size(); ++i)
      eq = serial[i].computed_genus == parallel[i].computed_genus;
    all_equal = all_equal && eq;
    std::cout << "quotient_scan     serial " << ts << "s  parallel " << tp
              << "s  speedup " << ts / tp << "  equal=" << (eq ? "yes" : "NO") << "\n";
  }

  return all_equal ? 0 : 1;
}
