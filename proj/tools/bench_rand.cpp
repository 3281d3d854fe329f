#include <gradval/randsuite.hpp>

#include <chrono>
#include <cstdlib>
#include <iostream>

using namespace gradval;

// Times the serial reference path against the OpenMP path on identical
// parameters and verifies the summaries agree bit for bit.
// Usage: bench_rand [dims] [max_entry] [count] [seed]

namespace {

long arg_or(int argc, char** argv, int i, long fallback) {
  return argc > i ? std::atol(argv[i]) : fallback;
}

double run_timed(const RandParams& p, ExecMode mode, RandSummary& out) {
  auto t0 = std::chrono::steady_clock::now();
  out = rand_suite(p, mode);
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(t1 - t0).count();
}

bool same(const RandSummary& a, const RandSummary& b) {
  if (a.requested != b.requested || a.passed != b.passed ||
      a.skipped_singular != b.skipped_singular)
    return false;
  if (a.first_failure.has_value() != b.first_failure.has_value()) return false;
  if (a.first_failure && (a.first_failure->index != b.first_failure->index ||
                          a.first_failure->reason != b.first_failure->reason))
    return false;
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  RandParams p;
  p.dims = static_cast<int>(arg_or(argc, argv, 1, 3));
  p.max_entry = arg_or(argc, argv, 2, 5);
  p.count = arg_or(argc, argv, 3, 400);
  p.seed = static_cast<std::uint64_t>(arg_or(argc, argv, 4, 2026));

  try {
    RandSummary serial, parallel;
    double ts = run_timed(p, ExecMode::serial, serial);
    double tp = run_timed(p, ExecMode::openmp, parallel);

    std::cout << "dims=" << p.dims << " max_entry=" << p.max_entry << " count=" << p.count
              << " seed=" << p.seed << "\n";
    std::cout << "serial:  " << ts << " s (" << serial.passed << "/" << serial.requested
              << " passed, " << serial.skipped_singular << " singular redraws)\n";
    std::cout << "openmp:  " << tp << " s (mode " << parallel.mode << ", " << parallel.passed
              << "/" << parallel.requested << " passed)\n";
    if (tp > 0) std::cout << "speedup: " << ts / tp << "x\n";

    if (!same(serial, parallel)) {
      std::cerr << "summaries disagree between the serial and parallel paths\n";
      return 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
