#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace fallkit {

enum class HarnessFamily {
  kThreeColToFall3,
  kKColToFallK,    // at k = 4
  kEdgeColToFallK,  // at k = 3, line graph and its box-K2 variant
  kSatToTwoIds,
};

std::string harness_family_name(HarnessFamily family);
HarnessFamily harness_family_from_name(const std::string& name);

struct HarnessFailure {
  int trial = 0;
  std::string reason;
  std::string instance;  // offending source instance, verbatim
};

struct HarnessReport {
  HarnessFamily family;
  int trials = 0;
  int max_n = 0;
  std::uint64_t seed = 0;
  std::vector<HarnessFailure> failures;

  bool all_passed() const { return failures.empty(); }
  std::string to_json() const;
};

/// Runs `trials` random source instances through the named reduction:
/// solves the source by brute force, the target with the fall solvers,
/// asserts the if-and-only-if, lifts certificates both ways through the
/// verifier, and checks the structural assertions of the construction.
/// Trials may run concurrently (capped by FALLKIT_THREADS); the report is
/// merged deterministically by trial index.
HarnessReport equivalence_harness(HarnessFamily family, int trials, int max_n,
                                  std::uint64_t seed);

}  // namespace fallkit
