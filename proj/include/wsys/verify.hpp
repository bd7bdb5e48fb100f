#pragma once

// Exhaustive and randomized verification suites over small instances.

#include <cstdint>
#include <string>
#include <vector>

namespace wsys {

struct VerifyBounds {
  std::uint32_t max_m = 7;
  std::uint32_t max_chords = 5;
  std::uint32_t max_vertices = 5;
  std::uint32_t order = 12;
  /// Random permutations drawn by suites with a randomized part.
  std::uint32_t random = 100;
  std::uint32_t random_m = 9;
  std::uint64_t seed = 1;
};

struct VerifySuiteReport {
  std::string name;
  /// Experiments report findings and never count as failures.
  bool experiment = false;
  std::uint64_t count = 0;
  /// Reproducible encodings of failing inputs.
  std::vector<std::string> failures;
  std::vector<std::string> notes;
  double wall_seconds = 0;

  bool passed() const { return experiment || failures.empty(); }
};

std::vector<std::string> suite_names();

/// Throws ParseError for an unknown suite name.
VerifySuiteReport run_suite(const std::string& name, const VerifyBounds& bounds);

/// Human-readable report; at most `max_failures` failing inputs are listed.
std::string format_report(const VerifySuiteReport& r, std::size_t max_failures = 20);
std::string report_json(const std::vector<VerifySuiteReport>& reports);

}  // namespace wsys
